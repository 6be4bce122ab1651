#include "agband/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "agband/constructions.hpp"
#include "agband/decomposition.hpp"
#include "agband/errors.hpp"
#include "agband/law.hpp"
#include "agband/model_search.hpp"
#include "agband/morphisms.hpp"

namespace agband {

std::string to_string(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::kPass: return "PASS";
    case ClaimStatus::kFail: return "FAIL";
    case ClaimStatus::kSkipped: return "SKIPPED";
  }
  return "?";
}

bool VerificationReport::overall() const noexcept {
  return std::none_of(claims.begin(), claims.end(), [](const auto& c) {
    return c.status == ClaimStatus::kFail;
  });
}

namespace {

// A claim check fills `detail` and returns whether the claim holds.
struct Claim {
  const char* id;
  const char* statement;
  std::function<bool(ClaimResult&)> check;
};

std::string failing_law(const FiniteGroupoid& g, const VarietySpec& v) {
  const auto report = check_variety(g, v);
  const auto* failure = report.first_failure();
  return failure ? to_string(failure->first) : "";
}

std::string join_sizes(const std::vector<std::size_t>& sizes) {
  std::ostringstream out;
  for (std::size_t k = 0; k < sizes.size(); ++k) out << (k ? "," : "") << sizes[k];
  return out.str();
}

bool g_laws(ClaimResult& r) {
  const auto bad = failing_law(standard_g(), presets::aragb());
  r.detail = bad.empty() ? "AG, x = xx and (xy)x = y hold on all 64 triples"
                         : "fails " + bad;
  return bad.empty();
}

bool two_generated(ClaimResult& r) {
  const auto g = standard_g();
  for (Index c = 0; c < 4; ++c) {
    for (Index d = c + 1; d < 4; ++d) {
      if (generated_subgroupoid(g, {c, d}).size() != 4) {
        r.detail = "<" + g.label(c) + "," + g.label(d) + "> is proper";
        return false;
      }
    }
  }
  r.detail = "all 6 pairs generate G";
  return true;
}

bool derived_law(ClaimResult& r, const char* law) {
  const auto id = parse_identity(law);
  const auto levels = tower(3);
  for (unsigned n = 1; n <= 3; ++n) {
    if (!check_identity(levels[n], id).holds) {
      r.detail = "fails on G_" + std::to_string(n);
      return false;
    }
  }
  r.detail = std::string(law) + " holds on G_1, G_2, G_3";
  return true;
}

bool generated_copies(ClaimResult& r) {
  const auto g2 = tower(2)[2];
  const auto g = standard_g();
  std::size_t pairs = 0;
  for (Index c = 0; c < g2.order(); ++c) {
    for (Index d = 0; d < g2.order(); ++d) {
      if (c == d) continue;
      const auto copy = generated_subgroupoid(g2, {c, d});
      if (copy.size() != 4) {
        r.detail = "<" + std::to_string(c) + "," + std::to_string(d) +
                   "> has " + std::to_string(copy.size()) + " elements";
        return false;
      }
      // c -> a, d -> b, cd -> ab, dc -> ba, in restricted indices.
      const auto sub = restrict_to(g2, copy);
      auto position = [&](Index e) {
        return static_cast<Index>(std::lower_bound(copy.begin(), copy.end(), e) -
                                  copy.begin());
      };
      std::vector<Index> images(4);
      images[position(c)] = 0;
      images[position(d)] = 1;
      images[position(g2(c, d))] = 2;
      images[position(g2(d, c))] = 3;
      if (classify_mapping(images, sub, g) != MappingKind::kIso) {
        r.detail = "the recipe fails for <" + std::to_string(c) + "," +
                   std::to_string(d) + ">";
        return false;
      }
      ++pairs;
    }
  }
  r.detail = std::to_string(pairs) +
             " ordered pairs in G_2; each generates a copy of G via c->a, d->b";
  return true;
}

bool bijection_census(ClaimResult& r) {
  const auto census = classify_all_bijections(standard_g());
  bool ok = census.totals == KindCounts{12, 12, 0};
  for (const auto& [type, counts] : census.by_cycle_type) {
    const auto name = describe_cycle_type(type);
    const bool iso_type = name == "identity" || name == "3-cycle" ||
                          name == "double-transposition";
    ok = ok && (iso_type ? counts.iso == counts.total()
                         : counts.anti_iso == counts.total());
  }
  r.detail = std::to_string(census.totals.iso) + " ISO, " +
             std::to_string(census.totals.anti_iso) + " ANTI_ISO, " +
             std::to_string(census.totals.neither) + " NEITHER";
  return ok;
}

bool anti_recipe(ClaimResult& r) {
  const auto g = standard_g();
  const auto op = opposite(g);
  const auto identity = verified({0, 1, 2, 3}, g, op);
  if (identity.kind != MappingKind::kAntiIso) {
    r.detail = "identity is not an anti-isomorphism G -> opposite(G)";
    return false;
  }
  const auto iso = anti_to_iso(identity, g, op);
  const bool ok = iso.kind == MappingKind::kIso &&
                  iso.images == std::vector<Index>{0, 1, 3, 2};
  r.detail = ok ? "a, b fixed and ab, ba swapped is an isomorphism"
                : "unexpected mapping";
  return ok;
}

bool copy_intersections(ClaimResult& r) {
  const auto audit = copy_intersection_audit(tower(2)[2]);
  std::ostringstream out;
  out << audit.copies.size() << " copies; intersection sizes";
  for (const auto& [size, count] : audit.intersection_sizes) {
    out << " " << size << ":" << count;
  }
  r.detail = out.str();
  return audit.trichotomy_holds;
}

bool opposite_closure(ClaimResult& r) {
  const auto levels = tower(2);
  for (unsigned n = 1; n <= 2; ++n) {
    const auto op = opposite(levels[n]);
    if (!check_variety(op, presets::aragb()).holds() ||
        !iso_search(levels[n], op)) {
      r.detail = "fails at G_" + std::to_string(n);
      return false;
    }
  }
  r.detail = "opposite(G_n) is an ARAGB isomorphic to G_n for n = 1, 2";
  return true;
}

bool extension_sizes(ClaimResult& r) {
  const auto levels = tower(2);
  std::vector<std::size_t> sizes;
  for (unsigned n = 1; n <= 2; ++n) {
    const auto& h = levels[n];
    for (Index a : {Index{0}, Index{1}, static_cast<Index>(h.order() - 1)}) {
      const auto ext = extend(h, a, "x");
      if (ext.order() != 4 * h.order() ||
          !check_variety(ext, presets::aragb()).holds()) {
        r.detail = "extend(G_" + std::to_string(n) + ", " + std::to_string(a) +
                   ") is not an ARAGB of order " + std::to_string(4 * h.order());
        return false;
      }
      sizes.push_back(ext.order());
    }
  }
  r.detail = "orders " + join_sizes(sizes) + ", all ARAGB";
  return true;
}

bool spectrum(ClaimResult& r) {
  const auto counts = spectrum_scan(presets::aragb(), 8);
  std::ostringstream out;
  bool ok = true;
  for (const auto& [order, count] : counts) {
    out << (order > 1 ? " " : "") << order << ":" << count;
    const bool power_of_four = order == 1 || order == 4;
    ok = ok && count == (power_of_four ? 1u : 0u);
  }
  r.detail = "classes by order " + out.str();
  return ok;
}

bool extension_blocks(ClaimResult& r) {
  for (unsigned n = 2; n <= 3; ++n) extension_block_decomposition(n);
  r.detail = "G_2 and G_3 split into four blocks isomorphic to G_{n-1} over G";
  return true;
}

bool canonical_iso_claim(ClaimResult& r) {
  const auto g2 = tower(2)[2];
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Index> perm(g2.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto k = relabel(g2, perm);
    std::vector<Index> enumeration(k.order());
    std::iota(enumeration.begin(), enumeration.end(), 0);
    std::shuffle(enumeration.begin(), enumeration.end(), rng);
    if (canonical_iso(k, enumeration).kind != MappingKind::kIso) {
      r.detail = "trial " + std::to_string(trial) + " did not verify";
      return false;
    }
  }
  r.detail = "5 shuffled copies of G_2 mapped onto G_2 by verified isomorphisms";
  return true;
}

bool self_embedding(ClaimResult& r) {
  const auto j = j_subband(2);
  const bool ok = j.order() == 16 && iso_search(j, tower(2)[2]).has_value();
  r.detail = "J_2 has order " + std::to_string(j.order()) +
             " inside G_3 (order 64)" + (ok ? " and is isomorphic to G_2" : "");
  return ok;
}

bool gbar_claim(ClaimResult& r) {
  const auto gbar = gbar_derived();
  if (!check_variety(gbar, presets::band()).holds()) {
    r.detail = "fails AG or x = xx";
    return false;
  }
  if (!is_cancellative(gbar).both()) {
    r.detail = "not cancellative";
    return false;
  }
  const auto ar = check_identity(gbar, parse_identity("(xy)x = y"));
  if (ar.holds) {
    r.detail = "(xy)x = y unexpectedly holds";
    return false;
  }
  const auto& w = *ar.counterexample;
  const auto check = check_band_decomposition(gbar, Partition::contiguous(16, 4));
  if (!check.ok() || !iso_search(check.decomposition->quotient, standard_g())) {
    r.detail = "the four blocks do not form a band over G";
    return false;
  }
  for (const auto& block : check.decomposition->partition.blocks()) {
    if (!iso_search(restrict_to(gbar, block), standard_g())) {
      r.detail = "a block is not a copy of G";
      return false;
    }
  }
  for (Index a = 0; a < 16; ++a) {
    for (Index b = 0; b < 16; ++b) {
      if ((gbar(gbar(a, b), a) == b) != (gbar(gbar(b, a), b) == a)) {
        r.detail = "(ab)a = b iff (ba)b = a fails";
        return false;
      }
    }
  }
  try {
    restrict_to(gbar, {0, 4, 8, 12});
    r.detail = "{a, b, ab, ba} is unexpectedly closed";
    return false;
  } catch (const ClosureError&) {
  }
  r.detail = "cancellative AG-band, band of four copies of G, (xy)x = y fails at x=" +
             gbar.label(w[0]) + ", y=" + gbar.label(w[1]) +
             "; {a, b, ab, ba} not closed";
  return true;
}

bool table_diff(ClaimResult& r) {
  const auto derived = gbar_derived();
  const auto diffs = diff_tables(derived, gbar_transcribed());
  std::ostringstream out;
  out << diffs.size() << " cell(s) differ from the printed table:";
  bool confined = !diffs.empty();
  for (const auto& d : diffs) {
    confined = confined && d.row == 3;
    out << " row " << d.row + 1 << " col " << d.col + 1 << " derived "
        << d.left + 1 << " printed " << d.right + 1 << ";";
  }
  out << " expected: the printed row of xa carries a transcription error";
  r.detail = out.str();
  r.annotated = true;
  return confined;
}

const std::vector<Claim>& claims() {
  static const std::vector<Claim> all = {
      {"g-laws", "G is an anti-rectangular AG-band", g_laws},
      {"g-two-generated", "any two distinct elements of G generate G",
       two_generated},
      {"medial", "AG-bands satisfy the medial law (xy)(zw) = (xz)(yw)",
       [](ClaimResult& r) { return derived_law(r, "(xy)(zw) = (xz)(yw)"); }},
      {"paramedial-variant", "ARAGBs satisfy a(bc) = c(ba)",
       [](ClaimResult& r) { return derived_law(r, "a(bc) = c(ba)"); }},
      {"generated-copies",
       "two distinct elements of an ARAGB generate a copy of G via c->a, d->b",
       generated_copies},
      {"bijection-census",
       "every bijection of G is an isomorphism or an anti-isomorphism, by cycle "
       "type",
       bijection_census},
      {"anti-to-iso", "swapping ab and ba turns an anti-isomorphism into an isomorphism",
       anti_recipe},
      {"copy-intersections",
       "two copies of G are equal, disjoint or meet in one element",
       copy_intersections},
      {"opposite-closure",
       "the opposite of an ARAGB is an ARAGB, isomorphic to the original",
       opposite_closure},
      {"extension-order",
       "the extension of an ARAGB H is an ARAGB of order 4|H|",
       extension_sizes},
      {"spectrum", "finite ARAGBs have order 4^n", spectrum},
      {"extension-blocks",
       "G_n is a G-band of four copies of G_{n-1}",
       extension_blocks},
      {"canonical-iso",
       "every ARAGB of order 4^n is isomorphic to G_n, constructively",
       canonical_iso_claim},
      {"self-embedding",
       "G_{n+1} has a proper subband isomorphic to G_n",
       self_embedding},
      {"gbar-counterexample",
       "an anti-rectangular band of copies of G need not be anti-rectangular",
       gbar_claim},
      {"gbar-table-audit",
       "the printed 16x16 table agrees with the derived one outside row xa",
       table_diff},
  };
  return all;
}

}  // namespace

std::vector<std::string> claim_ids() {
  std::vector<std::string> ids;
  for (const auto& c : claims()) ids.emplace_back(c.id);
  return ids;
}

VerificationReport verify_claims(std::optional<std::string_view> only) {
  if (only) {
    const auto ids = claim_ids();
    if (std::find(ids.begin(), ids.end(), *only) == ids.end()) {
      throw ArgumentError("unknown claim id '" + std::string(*only) + "'");
    }
  }
  VerificationReport report;
  for (const auto& claim : claims()) {
    ClaimResult result{claim.id, claim.statement, ClaimStatus::kSkipped, "", false};
    if (only && *only != claim.id) {
      result.detail = "not selected";
    } else {
      try {
        result.status = claim.check(result) ? ClaimStatus::kPass : ClaimStatus::kFail;
      } catch (const std::exception& e) {
        result.status = ClaimStatus::kFail;
        result.detail = std::string("error: ") + e.what();
      }
    }
    report.claims.push_back(std::move(result));
  }
  return report;
}

}  // namespace agband
