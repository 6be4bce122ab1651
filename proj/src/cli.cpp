#include "agband/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "agband/cayley_io.hpp"
#include "agband/constructions.hpp"
#include "agband/decomposition.hpp"
#include "agband/errors.hpp"
#include "agband/law.hpp"
#include "agband/model_search.hpp"
#include "agband/morphisms.hpp"
#include "agband/verify.hpp"

namespace agband::cli {

namespace {

using nlohmann::json;

// An expected negative answer (law fails, no isomorphism, ...), already
// reported on the output stream.
struct Negative {};

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::istream& in;
  bool text = false;
};

void emit(Context& ctx, const json& doc) { ctx.out << doc.dump(2) << "\n"; }

void emit_groupoid(Context& ctx, const FiniteGroupoid& g) {
  if (ctx.text) {
    ctx.out << render_text(g);
  } else {
    emit(ctx, to_json(g));
  }
}

json mapping_json(const Mapping& m) {
  return {{"images", m.images}, {"kind", to_string(m.kind)}};
}

std::vector<Index> parse_index_list(const std::string& text) {
  std::vector<Index> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t used = 0;
      const long value = std::stol(item, &used);
      if (used != item.size() || value < 0) throw std::invalid_argument(item);
      values.push_back(static_cast<Index>(value));
    } catch (const std::exception&) {
      throw ArgumentError("'" + item + "' is not a non-negative integer");
    }
  }
  return values;
}

// ------------------------------------------------------------------ commands

void cmd_check(Context& ctx, const FiniteGroupoid& g, const VarietySpec& v) {
  const auto report = check_variety(g, v);
  json identities = json::array();
  for (const auto& [id, result] : report.results) {
    json entry = {{"identity", to_string(id)}, {"holds", result.holds}};
    if (result.counterexample) {
      json witness = json::object();
      for (std::size_t k = 0; k < id.variables.size(); ++k) {
        witness[std::string(1, id.variables[k])] =
            g.label((*result.counterexample)[k]);
      }
      entry["counterexample"] = witness;
      entry["lhs"] = g.label(result.lhs_value);
      entry["rhs"] = g.label(result.rhs_value);
    }
    identities.push_back(entry);
  }
  if (ctx.text) {
    for (const auto& entry : identities) {
      ctx.out << (entry["holds"].get<bool>() ? "holds  " : "FAILS  ")
              << entry["identity"].get<std::string>();
      if (entry.contains("counterexample")) {
        ctx.out << "  at";
        for (const auto& [var, value] : entry["counterexample"].items()) {
          ctx.out << " " << var << "=" << value.get<std::string>();
        }
      }
      ctx.out << "\n";
    }
  } else {
    emit(ctx, {{"variety", v.name}, {"holds", report.holds()},
               {"identities", identities}});
  }
  if (const auto* failure = report.first_failure()) {
    ctx.err << "identity " << to_string(failure->first) << " fails\n";
    throw Negative{};
  }
}

void cmd_iso(Context& ctx, const FiniteGroupoid& a, const FiniteGroupoid& b,
             bool anti) {
  const auto found = iso_search(a, b, anti);
  if (!found) {
    if (ctx.text) {
      ctx.out << "NOT_FOUND\n";
    } else {
      emit(ctx, {{"kind", "NOT_FOUND"}});
    }
    throw Negative{};
  }
  if (ctx.text) {
    ctx.out << to_string(found->kind) << "\n";
    for (Index i = 0; i < a.order(); ++i) {
      ctx.out << a.label(i) << " -> " << b.label(found->images[i]) << "\n";
    }
  } else {
    emit(ctx, mapping_json(*found));
  }
}

void cmd_classify(Context& ctx, const FiniteGroupoid& g) {
  const auto census = classify_all_bijections(g);
  if (ctx.text) {
    ctx.out << "cycle type              ISO  ANTI_ISO  NEITHER\n";
    for (const auto& [type, counts] : census.by_cycle_type) {
      std::string name = describe_cycle_type(type);
      name.resize(std::max<std::size_t>(name.size(), 22), ' ');
      ctx.out << name << " " << std::setw(4) << counts.iso << " "
              << std::setw(9) << counts.anti_iso << " " << std::setw(8)
              << counts.neither << "\n";
    }
    ctx.out << "total                  " << std::setw(4) << census.totals.iso
            << " " << std::setw(9) << census.totals.anti_iso << " "
            << std::setw(8) << census.totals.neither << "\n";
    return;
  }
  json rows = json::array();
  for (const auto& [type, counts] : census.by_cycle_type) {
    rows.push_back({{"cycle_type", describe_cycle_type(type)},
                    {"iso", counts.iso},
                    {"anti_iso", counts.anti_iso},
                    {"neither", counts.neither}});
  }
  emit(ctx, {{"totals",
              {{"iso", census.totals.iso},
               {"anti_iso", census.totals.anti_iso},
               {"neither", census.totals.neither}}},
             {"by_cycle_type", rows}});
}

void emit_decomposition(Context& ctx, const BandDecomposition& d) {
  if (ctx.text) {
    for (std::size_t b = 0; b < d.partition.size(); ++b) {
      ctx.out << "B" << b << ":";
      for (Index e : d.partition.blocks()[b]) ctx.out << " " << e;
      ctx.out << "\n";
    }
    ctx.out << render_text(d.quotient);
    return;
  }
  emit(ctx, {{"partition", d.partition.blocks()},
             {"quotient", to_json(d.quotient)}});
}

void cmd_decompose_blocks(Context& ctx, const FiniteGroupoid& g,
                          const std::string& partition_text) {
  json doc;
  try {
    doc = json::parse(partition_text);
  } catch (const json::parse_error& e) {
    throw ArgumentError(std::string("--partition is not valid JSON: ") + e.what());
  }
  std::vector<ElementSet> blocks;
  try {
    blocks = doc.get<std::vector<ElementSet>>();
  } catch (const json::exception&) {
    throw ArgumentError("--partition must be an array of arrays of indices");
  }
  const auto check = check_band_decomposition(g, Partition(g.order(), blocks));
  if (check.ok()) {
    emit_decomposition(ctx, *check.decomposition);
    return;
  }
  const auto& w = *check.witness;
  if (ctx.text) {
    ctx.out << "not a band decomposition: " << w.u << "*" << w.v << " and "
            << w.u2 << "*" << w.v2 << " land in different blocks\n";
  } else {
    emit(ctx, {{"witness", {{"u", w.u}, {"v", w.v}, {"u2", w.u2}, {"v2", w.v2}}}});
  }
  throw Negative{};
}

void cmd_spectrum(Context& ctx, const VarietySpec& v, std::size_t max_order,
                  bool oracle) {
  json rows = json::array();
  bool agree = true;
  for (const auto& [order, count] : spectrum_scan(v, max_order)) {
    json row = {{"order", order}, {"count", count}};
    const bool in_oracle_range =
        order <= 3 || (order == 4 && forces_idempotency(v));
    if (oracle && in_oracle_range) {
      const auto expected = brute_force_oracle(order, v);
      row["oracle"] = expected;
      agree = agree && expected == count;
    }
    rows.push_back(row);
  }
  if (ctx.text) {
    for (const auto& row : rows) {
      ctx.out << row["order"].get<std::size_t>() << " "
              << row["count"].get<std::size_t>();
      if (row.contains("oracle")) {
        ctx.out << " (oracle " << row["oracle"].get<std::size_t>() << ")";
      }
      ctx.out << "\n";
    }
  } else {
    emit(ctx, {{"variety", v.name}, {"spectrum", rows}});
  }
  if (!agree) {
    ctx.err << "search and oracle disagree\n";
    throw Negative{};
  }
}

void cmd_models(Context& ctx, const VarietySpec& v, std::size_t order,
                std::optional<std::size_t> limit, const std::string& emit_dir) {
  SearchOptions options;
  options.limit = limit;
  const auto outcome = enumerate_models(order, v, options);
  if (!emit_dir.empty()) {
    std::filesystem::create_directories(emit_dir);
    for (std::size_t k = 0; k < outcome.canonical_models.size(); ++k) {
      const auto path = std::filesystem::path(emit_dir) /
                        ("model_" + std::to_string(k) + ".json");
      std::ofstream file(path);
      if (!file) throw ArgumentError("cannot write '" + path.string() + "'");
      file << to_json(outcome.canonical_models[k]).dump(2) << "\n";
    }
  }
  const json stats = {{"nodes", outcome.stats.nodes},
                      {"propagation_failures", outcome.stats.propagation_failures},
                      {"labeled_models", outcome.stats.labeled_models},
                      {"wall_seconds", outcome.stats.wall_seconds}};
  if (ctx.text) {
    ctx.out << v.name << " order " << order << ": " << outcome.count
            << (outcome.complete ? "" : "+") << " class(es), "
            << outcome.stats.nodes << " nodes\n";
    for (const auto& model : outcome.canonical_models) {
      ctx.out << "\n" << render_text(model);
    }
    return;
  }
  emit(ctx, {{"order", order},
             {"variety", v.name},
             {"count", outcome.count},
             {"complete", outcome.complete},
             {"stats", stats}});
}

void cmd_diff(Context& ctx, const FiniteGroupoid& a, const FiniteGroupoid& b) {
  const auto diffs = diff_tables(a, b);
  if (ctx.text) {
    for (const auto& d : diffs) {
      ctx.out << "(" << d.row << "," << d.col << "): " << d.left << " vs "
              << d.right << "\n";
    }
  } else {
    json cells = json::array();
    for (const auto& d : diffs) {
      cells.push_back({{"row", d.row}, {"col", d.col}, {"left", d.left},
                       {"right", d.right}});
    }
    emit(ctx, cells);
  }
  if (!diffs.empty()) throw Negative{};
}

void cmd_verify(Context& ctx, const std::string& only) {
  const auto report =
      verify_claims(only.empty() ? std::nullopt : std::optional<std::string_view>(only));
  if (ctx.text) {
    for (const auto& c : report.claims) {
      ctx.out << to_string(c.status) << (c.annotated ? "*" : "") << "  " << c.id
              << ": " << c.statement << "\n      " << c.detail << "\n";
    }
    ctx.out << "overall: " << (report.overall() ? "PASS" : "FAIL") << "\n";
  } else {
    json claims = json::array();
    for (const auto& c : report.claims) {
      claims.push_back({{"id", c.id},
                        {"statement", c.statement},
                        {"status", to_string(c.status)},
                        {"detail", c.detail},
                        {"expected_discrepancy", c.annotated}});
    }
    emit(ctx, {{"claims", claims},
               {"overall", report.overall() ? "PASS" : "FAIL"}});
  }
  if (!report.overall()) throw Negative{};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, std::istream& in) {
  CLI::App app{"Anti-rectangular AG-band toolkit"};
  app.name("agband");
  app.require_subcommand(1);
  app.fallthrough();
  std::optional<std::string> format;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));

  unsigned n = 1;
  std::string variety_text = "ARAGB";
  std::string path_a;
  std::string path_b;

  auto* build = app.add_subcommand("build", "Emit a named groupoid");
  build->require_subcommand(1);
  auto* build_g = build->add_subcommand("g", "The order-4 band G");
  auto* build_gn = build->add_subcommand("gn", "Level n of the tower");
  build_gn->add_option("--n", n)->required()->check(CLI::Range(0u, 5u));
  auto* build_gbar = build->add_subcommand("gbar", "The 16-element counterexample");
  bool from_table = false;
  build_gbar->add_flag("--from-table3", from_table,
                       "Use the printed table instead of the derived one");
  auto* build_j = build->add_subcommand("j", "Proper self-embedded subband J_n");
  build_j->add_option("--n", n)->required()->check(CLI::Range(1u, 4u));

  auto* check = app.add_subcommand("check", "Check a groupoid against a variety");
  path_a = "-";
  check->add_option("file", path_a, "Cayley JSON file, or - for stdin");
  check->add_option("--variety", variety_text,
                    "Preset name or ';'-separated identities");

  auto* iso = app.add_subcommand("iso", "Find an isomorphism A -> B");
  iso->add_option("a", path_a)->required();
  iso->add_option("b", path_b)->required();
  bool anti = false;
  iso->add_flag("--anti", anti, "Search for an anti-isomorphism");

  auto* classify = app.add_subcommand("classify-bijections",
                                      "Classify every self-bijection");
  classify->add_option("file", path_a)->required();

  auto* canonical = app.add_subcommand("canonical-iso",
                                       "Constructive isomorphism onto G_n");
  canonical->add_option("file", path_a)->required();
  std::string enumeration_text;
  canonical->add_option("--enumeration", enumeration_text,
                        "Comma-separated element order");

  auto* decompose = app.add_subcommand("decompose", "Band decompositions");
  decompose->require_subcommand(1);
  auto* dec_blocks = decompose->add_subcommand("blocks", "Check a partition");
  dec_blocks->add_option("file", path_a)->required();
  std::string partition_text;
  dec_blocks->add_option("--partition", partition_text)->required();
  auto* dec_copies = decompose->add_subcommand("gcopies", "Partition into copies of G");
  dec_copies->add_option("file", path_a)->required();
  auto* dec_ext = decompose->add_subcommand("extension", "Four extension blocks of G_n");
  dec_ext->add_option("--n", n)->required()->check(CLI::Range(1u, 4u));

  auto* spectrum = app.add_subcommand("spectrum", "Model counts by order");
  spectrum->add_option("--variety", variety_text);
  std::size_t max_order = 8;
  spectrum->add_option("--max-order", max_order)->check(CLI::Range(1, 16));
  bool oracle = false;
  spectrum->add_flag("--oracle", oracle, "Cross-check with the brute-force oracle");

  auto* models = app.add_subcommand("models", "Enumerate models of one order");
  models->add_option("--variety", variety_text);
  std::size_t order = 4;
  models->add_option("--order", order)->required()->check(CLI::Range(1, 16));
  std::optional<std::size_t> limit;
  models->add_option("--limit", limit, "Stop after this many classes");
  std::string emit_dir;
  models->add_option("--emit", emit_dir, "Directory for model JSON files");

  auto* diff = app.add_subcommand("diff", "Cells where two tables disagree");
  diff->add_option("a", path_a)->required();
  diff->add_option("b", path_b)->required();

  auto* limit_product_cmd = app.add_subcommand(
      "limit-product", "Product in the union of the tower");
  std::uint64_t i = 0;
  std::uint64_t j = 0;
  limit_product_cmd->add_option("i", i)->required();
  limit_product_cmd->add_option("j", j)->required();

  auto* verify = app.add_subcommand("verify-paper", "Replay every claim");
  std::string only;
  verify->add_option("--only", only, "Claim id")->check(
      CLI::IsMember(claim_ids()));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Context ctx{out, err, in, format.value_or(verify->parsed() ? "text" : "json") == "text"};
  try {
    if (build->parsed()) {
      if (build_g->parsed()) emit_groupoid(ctx, standard_g());
      if (build_gn->parsed()) emit_groupoid(ctx, tower(n).back());
      if (build_gbar->parsed()) {
        emit_groupoid(ctx, from_table ? gbar_transcribed() : gbar_derived());
      }
      if (build_j->parsed()) emit_groupoid(ctx, j_subband(n));
    } else if (check->parsed()) {
      const auto variety = variety_from_string(variety_text);
      cmd_check(ctx, read_groupoid(path_a, in), variety);
    } else if (iso->parsed()) {
      cmd_iso(ctx, read_groupoid(path_a, in), read_groupoid(path_b, in), anti);
    } else if (classify->parsed()) {
      cmd_classify(ctx, read_groupoid(path_a, in));
    } else if (canonical->parsed()) {
      const auto k = read_groupoid(path_a, in);
      std::vector<Index> enumeration(k.order());
      std::iota(enumeration.begin(), enumeration.end(), 0);
      if (!enumeration_text.empty()) enumeration = parse_index_list(enumeration_text);
      emit(ctx, mapping_json(canonical_iso(k, enumeration)));
    } else if (decompose->parsed()) {
      if (dec_blocks->parsed()) {
        cmd_decompose_blocks(ctx, read_groupoid(path_a, in), partition_text);
      } else if (dec_copies->parsed()) {
        const auto g = read_groupoid(path_a, in);
        const auto copies = g_copy_partition(g);
        const auto check_result = check_band_decomposition(g, copies);
        if (check_result.ok()) {
          emit_decomposition(ctx, *check_result.decomposition);
        } else if (ctx.text) {
          // The copies need not form a band decomposition; no quotient then.
          for (const auto& block : copies.blocks()) {
            for (Index e : block) ctx.out << e << " ";
            ctx.out << "\n";
          }
        } else {
          emit(ctx, {{"partition", copies.blocks()}, {"quotient", nullptr}});
        }
      } else {
        emit_decomposition(ctx, extension_block_decomposition(n));
      }
    } else if (spectrum->parsed()) {
      cmd_spectrum(ctx, variety_from_string(variety_text), max_order, oracle);
    } else if (models->parsed()) {
      cmd_models(ctx, variety_from_string(variety_text), order, limit, emit_dir);
    } else if (diff->parsed()) {
      cmd_diff(ctx, read_groupoid(path_a, in), read_groupoid(path_b, in));
    } else if (limit_product_cmd->parsed()) {
      out << limit_product(i, j) << "\n";
    } else if (verify->parsed()) {
      cmd_verify(ctx, only);
    }
  } catch (const Negative&) {
    return kFailure;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  } catch (const InvariantViolation& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  } catch (const ClosureError& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kOk;
}

}  // namespace agband::cli
