#include "agband/morphisms.hpp"

#include <algorithm>
#include <numeric>

#include "agband/constructions.hpp"
#include "agband/errors.hpp"
#include "agband/law.hpp"

namespace agband {

std::string to_string(MappingKind kind) {
  switch (kind) {
    case MappingKind::kIso: return "ISO";
    case MappingKind::kAntiIso: return "ANTI_ISO";
    case MappingKind::kNeither: return "NEITHER";
    case MappingKind::kUnverified: return "UNVERIFIED";
  }
  return "UNVERIFIED";
}

bool is_homomorphism(std::span<const Index> images, const FiniteGroupoid& src,
                     const FiniteGroupoid& dst) {
  for (Index i = 0; i < src.order(); ++i) {
    for (Index j = 0; j < src.order(); ++j) {
      if (images[src(i, j)] != dst(images[i], images[j])) return false;
    }
  }
  return true;
}

bool is_anti_homomorphism(std::span<const Index> images,
                          const FiniteGroupoid& src, const FiniteGroupoid& dst) {
  for (Index i = 0; i < src.order(); ++i) {
    for (Index j = 0; j < src.order(); ++j) {
      if (images[src(i, j)] != dst(images[j], images[i])) return false;
    }
  }
  return true;
}

namespace {

void require_bijection(std::span<const Index> images, const FiniteGroupoid& src,
                       const FiniteGroupoid& dst) {
  if (src.order() != dst.order()) {
    throw ArgumentError("mapping between groupoids of different orders");
  }
  if (images.size() != src.order()) {
    throw ArgumentError("mapping has " + std::to_string(images.size()) +
                        " images, expected " + std::to_string(src.order()));
  }
  std::vector<bool> hit(dst.order(), false);
  for (Index v : images) {
    if (v >= dst.order() || hit[v]) {
      throw ArgumentError("mapping is not a bijection");
    }
    hit[v] = true;
  }
}

}  // namespace

MappingKind classify_mapping(std::span<const Index> images,
                             const FiniteGroupoid& src,
                             const FiniteGroupoid& dst) {
  require_bijection(images, src, dst);
  if (is_homomorphism(images, src, dst)) return MappingKind::kIso;
  if (is_anti_homomorphism(images, src, dst)) return MappingKind::kAntiIso;
  return MappingKind::kNeither;
}

Mapping verified(std::vector<Index> images, const FiniteGroupoid& src,
                 const FiniteGroupoid& dst) {
  const auto kind = classify_mapping(images, src, dst);
  return Mapping{src.order(), dst.order(), std::move(images), kind};
}

std::vector<std::size_t> cycle_type(std::span<const Index> perm) {
  std::vector<bool> seen(perm.size(), false);
  std::vector<std::size_t> lengths;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    std::size_t length = 0;
    for (std::size_t i = start; !seen[i]; i = perm[i]) {
      seen[i] = true;
      ++length;
    }
    lengths.push_back(length);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::string describe_cycle_type(const std::vector<std::size_t>& type) {
  std::vector<std::size_t> moved;
  for (auto len : type) {
    if (len > 1) moved.push_back(len);
  }
  if (moved.empty()) return "identity";
  if (moved == std::vector<std::size_t>{2}) return "transposition";
  if (moved.size() == 1) return std::to_string(moved[0]) + "-cycle";
  if (std::all_of(moved.begin(), moved.end(),
                  [](std::size_t l) { return l == 2; }) &&
      moved.size() == 2) {
    return "double-transposition";
  }
  std::string out;
  for (std::size_t k = 0; k < moved.size(); ++k) {
    if (k) out += "+";
    out += std::to_string(moved[k]);
  }
  return out + "-cycles";
}

BijectionCensus classify_all_bijections(const FiniteGroupoid& g) {
  if (g.order() > 8) {
    throw ResourceError("bijection census enumerates order! maps; order " +
                        std::to_string(g.order()) + " exceeds the limit of 8");
  }
  BijectionCensus census;
  std::vector<Index> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    auto& bucket = census.by_cycle_type[cycle_type(perm)];
    switch (classify_mapping(perm, g, g)) {
      case MappingKind::kIso:
        ++census.totals.iso;
        ++bucket.iso;
        break;
      case MappingKind::kAntiIso:
        ++census.totals.anti_iso;
        ++bucket.anti_iso;
        break;
      default:
        ++census.totals.neither;
        ++bucket.neither;
        break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return census;
}

std::vector<std::size_t> row_fixed_point_counts(const FiniteGroupoid& g) {
  std::vector<std::size_t> counts(g.order(), 0);
  for (Index i = 0; i < g.order(); ++i) {
    for (Index j = 0; j < g.order(); ++j) {
      if (g(i, j) == j) ++counts[i];
    }
  }
  return counts;
}

namespace {

constexpr Index kUnset = static_cast<Index>(-1);

// Backtracking over partial bijections. Every time an element gets an image,
// its products with all previously mapped elements force further images;
// conflicts and collisions prune the branch.
class IsoSearch {
 public:
  IsoSearch(const FiniteGroupoid& src, const FiniteGroupoid& dst, bool anti)
      : src_(src),
        dst_(dst),
        anti_(anti),
        image_(src.order(), kUnset),
        preimage_(src.order(), kUnset),
        src_invariant_(row_fixed_point_counts(src)),
        dst_invariant_(row_fixed_point_counts(dst)) {}

  bool invariants_match() const {
    auto a = src_invariant_;
    auto b = dst_invariant_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  bool run() { return descend(0); }

  const std::vector<Index>& images() const { return image_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  Index target_product(Index u, Index v) const {
    return anti_ ? dst_(v, u) : dst_(u, v);
  }

  bool compatible(Index i, Index v) const {
    return preimage_[v] == kUnset && src_invariant_[i] == dst_invariant_[v];
  }

  void set(Index i, Index v) {
    image_[i] = v;
    preimage_[v] = i;
    trail_.push_back(i);
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const Index i = trail_.back();
      trail_.pop_back();
      preimage_[image_[i]] = kUnset;
      image_[i] = kUnset;
    }
  }

  // Assigns i -> v and closes under forced images.
  bool assign(Index i, Index v) {
    std::size_t next = trail_.size();
    set(i, v);
    for (; next < trail_.size(); ++next) {
      const Index u = trail_[next];
      for (std::size_t k = 0; k <= next; ++k) {
        const Index w = trail_[k];
        if (!force(src_(u, w), target_product(image_[u], image_[w])) ||
            !force(src_(w, u), target_product(image_[w], image_[u]))) {
          return false;
        }
      }
    }
    return true;
  }

  bool force(Index i, Index v) {
    if (image_[i] != kUnset) return image_[i] == v;
    if (!compatible(i, v)) return false;
    set(i, v);
    return true;
  }

  bool descend(Index from) {
    ++nodes_;
    while (from < image_.size() && image_[from] != kUnset) ++from;
    if (from == image_.size()) return true;
    for (Index v = 0; v < dst_.order(); ++v) {
      if (!compatible(from, v)) continue;
      const auto mark = trail_.size();
      if (assign(from, v) && descend(from + 1)) return true;
      undo(mark);
    }
    return false;
  }

  const FiniteGroupoid& src_;
  const FiniteGroupoid& dst_;
  bool anti_;
  std::vector<Index> image_;
  std::vector<Index> preimage_;
  std::vector<Index> trail_;
  std::vector<std::size_t> src_invariant_;
  std::vector<std::size_t> dst_invariant_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::optional<Mapping> iso_search(const FiniteGroupoid& src,
                                  const FiniteGroupoid& dst, bool anti,
                                  IsoSearchStats* stats) {
  if (src.order() != dst.order()) return std::nullopt;
  IsoSearch search(src, dst, anti);
  if (!search.invariants_match()) return std::nullopt;
  const bool found = search.run();
  if (stats) stats->nodes = search.nodes();
  if (!found) return std::nullopt;
  auto mapping = verified(search.images(), src, dst);
  const bool ok = anti ? is_anti_homomorphism(mapping.images, src, dst)
                       : mapping.kind == MappingKind::kIso;
  if (!ok) throw InvariantViolation("isomorphism search returned a bad witness");
  return mapping;
}

std::vector<Index> compose(std::span<const Index> f, std::span<const Index> g) {
  std::vector<Index> out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = f[g[i]];
  return out;
}

Mapping anti_to_iso(const Mapping& phi, const FiniteGroupoid& src,
                    const FiniteGroupoid& dst) {
  require_bijection(phi.images, src, dst);
  if (!is_anti_homomorphism(phi.images, src, dst)) {
    throw ArgumentError("anti_to_iso needs an anti-isomorphism");
  }
  if (is_homomorphism(phi.images, src, dst)) {
    return verified(phi.images, src, dst);
  }
  const auto report = check_variety(src, presets::aragb());
  if (const auto* failure = report.first_failure()) {
    throw PreconditionError("anti_to_iso needs an ARAGB source; identity " +
                            to_string(failure->first) + " fails");
  }
  if (src.order() == 4) {
    const Index c = 0;
    const Index d = 1;
    std::vector<Index> images(4);
    images[c] = phi.images[c];
    images[d] = phi.images[d];
    images[src(c, d)] = phi.images[src(d, c)];
    images[src(d, c)] = phi.images[src(c, d)];
    auto candidate = verified(std::move(images), src, dst);
    if (candidate.kind == MappingKind::kIso) return candidate;
  }
  if (auto found = iso_search(src, dst, false)) return *found;
  throw InvariantViolation(
      "anti-isomorphic ARAGB pair admits no isomorphism");
}

Mapping canonical_iso(const FiniteGroupoid& k,
                      std::span<const Index> enumeration) {
  const auto order = k.order();
  unsigned level = 0;
  for (std::size_t size = 1; size < order; size *= 4) ++level;
  if (order < 4 || (std::size_t{1} << (2 * level)) != order) {
    throw ArgumentError("canonical_iso needs order 4^n with n >= 1, got " +
                        std::to_string(order));
  }
  if (enumeration.size() != order) {
    throw ArgumentError("enumeration must list every element exactly once");
  }
  {
    std::vector<bool> hit(order, false);
    for (Index e : enumeration) {
      if (e >= order || hit[e]) {
        throw ArgumentError("enumeration must list every element exactly once");
      }
      hit[e] = true;
    }
  }
  const auto report = check_variety(k, presets::aragb());
  if (const auto* failure = report.first_failure()) {
    throw PreconditionError("canonical_iso needs an ARAGB; identity " +
                            to_string(failure->first) + " fails");
  }

  const auto target = tower(level).back();
  std::vector<Index> image(order, kUnset);
  std::vector<Index> covered;

  auto adjoin = [&](Index element, Index value) {
    if (image[element] != kUnset) {
      throw InvariantViolation("extension stage does not quadruple: element " +
                               std::to_string(element) + " produced twice");
    }
    image[element] = value;
    covered.push_back(element);
  };

  const Index y1 = enumeration[0];
  const Index y2 = enumeration[1];
  adjoin(y1, 0);
  adjoin(y2, 1);
  adjoin(k(y1, y2), 2);
  adjoin(k(y2, y1), 3);

  for (unsigned stage = 1; stage < level; ++stage) {
    const Index generator = *std::find_if(
        enumeration.begin(), enumeration.end(),
        [&](Index e) { return image[e] == kUnset; });
    const Index x = adjoined_element(covered.size(), 0);
    const Index ax = target(image[y1], x);
    const Index y1_generator = k(y1, generator);
    const std::vector<Index> previous = covered;
    for (Index e : previous) {
      adjoin(k(generator, e), target(x, image[e]));
      adjoin(k(e, generator), target(image[e], x));
      adjoin(k(y1_generator, e), target(ax, image[e]));
    }
  }

  auto mapping = verified(std::move(image), k, target);
  if (mapping.kind != MappingKind::kIso) {
    throw InvariantViolation("inductively built map is not an isomorphism");
  }
  return mapping;
}

}  // namespace agband
