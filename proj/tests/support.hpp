#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "agband/groupoid.hpp"

namespace agband::testing {

inline std::vector<Index> random_permutation(std::size_t n, std::mt19937& rng) {
  std::vector<Index> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline FiniteGroupoid random_groupoid(std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<Index> pick(0, static_cast<Index>(n - 1));
  std::vector<Index> cells(n * n);
  for (auto& c : cells) c = pick(rng);
  return FiniteGroupoid(n, std::move(cells));
}

}  // namespace agband::testing
