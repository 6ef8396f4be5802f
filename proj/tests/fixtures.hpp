#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "arimat/arimat.hpp"

namespace arimat::fixtures {

// Kind of the arimat::Error thrown by f, or nullopt if nothing was thrown.
template <class F>
std::optional<ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

// Basic form on {1,2,3} with diag(1,2,3); the worked example for sign
// normalization.
inline IntMatrix example_x() {
  return {{1, 0, 0, -4, 0, 3, 0},
          {0, 2, 0, 1, 2, 0, -2},
          {0, 0, 3, 0, 1, -1, -1}};
}

// Same matrix after flipping column 7, column 6 and row 1 (plus column 1 to
// keep the diagonal positive).
inline IntMatrix example_x_prime() {
  return {{1, 0, 0, 4, 0, 3, 0},
          {0, 2, 0, 1, 2, 0, 2},
          {0, 0, 3, 0, 1, 1, 1}};
}

// Identity block plus a 6-cycle support; the sign of the last entry cannot be
// fixed independently of the others.
inline IntMatrix six_cycle_x() {
  return {{1, 0, 0, 1, 0, 1},
          {0, 1, 0, 1, 1, 0},
          {0, 0, 1, 0, 1, -1}};
}

// [[1, a], [0, b]]: same arithmetic matroid for every a coprime to b, but
// not weakly multiplicative once b >= 2.
inline IntMatrix x_ab(long a, long b) { return {{1, a}, {0, b}}; }

// A few more weakly multiplicative matrices with N <= 6.
inline std::vector<IntMatrix> small_weakly_multiplicative() {
  return {
      IntMatrix::identity(2),
      IntMatrix::identity(3),
      {{2, 0, 1}, {0, 3, 1}},
      {{1, 0, 1, 1}, {0, 1, 1, -1}},
      {{1, 0, 2, 0}, {0, 1, 0, 3}},
      {{2, 0, 2, 4}, {0, 1, 1, -1}},
      {{1, 0, 0, 1, 1}, {0, 1, 0, 1, 0}, {0, 0, 2, 0, 2}},
      {{3, 1, -2}, {0, 2, 1}},
  };
}

// Same (rank, multiplicity) table as `table`, checked subset by subset in
// order of size so that most mismatches are found on singletons and pairs.
inline bool matches_table(const IntMatrix& m, const MatroidTable& table) {
  const Representation x(m);
  const std::size_t n = m.cols();
  std::vector<std::uint64_t> masks(std::uint64_t{1} << n);
  for (std::uint64_t k = 0; k < masks.size(); ++k) masks[k] = k;
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint64_t a, std::uint64_t b) { return __builtin_popcountll(a) < __builtin_popcountll(b); });
  for (std::uint64_t mask : masks) {
    const SubsetProfile& p = table.at(mask);
    if (rank_of(x, p.subset) != p.rank || multiplicity(x, p.subset) != p.multiplicity) return false;
  }
  return true;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t d, std::size_t n, long lo, long hi) {
  IntMatrix m(d, n);
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = lo + static_cast<long>(rng() % span);
  return m;
}

// Rejection sampling: full row rank with at least one multiplicative basis.
inline IntMatrix random_weakly_multiplicative(std::mt19937_64& rng, std::size_t max_d, std::size_t max_n, long bound) {
  while (true) {
    const std::size_t d = 1 + rng() % max_d;
    const std::size_t n = d + rng() % (max_n - d + 1);
    IntMatrix m = random_matrix(rng, d, n, -bound, bound);
    const Representation x(m);
    if (x.full_rank() && !multiplicative_bases(x).empty()) return m;
  }
}

}  // namespace arimat::fixtures
