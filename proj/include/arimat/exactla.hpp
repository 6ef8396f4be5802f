#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "arimat/int_matrix.hpp"

namespace arimat {

/// A square integer matrix whose determinant has been verified to be ±1.
class UnimodularWitness {
 public:
  UnimodularWitness() = default;

  /// Throws InvalidArgument unless `matrix` is square with determinant ±1.
  explicit UnimodularWitness(IntMatrix matrix);

  static UnimodularWitness identity(std::size_t d);

  const IntMatrix& matrix() const noexcept { return matrix_; }
  int determinant() const noexcept { return determinant_; }

  /// Exact inverse, again unimodular.
  UnimodularWitness inverse() const;

  friend UnimodularWitness operator*(const UnimodularWitness& a, const UnimodularWitness& b);
  friend bool operator==(const UnimodularWitness& a, const UnimodularWitness& b) { return a.matrix_ == b.matrix_; }

 private:
  UnimodularWitness(IntMatrix matrix, int det) : matrix_(std::move(matrix)), determinant_(det) {}

  IntMatrix matrix_;
  int determinant_ = 1;
};

struct HnfResult {
  IntMatrix hnf;
  UnimodularWitness transform;  // transform * input == hnf
};

/// Hermite normal form with respect to an ordered list of basis columns.
///
/// Pivot k sits in row k of column basis_cols[k]; pivots are positive and the
/// entries above each pivot lie in [0, pivot). The columns of the result stay
/// in their original positions.
HnfResult hnf_basis_form(const IntMatrix& m, std::span<const std::size_t> basis_cols);

/// Row-style HNF with pivot columns picked greedily from the left. Unique on
/// each orbit {T * m : T in GL(d, Z)}. Requires full row rank.
HnfResult hnf_left_canonical(const IntMatrix& m);

/// Same normal form without the rank requirement; zero rows collect at the
/// bottom.
HnfResult row_hermite_form(const IntMatrix& m);

struct SnfResult {
  std::vector<Integer> diagonal;  // s_1 | s_2 | ... | s_r, all positive
  IntMatrix left;                 // unimodular, rows x rows
  IntMatrix right;                // unimodular, cols x cols
  std::size_t rank = 0;
};

/// Smith normal form: left * m * right == diag(diagonal) padded with zeros.
SnfResult snf(const IntMatrix& m);

/// Exact determinant via Bareiss fraction-free elimination.
Integer det(const IntMatrix& m);

/// Rank over the rationals.
std::size_t rank(const IntMatrix& m);

struct DiophantineSolution {
  std::vector<Integer> particular;
  std::vector<std::vector<Integer>> kernel_basis;  // lattice basis of {x in Z^n : m x = 0}
};

/// Integer solutions of m * x = b, or nullopt if there are none.
std::optional<DiophantineSolution> solve_diophantine(const IntMatrix& m, std::span<const Integer> b);

/// Product of `steps` random elementary row operations (transvections with
/// coefficients in [-2, 2], swaps and negations). Deterministic for a given
/// (d, seed, steps) on every platform.
UnimodularWitness unimodular_random(std::size_t d, std::uint64_t seed, std::size_t steps);

}  // namespace arimat
