#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arimat/arimatroid.hpp"
#include "arimat/canonical.hpp"

// Brute-force checkers. Nothing here calls the canonical-form pipeline except
// verify_uniqueness_theorem, whose whole purpose is to test it.
namespace arimat::oracle {

struct EquivalenceReport {
  bool same_matroid = false;
  bool equivalent = false;
  /// First witnessing column sign pattern in binary counting order.
  std::optional<SignDiagonal> witness_sign_pattern;
  std::optional<TransformWitness> witness;
  /// Every witnessing sign pattern; filled only when requested.
  std::vector<SignDiagonal> all_sign_patterns;
  std::string notes;
};

/// Equality of the full (rank, multiplicity) tables.
bool same_arithmetic_matroid(const Representation& x, const Representation& y,
                             std::size_t cap = kDefaultTableCap);

/// Decides y == T x D by trying all 2^N sign diagonals D and comparing row
/// Hermite forms of x D and y.
EquivalenceReport equivalent_bruteforce(const Representation& x, const Representation& y,
                                        std::size_t cap = kDefaultBruteforceCap, bool collect_all = false);

/// m(S) as the gcd of all r x r minors of the column submatrix, r being the
/// largest size of a nonzero minor. Uses cofactor expansion only.
Integer multiplicity_gcd_minors(const Representation& x, const IndexSet& subset);

/// Laplace-expansion determinant; exponential, for small matrices only.
Integer cofactor_det(const IntMatrix& m);

struct UniquenessFailure {
  std::size_t trial = 0;
  std::uint64_t trial_seed = 0;
  TransformWitness transform;
  IntMatrix canonical_of_transformed;
};

struct UniquenessReport {
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  IntMatrix canonical;
  std::vector<UniquenessFailure> failures;

  std::size_t passed() const { return trials - failures.size(); }
};

/// For `trials` random (T, D): canonical_form(T x D) must equal
/// canonical_form(x) and the composed witness must map x onto T x D.
UniquenessReport verify_uniqueness_theorem(const Representation& x, std::size_t trials, std::uint64_t seed);

/// Random T and D used by the harness for a given trial seed.
TransformWitness random_transform(std::size_t d, std::size_t n, std::uint64_t seed);

}  // namespace arimat::oracle
