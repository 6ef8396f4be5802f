#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "arimat/arimatroid.hpp"
#include "arimat/circuitgraph.hpp"
#include "arimat/exactla.hpp"

namespace arimat {

/// Diagonal of a ±1 matrix acting on columns from the right.
using SignDiagonal = std::vector<int>;

/// The pair (T, D) of an equivalence Y = T * X * D.
struct TransformWitness {
  UnimodularWitness left;
  SignDiagonal column_signs;

  static TransformWitness identity(std::size_t d, std::size_t n);

  IntMatrix apply(const IntMatrix& x) const;
};

/// X = (B | A) up to column positions: the columns listed in `basis` form a
/// positive diagonal block, column k of `a` is original column non_basis[k].
struct BasicForm {
  IndexSet basis;
  IndexSet non_basis;
  std::vector<Integer> diag;
  IntMatrix a;
  TransformWitness transform;  // transform.apply(source matrix) == assembled()

  IntMatrix assembled() const;
};

/// One entry per edge of the coordinatizing path, in the path's edge order.
using SignVector = std::vector<int>;

/// A row flip, or a flip of an original column of the represented matrix.
struct Flip {
  Vertex::Kind kind;
  std::size_t index;

  friend bool operator==(const Flip&, const Flip&) = default;
};

struct SignNormalization {
  BasicForm form;
  /// Row and non-basis column flips in the order performed. The basis column
  /// flip that restores a positive diagonal after each row flip is not listed;
  /// it shows up in the witness.
  std::vector<Flip> flips;
};

struct CanonicalRep {
  IntMatrix matrix;
  IndexSet basis_used;
  Forest forest_used;
  TransformWitness witness;  // matrix == witness.apply(input)
};

inline constexpr std::size_t kDefaultEnumerationCap = 20;
inline constexpr std::size_t kDefaultBruteforceCap = 16;

/// Hermite normal form with respect to a multiplicative basis. Throws
/// NotABasis, NotFullRank, or NotMultiplicative when the basis block does
/// not come out diagonal.
BasicForm basic_form(const Representation& x, const IndexSet& basis);

/// Sign vector that turns every path entry of `form` positive.
SignVector positive_target(const BasicForm& form, const Forest& path);

/// Flips rows and columns so that entry p_k of the path ends up equal to
/// sigma[k] times its value in `form`. Lines are flipped while replaying
/// `order` backwards. Throws PathMismatch if `path` is not a spanning forest
/// of the form's incidence graph or `order` does not eliminate it.
SignNormalization sign_normalize(const BasicForm& form, const Forest& path, const SignVector& sigma,
                                 const EliminationOrder& order);

/// Same, using the default elimination order of `path`.
BasicForm sign_normalize(const BasicForm& form, const Forest& path, const SignVector& sigma);

/// Orbit representative under X -> T X D: basic form on the lexicographically
/// smallest multiplicative basis, then all entries of the depth-first
/// coordinatizing path made positive.
CanonicalRep canonical_form(const Representation& x);

/// A witness (T, D) with y == T x D, or nullopt. Inputs without a
/// multiplicative basis are decided by exhaustive sign search, bounded by
/// `bruteforce_cap` columns.
std::optional<TransformWitness> equivalent(const Representation& x, const Representation& y,
                                           std::size_t bruteforce_cap = kDefaultBruteforceCap);

/// All representations in basic form for `basis`, one per sign choice on
/// the coordinatizing path, ordered by sign index in binary counting order
/// (bit k set makes path entry k negative, so index 0 is all-positive).
std::vector<IntMatrix> enumerate_basic_reps(const Representation& x, const IndexSet& basis,
                                            std::size_t cap = kDefaultEnumerationCap);

/// 2^(N - kappa(A)) for any basic form (B | A) of x.
Integer stratum_size(const Representation& x);

}  // namespace arimat
