#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "arimat/int_matrix.hpp"

namespace arimat {

/// A list of N integer vectors in Z^d, stored as the columns of a d x N matrix,
/// together with display labels for the ground set.
///
/// Any matrix with at least one row is accepted; operations that need full
/// row rank (canonical forms, basic forms) check it themselves.
class Representation {
 public:
  explicit Representation(IntMatrix matrix, std::vector<std::string> labels = {});

  const IntMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dimension() const noexcept { return matrix_.rows(); }
  std::size_t size() const noexcept { return matrix_.cols(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  bool full_rank() const noexcept { return full_rank_; }

 private:
  IntMatrix matrix_;
  std::vector<std::string> labels_;
  bool full_rank_ = false;
};

struct SubsetProfile {
  IndexSet subset;
  std::size_t rank = 0;
  Integer multiplicity = 1;

  friend bool operator==(const SubsetProfile&, const SubsetProfile&) = default;
};

/// Rank and multiplicity of every subset of the ground set, indexed by the
/// subset's bitmask (bit j set <=> column j in the subset).
class MatroidTable {
 public:
  explicit MatroidTable(std::vector<SubsetProfile> profiles) : profiles_(std::move(profiles)) {}

  std::size_t size() const noexcept { return profiles_.size(); }
  const SubsetProfile& at(std::uint64_t mask) const { return profiles_.at(mask); }
  const std::vector<SubsetProfile>& profiles() const noexcept { return profiles_; }

  friend bool operator==(const MatroidTable&, const MatroidTable&) = default;

 private:
  std::vector<SubsetProfile> profiles_;
};

inline constexpr std::size_t kDefaultTableCap = 22;

IndexSet subset_from_mask(std::uint64_t mask);
std::uint64_t mask_from_subset(const IndexSet& subset);

std::size_t rank_of(const Representation& x, const IndexSet& subset);

/// |(<S>_R ∩ Z^d) / <S>|, the product of the invariant factors of the column
/// submatrix. The empty set and zero columns have multiplicity 1.
Integer multiplicity(const Representation& x, const IndexSet& subset);

/// Throws TooLarge when N exceeds `cap`.
MatroidTable full_table(const Representation& x, std::size_t cap = kDefaultTableCap);

/// All d-element column sets with nonzero determinant, in lexicographic order.
std::vector<IndexSet> bases(const Representation& x);

/// m(B) == product of m({b}) over b in B. Throws NotABasis otherwise.
bool is_multiplicative_basis(const Representation& x, const IndexSet& basis);

std::vector<IndexSet> multiplicative_bases(const Representation& x);

}  // namespace arimat
