#include "arimat/arimatroid.hpp"

#include <algorithm>

#include "arimat/errors.hpp"
#include "arimat/exactla.hpp"

namespace arimat {

namespace {

void check_subset(const Representation& x, const IndexSet& subset) {
  for (std::size_t k = 0; k < subset.size(); ++k) {
    if (subset[k] >= x.size()) throw Error(ErrorKind::BadIndex, "element " + std::to_string(subset[k] + 1) + " out of range");
    if (k > 0 && subset[k] <= subset[k - 1]) throw Error(ErrorKind::BadIndex, "index set must be sorted without repeats");
  }
}

Integer snf_product(const IntMatrix& m) {
  Integer p = 1;
  for (const Integer& s : snf(m).diagonal) p *= s;
  return p;
}

// Visit the size-k subsets of [n] in lexicographic order.
template <typename Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  IndexSet c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    fn(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

}  // namespace

Representation::Representation(IntMatrix matrix, std::vector<std::string> labels)
    : matrix_(std::move(matrix)), labels_(std::move(labels)) {
  if (matrix_.rows() == 0) throw Error(ErrorKind::InvalidArgument, "a representation needs at least one row");
  if (labels_.empty()) {
    for (std::size_t j = 0; j < matrix_.cols(); ++j) labels_.push_back(std::to_string(j + 1));
  } else if (labels_.size() != matrix_.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "label count differs from column count");
  }
  full_rank_ = rank(matrix_) == matrix_.rows();
}

IndexSet subset_from_mask(std::uint64_t mask) {
  IndexSet s;
  for (std::size_t j = 0; mask; ++j, mask >>= 1)
    if (mask & 1) s.push_back(j);
  return s;
}

std::uint64_t mask_from_subset(const IndexSet& subset) {
  std::uint64_t m = 0;
  for (std::size_t j : subset) m |= std::uint64_t{1} << j;
  return m;
}

std::size_t rank_of(const Representation& x, const IndexSet& subset) {
  check_subset(x, subset);
  return rank(x.matrix().select_columns(subset));
}

Integer multiplicity(const Representation& x, const IndexSet& subset) {
  check_subset(x, subset);
  return snf_product(x.matrix().select_columns(subset));
}

MatroidTable full_table(const Representation& x, std::size_t cap) {
  const std::size_t n = x.size();
  if (n > cap || n >= 63)
    throw Error(ErrorKind::TooLarge, "subset table needs 2^" + std::to_string(n) + " entries (cap N <= " + std::to_string(cap) + ")");
  std::vector<SubsetProfile> profiles;
  profiles.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    IndexSet s = subset_from_mask(mask);
    const SnfResult r = snf(x.matrix().select_columns(s));
    Integer m = 1;
    for (const Integer& d : r.diagonal) m *= d;
    profiles.push_back({std::move(s), r.rank, std::move(m)});
  }
  return MatroidTable(std::move(profiles));
}

std::vector<IndexSet> bases(const Representation& x) {
  std::vector<IndexSet> out;
  for_each_combination(x.size(), x.dimension(), [&](const IndexSet& c) {
    if (det(x.matrix().select_columns(c)) != 0) out.push_back(c);
  });
  return out;
}

bool is_multiplicative_basis(const Representation& x, const IndexSet& basis) {
  check_subset(x, basis);
  if (basis.size() != x.dimension()) throw Error(ErrorKind::NotABasis, "basis must have d elements");
  const Integer d = det(x.matrix().select_columns(basis));
  if (d == 0) throw Error(ErrorKind::NotABasis, "columns are linearly dependent");
  Integer product = 1;
  for (std::size_t b : basis) product *= multiplicity(x, {b});
  return abs(d) == product;
}

std::vector<IndexSet> multiplicative_bases(const Representation& x) {
  std::vector<IndexSet> out;
  std::vector<Integer> singles;
  for (std::size_t j = 0; j < x.size(); ++j) singles.push_back(multiplicity(x, {j}));
  for (const IndexSet& b : bases(x)) {
    Integer product = 1;
    for (std::size_t j : b) product *= singles[j];
    if (abs(det(x.matrix().select_columns(b))) == product) out.push_back(b);
  }
  return out;
}

}  // namespace arimat
