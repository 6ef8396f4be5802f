#include "arimat/oracle.hpp"

#include <random>

#include "arimat/errors.hpp"
#include "arimat/exactla.hpp"

namespace arimat::oracle {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

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

Integer cofactor_det(const IntMatrix& m) {
  if (!m.square()) throw Error(ErrorKind::NotSquare, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer total = 0;
  std::vector<std::size_t> rows;
  for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    std::vector<std::size_t> cols;
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) cols.push_back(k);
    const Integer minor = cofactor_det(m.select(rows, cols));
    if (j % 2 == 0)
      total += m(0, j) * minor;
    else
      total -= m(0, j) * minor;
  }
  return total;
}

Integer multiplicity_gcd_minors(const Representation& x, const IndexSet& subset) {
  for (std::size_t j : subset)
    if (j >= x.size()) throw Error(ErrorKind::BadIndex, "element " + std::to_string(j + 1) + " out of range");
  const IntMatrix sub = x.matrix().select_columns(subset);
  // d_r, the gcd of the r x r minors for the largest r with a nonzero minor,
  // equals the product of the invariant factors.
  for (std::size_t k = std::min(sub.rows(), sub.cols()); k > 0; --k) {
    Integer g = 0;
    for_each_combination(sub.rows(), k, [&](const IndexSet& rows) {
      for_each_combination(sub.cols(), k, [&](const IndexSet& cols) {
        const Integer minor = cofactor_det(sub.select(rows, cols));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), minor.get_mpz_t());
      });
    });
    if (g != 0) return g;
  }
  return 1;
}

bool same_arithmetic_matroid(const Representation& x, const Representation& y, std::size_t cap) {
  if (x.dimension() != y.dimension() || x.size() != y.size())
    throw Error(ErrorKind::DimensionMismatch, "representations differ in shape");
  return full_table(x, cap) == full_table(y, cap);
}

EquivalenceReport equivalent_bruteforce(const Representation& x, const Representation& y, std::size_t cap,
                                        bool collect_all) {
  if (x.dimension() != y.dimension() || x.size() != y.size())
    throw Error(ErrorKind::DimensionMismatch, "representations differ in shape");
  const std::size_t n = x.size();
  if (n > cap) throw Error(ErrorKind::TooLarge, "sign search over 2^" + std::to_string(n) + " patterns exceeds the cap");

  EquivalenceReport report;
  report.same_matroid = same_arithmetic_matroid(x, y, std::max(cap, kDefaultTableCap));
  const HnfResult target = row_hermite_form(y.matrix());
  std::size_t witnesses = 0;
  SignDiagonal signs(n);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    for (std::size_t j = 0; j < n; ++j) signs[j] = (s >> j) & 1 ? -1 : 1;
    const HnfResult h = row_hermite_form(scale_columns(x.matrix(), signs));
    if (h.hnf != target.hnf) continue;
    ++witnesses;
    if (!report.equivalent) {
      // Tx X D = H = Ty Y  =>  Y = (Ty^-1 Tx) X D.
      report.equivalent = true;
      report.witness_sign_pattern = signs;
      report.witness = TransformWitness{target.transform.inverse() * h.transform, signs};
    }
    if (collect_all)
      report.all_sign_patterns.push_back(signs);
    else
      break;
  }
  if (report.equivalent)
    report.notes = collect_all ? std::to_string(witnesses) + " witnessing sign patterns" : "witness found";
  else
    report.notes = report.same_matroid ? "same arithmetic matroid, no sign pattern works"
                                       : "different arithmetic matroids";
  return report;
}

TransformWitness random_transform(std::size_t d, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(splitmix64(seed));
  SignDiagonal signs(n);
  for (int& s : signs) s = rng() & 1 ? -1 : 1;
  return {unimodular_random(d, seed, 3 * d + 2), std::move(signs)};
}

UniquenessReport verify_uniqueness_theorem(const Representation& x, std::size_t trials, std::uint64_t seed) {
  const CanonicalRep reference = canonical_form(x);
  UniquenessReport report{trials, seed, reference.matrix, {}};
  const UnimodularWitness reference_left = reference.witness.left;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = splitmix64(seed ^ splitmix64(t));
    TransformWitness w = random_transform(x.dimension(), x.size(), trial_seed);
    const Representation y(w.apply(x.matrix()));
    const CanonicalRep cy = canonical_form(y);
    bool ok = cy.matrix == reference.matrix;
    if (ok) {
      SignDiagonal signs(x.size());
      for (std::size_t j = 0; j < signs.size(); ++j)
        signs[j] = reference.witness.column_signs[j] * cy.witness.column_signs[j];
      const TransformWitness composed{cy.witness.left.inverse() * reference_left, std::move(signs)};
      ok = composed.apply(x.matrix()) == y.matrix();
    }
    if (!ok) report.failures.push_back({t, trial_seed, std::move(w), cy.matrix});
  }
  return report;
}

}  // namespace arimat::oracle
