#include "arimat/exactla.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "arimat/errors.hpp"

namespace arimat {

namespace {

// Replace rows (a, b) by (x*a + y*b, -(vb/g)*a + (va/g)*b) where g = x*va + y*vb
// is the gcd of the entries va, vb in the active column. The 2x2 transform has
// determinant 1 and zeroes the entry in row b.
void gcd_combine_rows(IntMatrix& m, IntMatrix& t, std::size_t a, std::size_t b, std::size_t col) {
  Integer g, x, y;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), m(a, col).get_mpz_t(), m(b, col).get_mpz_t());
  const Integer fa = m(a, col) / g;
  const Integer fb = m(b, col) / g;
  auto combine = [&](IntMatrix& mat) {
    for (std::size_t j = 0; j < mat.cols(); ++j) {
      Integer ra = x * mat(a, j) + y * mat(b, j);
      Integer rb = fa * mat(b, j) - fb * mat(a, j);
      mat(a, j) = std::move(ra);
      mat(b, j) = std::move(rb);
    }
  };
  combine(m);
  combine(t);
}

struct Echelon {
  IntMatrix h;
  IntMatrix t;
  std::vector<std::size_t> pivot_cols;
};

// Row echelon form over Z restricted to the given column order. With
// `require_pivot` every listed column must receive a pivot; otherwise columns
// without a nonzero entry below the current row are skipped.
Echelon echelonize(const IntMatrix& m, std::span<const std::size_t> order, bool require_pivot) {
  Echelon e{m, IntMatrix::identity(m.rows()), {}};
  IntMatrix& h = e.h;
  std::size_t row = 0;
  for (std::size_t col : order) {
    if (row == h.rows()) break;
    for (std::size_t i = row + 1; i < h.rows(); ++i)
      if (h(i, col) != 0) gcd_combine_rows(h, e.t, row, i, col);
    if (h(row, col) == 0) {
      if (require_pivot) throw Error(ErrorKind::NotABasis, "basis columns are linearly dependent");
      continue;
    }
    if (h(row, col) < 0) {
      h.negate_row(row);
      e.t.negate_row(row);
    }
    const Integer& pivot = h(row, col);
    for (std::size_t i = 0; i < row; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), pivot.get_mpz_t());
      if (q != 0) {
        const Integer neg = -q;
        h.add_row_multiple(i, row, neg);
        e.t.add_row_multiple(i, row, neg);
      }
    }
    e.pivot_cols.push_back(col);
    ++row;
  }
  return e;
}

}  // namespace

UnimodularWitness::UnimodularWitness(IntMatrix matrix) : matrix_(std::move(matrix)) {
  if (!matrix_.square()) throw Error(ErrorKind::InvalidArgument, "unimodular witness must be square");
  const Integer d = det(matrix_);
  if (d != 1 && d != -1) throw Error(ErrorKind::InvalidArgument, "matrix is not unimodular (det = " + d.get_str() + ")");
  determinant_ = static_cast<int>(d.get_si());
}

UnimodularWitness UnimodularWitness::identity(std::size_t d) { return {IntMatrix::identity(d), 1}; }

UnimodularWitness UnimodularWitness::inverse() const {
  // The HNF of a unimodular matrix is the identity, so its transform is the inverse.
  HnfResult r = row_hermite_form(matrix_);
  return r.transform;
}

UnimodularWitness operator*(const UnimodularWitness& a, const UnimodularWitness& b) {
  return {a.matrix_ * b.matrix_, a.determinant_ * b.determinant_};
}

HnfResult hnf_basis_form(const IntMatrix& m, std::span<const std::size_t> basis_cols) {
  const std::size_t d = m.rows();
  if (basis_cols.size() != d) throw Error(ErrorKind::NotABasis, "basis must contain exactly d columns");
  std::vector<std::size_t> seen(basis_cols.begin(), basis_cols.end());
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw Error(ErrorKind::NotABasis, "repeated basis column");
  if (!seen.empty() && seen.back() >= m.cols()) throw Error(ErrorKind::BadIndex, "basis column out of range");
  if (rank(m) < d) throw Error(ErrorKind::NotFullRank, "matrix does not have full row rank");
  Echelon e = echelonize(m, basis_cols, true);
  return {std::move(e.h), UnimodularWitness(std::move(e.t))};
}

HnfResult row_hermite_form(const IntMatrix& m) {
  std::vector<std::size_t> order(m.cols());
  for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
  Echelon e = echelonize(m, order, false);
  return {std::move(e.h), UnimodularWitness(std::move(e.t))};
}

HnfResult hnf_left_canonical(const IntMatrix& m) {
  if (rank(m) < m.rows()) throw Error(ErrorKind::NotFullRank, "matrix does not have full row rank");
  return row_hermite_form(m);
}

SnfResult snf(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix w = IntMatrix::identity(m.cols());
  const std::size_t limit = std::min(m.rows(), m.cols());
  std::size_t t = 0;
  for (; t < limit; ++t) {
    bool have_pivot = false;
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = 0, pj = 0;
      have_pivot = false;
      for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
          if (a(i, j) == 0) continue;
          if (!have_pivot || mpz_cmpabs(a(i, j).get_mpz_t(), a(pi, pj).get_mpz_t()) < 0) {
            pi = i;
            pj = j;
            have_pivot = true;
          }
        }
      if (!have_pivot) break;
      a.swap_rows(t, pi);
      u.swap_rows(t, pi);
      a.swap_cols(t, pj);
      w.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        const Integer neg = -q;
        a.add_row_multiple(i, t, neg);
        u.add_row_multiple(i, t, neg);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        const Integer neg = -q;
        a.add_col_multiple(j, t, neg);
        w.add_col_multiple(j, t, neg);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce s_t | every remaining entry.
      bool divisible = true;
      for (std::size_t i = t + 1; i < a.rows() && divisible; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            a.add_row_multiple(t, i, Integer(1));
            u.add_row_multiple(t, i, Integer(1));
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (!have_pivot) break;
    if (a(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
  }
  SnfResult r{{}, std::move(u), std::move(w), t};
  for (std::size_t k = 0; k < t; ++k) r.diagonal.push_back(a(k, k));
  return r;
}

Integer det(const IntMatrix& m) {
  if (!m.square()) throw Error(ErrorKind::NotSquare, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int s = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      s = -s;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return s < 0 ? Integer(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) {
  IntMatrix a = m;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t p = r;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      for (std::size_t j = col + 1; j < a.cols(); ++j) {
        Integer v = a(r, col) * a(i, j) - a(i, col) * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, col) = 0;
    }
    prev = a(r, col);
    ++r;
  }
  return r;
}

std::optional<DiophantineSolution> solve_diophantine(const IntMatrix& m, std::span<const Integer> b) {
  if (b.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "right-hand side length differs from row count");
  // U m W = S, so m x = b  <=>  S y = U b with x = W y.
  const SnfResult s = snf(m);
  const std::vector<Integer> ub = s.left * b;
  std::vector<Integer> y(m.cols());
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < s.rank) {
      if (!mpz_divisible_p(ub[i].get_mpz_t(), s.diagonal[i].get_mpz_t())) return std::nullopt;
      mpz_divexact(y[i].get_mpz_t(), ub[i].get_mpz_t(), s.diagonal[i].get_mpz_t());
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  DiophantineSolution sol;
  sol.particular = s.right * std::span<const Integer>(y);
  for (std::size_t j = s.rank; j < m.cols(); ++j) sol.kernel_basis.push_back(s.right.column(j));
  return sol;
}

UnimodularWitness unimodular_random(std::size_t d, std::uint64_t seed, std::size_t steps) {
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "dimension must be positive");
  // mt19937_64's output sequence is fixed by the standard; the reductions below
  // avoid std::uniform_int_distribution, whose algorithm is implementation-defined.
  std::mt19937_64 rng(seed);
  IntMatrix t = IntMatrix::identity(d);
  for (std::size_t s = 0; s < steps; ++s) {
    const auto kind = d == 1 ? 5 : rng() % 6;
    if (kind <= 3) {
      const std::size_t i = rng() % d;
      std::size_t j = rng() % (d - 1);
      if (j >= i) ++j;
      const long coeff = static_cast<long>(rng() % 4);  // maps to -2, -1, 1, 2
      t.add_row_multiple(i, j, Integer(coeff < 2 ? coeff - 2 : coeff - 1));
    } else if (kind == 4) {
      const std::size_t i = rng() % d;
      std::size_t j = rng() % (d - 1);
      if (j >= i) ++j;
      t.swap_rows(i, j);
    } else {
      t.negate_row(rng() % d);
    }
  }
  return UnimodularWitness(std::move(t));
}

}  // namespace arimat
