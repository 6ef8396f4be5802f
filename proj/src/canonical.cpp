#include "arimat/canonical.hpp"

#include <algorithm>

#include "arimat/errors.hpp"
#include "arimat/oracle.hpp"

namespace arimat {

TransformWitness TransformWitness::identity(std::size_t d, std::size_t n) {
  return {UnimodularWitness::identity(d), SignDiagonal(n, 1)};
}

IntMatrix TransformWitness::apply(const IntMatrix& x) const {
  return scale_columns(left.matrix() * x, column_signs);
}

IntMatrix BasicForm::assembled() const {
  const std::size_t d = basis.size();
  IntMatrix out(d, basis.size() + non_basis.size());
  for (std::size_t i = 0; i < d; ++i) out(i, basis[i]) = diag[i];
  for (std::size_t k = 0; k < non_basis.size(); ++k)
    for (std::size_t i = 0; i < d; ++i) out(i, non_basis[k]) = a(i, k);
  return out;
}

BasicForm basic_form(const Representation& x, const IndexSet& basis) {
  if (!std::is_sorted(basis.begin(), basis.end()))
    throw Error(ErrorKind::InvalidArgument, "basis must be given as a sorted index set");
  HnfResult h = hnf_basis_form(x.matrix(), basis);
  const std::size_t d = x.dimension();
  BasicForm f;
  f.basis = basis;
  for (std::size_t j = 0; j < x.size(); ++j)
    if (!std::binary_search(basis.begin(), basis.end(), j)) f.non_basis.push_back(j);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t r = 0; r < d; ++r)
      if (r != i && h.hnf(r, basis[i]) != 0)
        throw Error(ErrorKind::NotMultiplicative, "basis block of the Hermite form is not diagonal");
    f.diag.push_back(h.hnf(i, basis[i]));
  }
  f.a = h.hnf.select_columns(f.non_basis);
  f.transform = TransformWitness{std::move(h.transform), SignDiagonal(x.size(), 1)};
  return f;
}

SignVector positive_target(const BasicForm& form, const Forest& path) {
  SignVector sigma;
  sigma.reserve(path.edges.size());
  for (const Edge& e : path.edges) {
    if (e.row >= form.a.rows() || e.col >= form.a.cols()) throw Error(ErrorKind::PathMismatch, "path edge out of range");
    sigma.push_back(form.a(e.row, e.col) < 0 ? -1 : 1);
  }
  return sigma;
}

SignNormalization sign_normalize(const BasicForm& form, const Forest& path, const SignVector& sigma,
                                 const EliminationOrder& order) {
  if (!is_spanning_forest(incidence(form.a), path))
    throw Error(ErrorKind::PathMismatch, "path is not a spanning forest of the incidence graph");
  if (sigma.size() != path.edges.size()) throw Error(ErrorKind::PathMismatch, "sign vector length differs from path size");
  if (order.size() != path.edges.size()) throw Error(ErrorKind::PathMismatch, "elimination order does not cover the path");

  std::vector<int> target(path.edges.size());
  for (std::size_t k = 0; k < path.edges.size(); ++k) {
    if (sigma[k] != 1 && sigma[k] != -1) throw Error(ErrorKind::InvalidArgument, "sign entries must be +1 or -1");
    const Edge& e = path.edges[k];
    target[k] = sigma[k] * sign(form.a(e.row, e.col));
  }

  SignNormalization out{form, {}};
  BasicForm& f = out.form;
  IntMatrix left = f.transform.left.matrix();
  for (auto step = order.rbegin(); step != order.rend(); ++step) {
    const auto it = std::find(path.edges.begin(), path.edges.end(), step->edge);
    if (it == path.edges.end()) throw Error(ErrorKind::PathMismatch, "elimination step names an edge outside the path");
    const int want = target[static_cast<std::size_t>(it - path.edges.begin())];
    if (sign(f.a(step->edge.row, step->edge.col)) == want) continue;
    if (step->vertex.kind == Vertex::Kind::Row) {
      const std::size_t i = step->vertex.index;
      // Row flip, then flip the basis column of that row to keep b_ii > 0.
      f.a.negate_row(i);
      left.negate_row(i);
      f.transform.column_signs[f.basis[i]] *= -1;
      out.flips.push_back({Vertex::Kind::Row, i});
    } else {
      const std::size_t k = step->vertex.index;
      f.a.negate_col(k);
      f.transform.column_signs[f.non_basis[k]] *= -1;
      out.flips.push_back({Vertex::Kind::Column, f.non_basis[k]});
    }
  }
  f.transform.left = UnimodularWitness(std::move(left));
  return out;
}

BasicForm sign_normalize(const BasicForm& form, const Forest& path, const SignVector& sigma) {
  return sign_normalize(form, path, sigma, elimination_order(path)).form;
}

CanonicalRep canonical_form(const Representation& x) {
  if (!x.full_rank()) throw Error(ErrorKind::NotFullRank, "matrix does not have full row rank");
  const std::vector<IndexSet> mult = multiplicative_bases(x);
  if (mult.empty()) throw Error(ErrorKind::NotWeaklyMultiplicative, "not weakly multiplicative");
  const BasicForm form = basic_form(x, mult.front());
  Forest path = coordinatizing_path(incidence(form.a));
  const BasicForm normal = sign_normalize(form, path, positive_target(form, path));
  return {normal.assembled(), normal.basis, std::move(path), normal.transform};
}

std::optional<TransformWitness> equivalent(const Representation& x, const Representation& y,
                                           std::size_t bruteforce_cap) {
  if (x.dimension() != y.dimension() || x.size() != y.size())
    throw Error(ErrorKind::DimensionMismatch, "representations differ in shape");
  if (x.full_rank() != y.full_rank()) return std::nullopt;
  if (x.full_rank()) {
    const bool x_wm = !multiplicative_bases(x).empty();
    const bool y_wm = !multiplicative_bases(y).empty();
    // Weak multiplicativity is a property of the matroid, so a mismatch rules
    // out equivalence.
    if (x_wm != y_wm) return std::nullopt;
    if (x_wm) {
      const CanonicalRep cx = canonical_form(x);
      const CanonicalRep cy = canonical_form(y);
      if (cx.matrix != cy.matrix) return std::nullopt;
      // cx = Tx X Dx and cy = Ty Y Dy  =>  Y = (Ty^-1 Tx) X (Dx Dy).
      SignDiagonal signs(x.size());
      for (std::size_t j = 0; j < signs.size(); ++j) signs[j] = cx.witness.column_signs[j] * cy.witness.column_signs[j];
      return TransformWitness{cy.witness.left.inverse() * cx.witness.left, std::move(signs)};
    }
  }
  oracle::EquivalenceReport r = oracle::equivalent_bruteforce(x, y, bruteforce_cap);
  return r.witness;
}

std::vector<IntMatrix> enumerate_basic_reps(const Representation& x, const IndexSet& basis, std::size_t cap) {
  const BasicForm form = basic_form(x, basis);
  const Forest path = coordinatizing_path(incidence(form.a));
  const std::size_t k = path.edges.size();
  if (k > cap || k >= 63)
    throw Error(ErrorKind::TooLarge, "2^" + std::to_string(k) + " sign choices exceed the enumeration cap");
  const EliminationOrder order = elimination_order(path);
  std::vector<IntMatrix> out;
  out.reserve(std::size_t{1} << k);
  const SignVector positive = positive_target(form, path);
  SignVector sigma(k);
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << k); ++s) {
    for (std::size_t e = 0; e < k; ++e) sigma[e] = (s >> e) & 1 ? -positive[e] : positive[e];
    out.push_back(sign_normalize(form, path, sigma, order).form.assembled());
  }
  return out;
}

Integer stratum_size(const Representation& x) {
  if (!x.full_rank()) throw Error(ErrorKind::NotFullRank, "matrix does not have full row rank");
  const std::vector<IndexSet> mult = multiplicative_bases(x);
  if (mult.empty()) throw Error(ErrorKind::NotWeaklyMultiplicative, "not weakly multiplicative");
  const BasicForm form = basic_form(x, mult.front());
  const std::size_t free_signs = x.size() - kappa(incidence(form.a));
  Integer size;
  mpz_ui_pow_ui(size.get_mpz_t(), 2, free_signs);
  return size;
}

}  // namespace arimat
