#include "arimat/toric.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "arimat/errors.hpp"
#include "arimat/exactla.hpp"

namespace arimat {

namespace {

Rational frac(const Rational& v) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  Rational r = v - Rational(fl);
  r.canonicalize();
  return r;
}

bool is_integral(const Rational& v) { return v.get_den() == 1; }

Rational dot_column(const IntMatrix& x, std::size_t col, const RationalVector& q) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.rows(); ++i)
    if (x(i, col) != 0) s += Rational(x(i, col)) * q[i];
  s.canonicalize();
  return s;
}

bool point_less(const RationalVector& a, const RationalVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const Rational& u, const Rational& v) { return cmp(u, v) < 0; });
}

void check_point(const Representation& x, const RationalVector& q) {
  if (q.size() != x.dimension()) throw Error(ErrorKind::DimensionMismatch, "point has the wrong dimension");
}

// H_S for a fixed S, with the Smith form of M = X_S^T cached: U M W = diag(s).
// Writing q = W p, the condition M q ∈ Z^|S| reads s_i p_i ∈ Z for i < r with
// p_i free for i >= r, so components are indexed by p_i ∈ {0, 1/s_i, ...}.
class Intersection {
 public:
  Intersection(const IntMatrix& x, const IndexSet& subset)
      : m_(x.select_columns(subset).transpose()), dimension_(x.rows()), smith_(snf(m_)) {}

  Integer component_count() const {
    Integer c = 1;
    for (const Integer& s : smith_.diagonal) c *= s;
    return c;
  }

  std::size_t rank() const { return smith_.rank; }

  // q2 ∈ q + ker_R(M) + Z^d  <=>  M z = M (q2 - q) has an integer solution.
  bool same_component(const RationalVector& q, const RationalVector& q2) const {
    std::vector<Integer> c(m_.rows());
    RationalVector diff(q.size());
    for (std::size_t k = 0; k < q.size(); ++k) diff[k] = q2[k] - q[k];
    for (std::size_t i = 0; i < m_.rows(); ++i) {
      const Rational v = dot_row(i, diff);
      if (!is_integral(v)) return false;
      c[i] = v.get_num();
    }
    const std::vector<Integer> uc = smith_.left * std::span<const Integer>(c);
    for (std::size_t i = 0; i < uc.size(); ++i) {
      if (i < smith_.rank) {
        if (!mpz_divisible_p(uc[i].get_mpz_t(), smith_.diagonal[i].get_mpz_t())) return false;
      } else if (uc[i] != 0) {
        return false;
      }
    }
    return true;
  }

  std::vector<RationalVector> representatives(std::size_t limit) const {
    if (component_count() > limit)
      throw Error(ErrorKind::TooLarge, "intersection has " + component_count().get_str() + " components");
    const std::size_t r = smith_.rank;
    std::vector<Integer> k(r, 0);
    std::vector<RationalVector> out;
    while (true) {
      RationalVector q(dimension_, Rational(0));
      for (std::size_t i = 0; i < r; ++i) {
        if (k[i] == 0) continue;
        const Rational p(k[i], smith_.diagonal[i]);
        for (std::size_t j = 0; j < dimension_; ++j) q[j] += Rational(smith_.right(j, i)) * p;
      }
      for (Rational& v : q) v = frac(v);
      out.push_back(std::move(q));
      // Mixed-radix increment over k_i ∈ [0, s_i).
      std::size_t i = 0;
      for (; i < r; ++i) {
        if (++k[i] < smith_.diagonal[i]) break;
        k[i] = 0;
      }
      if (i == r) break;
    }
    std::sort(out.begin(), out.end(), point_less);
    return out;
  }

 private:
  Rational dot_row(std::size_t i, const RationalVector& q) const {
    Rational s = 0;
    for (std::size_t j = 0; j < m_.cols(); ++j)
      if (m_(i, j) != 0) s += Rational(m_(i, j)) * q[j];
    s.canonicalize();
    return s;
  }

  IntMatrix m_;
  std::size_t dimension_;
  SnfResult smith_;
};

constexpr std::size_t kRepresentativeLimit = 1'000'000;

// Columns of the inverse of a nonsingular integer matrix, by Gauss-Jordan
// elimination over Q.
std::vector<RationalVector> inverse_columns(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<RationalVector> a(n, RationalVector(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    const Rational pivot = a[c][c];
    for (Rational& v : a[c]) v /= pivot;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  std::vector<RationalVector> cols(n, RationalVector(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) cols[j][i] = a[i][n + j];
  return cols;
}

// Order of the subgroup of (Q/Z)^d generated by `generators`, or limit + 1 if
// it is larger than `limit`.
std::size_t finite_group_size(const std::vector<RationalVector>& generators, std::size_t limit) {
  const std::size_t d = generators.empty() ? 0 : generators.front().size();
  std::set<RationalVector, bool (*)(const RationalVector&, const RationalVector&)> seen(point_less);
  std::vector<RationalVector> queue{RationalVector(d, Rational(0))};
  seen.insert(queue.front());
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (const RationalVector& g : generators) {
      RationalVector next(d);
      for (std::size_t i = 0; i < d; ++i) next[i] = frac(queue[k][i] + g[i]);
      if (seen.insert(next).second) {
        if (seen.size() > limit) return limit + 1;
        queue.push_back(std::move(next));
      }
    }
  }
  return seen.size();
}

std::vector<std::size_t> subset_ranks(const Representation& x) {
  const std::size_t n = x.size();
  std::vector<std::size_t> ranks(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < ranks.size(); ++mask)
    ranks[mask] = rank(x.matrix().select_columns(subset_from_mask(mask)));
  return ranks;
}

std::uint64_t closure_mask(const std::vector<std::size_t>& ranks, std::size_t n, std::uint64_t mask) {
  std::uint64_t cl = mask;
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint64_t bit = std::uint64_t{1} << j;
    if (!(mask & bit) && ranks[mask | bit] == ranks[mask]) cl |= bit;
  }
  return cl;
}

void check_cap(const Representation& x, std::size_t cap) {
  if (x.size() > cap || x.size() >= 63)
    throw Error(ErrorKind::TooLarge, "2^" + std::to_string(x.size()) + " subsets exceed the cap");
}

}  // namespace

bool LayerPoset::less(std::size_t a, std::size_t b) const {
  return std::binary_search(relations.begin(), relations.end(), std::make_pair(a, b));
}

std::vector<std::pair<std::size_t, std::size_t>> LayerPoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& [a, b] : relations) {
    bool covered = true;
    for (std::size_t c = 0; c < layers.size() && covered; ++c)
      if (less(a, c) && less(c, b)) covered = false;
    if (covered) out.emplace_back(a, b);
  }
  return out;
}

std::vector<std::size_t> LayerPoset::maximal() const {
  std::vector<bool> below(layers.size(), false);
  for (const auto& rel : relations) below[rel.first] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < layers.size(); ++i)
    if (!below[i]) out.push_back(i);
  return out;
}

std::vector<Flat> flats(const Representation& x, std::size_t cap) {
  check_cap(x, cap);
  const std::size_t n = x.size();
  const auto ranks = subset_ranks(x);
  std::vector<Flat> out;
  for (std::uint64_t mask = 0; mask < ranks.size(); ++mask)
    if (closure_mask(ranks, n, mask) == mask) out.push_back({subset_from_mask(mask), ranks[mask]});
  std::sort(out.begin(), out.end(), [](const Flat& a, const Flat& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    return a.elements < b.elements;
  });
  return out;
}

std::vector<Layer> layers_of_flat(const Representation& x, const IndexSet& subset) {
  for (std::size_t j : subset)
    if (j >= x.size()) throw Error(ErrorKind::BadIndex, "element " + std::to_string(j + 1) + " out of range");
  const Intersection h(x.matrix(), subset);
  std::vector<Layer> out;
  for (RationalVector& q : h.representatives(kRepresentativeLimit)) out.push_back({subset, h.rank(), std::move(q)});
  return out;
}

bool on_intersection(const Representation& x, const IndexSet& subset, const RationalVector& q) {
  check_point(x, q);
  for (std::size_t j : subset)
    if (!is_integral(dot_column(x.matrix(), j, q))) return false;
  return true;
}

bool same_component(const Representation& x, const IndexSet& subset, const RationalVector& q, const RationalVector& q2) {
  if (!on_intersection(x, subset, q) || !on_intersection(x, subset, q2))
    throw Error(ErrorKind::NotOnFlat, "point does not lie on the intersection");
  // Solve X_S^T z = -X_S^T (q - q2) over the integers.
  const IntMatrix m = x.matrix().select_columns(subset).transpose();
  std::vector<Integer> rhs;
  for (std::size_t j : subset) {
    const Rational v = dot_column(x.matrix(), j, q2) - dot_column(x.matrix(), j, q);
    rhs.push_back(v.get_num());
  }
  return solve_diophantine(m, rhs).has_value();
}

LayerPoset layer_poset(const Representation& x, std::size_t cap, std::size_t layer_cap) {
  check_cap(x, cap);
  const std::size_t n = x.size();
  const auto ranks = subset_ranks(x);

  // Each layer C is a component of H_S for exactly one S, namely the set of
  // characters trivial on C; keep a component of H_S only when that set is S.
  std::vector<Layer> layers;
  Integer budget = 0;
  for (std::uint64_t mask = 0; mask < ranks.size(); ++mask) {
    const IndexSet s = subset_from_mask(mask);
    const Intersection h(x.matrix(), s);
    budget += h.component_count();
    if (budget > layer_cap) throw Error(ErrorKind::TooLarge, "more than " + std::to_string(layer_cap) + " candidate layers");
    const IndexSet closure = subset_from_mask(closure_mask(ranks, n, mask));
    for (RationalVector& q : h.representatives(layer_cap)) {
      IndexSet trivial;
      for (std::size_t j : closure)
        if (is_integral(dot_column(x.matrix(), j, q))) trivial.push_back(j);
      if (trivial == s) layers.push_back({s, ranks[mask], std::move(q)});
    }
  }
  std::sort(layers.begin(), layers.end(), [](const Layer& a, const Layer& b) {
    if (a.rank != b.rank) return a.rank < b.rank;
    if (a.characters != b.characters) return a.characters < b.characters;
    return point_less(a.point, b.point);
  });

  LayerPoset poset;
  poset.layers = std::move(layers);
  std::map<IndexSet, Intersection> testers;
  for (std::size_t a = 0; a < poset.layers.size(); ++a) {
    const Layer& la = poset.layers[a];
    auto it = testers.find(la.characters);
    if (it == testers.end()) it = testers.emplace(la.characters, Intersection(x.matrix(), la.characters)).first;
    for (std::size_t b = 0; b < poset.layers.size(); ++b) {
      const Layer& lb = poset.layers[b];
      if (lb.characters.size() <= la.characters.size()) continue;
      if (!std::includes(lb.characters.begin(), lb.characters.end(), la.characters.begin(), la.characters.end())) continue;
      // lb ⊆ la iff lb's point lies in la's component of H_{la.characters}.
      if (it->second.same_component(la.point, lb.point)) poset.relations.emplace_back(a, b);
    }
  }
  std::sort(poset.relations.begin(), poset.relations.end());
  poset.bottom = 0;
  return poset;
}

std::optional<IndexSet> geometric_weak_multiplicativity(const Representation& x) {
  if (!x.full_rank()) throw Error(ErrorKind::NotFullRank, "arrangement is not essential");
  const IntMatrix& m = x.matrix();
  // χ_λ^{-1}(1) for λ = g λ' with λ' primitive is g parallel subtori.
  std::vector<Integer> single(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    Integer g = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m(i, j).get_mpz_t());
    single[j] = g == 0 ? Integer(1) : g;
  }
  bool skipped = false;
  for (const IndexSet& basis : bases(x)) {
    Integer product = 1;
    for (std::size_t j : basis) product *= single[j];
    if (product > kRepresentativeLimit) {
      skipped = true;
      continue;
    }
    // The points of a 0-dimensional intersection form the group generated by
    // the columns of (X_I^T)^{-1} modulo Z^d; enumerate it, stopping once it
    // outgrows the product.
    const auto generators = inverse_columns(m.select_columns(basis).transpose());
    if (finite_group_size(generators, product.get_ui()) == product) return basis;
  }
  if (skipped) throw Error(ErrorKind::TooLarge, "a basis intersection has too many points to enumerate");
  return std::nullopt;
}

}  // namespace arimat
