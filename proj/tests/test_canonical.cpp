#include <doctest.h>

#include <random>
#include <set>

#include "arimat/canonical.hpp"
#include "arimat/oracle.hpp"
#include "fixtures.hpp"

using namespace arimat;
using fixtures::error_kind;

namespace {

Forest example_forest() { return {3, 4, {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {2, 3}}, 1}; }

std::vector<Vertex> example_sequence() {
  return {Vertex::row(0), Vertex::column(0), Vertex::row(1), Vertex::column(1), Vertex::column(2), Vertex::column(3)};
}

IntMatrix abs_entries(IntMatrix m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = abs(m(i, j));
  return m;
}

}  // namespace

TEST_CASE("basic form of the worked example") {
  const Representation x(fixtures::example_x());
  const BasicForm f = basic_form(x, {0, 1, 2});
  CHECK(f.assembled() == x.matrix());
  CHECK(f.diag == std::vector<Integer>{1, 2, 3});
  CHECK(f.non_basis == IndexSet{3, 4, 5, 6});
  CHECK(f.a == IntMatrix{{-4, 0, 3, 0}, {1, 2, 0, -2}, {0, 1, -1, -1}});
  CHECK(f.transform.apply(x.matrix()) == f.assembled());

  const Representation fn(fixtures::six_cycle_x());
  CHECK(basic_form(fn, {0, 1, 2}).assembled() == fn.matrix());
}

TEST_CASE("basic form on another basis") {
  const Representation x(fixtures::six_cycle_x());
  for (const IndexSet& b : multiplicative_bases(x)) {
    const BasicForm f = basic_form(x, b);
    const IntMatrix m = f.assembled();
    CHECK(f.transform.apply(x.matrix()) == m);
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t i = 0; i < m.rows(); ++i) CHECK(m(i, b[k]) == (i == k ? f.diag[k] : Integer(0)));
    CHECK(full_table(Representation(m)) == full_table(x));
  }
}

TEST_CASE("basic form errors") {
  CHECK(error_kind([] { basic_form(Representation(fixtures::x_ab(1, 5)), {0, 1}); }) == ErrorKind::NotMultiplicative);
  CHECK(error_kind([] { basic_form(Representation(fixtures::six_cycle_x()), {3, 4, 5}); }) == ErrorKind::NotABasis);
  CHECK(error_kind([] { basic_form(Representation(fixtures::six_cycle_x()), {0, 1}); }) == ErrorKind::NotABasis);
  CHECK(error_kind([] { basic_form(Representation(IntMatrix{{1, 2}, {2, 4}}), {0, 1}); }) == ErrorKind::NotFullRank);
}

TEST_CASE("sign normalization reproduces the worked example") {
  const Representation x(fixtures::example_x());
  const BasicForm f = basic_form(x, {0, 1, 2});
  const Forest path = example_forest();
  const SignVector target = positive_target(f, path);
  CHECK(target == SignVector{-1, 1, 1, 1, -1, -1});

  const SignNormalization sn = sign_normalize(f, path, target, elimination_order(path, example_sequence()));
  CHECK(sn.form.assembled() == fixtures::example_x_prime());
  const std::vector<Flip> flips{{Vertex::Kind::Column, 6}, {Vertex::Kind::Column, 5}, {Vertex::Kind::Row, 0}};
  CHECK(sn.flips == flips);
  CHECK(sn.form.transform.apply(x.matrix()) == fixtures::example_x_prime());

  // The default order reaches the same matrix.
  CHECK(sign_normalize(f, path, target).assembled() == fixtures::example_x_prime());
}

TEST_CASE("sign normalization hits arbitrary targets") {
  const Representation x(fixtures::example_x());
  const BasicForm f = basic_form(x, {0, 1, 2});
  const Forest path = example_forest();
  for (unsigned bits = 0; bits < 64; ++bits) {
    SignVector sigma(6);
    for (std::size_t k = 0; k < 6; ++k) sigma[k] = (bits >> k) & 1 ? -1 : 1;
    const BasicForm g = sign_normalize(f, path, sigma);
    for (std::size_t k = 0; k < 6; ++k) {
      const Edge e = path.edges[k];
      CHECK(g.a(e.row, e.col) == sigma[k] * f.a(e.row, e.col));
    }
    CHECK(abs_entries(g.a) == abs_entries(f.a));
    CHECK(g.diag == f.diag);
    CHECK(g.transform.apply(x.matrix()) == g.assembled());
  }
}

TEST_CASE("sign normalization trivial and idempotent cases") {
  const Representation xp(fixtures::example_x_prime());
  const BasicForm f = basic_form(xp, {0, 1, 2});
  const Forest path = coordinatizing_path(incidence(f.a));
  const SignNormalization sn = sign_normalize(f, path, SignVector(path.edges.size(), 1), elimination_order(path));
  CHECK(sn.flips.empty());
  CHECK(sn.form.assembled() == xp.matrix());
  CHECK(sn.form.transform.left.matrix() == IntMatrix::identity(3));

  const Representation x(fixtures::example_x());
  const BasicForm g = basic_form(x, {0, 1, 2});
  const BasicForm once = sign_normalize(g, path, positive_target(g, path));
  const BasicForm twice = sign_normalize(once, path, positive_target(once, path));
  CHECK(once.assembled() == twice.assembled());
}

TEST_CASE("sign normalization errors") {
  const BasicForm f = basic_form(Representation(fixtures::example_x()), {0, 1, 2});
  Forest bogus = example_forest();
  bogus.edges.back() = {0, 1};  // a_{1,5} is zero
  CHECK(error_kind([&] { sign_normalize(f, bogus, SignVector(6, 1)); }) == ErrorKind::PathMismatch);
  CHECK(error_kind([&] { sign_normalize(f, example_forest(), SignVector(5, 1)); }) == ErrorKind::PathMismatch);
}

TEST_CASE("canonical form") {
  const CanonicalRep c = canonical_form(Representation(fixtures::example_x()));
  CHECK(c.basis_used == IndexSet{0, 1, 2});
  CHECK(c.matrix == fixtures::example_x_prime());
  CHECK(c.witness.apply(fixtures::example_x()) == c.matrix);
  CHECK(canonical_form(Representation(fixtures::example_x_prime())).matrix == c.matrix);
  CHECK(canonical_form(Representation(c.matrix)).matrix == c.matrix);

  CHECK(canonical_form(Representation(IntMatrix::identity(4))).matrix == IntMatrix::identity(4));
  CHECK(error_kind([] { canonical_form(Representation(fixtures::x_ab(2, 5))); }) ==
        ErrorKind::NotWeaklyMultiplicative);
  CHECK(error_kind([] { canonical_form(Representation(IntMatrix{{1, 2}, {2, 4}})); }) == ErrorKind::NotFullRank);
}

TEST_CASE("canonical form invariants on fixtures") {
  for (const IntMatrix& m : fixtures::small_weakly_multiplicative()) {
    const CanonicalRep c = canonical_form(Representation(m));
    CHECK(c.witness.apply(m) == c.matrix);
    CHECK(canonical_form(Representation(c.matrix)).matrix == c.matrix);
    for (const Edge& e : c.forest_used.edges) {
      const std::size_t col = [&] {
        IndexSet nb;
        for (std::size_t j = 0; j < m.cols(); ++j)
          if (!std::binary_search(c.basis_used.begin(), c.basis_used.end(), j)) nb.push_back(j);
        return nb[e.col];
      }();
      CHECK(c.matrix(e.row, col) > 0);
    }
  }
}

TEST_CASE("equivalence testing") {
  const Representation x(fixtures::example_x());
  const Representation xp(fixtures::example_x_prime());
  const auto self = equivalent(x, x);
  REQUIRE(self);
  CHECK(self->apply(x.matrix()) == x.matrix());
  const auto w = equivalent(x, xp);
  REQUIRE(w);
  CHECK(w->apply(x.matrix()) == xp.matrix());
  CHECK(abs(det(w->left.matrix())) == 1);

  const Representation x15(fixtures::x_ab(1, 5));
  CHECK_FALSE(equivalent(x15, Representation(fixtures::x_ab(2, 5))));
  CHECK_FALSE(equivalent(x15, Representation(fixtures::x_ab(3, 5))));
  const auto w14 = equivalent(x15, Representation(fixtures::x_ab(4, 5)));
  REQUIRE(w14);
  CHECK(w14->apply(x15.matrix()) == fixtures::x_ab(4, 5));

  CHECK(error_kind([&] { equivalent(x, x15); }) == ErrorKind::DimensionMismatch);
  CHECK_FALSE(equivalent(Representation(IntMatrix{{1, 0}, {0, 1}}), Representation(IntMatrix{{1, 0}, {0, 0}})));
}

TEST_CASE("enumeration and stratum size") {
  const Representation x(fixtures::example_x());
  const auto reps = enumerate_basic_reps(x, {0, 1, 2});
  CHECK(reps.size() == 64);
  CHECK(std::set<IntMatrix>(reps.begin(), reps.end()).size() == 64);
  CHECK(stratum_size(x) == 64);
  const MatroidTable table = full_table(x);
  for (std::size_t k = 0; k < reps.size(); k += 7) CHECK(full_table(Representation(reps[k])) == table);
  CHECK(reps.front() == fixtures::example_x_prime());

  const Representation fn(fixtures::six_cycle_x());
  CHECK(enumerate_basic_reps(fn, {0, 1, 2}).size() == 32);
  CHECK(stratum_size(fn) == 32);

  const Representation zero_a(IntMatrix{{1, 0, 0}, {0, 1, 0}});
  CHECK(enumerate_basic_reps(zero_a, {0, 1}).size() == 1);
  CHECK(stratum_size(Representation(IntMatrix::identity(3))) == 1);

  CHECK(error_kind([&] { enumerate_basic_reps(x, {0, 1, 2}, 5); }) == ErrorKind::TooLarge);
  CHECK(error_kind([] { stratum_size(Representation(fixtures::x_ab(1, 5))); }) ==
        ErrorKind::NotWeaklyMultiplicative);
  CHECK(error_kind([] { enumerate_basic_reps(Representation(fixtures::x_ab(1, 5)), {0, 1}); }) ==
        ErrorKind::NotMultiplicative);
}

TEST_CASE("canonical form is an orbit invariant") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const IntMatrix m = fixtures::random_weakly_multiplicative(rng, 3, 6, 4);
    const Representation x(m);
    const CanonicalRep c = canonical_form(x);
    for (int k = 0; k < 10; ++k) {
      const TransformWitness t = oracle::random_transform(m.rows(), m.cols(), rng());
      const IntMatrix y = t.apply(m);
      const CanonicalRep cy = canonical_form(Representation(y));
      REQUIRE(cy.matrix == c.matrix);
      const auto w = equivalent(x, Representation(y));
      REQUIRE(w);
      CHECK(w->apply(m) == y);
    }
  }
}

TEST_CASE("absolute values are determined by the matroid") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    const IntMatrix m = fixtures::random_weakly_multiplicative(rng, 3, 7, 4);
    const Representation x(m);
    const IndexSet b = multiplicative_bases(x).front();
    const BasicForm f = basic_form(x, b);
    const TransformWitness t = oracle::random_transform(m.rows(), m.cols(), rng());
    const BasicForm g = basic_form(Representation(t.apply(m)), b);
    CHECK(abs_entries(f.a) == abs_entries(g.a));
    CHECK(f.diag == g.diag);

    // |a_ij| * prod_{v != i} b_vv = m(B - b_i + j) whenever a_ij != 0.
    for (std::size_t i = 0; i < f.a.rows(); ++i)
      for (std::size_t j = 0; j < f.a.cols(); ++j) {
        IndexSet s = b;
        s.erase(s.begin() + static_cast<std::ptrdiff_t>(i));
        s.push_back(f.non_basis[j]);
        std::sort(s.begin(), s.end());
        if (f.a(i, j) == 0) {
          CHECK(rank_of(x, s) < m.rows());
          continue;
        }
        Integer prod = 1;
        for (std::size_t v = 0; v < f.diag.size(); ++v)
          if (v != i) prod *= f.diag[v];
        CHECK(multiplicity(x, s) == abs(f.a(i, j)) * prod);
      }
  }
}

TEST_CASE("nonzero subdeterminants are determined by the matroid") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const IntMatrix m = fixtures::random_weakly_multiplicative(rng, 3, 7, 4);
    const Representation x(m);
    const IndexSet b = multiplicative_bases(x).front();
    const BasicForm f = basic_form(x, b);
    const std::size_t d = f.a.rows(), k = f.a.cols();
    for (std::uint64_t rmask = 1; rmask < (std::uint64_t{1} << d); ++rmask)
      for (std::uint64_t cmask = 1; cmask < (std::uint64_t{1} << k); ++cmask) {
        const IndexSet rows = subset_from_mask(rmask), cols = subset_from_mask(cmask);
        if (rows.size() != cols.size()) continue;
        const Integer sub = oracle::cofactor_det(f.a.select(rows, cols));
        if (sub == 0) continue;
        IndexSet s;
        Integer prod = 1;
        for (std::size_t v = 0; v < d; ++v)
          if (!(rmask >> v & 1)) {
            s.push_back(b[v]);
            prod *= f.diag[v];
          }
        for (std::size_t c : cols) s.push_back(f.non_basis[c]);
        std::sort(s.begin(), s.end());
        CHECK(multiplicity(x, s) == abs(sub) * prod);
      }
  }
}

TEST_CASE("enumeration agrees with an exhaustive search over small entries") {
  // Every basic form on B with the same diagonal and |entries| bounded by
  // those of A that represents the same matroid must appear in the list.
  for (const IntMatrix& m : {fixtures::six_cycle_x(), IntMatrix{{2, 0, 1}, {0, 3, 1}}, IntMatrix{{1, 0, 1, 1}, {0, 1, 1, -1}}}) {
    const Representation x(m);
    const IndexSet b = multiplicative_bases(x).front();
    const BasicForm f = basic_form(x, b);
    const auto listed = enumerate_basic_reps(x, b);
    const std::set<IntMatrix> listed_set(listed.begin(), listed.end());
    const MatroidTable table = full_table(x);
    long bound = 0;
    for (std::size_t i = 0; i < f.a.rows(); ++i)
      for (std::size_t j = 0; j < f.a.cols(); ++j) bound = std::max(bound, Integer(abs(f.a(i, j))).get_si());
    const std::size_t cells = f.a.rows() * f.a.cols();
    const long span = 2 * bound + 1;
    long total = 1;
    for (std::size_t c = 0; c < cells; ++c) total *= span;
    std::size_t found = 0;
    for (long v = 0; v < total; ++v) {
      BasicForm g = f;
      long r = v;
      for (std::size_t c = 0; c < cells; ++c, r /= span) g.a(c / f.a.cols(), c % f.a.cols()) = r % span - bound;
      const IntMatrix candidate = g.assembled();
      if (!fixtures::matches_table(candidate, table)) continue;
      ++found;
      CHECK(listed_set.count(candidate) == 1);
    }
    CHECK(found == listed.size());
  }
}

TEST_CASE("one sign on the six-cycle cannot be flipped alone") {
  // Row and column flips change two entries of the cycle at a time, so the
  // product of the six signs is fixed.
  const Representation x(fixtures::six_cycle_x());
  IntMatrix flipped = fixtures::six_cycle_x();
  flipped(2, 5) = 1;
  CHECK_FALSE(equivalent(x, Representation(flipped)));
  const auto reps = enumerate_basic_reps(x, {0, 1, 2});
  CHECK(std::find(reps.begin(), reps.end(), flipped) == reps.end());
  CHECK(std::find(reps.begin(), reps.end(), fixtures::six_cycle_x()) != reps.end());
  for (const IntMatrix& r : reps) {
    int product = 1;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 3; j < 6; ++j)
        if (r(i, j) != 0) product *= sign(r(i, j));
    CHECK(product == -1);
  }
}
