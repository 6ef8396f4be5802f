#include <algorithm>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "arimat/arimat.hpp"

namespace py = pybind11;

namespace pybind11::detail {

// Arbitrary-precision integers travel as Python ints via their decimal form.
template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!src || PyFloat_Check(src.ptr())) return false;
    PyObject* index = PyNumber_Index(src.ptr());
    if (!index) {
      PyErr_Clear();
      return false;
    }
    const auto obj = reinterpret_steal<object>(index);
    return value.set_str(std::string(py::str(obj)), 10) == 0;
  }

  static handle cast(const mpz_class& v, return_value_policy, handle) {
    return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  }
};

template <>
struct type_caster<arimat::IntMatrix> {
  PYBIND11_TYPE_CASTER(arimat::IntMatrix, const_name("list[list[int]]"));

  bool load(handle src, bool convert) {
    if (!src || !PySequence_Check(src.ptr()) || PyUnicode_Check(src.ptr())) return false;
    const auto rows = reinterpret_borrow<sequence>(src);
    std::size_t cols = 0;
    std::vector<std::vector<mpz_class>> data;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      object row = rows[i];
      if (!PySequence_Check(row.ptr()) || PyUnicode_Check(row.ptr())) return false;
      const auto seq = reinterpret_borrow<sequence>(row);
      if (i == 0) cols = seq.size();
      if (seq.size() != cols) throw value_error("matrix rows differ in length");
      std::vector<mpz_class> r;
      for (std::size_t j = 0; j < cols; ++j) {
        make_caster<mpz_class> c;
        if (!c.load(seq[j], convert)) return false;
        r.push_back(cast_op<mpz_class&&>(std::move(c)));
      }
      data.push_back(std::move(r));
    }
    value = arimat::IntMatrix(data.size(), cols);
    for (std::size_t i = 0; i < data.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) value(i, j) = data[i][j];
    return true;
  }

  static handle cast(const arimat::IntMatrix& m, return_value_policy, handle) {
    list rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      list row;
      for (std::size_t j = 0; j < m.cols(); ++j) row.append(reinterpret_steal<object>(make_caster<mpz_class>::cast(m(i, j), return_value_policy::copy, {})));
      rows.append(row);
    }
    return rows.release();
  }
};

}  // namespace pybind11::detail

namespace {

using namespace arimat;

Representation rep(const IntMatrix& m) { return Representation(m); }

IndexSet as_set(IndexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

py::object fraction(const Rational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(py::cast(Integer(q.get_num())), py::cast(Integer(q.get_den())));
}

py::list point(const RationalVector& q) {
  py::list out;
  for (const Rational& v : q) out.append(fraction(v));
  return out;
}

py::tuple witness(const TransformWitness& w) { return py::make_tuple(w.left.matrix(), w.column_signs); }

py::list edges(const Forest& f) {
  py::list out;
  for (const Edge& e : f.edges) out.append(py::make_tuple(e.row, e.col));
  return out;
}

py::dict layer_dict(const Layer& l) {
  py::dict d;
  d["characters"] = l.characters;
  d["rank"] = l.rank;
  d["point"] = point(l.point);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Integer representations of arithmetic matroids";
  m.attr("__version__") = "0.1.0";

  py::register_exception<Error>(m, "ArimatError", PyExc_ValueError);

  // Exact linear algebra.
  m.def("hnf", [](const IntMatrix& a) {
    const HnfResult r = hnf_left_canonical(a);
    return py::make_tuple(r.hnf, r.transform.matrix());
  }, py::arg("m"), "Row Hermite normal form H and unimodular T with T @ m == H (full row rank).");
  m.def("hnf_basis", [](const IntMatrix& a, const std::vector<std::size_t>& basis) {
    const HnfResult r = hnf_basis_form(a, basis);
    return py::make_tuple(r.hnf, r.transform.matrix());
  }, py::arg("m"), py::arg("basis"));
  m.def("snf", [](const IntMatrix& a) {
    const SnfResult s = snf(a);
    return py::make_tuple(s.diagonal, s.left, s.right);
  }, py::arg("m"), "Invariant factors and unimodular U, W with U @ m @ W diagonal.");
  m.def("det", [](const IntMatrix& a) { return det(a); }, py::arg("m"));
  m.def("rank", [](const IntMatrix& a) { return rank(a); }, py::arg("m"));
  m.def("solve_diophantine", [](const IntMatrix& a, const std::vector<Integer>& b) -> py::object {
    const auto sol = solve_diophantine(a, b);
    if (!sol) return py::none();
    return py::make_tuple(sol->particular, sol->kernel_basis);
  }, py::arg("m"), py::arg("b"), "Integer solution and kernel lattice basis of m x = b, or None.");

  // Arithmetic matroid.
  m.def("multiplicity", [](const IntMatrix& x, const IndexSet& s) { return multiplicity(rep(x), as_set(s)); },
        py::arg("x"), py::arg("subset"));
  m.def("rank_of", [](const IntMatrix& x, const IndexSet& s) { return rank_of(rep(x), as_set(s)); },
        py::arg("x"), py::arg("subset"));
  m.def("full_table", [](const IntMatrix& x, std::size_t cap) {
    const MatroidTable table = full_table(rep(x), cap);
    py::list out;
    for (const SubsetProfile& p : table.profiles())
      out.append(py::make_tuple(p.subset, p.rank, p.multiplicity));
    return out;
  }, py::arg("x"), py::arg("cap") = kDefaultTableCap, "(subset, rank, multiplicity) for every subset, by bitmask.");
  m.def("bases", [](const IntMatrix& x) { return bases(rep(x)); }, py::arg("x"));
  m.def("multiplicative_bases", [](const IntMatrix& x) { return multiplicative_bases(rep(x)); }, py::arg("x"));
  m.def("is_multiplicative_basis",
        [](const IntMatrix& x, const IndexSet& b) { return is_multiplicative_basis(rep(x), as_set(b)); },
        py::arg("x"), py::arg("basis"));

  // Circuit graph of a non-basis block.
  m.def("kappa", [](const IntMatrix& a) { return kappa(incidence(a)); }, py::arg("a"));
  m.def("coordinatizing_path", [](const IntMatrix& a) { return edges(coordinatizing_path(incidence(a))); },
        py::arg("a"), "Depth-first spanning forest of the support graph, as (row, column) edges.");

  // Canonical forms.
  m.def("basic_form", [](const IntMatrix& x, const IndexSet& b) {
    const BasicForm f = basic_form(rep(x), as_set(b));
    return py::make_tuple(f.assembled(), witness(f.transform));
  }, py::arg("x"), py::arg("basis"));
  m.def("canonical_form", [](const IntMatrix& x) {
    const CanonicalRep c = canonical_form(rep(x));
    py::dict d;
    d["matrix"] = c.matrix;
    d["basis"] = c.basis_used;
    d["forest"] = edges(c.forest_used);
    d["T"] = c.witness.left.matrix();
    d["D"] = c.witness.column_signs;
    return d;
  }, py::arg("x"), "Canonical representative with witness: matrix == T @ x @ diag(D).");
  m.def("equivalent", [](const IntMatrix& x, const IntMatrix& y, std::size_t cap) -> py::object {
    const auto w = equivalent(rep(x), rep(y), cap);
    if (!w) return py::none();
    return witness(*w);
  }, py::arg("x"), py::arg("y"), py::arg("bruteforce_cap") = kDefaultBruteforceCap,
     "(T, D) with y == T @ x @ diag(D), or None.");
  m.def("enumerate_basic_reps",
        [](const IntMatrix& x, const IndexSet& b, std::size_t cap) { return enumerate_basic_reps(rep(x), as_set(b), cap); },
        py::arg("x"), py::arg("basis"), py::arg("cap") = kDefaultEnumerationCap);
  m.def("stratum_size", [](const IntMatrix& x) { return stratum_size(rep(x)); }, py::arg("x"));

  // Oracles.
  m.def("same_arithmetic_matroid", [](const IntMatrix& x, const IntMatrix& y) {
    return oracle::same_arithmetic_matroid(rep(x), rep(y));
  }, py::arg("x"), py::arg("y"));
  m.def("equivalent_bruteforce", [](const IntMatrix& x, const IntMatrix& y, std::size_t cap) {
    const auto r = oracle::equivalent_bruteforce(rep(x), rep(y), cap);
    py::dict d;
    d["same_matroid"] = r.same_matroid;
    d["equivalent"] = r.equivalent;
    d["witness"] = r.witness ? py::object(witness(*r.witness)) : py::none();
    return d;
  }, py::arg("x"), py::arg("y"), py::arg("cap") = kDefaultBruteforceCap);
  m.def("multiplicity_gcd_minors", [](const IntMatrix& x, const IndexSet& s) {
    return oracle::multiplicity_gcd_minors(rep(x), as_set(s));
  }, py::arg("x"), py::arg("subset"));
  m.def("verify_uniqueness", [](const IntMatrix& x, std::size_t trials, std::uint64_t seed) {
    const auto r = oracle::verify_uniqueness_theorem(rep(x), trials, seed);
    return py::make_tuple(r.passed(), r.trials);
  }, py::arg("x"), py::arg("trials") = 100, py::arg("seed") = 0, "(passed, trials) over random T and D.");

  // Toric arrangement.
  m.def("flats", [](const IntMatrix& x) {
    py::list out;
    for (const Flat& f : flats(rep(x))) out.append(py::make_tuple(f.elements, f.rank));
    return out;
  }, py::arg("x"));
  m.def("layers_of_flat", [](const IntMatrix& x, const IndexSet& s) {
    py::list out;
    for (const Layer& l : layers_of_flat(rep(x), as_set(s))) out.append(point(l.point));
    return out;
  }, py::arg("x"), py::arg("subset"), "One representative point per component, as Fractions in [0, 1).");
  m.def("layer_poset", [](const IntMatrix& x) {
    const LayerPoset p = layer_poset(rep(x));
    py::list layers;
    for (const Layer& l : p.layers) layers.append(layer_dict(l));
    py::dict d;
    d["layers"] = layers;
    d["relations"] = p.relations;
    d["covers"] = p.covers();
    d["maximal"] = p.maximal();
    return d;
  }, py::arg("x"));
  m.def("geometric_weak_multiplicativity", [](const IntMatrix& x) -> py::object {
    const auto b = geometric_weak_multiplicativity(rep(x));
    if (!b) return py::none();
    return py::cast(*b);
  }, py::arg("x"));

  // Files.
  m.def("parse_matrix", [](const std::string& text) { return io::parse_matrix(text); }, py::arg("text"));
  m.def("format_matrix", [](const IntMatrix& x) { return io::format_matrix(x); }, py::arg("x"));
}
