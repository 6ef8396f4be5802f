#include "cli.hpp"

#include <functional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "arimat/arimat.hpp"

namespace arimat::cli {

namespace {

using nlohmann::json;

struct Config {
  std::string format = "text";
  std::size_t table_cap = kDefaultTableCap;
  std::size_t bruteforce_cap = kDefaultBruteforceCap;
  std::size_t enumeration_cap = kDefaultEnumerationCap;
  std::uint64_t seed = 0;

  bool json() const { return format == "json"; }
};

Representation load(const std::string& path) { return Representation(io::read_matrix_file(path)); }

std::string signs_text(const SignDiagonal& d) {
  std::string s;
  for (std::size_t j = 0; j < d.size(); ++j) s += (j ? " " : "") + std::to_string(d[j]);
  return s;
}

json witness_json(const TransformWitness& w) {
  return {{"T", io::matrix_to_json(w.left.matrix())}, {"D", w.column_signs}};
}

void witness_text(std::ostream& out, const TransformWitness& w) {
  out << "T =\n" << to_string(w.left.matrix()) << "D = diag(" << signs_text(w.column_signs) << ")\n";
}

IndexSet non_basis_of(std::size_t n, const IndexSet& basis) {
  IndexSet out;
  for (std::size_t j = 0; j < n; ++j)
    if (!std::binary_search(basis.begin(), basis.end(), j)) out.push_back(j);
  return out;
}

std::string edge_name(const Edge& e, const IndexSet& non_basis) {
  return "a" + std::to_string(e.row + 1) + "," + std::to_string(non_basis[e.col] + 1);
}

IndexSet default_basis(const Representation& x) {
  if (!x.full_rank()) throw Error(ErrorKind::NotFullRank, "matrix does not have full row rank");
  const auto mult = multiplicative_bases(x);
  if (mult.empty()) throw Error(ErrorKind::NotWeaklyMultiplicative, "not weakly multiplicative");
  return mult.front();
}

std::string point_text(const RationalVector& q) {
  std::string s = "(";
  for (std::size_t i = 0; i < q.size(); ++i) s += (i ? ", " : "") + q[i].get_str();
  return s + ")";
}

json point_json(const RationalVector& q) {
  json a = json::array();
  for (const Rational& v : q) a.push_back(v.get_str());
  return a;
}

// Subcommands. Each returns an exit code.

int cmd_table(const Config& cfg, const std::string& file, std::ostream& out) {
  const Representation x = load(file);
  const MatroidTable t = full_table(x, cfg.table_cap);
  if (cfg.json()) {
    json rows = json::array();
    for (const SubsetProfile& p : t.profiles())
      rows.push_back({{"S", io::index_set_to_json(p.subset)}, {"rank", p.rank}, {"m", io::integer_to_json(p.multiplicity)}});
    out << json{{"subsets", rows}}.dump(2) << '\n';
  } else {
    out << "# subset rank multiplicity\n";
    for (const SubsetProfile& p : t.profiles())
      out << io::format_index_set(p.subset) << ' ' << p.rank << ' ' << p.multiplicity << '\n';
  }
  return kOk;
}

int cmd_canonical(const Config& cfg, const std::string& file, bool show_witness, std::ostream& out) {
  const Representation x = load(file);
  const CanonicalRep c = canonical_form(x);
  const IndexSet non_basis = non_basis_of(x.size(), c.basis_used);
  if (cfg.json()) {
    json forest = json::array();
    for (const Edge& e : c.forest_used.edges) forest.push_back({e.row + 1, non_basis[e.col] + 1});
    json j{{"matrix", io::matrix_to_json(c.matrix)}, {"basis", io::index_set_to_json(c.basis_used)}, {"forest", forest}};
    if (show_witness) j["witness"] = witness_json(c.witness);
    out << j.dump(2) << '\n';
    return kOk;
  }
  std::string forest;
  for (const Edge& e : c.forest_used.edges) forest += (forest.empty() ? "" : " ") + edge_name(e, non_basis);
  out << io::format_matrix(c.matrix, {"canonical form, basis " + io::format_index_set(c.basis_used),
                                      "positive path entries: " + (forest.empty() ? std::string("none") : forest)});
  if (show_witness) witness_text(out, c.witness);
  return kOk;
}

int cmd_equiv(const Config& cfg, const std::string& file_a, const std::string& file_b, std::ostream& out) {
  const Representation x = load(file_a);
  const Representation y = load(file_b);
  const auto w = equivalent(x, y, cfg.bruteforce_cap);
  std::string verdict, message;
  if (w) {
    verdict = "equivalent";
    message = "equivalent (witness T, D)";
  } else if (oracle::same_arithmetic_matroid(x, y, cfg.table_cap)) {
    verdict = "same_matroid";
    message = "same arithmetic matroid, different representation";
  } else {
    verdict = "different_matroids";
    message = "different arithmetic matroids";
  }
  if (cfg.json()) {
    json j{{"verdict", verdict}, {"message", message}};
    if (w) j["witness"] = witness_json(*w);
    out << j.dump(2) << '\n';
  } else {
    out << message << '\n';
    if (w) witness_text(out, *w);
  }
  return w ? kOk : kNegative;
}

int cmd_enumerate(const Config& cfg, const std::string& file, const std::string& basis_text, std::ostream& out) {
  const Representation x = load(file);
  const IndexSet basis = basis_text.empty() ? default_basis(x) : io::parse_index_set(basis_text);
  for (std::size_t j : basis)
    if (j >= x.size()) throw Error(ErrorKind::BadIndex, "basis element " + std::to_string(j + 1) + " out of range");
  const auto reps = enumerate_basic_reps(x, basis, cfg.enumeration_cap);
  if (cfg.json()) {
    json mats = json::array();
    for (const IntMatrix& m : reps) mats.push_back(io::matrix_to_json(m));
    out << json{{"basis", io::index_set_to_json(basis)}, {"count", reps.size()}, {"matrices", mats}}.dump(2) << '\n';
    return kOk;
  }
  out << "# " << reps.size() << " representations in basic form on " << io::format_index_set(basis) << '\n';
  for (std::size_t k = 0; k < reps.size(); ++k) {
    out << '\n' << io::format_matrix(reps[k], {"sign pattern " + std::to_string(k)});
  }
  return kOk;
}

int cmd_stratum(const Config& cfg, const std::string& file, std::ostream& out) {
  const Representation x = load(file);
  const Integer size = stratum_size(x);
  if (cfg.json())
    out << json{{"stratum_size", io::integer_to_json(size)}}.dump(2) << '\n';
  else
    out << size << '\n';
  return kOk;
}

void layers_dot(const LayerPoset& p, std::ostream& out) {
  out << "digraph layers {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t k = 0; k < p.layers.size(); ++k) {
    const Layer& l = p.layers[k];
    out << "  L" << k << " [label=\"" << io::format_index_set(l.characters) << "\\n" << point_text(l.point) << "\"];\n";
  }
  for (const auto& [a, b] : p.covers()) out << "  L" << a << " -> L" << b << ";\n";
  out << "}\n";
}

int cmd_layers(const Config& cfg, const std::string& file, bool dot, bool as_json, std::ostream& out) {
  const Representation x = load(file);
  const LayerPoset p = layer_poset(x);
  if (dot) {
    layers_dot(p, out);
  } else if (as_json || cfg.json()) {
    json layers = json::array();
    for (std::size_t k = 0; k < p.layers.size(); ++k) {
      const Layer& l = p.layers[k];
      layers.push_back({{"id", k}, {"flat", io::index_set_to_json(l.characters)}, {"rank", l.rank}, {"point", point_json(l.point)}});
    }
    json covers = json::array();
    for (const auto& [a, b] : p.covers()) covers.push_back({a, b});
    out << json{{"layers", layers}, {"covers", covers}, {"maximal", p.maximal()}}.dump(2) << '\n';
  } else {
    out << "# " << p.layers.size() << " layers; id rank characters point\n";
    for (std::size_t k = 0; k < p.layers.size(); ++k) {
      const Layer& l = p.layers[k];
      out << 'L' << k << ' ' << l.rank << ' ' << io::format_index_set(l.characters) << ' ' << point_text(l.point) << '\n';
    }
    out << "# covers\n";
    for (const auto& [a, b] : p.covers()) out << 'L' << a << " < L" << b << '\n';
  }
  return kOk;
}

int cmd_verify(const Config& cfg, const std::string& file, std::size_t trials, std::ostream& out, std::ostream& err) {
  const Representation x = load(file);
  const auto r = oracle::verify_uniqueness_theorem(x, trials, cfg.seed);
  if (cfg.json()) {
    json failures = json::array();
    for (const auto& f : r.failures)
      failures.push_back({{"trial", f.trial}, {"seed", f.trial_seed}, {"transform", witness_json(f.transform)},
                          {"canonical", io::matrix_to_json(f.canonical_of_transformed)}});
    out << json{{"trials", r.trials}, {"passed", r.passed()}, {"seed", r.seed}, {"failures", failures}}.dump(2) << '\n';
  } else {
    out << r.passed() << '/' << r.trials << " ok\n";
    for (const auto& f : r.failures) {
      err << "trial " << f.trial << " (seed " << f.trial_seed << ") failed\n";
      witness_text(err, f.transform);
    }
  }
  return r.failures.empty() ? kOk : kNegative;
}

int cmd_graph(const std::string& file, const std::string& basis_text, std::ostream& out) {
  const Representation x = load(file);
  const IndexSet basis = basis_text.empty() ? default_basis(x) : io::parse_index_set(basis_text);
  const BasicForm f = basic_form(x, basis);
  const CircuitIncidence c = incidence(f.a);
  const Forest path = coordinatizing_path(c);
  auto in_path = [&](std::size_t i, std::size_t j) {
    return std::find(path.edges.begin(), path.edges.end(), Edge{i, j}) != path.edges.end();
  };
  out << "graph G_A {\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < c.rows(); ++i) out << "  r" << i + 1 << ";\n";
  for (std::size_t j = 0; j < c.cols(); ++j) out << "  c" << f.non_basis[j] + 1 << " [shape=square];\n";
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) {
      if (!c(i, j)) continue;
      out << "  r" << i + 1 << " -- c" << f.non_basis[j] + 1 << " [label=\"" << f.a(i, j) << "\"";
      if (in_path(i, j)) out << ", style=bold";
      out << "];\n";
    }
  out << "}\n";
  return kOk;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return kParseError;
    case ErrorKind::TooLarge: return kTooLarge;
    default: return kPrecondition;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Arithmetic matroid representations: tables, canonical forms, equivalence, layers", "arimat"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--table-cap", cfg.table_cap, "Largest N for full subset tables")->capture_default_str();
  app.add_option("--bruteforce-cap", cfg.bruteforce_cap, "Largest N for the exhaustive sign search")
      ->capture_default_str();
  app.add_option("--enum-cap", cfg.enumeration_cap, "Largest number of free signs to enumerate")->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for randomized checks")->capture_default_str();

  std::string file, file_b, basis;
  bool witness = false, dot = false, as_json = false;
  std::size_t trials = 100;
  std::function<int()> action;

  auto* table = app.add_subcommand("table", "Rank and multiplicity of every subset");
  table->add_option("file", file, "Matrix file")->required();
  table->callback([&] { action = [&] { return cmd_table(cfg, file, out); }; });

  auto* canonical = app.add_subcommand("canonical", "Canonical representative of the equivalence class");
  canonical->add_option("file", file, "Matrix file")->required();
  canonical->add_flag("--witness", witness, "Also print T and D with canonical = T X D");
  canonical->callback([&] { action = [&] { return cmd_canonical(cfg, file, witness, out); }; });

  auto* equiv = app.add_subcommand("equiv", "Decide whether Y = T X D for some T and D");
  equiv->add_option("x", file, "First matrix file")->required();
  equiv->add_option("y", file_b, "Second matrix file")->required();
  equiv->callback([&] { action = [&] { return cmd_equiv(cfg, file, file_b, out); }; });

  auto* enumerate = app.add_subcommand("enumerate", "All representations in basic form on a basis");
  enumerate->add_option("file", file, "Matrix file")->required();
  enumerate->add_option("--basis", basis, "Basis as 1-based indices, e.g. 1,2,3 (default: first multiplicative basis)");
  enumerate->callback([&] { action = [&] { return cmd_enumerate(cfg, file, basis, out); }; });

  auto* stratum = app.add_subcommand("stratum", "Number of inequivalent representations of the matroid");
  stratum->add_option("file", file, "Matrix file")->required();
  stratum->callback([&] { action = [&] { return cmd_stratum(cfg, file, out); }; });

  auto* layers = app.add_subcommand("layers", "Poset of layers of the toric arrangement");
  layers->add_option("file", file, "Matrix file")->required();
  auto* dot_flag = layers->add_flag("--dot", dot, "Hasse diagram in DOT");
  layers->add_flag("--json", as_json, "JSON export")->excludes(dot_flag);
  layers->callback([&] { action = [&] { return cmd_layers(cfg, file, dot, as_json, out); }; });

  auto* verify = app.add_subcommand("verify", "Check the canonical form against random T and D");
  verify->add_option("file", file, "Matrix file")->required();
  verify->add_option("--trials", trials, "Number of random transforms")->capture_default_str();
  verify->callback([&] { action = [&] { return cmd_verify(cfg, file, trials, out, err); }; });

  auto* graph = app.add_subcommand("graph", "Incidence graph of the basic form in DOT, path edges bold");
  graph->add_option("file", file, "Matrix file")->required();
  graph->add_option("--basis", basis, "Basis as 1-based indices (default: first multiplicative basis)");
  graph->callback([&] { action = [&] { return cmd_graph(file, basis, out); }; });

  std::vector<std::string> argv_storage{"arimat"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  }
}

}  // namespace arimat::cli
