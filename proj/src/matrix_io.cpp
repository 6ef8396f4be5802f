#include "arimat/matrix_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

#include "arimat/errors.hpp"

namespace arimat::io {

namespace {

Integer parse_integer(const std::string& token, std::size_t line) {
  std::string_view digits = token;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": '" + token + "' is not an integer");
  Integer v;
  v.set_str(token.front() == '+' ? token.substr(1) : token, 10);
  return v;
}

std::size_t parse_count(const std::string& token, std::size_t line) {
  const Integer v = parse_integer(token, line);
  if (v < 0 || v > 1'000'000) throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": bad dimension " + token);
  return v.get_ui();
}

std::vector<std::string> tokens_of(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream is{std::string(line)};
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

}  // namespace

IntMatrix parse_matrix_text(std::string_view text) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(start, end - start);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = tokens_of(line);
    if (!toks.empty()) lines.emplace_back(number, std::move(toks));
    start = end + 1;
  }
  if (lines.empty()) throw Error(ErrorKind::ParseError, "missing header line 'd N'");
  const auto& [hline, header] = lines.front();
  if (header.size() != 2) throw Error(ErrorKind::ParseError, "line " + std::to_string(hline) + ": header must be 'd N'");
  const std::size_t d = parse_count(header[0], hline);
  const std::size_t n = parse_count(header[1], hline);
  if (d == 0) throw Error(ErrorKind::ParseError, "matrix needs at least one row");
  // With N = 0 the d rows are empty and therefore invisible.
  const std::size_t expected_rows = n == 0 ? 0 : d;
  if (lines.size() - 1 != expected_rows)
    throw Error(ErrorKind::ParseError,
                "expected " + std::to_string(expected_rows) + " rows, found " + std::to_string(lines.size() - 1));
  IntMatrix m(d, n);
  for (std::size_t i = 0; i < expected_rows; ++i) {
    const auto& [ln, toks] = lines[i + 1];
    if (toks.size() != n)
      throw Error(ErrorKind::ParseError, "line " + std::to_string(ln) + ": expected " + std::to_string(n) +
                                             " entries, found " + std::to_string(toks.size()));
    for (std::size_t j = 0; j < n; ++j) m(i, j) = parse_integer(toks[j], ln);
  }
  return m;
}

IntMatrix parse_matrix_json(const nlohmann::json& j) {
  const nlohmann::json& rows = j.is_object() ? j.at("matrix") : j;
  if (!rows.is_array() || rows.empty()) throw Error(ErrorKind::ParseError, "JSON matrix must be a non-empty array of rows");
  std::size_t n = 0;
  if (j.is_object() && j.contains("cols")) n = j.at("cols").get<std::size_t>();
  else n = rows.front().size();
  IntMatrix m(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) throw Error(ErrorKind::ParseError, "JSON matrix rows differ in length");
    for (std::size_t k = 0; k < n; ++k) {
      const auto& e = rows[i][k];
      if (e.is_number_integer())
        m(i, k) = Integer(e.dump());
      else if (e.is_string())
        m(i, k) = parse_integer(e.get<std::string>(), i + 1);
      else
        throw Error(ErrorKind::ParseError, "JSON matrix entries must be integers");
    }
  }
  return m;
}

IntMatrix parse_matrix(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    } else if (text[pos] == '#') {
      pos = text.find('\n', pos);
      if (pos == std::string_view::npos) break;
    } else {
      break;
    }
  }
  if (pos < text.size() && (text[pos] == '{' || text[pos] == '[')) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text.substr(pos));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::ParseError, e.what());
    }
    try {
      return parse_matrix_json(j);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::ParseError, e.what());
    }
  }
  return parse_matrix_text(text);
}

IntMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_matrix(ss.str());
}

std::string format_matrix(const IntMatrix& m, const std::vector<std::string>& comments) {
  std::ostringstream os;
  for (const auto& c : comments) os << "# " << c << '\n';
  os << m.rows() << ' ' << m.cols() << '\n' << to_string(m);
  return os.str();
}

nlohmann::json integer_to_json(const Integer& v) {
  if (mpz_sizeinbase(v.get_mpz_t(), 2) < 63) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

nlohmann::json matrix_to_json(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json index_set_to_json(const IndexSet& s) {
  nlohmann::json a = nlohmann::json::array();
  for (std::size_t j : s) a.push_back(j + 1);
  return a;
}

std::string format_index_set(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "," : "") + std::to_string(s[k] + 1);
  return out + "}";
}

IndexSet parse_index_set(std::string_view text) {
  IndexSet out;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    const Integer v = parse_integer(token, 1);
    if (v < 1) throw Error(ErrorKind::ParseError, "indices are 1-based");
    out.push_back(v.get_ui() - 1);
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '{' || c == '}')
      flush();
    else
      token += c;
  }
  flush();
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace arimat::io
