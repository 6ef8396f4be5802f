#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "arimat/int_matrix.hpp"

namespace arimat::io {

/// Plain-text matrix file:
///
///     # comment lines start with '#', trailing comments are allowed too
///     d N
///     x11 ... x1N
///     ...
///     xd1 ... xdN
///
/// Entries are integers of any size. Throws ParseError.
IntMatrix parse_matrix_text(std::string_view text);

/// JSON input: either an array of rows or an object with a "matrix" member.
/// Entries may be JSON integers or decimal strings.
IntMatrix parse_matrix_json(const nlohmann::json& j);

/// Dispatches on the first non-blank, non-comment character ('{' or '[' means JSON).
IntMatrix parse_matrix(std::string_view text);

IntMatrix read_matrix_file(const std::string& path);

/// Text format readable by parse_matrix_text; each comment line is prefixed
/// with "# ".
std::string format_matrix(const IntMatrix& m, const std::vector<std::string>& comments = {});

/// Entries that fit in 64 bits become JSON integers, larger ones decimal strings.
nlohmann::json integer_to_json(const Integer& v);
nlohmann::json matrix_to_json(const IntMatrix& m);

/// 1-based index list.
nlohmann::json index_set_to_json(const IndexSet& s);
std::string format_index_set(const IndexSet& s);

/// Parses "1,2,3" (1-based) into a 0-based sorted index set.
IndexSet parse_index_set(std::string_view text);

}  // namespace arimat::io
