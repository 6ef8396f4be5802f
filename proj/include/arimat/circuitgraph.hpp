#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "arimat/int_matrix.hpp"

namespace arimat {

/// Support pattern of the non-basis block A of a basic form, read as the
/// bipartite graph on row vertices r_1..r_d and column vertices c_1..c_{N-d}.
class CircuitIncidence {
 public:
  CircuitIncidence(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), bits_(rows * cols, 0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t vertex_count() const noexcept { return rows_ + cols_; }

  bool operator()(std::size_t i, std::size_t j) const { return bits_[i * cols_ + j] != 0; }
  void set(std::size_t i, std::size_t j, bool v) { bits_[i * cols_ + j] = v ? 1 : 0; }

  friend bool operator==(const CircuitIncidence&, const CircuitIncidence&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<unsigned char> bits_;
};

/// A vertex of the bipartite graph. Rows order before columns, each by index.
struct Vertex {
  enum class Kind { Row, Column };
  Kind kind = Kind::Row;
  std::size_t index = 0;

  static Vertex row(std::size_t i) { return {Kind::Row, i}; }
  static Vertex column(std::size_t j) { return {Kind::Column, j}; }

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// Edge {r_row, c_col}, i.e. the nonzero entry a_{row,col}.
struct Edge {
  std::size_t row = 0;
  std::size_t col = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Spanning forest of the incidence graph (a coordinatizing path).
struct Forest {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Edge> edges;
  std::size_t components = 0;
};

struct EliminationStep {
  Vertex vertex;
  Edge edge;

  friend bool operator==(const EliminationStep&, const EliminationStep&) = default;
};

using EliminationOrder = std::vector<EliminationStep>;

CircuitIncidence incidence(const IntMatrix& a);

/// Number of connected components of the incidence graph, isolated vertices
/// included.
std::size_t kappa(const CircuitIncidence& c);

/// Depth-first spanning forest: roots taken in vertex order, neighbours
/// visited in increasing vertex order. Edges are listed in discovery order.
Forest coordinatizing_path(const CircuitIncidence& c);

/// Whether `f` is a spanning forest of the graph of `c`.
bool is_spanning_forest(const CircuitIncidence& c, const Forest& f);

/// Repeatedly removes the smallest vertex that has degree 1 in the remaining
/// forest.
EliminationOrder elimination_order(const Forest& f);

/// Validates a caller-chosen vertex sequence against `f` and attaches the
/// eliminated edge to each step. Throws PathMismatch if some vertex does not
/// have degree 1 at its turn or edges remain at the end.
EliminationOrder elimination_order(const Forest& f, const std::vector<Vertex>& vertices);

/// Unique cycle of f ∪ {e}, listed as the forest path from r_row to c_col
/// followed by e. Throws NotSameComponent when the endpoints are not connected
/// in `f`, InvalidArgument when e already belongs to `f`.
std::vector<Edge> coordinatizing_circuit(const Forest& f, const Edge& e);

/// Every edge of the graph of `c` outside `f`, paired with its circuit.
std::vector<std::vector<Edge>> coordinatizing_circuits(const CircuitIncidence& c, const Forest& f);

std::string to_string(const Vertex& v, std::size_t column_offset = 0);

}  // namespace arimat
