#include "arimat/circuitgraph.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

#include "arimat/errors.hpp"

namespace arimat {

namespace {

// Vertex ids: rows 0..d-1, then columns d..d+cols-1.
std::size_t vid(const Vertex& v, std::size_t rows) { return v.kind == Vertex::Kind::Row ? v.index : rows + v.index; }

Vertex vertex_of(std::size_t id, std::size_t rows) {
  return id < rows ? Vertex::row(id) : Vertex::column(id - rows);
}

std::vector<std::vector<std::size_t>> adjacency(const CircuitIncidence& c) {
  std::vector<std::vector<std::size_t>> adj(c.vertex_count());
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j)
      if (c(i, j)) {
        adj[i].push_back(c.rows() + j);
        adj[c.rows() + j].push_back(i);
      }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

std::vector<std::vector<std::size_t>> forest_adjacency(const Forest& f) {
  std::vector<std::vector<std::size_t>> adj(f.rows + f.cols);
  for (const Edge& e : f.edges) {
    if (e.row >= f.rows || e.col >= f.cols) throw Error(ErrorKind::PathMismatch, "forest edge out of range");
    adj[e.row].push_back(f.rows + e.col);
    adj[f.rows + e.col].push_back(e.row);
  }
  return adj;
}

Edge edge_between(std::size_t a, std::size_t b, std::size_t rows) {
  return a < rows ? Edge{a, b - rows} : Edge{b, a - rows};
}

}  // namespace

CircuitIncidence incidence(const IntMatrix& a) {
  CircuitIncidence c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.set(i, j, a(i, j) != 0);
  return c;
}

std::size_t kappa(const CircuitIncidence& c) {
  const auto adj = adjacency(c);
  std::vector<bool> seen(adj.size(), false);
  std::size_t count = 0;
  for (std::size_t s = 0; s < adj.size(); ++s) {
    if (seen[s]) continue;
    ++count;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : adj[v])
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
  }
  return count;
}

Forest coordinatizing_path(const CircuitIncidence& c) {
  const auto adj = adjacency(c);
  Forest f{c.rows(), c.cols(), {}, 0};
  std::vector<bool> seen(adj.size(), false);
  for (std::size_t root = 0; root < adj.size(); ++root) {
    if (seen[root]) continue;
    ++f.components;
    seen[root] = true;
    // (vertex, next neighbour position) frames give a true depth-first order.
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    while (!stack.empty()) {
      auto& [v, pos] = stack.back();
      if (pos == adj[v].size()) {
        stack.pop_back();
        continue;
      }
      const std::size_t w = adj[v][pos++];
      if (seen[w]) continue;
      seen[w] = true;
      f.edges.push_back(edge_between(v, w, c.rows()));
      stack.emplace_back(w, 0);
    }
  }
  return f;
}

bool is_spanning_forest(const CircuitIncidence& c, const Forest& f) {
  if (f.rows != c.rows() || f.cols != c.cols()) return false;
  std::vector<std::size_t> parent(c.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const Edge& e : f.edges) {
    if (e.row >= c.rows() || e.col >= c.cols() || !c(e.row, e.col)) return false;
    const std::size_t a = find(e.row), b = find(c.rows() + e.col);
    if (a == b) return false;  // cycle or repeated edge
    parent[a] = b;
  }
  // Spanning: every graph edge must join vertices already connected by f.
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j)
      if (c(i, j) && find(i) != find(c.rows() + j)) return false;
  return f.edges.size() + kappa(c) == c.vertex_count();
}

EliminationOrder elimination_order(const Forest& f) {
  auto adj = forest_adjacency(f);
  std::vector<std::size_t> degree(adj.size());
  for (std::size_t v = 0; v < adj.size(); ++v) degree[v] = adj[v].size();
  std::set<std::size_t> leaves;
  for (std::size_t v = 0; v < adj.size(); ++v)
    if (degree[v] == 1) leaves.insert(v);
  std::vector<bool> removed(adj.size(), false);
  EliminationOrder order;
  while (!leaves.empty()) {
    const std::size_t v = *leaves.begin();
    leaves.erase(leaves.begin());
    std::size_t w = adj[v].size();
    for (std::size_t u : adj[v])
      if (!removed[u]) w = u;
    removed[v] = true;
    order.push_back({vertex_of(v, f.rows), edge_between(v, w, f.rows)});
    // An isolated edge leaves its other endpoint with degree 0.
    if (--degree[w] == 1)
      leaves.insert(w);
    else
      leaves.erase(w);
  }
  if (order.size() != f.edges.size()) throw Error(ErrorKind::PathMismatch, "forest contains a cycle");
  return order;
}

EliminationOrder elimination_order(const Forest& f, const std::vector<Vertex>& vertices) {
  auto adj = forest_adjacency(f);
  std::vector<bool> removed(adj.size(), false);
  EliminationOrder order;
  for (const Vertex& vx : vertices) {
    const std::size_t v = vid(vx, f.rows);
    if (v >= adj.size() || removed[v]) throw Error(ErrorKind::PathMismatch, "vertex " + to_string(vx) + " is not available");
    std::optional<std::size_t> other;
    std::size_t live = 0;
    for (std::size_t u : adj[v])
      if (!removed[u]) {
        ++live;
        other = u;
      }
    if (live != 1) throw Error(ErrorKind::PathMismatch, "vertex " + to_string(vx) + " does not have degree 1 at its turn");
    removed[v] = true;
    order.push_back({vx, edge_between(v, *other, f.rows)});
  }
  if (order.size() != f.edges.size()) throw Error(ErrorKind::PathMismatch, "elimination leaves forest edges behind");
  return order;
}

std::vector<Edge> coordinatizing_circuit(const Forest& f, const Edge& e) {
  if (std::find(f.edges.begin(), f.edges.end(), e) != f.edges.end())
    throw Error(ErrorKind::InvalidArgument, "edge already belongs to the forest");
  const auto adj = forest_adjacency(f);
  if (e.row >= f.rows || e.col >= f.cols) throw Error(ErrorKind::InvalidArgument, "edge out of range");
  const std::size_t src = e.row, dst = f.rows + e.col;
  std::vector<std::size_t> parent(adj.size(), adj.size());
  parent[src] = src;
  std::vector<std::size_t> queue{src};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (std::size_t w : adj[queue[k]])
      if (parent[w] == adj.size()) {
        parent[w] = queue[k];
        queue.push_back(w);
      }
  if (parent[dst] == adj.size()) throw Error(ErrorKind::NotSameComponent, "edge endpoints lie in different trees");
  std::vector<Edge> cycle;
  for (std::size_t v = dst; v != src; v = parent[v]) cycle.push_back(edge_between(v, parent[v], f.rows));
  std::reverse(cycle.begin(), cycle.end());
  cycle.push_back(e);
  return cycle;
}

std::vector<std::vector<Edge>> coordinatizing_circuits(const CircuitIncidence& c, const Forest& f) {
  std::vector<std::vector<Edge>> out;
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j) {
      const Edge e{i, j};
      if (!c(i, j) || std::find(f.edges.begin(), f.edges.end(), e) != f.edges.end()) continue;
      out.push_back(coordinatizing_circuit(f, e));
    }
  return out;
}

std::string to_string(const Vertex& v, std::size_t column_offset) {
  return v.kind == Vertex::Kind::Row ? "r" + std::to_string(v.index + 1)
                                     : "c" + std::to_string(v.index + 1 + column_offset);
}

}  // namespace arimat
