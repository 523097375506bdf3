#include "kcomp/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "kcomp/circuit.hpp"

namespace kcomp {

Hypergraph Hypergraph::make(std::vector<int> vertices,
                            std::vector<std::vector<int>> edges) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()),
                 vertices.end());
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (e.empty()) throw InputError("hypergraph: empty edge");
    for (int v : e)
      if (!std::binary_search(vertices.begin(), vertices.end(), v))
        throw InputError("hypergraph: edge uses unknown vertex " +
                         std::to_string(v));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (edges.empty()) throw InputError("hypergraph: at least one edge required");
  return Hypergraph{std::move(vertices), std::move(edges)};
}

int Hypergraph::arity() const {
  std::size_t a = 0;
  for (const auto& e : edges) a = std::max(a, e.size());
  return static_cast<int>(a);
}

int Hypergraph::degree() const {
  std::map<int, int> occ;
  for (const auto& e : edges)
    for (int v : e) ++occ[v];
  int d = 0;
  for (const auto& [v, n] : occ) d = std::max(d, n);
  return d;
}

bool Hypergraph::has_vertex(int v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

std::pair<int, int> hypergraph_arity_degree(const Hypergraph& h) {
  return {h.arity(), h.degree()};
}

Hypergraph circuit_primal_graph(const Circuit& c) {
  std::vector<int> vertices(c.n_gates());
  for (int i = 0; i < c.n_gates(); ++i) vertices[i] = i;

  std::set<std::vector<int>> edges;
  std::vector<char> touched(c.n_gates(), 0);
  for (int id = 0; id < c.n_gates(); ++id)
    for (int in : c.gate(id).inputs) {
      edges.insert({std::min(id, in), std::max(id, in)});
      touched[id] = touched[in] = 1;
    }
  for (int id = 0; id < c.n_gates(); ++id)
    if (!touched[id]) edges.insert({id});

  return Hypergraph::make(std::move(vertices),
                          {edges.begin(), edges.end()});
}

}  // namespace kcomp
