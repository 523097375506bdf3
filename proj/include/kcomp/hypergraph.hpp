#ifndef KCOMP_HYPERGRAPH_HPP
#define KCOMP_HYPERGRAPH_HPP

#include <utility>
#include <vector>

#include "kcomp/common.hpp"

namespace kcomp {

class Circuit;

// Vertices and non-empty hyperedges over integer ids. Always has at least
// one edge.
struct Hypergraph {
  std::vector<int> vertices;             // sorted, distinct
  std::vector<std::vector<int>> edges;   // each sorted; list sorted, distinct

  static Hypergraph make(std::vector<int> vertices,
                         std::vector<std::vector<int>> edges);

  int arity() const;
  int degree() const;
  bool has_vertex(int v) const;
};

// max edge size and max per-vertex occurrence count
std::pair<int, int> hypergraph_arity_degree(const Hypergraph& h);

// Vertices are all gates; one 2-element edge per wire. Gates touched by no
// wire get a singleton edge so that every gate occurs in a decomposition.
Hypergraph circuit_primal_graph(const Circuit& c);

}  // namespace kcomp

#endif
