#ifndef KCOMP_GENERATORS_HPP
#define KCOMP_GENERATORS_HPP

#include <cstdint>
#include <vector>

#include "kcomp/circuit.hpp"
#include "kcomp/clause_form.hpp"
#include "kcomp/hypergraph.hpp"
#include "kcomp/tree_decomp.hpp"

namespace kcomp {

// All generators are deterministic in the seed (mt19937_64).

// Mixed fan-in random circuit with at most `max_vars` variables and
// `max_gates` gates in total.
Circuit random_circuit(std::uint64_t seed, int max_vars, int max_gates);

// Chain-structured circuit whose wires stay within a sliding window, plus a
// path decomposition of width <= `window` built from the windows.
struct PathCircuit {
  Circuit circuit;
  TreeDecomp path;
};
PathCircuit random_path_circuit(std::uint64_t seed, int n_gates, int window);

Hypergraph random_hypergraph(std::uint64_t seed, int max_vertices,
                             int max_arity, int max_edges);

// Minimized monotone form with arity <= `max_arity` and degree <= `max_degree`.
ClauseForm random_monotone_form(std::uint64_t seed, FormKind kind, int n_vars,
                                int max_arity, int max_degree);

// Monotone form with a planted set of clauses split by two disjoint variable
// groups; the groups are returned so callers can locate the split.
struct PlantedSplitForm {
  ClauseForm form;
  std::vector<int> x_side;
  std::vector<int> y_side;
  int planted_clauses = 0;
};
PlantedSplitForm random_planted_split_form(std::uint64_t seed, FormKind kind,
                                           int max_arity, int max_degree);

}  // namespace kcomp

#endif
