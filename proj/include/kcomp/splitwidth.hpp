#ifndef KCOMP_SPLITWIDTH_HPP
#define KCOMP_SPLITWIDTH_HPP

#include <vector>

#include "kcomp/hypergraph.hpp"
#include "kcomp/tree_decomp.hpp"
#include "kcomp/vtree.hpp"

namespace kcomp {

// The edges split at each prefix of an order (or at each v-tree node): an
// edge is split when it has a vertex on both sides.
struct SplitProfile {
  // split_sets[i] holds edge indices into Hypergraph::edges. For orders,
  // entry i corresponds to the prefix of length i+1; the last entry is
  // always empty. For v-trees, entry n corresponds to v-tree node n.
  std::vector<std::vector<int>> split_sets;
  int max_size = 0;
};

SplitProfile split_profile_order(const std::vector<int>& order,
                                 const Hypergraph& h);
SplitProfile split_profile_vtree(const VTree& vt, const Hypergraph& h);

struct PathSplitResult {
  int value = 0;
  std::vector<int> order;  // witness
};
struct TreeSplitResult {
  int value = 0;
  VTree vtree;  // witness
};

// Exact pathsplitwidth / treesplitwidth with optimal witnesses, by dynamic
// programming over vertex subsets; capacity error above `cap` vertices.
PathSplitResult exact_pathsplitwidth(const Hypergraph& h, int cap = 12);
TreeSplitResult exact_treesplitwidth(const Hypergraph& h, int cap = 12);

// Path decomposition with bags {v_i} ∪ (union of edges split at i);
// width <= arity(h) * psw(order, h). Validated before return.
TreeDecomp path_decomp_from_order(const std::vector<int>& order,
                                  const Hypergraph& h);

// Tree decomposition on the v-tree skeleton with bags joining the splits of
// a node and its children; width <= 3 * arity(h) * tsw(vt, h). Validated.
TreeDecomp tree_decomp_from_vtree(const VTree& vt, const Hypergraph& h);

}  // namespace kcomp

#endif
