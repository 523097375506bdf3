#ifndef KCOMP_TREE_DECOMP_HPP
#define KCOMP_TREE_DECOMP_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "kcomp/common.hpp"
#include "kcomp/hypergraph.hpp"

namespace kcomp {

// A rooted tree of bags labeled with vertex sets.
struct TreeDecomp {
  struct Bag {
    std::vector<int> vertices;  // sorted
    int parent = -1;
    std::vector<int> children;
  };
  std::vector<Bag> bags;
  int root = 0;

  int n_bags() const { return static_cast<int>(bags.size()); }
  int width() const;
  bool is_path() const;  // every bag has at most one child

  int add_bag(std::vector<int> vertices, int parent);
  void check_tree() const;  // parent/child link consistency

  // Re-roots the tree at the given bag; labels unchanged.
  void reroot(int new_root);
};

struct DecompCheck {
  bool ok = false;
  int width = -1;
  std::string violation;
};

// Occurrence and connectedness; returns the width when both hold, otherwise
// names the violated edge or disconnected vertex.
DecompCheck validate_decomposition(const Hypergraph& h, const TreeDecomp& t);

// Min-fill elimination ordering with lexicographic tie-breaking on vertex id.
// The result is validated before being returned. No optimality guarantee.
TreeDecomp heuristic_tree_decomposition(const Hypergraph& h);

// A tree decomposition normalized for a root vertex v: full binary tree, root
// bag {v}, leaf bags of size <= 1, internal bags covered by their children.
struct FriendlyDecomp {
  TreeDecomp tree;
  int root_vertex = -1;
  // For each vertex with a singleton leaf bag {x}: the lowest such leaf id.
  std::map<int, int> singleton_leaf;
};

struct FriendlyCheck {
  bool ok = false;
  std::string violation;
};

// Checks the four friendliness conditions.
FriendlyCheck check_friendly(const TreeDecomp& t, int root_vertex);

// Normalizes a valid decomposition; width unchanged, size O(width * bags).
FriendlyDecomp make_friendly(const TreeDecomp& t, int root_vertex);

// Exact treewidth / pathwidth of the primal graph by subset dynamic
// programming; capacity error above `cap` vertices.
int exact_treewidth(const Hypergraph& h, int cap = 12);
int exact_pathwidth(const Hypergraph& h, int cap = 12);

// PACE-2017 .td format. The format is unrooted; we root at bag 1.
TreeDecomp parse_pace_td(std::istream& in);
std::string to_pace_td(const TreeDecomp& t, int n_vertices);

}  // namespace kcomp

#endif
