#ifndef KCOMP_VTREE_HPP
#define KCOMP_VTREE_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kcomp/common.hpp"

namespace kcomp {

// A rooted full binary tree whose leaves carry variables. Extended v-trees
// allow unlabeled leaves (var -1), which stand for constants.
class VTree {
 public:
  struct Node {
    int parent = -1;
    int left = -1;   // -1 for leaves
    int right = -1;
    int var = -1;    // >= 0 for labeled leaves
  };

  int add_leaf(int var);  // var = -1 for an unlabeled leaf
  int add_internal(int left, int right);
  void set_root(int n);

  int root() const { return root_; }
  int n_nodes() const { return static_cast<int>(nodes_.size()); }
  const Node& node(int n) const { return nodes_[n]; }
  bool is_leaf(int n) const { return nodes_[n].left < 0; }
  bool is_labeled_leaf(int n) const { return is_leaf(n) && nodes_[n].var >= 0; }

  bool extended() const;  // any unlabeled leaf present

  // full binary tree, distinct leaf labels; throws InputError
  void validate() const;

  // Labeled variables under node n, sorted.
  std::vector<int> leaves_under(int n) const;
  // All labeled variables, sorted.
  std::vector<int> all_vars() const;
  // Internal plus leaf node ids in a bottom-up order.
  std::vector<int> topo_bottom_up() const;

  bool is_right_linear() const;
  // Variable order of a right-linear v-tree, root-most leaf first.
  std::vector<int> right_linear_order() const;
  static VTree right_linear(const std::vector<int>& order);

  // `<id> <var>` for leaves (var -1 if unlabeled), `<id> <left> <right>` for
  // internal nodes; first line `root <id>`.
  static VTree parse(std::istream& in);
  std::string to_text() const;

 private:
  std::vector<Node> nodes_;
  int root_ = -1;
};

// True iff t2 is a reduction of t1: for every internal node n of t1 some node
// n2 of t2 puts t1's inside-leaves inside and outside-leaves outside. Leaf
// witnesses are accepted so that degenerate reductions (down to one leaf)
// behave as the conditioning lemmas require.
bool vtree_is_reduction(const VTree& t2, const VTree& t1);

// Least index i (1-based) with X before it and Y at or after it, if any.
std::optional<int> order_cut_index(const std::vector<int>& order,
                                   const std::vector<int>& X,
                                   const std::vector<int>& Y);

// A node n with X under n and Y outside, if any.
std::optional<int> vtree_cut_node(const VTree& t, const std::vector<int>& X,
                                  const std::vector<int>& Y);

}  // namespace kcomp

#endif
