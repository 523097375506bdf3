#include "kcomp/vtree.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

namespace kcomp {

int VTree::add_leaf(int var) {
  nodes_.push_back(Node{-1, -1, -1, var});
  return n_nodes() - 1;
}

int VTree::add_internal(int left, int right) {
  int id = n_nodes();
  nodes_.push_back(Node{-1, left, right, -1});
  nodes_[left].parent = id;
  nodes_[right].parent = id;
  return id;
}

void VTree::set_root(int n) { root_ = n; }

bool VTree::extended() const {
  for (const Node& n : nodes_)
    if (n.left < 0 && n.var < 0) return true;
  return false;
}

void VTree::validate() const {
  if (root_ < 0 || root_ >= n_nodes()) throw InputError("v-tree has no root");
  if (nodes_[root_].parent != -1) throw InputError("v-tree root has a parent");
  std::set<int> labels;
  int reached = 0;
  std::vector<int> stack{root_};
  while (!stack.empty()) {
    int n = stack.back();
    stack.pop_back();
    ++reached;
    const Node& nd = nodes_[n];
    if ((nd.left < 0) != (nd.right < 0))
      throw InputError("v-tree node with exactly one child");
    if (nd.left >= 0) {
      if (nodes_[nd.left].parent != n || nodes_[nd.right].parent != n)
        throw InputError("v-tree parent links inconsistent");
      stack.push_back(nd.left);
      stack.push_back(nd.right);
    } else if (nd.var >= 0) {
      if (!labels.insert(nd.var).second)
        throw InputError("v-tree repeats leaf label " + std::to_string(nd.var));
    }
  }
  if (reached != n_nodes())
    throw InputError("v-tree has nodes unreachable from the root");
}

std::vector<int> VTree::leaves_under(int n) const {
  std::vector<int> out;
  std::vector<int> stack{n};
  while (!stack.empty()) {
    int m = stack.back();
    stack.pop_back();
    const Node& nd = nodes_[m];
    if (nd.left >= 0) {
      stack.push_back(nd.left);
      stack.push_back(nd.right);
    } else if (nd.var >= 0) {
      out.push_back(nd.var);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> VTree::all_vars() const { return leaves_under(root_); }

std::vector<int> VTree::topo_bottom_up() const {
  // children before parents
  std::vector<int> order;
  std::vector<std::pair<int, bool>> stack{{root_, false}};
  while (!stack.empty()) {
    auto [n, expanded] = stack.back();
    stack.pop_back();
    if (expanded || is_leaf(n)) {
      order.push_back(n);
      continue;
    }
    stack.push_back({n, true});
    stack.push_back({nodes_[n].left, false});
    stack.push_back({nodes_[n].right, false});
  }
  return order;
}

bool VTree::is_right_linear() const {
  for (int n = 0; n < n_nodes(); ++n)
    if (!is_leaf(n) && !is_leaf(nodes_[n].right)) return false;
  return true;
}

std::vector<int> VTree::right_linear_order() const {
  if (!is_right_linear())
    throw InputError("v-tree is not right-linear");
  std::vector<int> order;
  int n = root_;
  while (!is_leaf(n)) {
    const Node& nd = nodes_[n];
    if (nodes_[nd.right].var >= 0) order.push_back(nodes_[nd.right].var);
    n = nd.left;
  }
  if (nodes_[n].var >= 0) order.push_back(nodes_[n].var);
  return order;
}

VTree VTree::right_linear(const std::vector<int>& order) {
  if (order.empty()) throw InputError("right-linear v-tree needs variables");
  VTree t;
  // built bottom-up: the last variable is the deepest (leftmost) leaf
  int cur = t.add_leaf(order.back());
  for (int i = static_cast<int>(order.size()) - 2; i >= 0; --i) {
    int leaf = t.add_leaf(order[i]);
    cur = t.add_internal(cur, leaf);
  }
  t.set_root(cur);
  t.validate();
  return t;
}

VTree VTree::parse(std::istream& in) {
  std::string line;
  VTree t;
  std::vector<Node> nodes;
  int root = -1;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c") continue;
    if (tok == "root") {
      if (!(ls >> root)) throw ParseError("v-tree: malformed root line");
      continue;
    }
    int id, a, b;
    try {
      id = std::stoi(tok);
    } catch (const std::exception&) {
      throw ParseError("v-tree: unexpected line: " + line);
    }
    if (!(ls >> a)) throw ParseError("v-tree: malformed node line");
    if (static_cast<int>(nodes.size()) <= id) nodes.resize(id + 1);
    if (ls >> b) {
      nodes[id].left = a;
      nodes[id].right = b;
    } else {
      nodes[id].var = a;
    }
  }
  if (root < 0) throw ParseError("v-tree: missing root line");
  t.nodes_ = std::move(nodes);
  for (int n = 0; n < t.n_nodes(); ++n)
    if (t.nodes_[n].left >= 0) {
      t.nodes_[t.nodes_[n].left].parent = n;
      t.nodes_[t.nodes_[n].right].parent = n;
    }
  t.root_ = root;
  t.validate();
  return t;
}

std::string VTree::to_text() const {
  std::ostringstream out;
  out << "root " << root_ << '\n';
  for (int n = 0; n < n_nodes(); ++n) {
    const Node& nd = nodes_[n];
    if (nd.left >= 0)
      out << n << ' ' << nd.left << ' ' << nd.right << '\n';
    else
      out << n << ' ' << nd.var << '\n';
  }
  return out.str();
}

bool vtree_is_reduction(const VTree& t2, const VTree& t1) {
  std::vector<int> t2_vars = t2.all_vars();

  // precompute leaf sets of every node of t2
  std::vector<std::vector<int>> under2(t2.n_nodes());
  for (int n : t2.topo_bottom_up()) under2[n] = t2.leaves_under(n);

  for (int n = 0; n < t1.n_nodes(); ++n) {
    if (t1.is_leaf(n)) continue;
    std::vector<int> inside = t1.leaves_under(n);
    // restrict to the variables t2 still has
    std::vector<int> in_kept, out_kept;
    for (int v : t2_vars)
      if (std::binary_search(inside.begin(), inside.end(), v))
        in_kept.push_back(v);
      else
        out_kept.push_back(v);

    bool found = false;
    for (int n2 = 0; n2 < t2.n_nodes() && !found; ++n2) {
      const std::vector<int>& u = under2[n2];
      bool in_ok = std::includes(u.begin(), u.end(), in_kept.begin(),
                                 in_kept.end());
      if (!in_ok) continue;
      bool out_ok = true;
      for (int v : out_kept)
        if (std::binary_search(u.begin(), u.end(), v)) {
          out_ok = false;
          break;
        }
      found = out_ok;
    }
    if (!found) return false;
  }
  return true;
}

std::optional<int> order_cut_index(const std::vector<int>& order,
                                   const std::vector<int>& X,
                                   const std::vector<int>& Y) {
  std::set<int> xs(X.begin(), X.end()), ys(Y.begin(), Y.end());
  int n = static_cast<int>(order.size());
  // 1-based positions; cut index i needs max position of X < i <= min of Y
  int max_x = 0, min_y = n + 1;
  for (int p = 0; p < n; ++p) {
    if (xs.count(order[p])) max_x = std::max(max_x, p + 1);
    if (ys.count(order[p])) min_y = std::min(min_y, p + 1);
  }
  if (max_x + 1 <= min_y) return max_x + 1;
  return std::nullopt;
}

std::optional<int> vtree_cut_node(const VTree& t, const std::vector<int>& X,
                                  const std::vector<int>& Y) {
  std::vector<int> xs = X, ys = Y;
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  for (int n = 0; n < t.n_nodes(); ++n) {
    std::vector<int> under = t.leaves_under(n);
    if (!std::includes(under.begin(), under.end(), xs.begin(), xs.end()))
      continue;
    bool y_outside = true;
    for (int y : ys)
      if (std::binary_search(under.begin(), under.end(), y)) {
        y_outside = false;
        break;
      }
    if (y_outside) return n;
  }
  return std::nullopt;
}

}  // namespace kcomp
