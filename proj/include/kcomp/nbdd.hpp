#ifndef KCOMP_NBDD_HPP
#define KCOMP_NBDD_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kcomp/common.hpp"
#include "kcomp/oracle.hpp"
#include "kcomp/valuation.hpp"

namespace kcomp {

struct NbddNode {
  int var = -1;                // >= 0 for decision nodes
  int lo = -1, hi = -1;        // decision nodes
  std::vector<int> children;   // or-nodes
};

struct NbddFlags {
  bool free_diagram = false;
  bool ordered = false;
  bool unambiguous = false;
  bool complete = false;
};

// A non-deterministic BDD: a rooted DAG with two sinks (node 0 is the 0-sink,
// node 1 the 1-sink), decision nodes and or-nodes. Nodes are added bottom-up.
class Nbdd {
 public:
  static constexpr int kZero = 0;
  static constexpr int kOne = 1;

  Nbdd();  // starts with the two sinks

  int add_decision(int var, int lo, int hi);
  int add_or(std::vector<int> children);
  void set_root(int node);

  int root() const { return root_; }
  int n_nodes() const { return static_cast<int>(nodes_.size()); }
  std::size_t n_edges() const;  // the size of the diagram
  const NbddNode& node(int id) const { return nodes_[id]; }
  bool is_sink(int id) const { return id == kZero || id == kOne; }
  bool is_decision(int id) const { return nodes_[id].var >= 0; }

  void set_vars(std::vector<int> vars);
  const std::vector<int>& vars() const { return vars_; }

  void set_order(std::vector<int> order);  // witness for the ordered claim
  const std::optional<std::vector<int>>& order() const { return order_; }

  NbddFlags flags;

  bool evaluate(const Valuation& v) const;
  TruthTable table(const std::vector<int>& order,
                   Exec exec = Exec::Parallel) const;

  // adjacency text: `root <id>`, `<id> var <x> <lo> <hi>`, `<id> or <c...>`
  std::string to_text() const;
  static Nbdd parse(std::istream& in);
  std::string to_dot() const;

 private:
  std::vector<NbddNode> nodes_;
  std::vector<int> vars_;
  std::optional<std::vector<int>> order_;
  int root_ = kZero;
};

// nodes labeled with each variable (the x-widths); meaningful for complete
// diagrams
std::map<int, int> nbdd_var_widths(const Nbdd& d);
int nbdd_width(const Nbdd& d);

}  // namespace kcomp

#endif
