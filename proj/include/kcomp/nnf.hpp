#ifndef KCOMP_NNF_HPP
#define KCOMP_NNF_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kcomp/common.hpp"
#include "kcomp/oracle.hpp"
#include "kcomp/valuation.hpp"
#include "kcomp/vtree.hpp"

namespace kcomp {

enum class NnfKind : std::uint8_t { Var, Not, And, Or };

struct NnfGate {
  NnfKind kind = NnfKind::Var;
  int var = -1;               // for Var and Not gates
  std::vector<int> inputs;    // all smaller than the gate id
};

// Class membership claimed by producers; checkers verify them and tests never
// trust a claim across module boundaries.
struct NnfFlags {
  bool decomposable = false;
  bool deterministic = false;
  bool structured = false;
  bool complete = false;
};

// An NNF circuit (negation only on variables). Gates are added bottom-up, so
// ids are already topologically ordered. And-gates with no inputs are the
// constant 1, or-gates with no inputs the constant 0.
class NnfCircuit {
 public:
  int add_var(int var);
  int add_not(int var);               // literal gate for "not var"
  int add_and(std::vector<int> inputs);
  int add_or(std::vector<int> inputs);
  void set_output(int gate);

  int output() const { return output_; }
  int n_gates() const { return static_cast<int>(gates_.size()); }
  std::size_t n_edges() const;
  const NnfGate& gate(int id) const { return gates_[id]; }

  // The variable universe; a superset of the mentioned variables.
  void set_vars(std::vector<int> vars);
  const std::vector<int>& vars() const { return vars_; }

  void set_structure(VTree vtree, std::vector<int> rho);
  bool has_structure() const { return vtree_.has_value(); }
  const VTree& vtree() const;
  int rho(int gate) const { return rho_[gate]; }
  const std::vector<int>& rho_map() const { return rho_; }

  NnfFlags flags;

  // Variables appearing under each gate, as sorted lists.
  std::vector<std::vector<int>> gate_vars() const;

  bool evaluate(const Valuation& v) const;
  TruthTable table(const std::vector<int>& order,
                   Exec exec = Exec::Parallel) const;

  // c2d-style .nnf: header `nnf <nodes> <edges> <vars>`, lines `L lit`,
  // `A c i...`, `O j c i...`. Variables are written as 1-based indices into
  // vars(); `c idx <file-index> <var>` comment lines carry the mapping.
  std::string to_nnf_text() const;
  static NnfCircuit parse_nnf(std::istream& in);

  // sidecar files for the structure
  std::string vtree_text() const;
  std::string rho_text() const;

 private:
  std::vector<NnfGate> gates_;
  std::vector<int> vars_;
  int output_ = -1;
  std::optional<VTree> vtree_;
  std::vector<int> rho_;
};

// max over v-tree nodes of the number of or-gates structured there;
// defined only when the circuit passes the structured completeness checks
std::optional<int> nnf_width(const NnfCircuit& d);

}  // namespace kcomp

#endif
