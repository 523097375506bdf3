#ifndef KCOMP_CIRCUIT_HPP
#define KCOMP_CIRCUIT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "kcomp/common.hpp"
#include "kcomp/valuation.hpp"

namespace kcomp {

enum class GateKind : std::uint8_t { Var, Not, And, Or };

struct Gate {
  GateKind kind = GateKind::Var;
  std::vector<int> inputs;
};

// A Boolean circuit as a DAG of typed gates with a designated output gate.
// Gate ids are dense integers assigned in insertion (or parse) order.
class Circuit {
 public:
  int add_var(std::string name = {});
  int add_gate(GateKind kind, std::vector<int> inputs, std::string name = {});
  void set_output(int gate);

  int output() const { return output_; }
  int n_gates() const { return static_cast<int>(gates_.size()); }
  std::size_t n_wires() const;
  const Gate& gate(int id) const { return gates_[id]; }
  const std::string& name(int id) const { return names_[id]; }

  // Var gate ids in declaration order; the default variable order everywhere.
  const std::vector<int>& var_order() const { return var_order_; }
  int n_vars() const { return static_cast<int>(var_order_.size()); }

  // Checks acyclicity, fan-in rules and the output gate; throws InputError.
  void validate() const;

  // Gate ids in a topological order (inputs before consumers).
  std::vector<int> topo_order() const;

  static Circuit parse(std::istream& in);
  static Circuit parse_text(const std::string& text);
  std::string to_text() const;

 private:
  std::vector<Gate> gates_;
  std::vector<std::string> names_;
  std::vector<int> var_order_;
  int output_ = -1;
};

// Standard semantics; and/or gates with no inputs evaluate to 1/0.
// The domain of `v` must equal the var gates of `c` as a set.
bool evaluate_circuit(const Circuit& c, const Valuation& v);

}  // namespace kcomp

#endif
