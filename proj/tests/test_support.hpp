#ifndef KCOMP_TEST_SUPPORT_HPP
#define KCOMP_TEST_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "kcomp/circuit.hpp"
#include "kcomp/clause_form.hpp"
#include "kcomp/valuation.hpp"

namespace kcomp::test {

// Independent reference evaluator: memoized recursion from the output gate.
// Deliberately distinct from the topological-order evaluator in the library.
inline bool eval_recursive(const Circuit& c, int gate, const Valuation& v,
                           std::vector<signed char>& memo) {
  if (memo[gate] >= 0) return memo[gate];
  const Gate& g = c.gate(gate);
  bool r = false;
  switch (g.kind) {
    case GateKind::Var:
      r = v.value(gate);
      break;
    case GateKind::Not:
      r = !eval_recursive(c, g.inputs[0], v, memo);
      break;
    case GateKind::And:
      r = true;
      for (int in : g.inputs) r = eval_recursive(c, in, v, memo) && r;
      break;
    case GateKind::Or:
      r = false;
      for (int in : g.inputs) r = eval_recursive(c, in, v, memo) || r;
      break;
  }
  memo[gate] = r;
  return r;
}

inline bool eval_recursive(const Circuit& c, const Valuation& v) {
  std::vector<signed char> memo(c.n_gates(), -1);
  return eval_recursive(c, c.output(), v, memo);
}

inline Valuation valuation_from_index(const std::vector<int>& order,
                                      std::uint64_t idx) {
  int n = static_cast<int>(order.size());
  std::vector<bool> bits(n);
  for (int i = 0; i < n; ++i) bits[i] = (idx >> (n - 1 - i)) & 1;
  return Valuation(order, std::move(bits));
}

}  // namespace kcomp::test

#endif
