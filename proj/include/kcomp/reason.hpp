#ifndef KCOMP_REASON_HPP
#define KCOMP_REASON_HPP

#include <functional>

#include "kcomp/nbdd.hpp"
#include "kcomp/nnf.hpp"
#include "kcomp/valuation.hpp"

namespace kcomp {

// Exact model count over the circuit's variable universe by one bottom-up
// pass. Requires the decomposable+deterministic+complete flags (contract
// error otherwise); tests re-verify flags via check_class.
BigInt count_models(const NnfCircuit& d);
BigInt count_models(const Nbdd& d);  // requires unambiguous+complete

// Weighted model count under independent probabilities; same contracts.
double wmc(const NnfCircuit& d, const ProbabilityAssignment& pi);
double wmc(const Nbdd& d, const ProbabilityAssignment& pi);

// Emits every satisfying valuation exactly once in a deterministic order
// (depth first, 0-branch before 1-branch at variable leaves).
void enumerate_models(const NnfCircuit& d,
                      const std::function<void(const Valuation&)>& sink);
void enumerate_models(const Nbdd& d,
                      const std::function<void(const Valuation&)>& sink);

}  // namespace kcomp

#endif
