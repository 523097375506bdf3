#ifndef KCOMP_CHECKS_HPP
#define KCOMP_CHECKS_HPP

#include <optional>
#include <string>

#include "kcomp/nbdd.hpp"
#include "kcomp/nnf.hpp"

namespace kcomp {

// Syntactic checks are exact at any size. Determinism and unambiguity are
// semantic and checked by exhaustive valuation up to the brute-force cap.

bool nnf_is_decomposable(const NnfCircuit& d);
bool nnf_is_structured(const NnfCircuit& d);

// The completeness conditions of structured circuits (output or-gate,
// total rho, or/and alternation, child structuring, distinct children,
// binary and-gates at internal nodes). Returns an empty string when they
// hold, otherwise a description of the first violation.
std::string nnf_structured_complete_violation(const NnfCircuit& d);
bool nnf_is_complete_structured(const NnfCircuit& d);

// Trace completeness for unstructured DNNFs: every trace from the output
// contains every variable. Requires decomposability.
bool nnf_is_complete_dnnf(const NnfCircuit& d);

bool nnf_is_deterministic(const NnfCircuit& d, int cap = kBruteForceCap,
                          Exec exec = Exec::Parallel);

bool nbdd_is_free(const Nbdd& d);
bool nbdd_is_ordered(const Nbdd& d, const std::vector<int>& order);
// every root-to-sink path tests every variable
bool nbdd_is_complete(const Nbdd& d);
bool nbdd_is_unambiguous(const Nbdd& d, int cap = kBruteForceCap,
                         Exec exec = Exec::Parallel);

struct NnfClassRequest {
  bool decomposable = false;
  bool deterministic = false;
  bool structured = false;
  bool complete = false;
};
struct NnfClassReport {
  std::optional<bool> decomposable, deterministic, structured, complete;
};
NnfClassReport check_class(const NnfCircuit& d, const NnfClassRequest& req,
                           int cap = kBruteForceCap);

struct NbddClassRequest {
  bool free_diagram = false;
  bool ordered = false;
  bool unambiguous = false;
  bool complete = false;
};
struct NbddClassReport {
  std::optional<bool> free_diagram, ordered, unambiguous, complete;
};
NbddClassReport check_class(const Nbdd& d, const NbddClassRequest& req,
                            int cap = kBruteForceCap);

}  // namespace kcomp

#endif
