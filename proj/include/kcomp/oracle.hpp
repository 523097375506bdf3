#ifndef KCOMP_ORACLE_HPP
#define KCOMP_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "kcomp/circuit.hpp"
#include "kcomp/clause_form.hpp"
#include "kcomp/common.hpp"
#include "kcomp/valuation.hpp"

namespace kcomp {

// Ground-truth kernels used by tests and verification passes. Each exhaustive
// sweep exists in an OpenMP-parallel form (the default) and a plain serial
// reference form; both must agree bit for bit.
enum class Exec : std::uint8_t { Serial, Parallel };

// Packed truth table of a function of n variables. Index bit layout is
// lexicographic: order[0] is the most significant index bit.
struct TruthTable {
  int n = 0;
  std::vector<std::uint64_t> words;

  std::uint64_t size() const { return std::uint64_t{1} << n; }
  bool get(std::uint64_t idx) const {
    return (words[idx >> 6] >> (idx & 63)) & 1;
  }
  std::uint64_t ones() const;
  friend bool operator==(const TruthTable&, const TruthTable&) = default;
};

// Evaluates 64 consecutive valuation indices at a time; parallel over blocks.
TruthTable truth_table(const Circuit& c, const std::vector<int>& order,
                       Exec exec = Exec::Parallel);
TruthTable truth_table(const ClauseForm& f, const std::vector<int>& order,
                       Exec exec = Exec::Parallel);

// Serial reference: one evaluate_circuit call per valuation.
TruthTable truth_table_serial_reference(const Circuit& c,
                                        const std::vector<int>& order);

struct BruteForceResult {
  std::uint64_t count = 0;
  std::optional<std::vector<Valuation>> models;  // lexicographic by var order
};

// Exact model count by exhaustive enumeration; throws CapacityError above cap.
BruteForceResult brute_force_models(const Circuit& c, bool want_models = false,
                                    int cap = kBruteForceCap,
                                    Exec exec = Exec::Parallel);
BruteForceResult brute_force_models(const ClauseForm& f,
                                    bool want_models = false,
                                    int cap = kBruteForceCap,
                                    Exec exec = Exec::Parallel);

// Sum of model probabilities under independent per-variable probabilities.
// Deterministic: fixed block partials folded in block order.
double brute_force_weighted_count(const Circuit& c,
                                  const ProbabilityAssignment& pi,
                                  int cap = kBruteForceCap,
                                  Exec exec = Exec::Parallel);
double brute_force_weighted_count_serial(const Circuit& c,
                                         const ProbabilityAssignment& pi,
                                         int cap = kBruteForceCap);

}  // namespace kcomp

#endif
