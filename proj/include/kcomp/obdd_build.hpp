#ifndef KCOMP_OBDD_BUILD_HPP
#define KCOMP_OBDD_BUILD_HPP

#include "kcomp/circuit.hpp"
#include "kcomp/clause_form.hpp"
#include "kcomp/nbdd.hpp"
#include "kcomp/oracle.hpp"

namespace kcomp {

// Complete OBDD for the given order by Shannon expansion with layer-wise
// merging of equivalent cofactors; minimal width per layer among complete
// OBDDs of that order. Desk scale (truth-table backed).
Nbdd build_canonical_obdd(const TruthTable& t, const std::vector<int>& order);
Nbdd build_canonical_obdd(const Circuit& c, const std::vector<int>& order,
                          int cap = kBruteForceCap);
Nbdd build_canonical_obdd(const ClauseForm& f, const std::vector<int>& order,
                          int cap = kBruteForceCap);

}  // namespace kcomp

#endif
