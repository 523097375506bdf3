#ifndef KCOMP_TRANSFORM_HPP
#define KCOMP_TRANSFORM_HPP

#include <variant>

#include "kcomp/nbdd.hpp"
#include "kcomp/nnf.hpp"
#include "kcomp/valuation.hpp"

namespace kcomp {

// Compresses an extended complete (d-)SDNNF into a non-extended complete one
// of the same width and size O(n_vars * width^2): merges equivalent and-gates
// per v-tree node, drops gates disconnected from the output, propagates
// constants, and eliminates unlabeled v-tree leaves by merging parent and
// sibling. The output v-tree is a reduction of the input v-tree. Returns a
// Constant when the circuit computes a constant function.
std::variant<NnfCircuit, Constant> reduce_extended(const NnfCircuit& d);

// Partial evaluation of a complete structured circuit: assigned leaves become
// unlabeled, literal gates become constants, then reduce_extended.
std::variant<NnfCircuit, Constant> condition_sdnnf(const NnfCircuit& d,
                                                   const Valuation& v);

// Partial evaluation of a complete nBDD: assigned decision nodes are spliced
// out along the assigned branch. Width does not increase; order, completeness
// and unambiguity carry over.
Nbdd condition_nobdd(const Nbdd& d, const Valuation& v);

// Equivalent complete diagram: skipped variables are tested along don't-care
// chains. Grows node counts by at most a factor |V|+1.
Nbdd complete_nbdd(const Nbdd& d);

// Equivalent complete (smooth) DNNF; shares one (x or not-x) block per
// variable. Grows gate counts by at most a factor |V|+1 plus the shared
// blocks.
NnfCircuit complete_dnnf(const NnfCircuit& d);

// Rewrites decision nodes to (x and D1) or (not-x and D0). Unambiguous inputs
// give deterministic outputs; or-free inputs give decision-gate outputs.
NnfCircuit nfbdd_to_dnnf(const Nbdd& d);

// Same rewrite plus the right-linear v-tree of the witness order; the result
// is a structured DNNF.
NnfCircuit nobdd_to_sdnnf(const Nbdd& d);

}  // namespace kcomp

#endif
