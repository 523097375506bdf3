#ifndef KCOMP_CLAUSE_FORM_HPP
#define KCOMP_CLAUSE_FORM_HPP

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "kcomp/common.hpp"
#include "kcomp/hypergraph.hpp"
#include "kcomp/valuation.hpp"

namespace kcomp {

class Circuit;

enum class FormKind : std::uint8_t { Cnf, Dnf };

// A monotone CNF or DNF over positive integer variables, identified with its
// hypergraph (clauses = hyperedges). Clause forms never represent constants.
class ClauseForm {
 public:
  // Variables default to the union of the clauses; an explicit variable set
  // may be a superset. Clauses must be non-empty and at least one must exist.
  ClauseForm(FormKind kind, std::vector<std::vector<int>> clauses);
  ClauseForm(FormKind kind, std::vector<int> vars,
             std::vector<std::vector<int>> clauses);

  FormKind kind() const { return kind_; }
  const std::vector<int>& vars() const { return vars_; }
  int n_vars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::vector<int>>& clauses() const { return clauses_; }
  int n_clauses() const { return static_cast<int>(clauses_.size()); }

  int arity() const { return arity_; }
  int degree() const { return degree_; }

  bool is_minimized() const;
  Hypergraph hypergraph() const;

  bool evaluate(const Valuation& v) const;  // domain must cover vars()

  // DIMACS with positive literals only; header `p cnf` or `p dnf`.
  static ClauseForm parse_dimacs(std::istream& in);
  static ClauseForm parse_dimacs_text(const std::string& text);
  std::string to_dimacs(const std::string& comment = {}) const;

 private:
  FormKind kind_;
  std::vector<int> vars_;
  std::vector<std::vector<int>> clauses_;
  int arity_ = 0;
  int degree_ = 0;
};

// Keeps only inclusion-minimal clauses; semantics preserved.
ClauseForm minimize_clause_form(const ClauseForm& f);

// The partial evaluation nu(phi) as a minimized clause form on vars \ X, or a
// Constant when the residual function is constant.
std::variant<ClauseForm, Constant> partial_assign_clause_form(
    const ClauseForm& f, const Valuation& v);

// CNF: one or-gate per clause, one and-gate output (dual for DNF). Var gates
// are created in ascending variable order and named after the variables.
Circuit clause_form_to_circuit(const ClauseForm& f);

}  // namespace kcomp

#endif
