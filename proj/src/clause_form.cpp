#include "kcomp/clause_form.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>

#include "kcomp/circuit.hpp"

namespace kcomp {

namespace {

std::vector<std::vector<int>> canonicalize(
    std::vector<std::vector<int>> clauses) {
  for (auto& cl : clauses) {
    std::sort(cl.begin(), cl.end());
    cl.erase(std::unique(cl.begin(), cl.end()), cl.end());
    if (cl.empty()) throw InputError("clause form: empty clause");
  }
  std::sort(clauses.begin(), clauses.end());
  clauses.erase(std::unique(clauses.begin(), clauses.end()), clauses.end());
  if (clauses.empty())
    throw InputError("clause form: at least one non-empty clause required");
  return clauses;
}

}  // namespace

ClauseForm::ClauseForm(FormKind kind, std::vector<std::vector<int>> clauses)
    : ClauseForm(kind, {}, std::move(clauses)) {}

ClauseForm::ClauseForm(FormKind kind, std::vector<int> vars,
                       std::vector<std::vector<int>> clauses)
    : kind_(kind), clauses_(canonicalize(std::move(clauses))) {
  std::vector<int> used;
  for (const auto& cl : clauses_) used.insert(used.end(), cl.begin(), cl.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());

  if (vars.empty()) {
    vars_ = used;
  } else {
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    for (int v : used)
      if (!std::binary_search(vars.begin(), vars.end(), v))
        throw InputError("clause variable " + std::to_string(v) +
                         " not in declared variable set");
    vars_ = std::move(vars);
  }

  std::map<int, int> occ;
  for (const auto& cl : clauses_) {
    arity_ = std::max(arity_, static_cast<int>(cl.size()));
    for (int v : cl) ++occ[v];
  }
  for (const auto& [v, n] : occ) degree_ = std::max(degree_, n);
}

bool ClauseForm::is_minimized() const {
  for (std::size_t i = 0; i < clauses_.size(); ++i)
    for (std::size_t j = 0; j < clauses_.size(); ++j) {
      if (i == j) continue;
      if (std::includes(clauses_[j].begin(), clauses_[j].end(),
                        clauses_[i].begin(), clauses_[i].end()) &&
          clauses_[i].size() < clauses_[j].size())
        return false;
    }
  return true;
}

Hypergraph ClauseForm::hypergraph() const {
  return Hypergraph::make(vars_, clauses_);
}

bool ClauseForm::evaluate(const Valuation& v) const {
  for (const auto& cl : clauses_) {
    bool clause_true_var = false;
    bool clause_all_true = true;
    for (int x : cl) {
      bool b = v.value(x);
      clause_true_var |= b;
      clause_all_true &= b;
    }
    if (kind_ == FormKind::Cnf && !clause_true_var) return false;
    if (kind_ == FormKind::Dnf && clause_all_true) return true;
  }
  return kind_ == FormKind::Cnf;
}

ClauseForm ClauseForm::parse_dimacs(std::istream& in) {
  std::string line;
  bool have_header = false;
  FormKind kind = FormKind::Cnf;
  int n_vars = 0, n_clauses = 0;
  std::vector<std::vector<int>> clauses;
  std::vector<int> current;

  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c") continue;
    if (tok == "p") {
      std::string fmt;
      if (!(ls >> fmt >> n_vars >> n_clauses))
        throw ParseError("malformed DIMACS header");
      if (fmt == "cnf") kind = FormKind::Cnf;
      else if (fmt == "dnf") kind = FormKind::Dnf;
      else throw ParseError("unsupported DIMACS format '" + fmt + "'");
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("clause before DIMACS header");
    ls.clear();
    ls.seekg(0);
    long lit;
    while (ls >> lit) {
      if (lit == 0) {
        if (!current.empty()) {
          clauses.push_back(current);
          current.clear();
        }
      } else if (lit < 0) {
        throw ParseError("negative literal " + std::to_string(lit) +
                         ": only monotone forms are supported");
      } else {
        if (lit > n_vars)
          throw ParseError("literal " + std::to_string(lit) +
                           " exceeds declared variable count");
        current.push_back(static_cast<int>(lit));
      }
    }
  }
  if (!have_header) throw ParseError("missing DIMACS header");
  if (!current.empty()) clauses.push_back(current);
  if (static_cast<int>(clauses.size()) != n_clauses)
    throw ParseError("clause count does not match header");

  std::vector<int> vars(n_vars);
  for (int i = 0; i < n_vars; ++i) vars[i] = i + 1;
  return ClauseForm(kind, std::move(vars), std::move(clauses));
}

ClauseForm ClauseForm::parse_dimacs_text(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

std::string ClauseForm::to_dimacs(const std::string& comment) const {
  std::ostringstream out;
  if (!comment.empty()) out << "c " << comment << '\n';
  int max_var = vars_.empty() ? 0 : vars_.back();
  out << "p " << (kind_ == FormKind::Cnf ? "cnf" : "dnf") << ' ' << max_var
      << ' ' << clauses_.size() << '\n';
  for (const auto& cl : clauses_) {
    for (int v : cl) out << v << ' ';
    out << "0\n";
  }
  return out.str();
}

ClauseForm minimize_clause_form(const ClauseForm& f) {
  const auto& cls = f.clauses();
  std::vector<std::vector<int>> keep;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    bool subsumed = false;
    for (std::size_t j = 0; j < cls.size() && !subsumed; ++j) {
      if (i == j) continue;
      // drop clause i if some strictly smaller (or earlier equal) clause is
      // contained in it
      if (cls[j].size() < cls[i].size() &&
          std::includes(cls[i].begin(), cls[i].end(), cls[j].begin(),
                        cls[j].end()))
        subsumed = true;
    }
    if (!subsumed) keep.push_back(cls[i]);
  }
  return ClauseForm(f.kind(), f.vars(), std::move(keep));
}

std::variant<ClauseForm, Constant> partial_assign_clause_form(
    const ClauseForm& f, const Valuation& v) {
  for (int x : v.domain())
    if (!std::binary_search(f.vars().begin(), f.vars().end(), x))
      throw InputError("assignment variable " + std::to_string(x) +
                       " not in clause form");

  // For a CNF: a clause containing a variable set to 1 is satisfied and
  // dropped; variables set to 0 are deleted from the remaining clauses. A
  // clause shrinking to nothing makes the CNF constant 0. Dual for DNF.
  const bool satisfying = f.kind() == FormKind::Cnf;
  std::vector<std::vector<int>> residual;
  for (const auto& cl : f.clauses()) {
    std::vector<int> rest;
    bool dropped = false;
    for (int x : cl) {
      if (v.contains(x)) {
        if (v.value(x) == satisfying) {
          dropped = true;
          break;
        }
      } else {
        rest.push_back(x);
      }
    }
    if (dropped) continue;
    if (rest.empty()) return Constant{f.kind() == FormKind::Dnf};
    residual.push_back(std::move(rest));
  }
  if (residual.empty()) return Constant{f.kind() == FormKind::Cnf};

  std::vector<int> rest_vars;
  for (int x : f.vars())
    if (!v.contains(x)) rest_vars.push_back(x);
  return minimize_clause_form(
      ClauseForm(f.kind(), std::move(rest_vars), std::move(residual)));
}

Circuit clause_form_to_circuit(const ClauseForm& f) {
  Circuit c;
  std::map<int, int> var_gate;
  for (int v : f.vars()) var_gate[v] = c.add_var(std::to_string(v));

  GateKind clause_kind =
      f.kind() == FormKind::Cnf ? GateKind::Or : GateKind::And;
  GateKind top_kind = f.kind() == FormKind::Cnf ? GateKind::And : GateKind::Or;

  std::vector<int> clause_gates;
  for (const auto& cl : f.clauses()) {
    std::vector<int> ins;
    for (int v : cl) ins.push_back(var_gate[v]);
    clause_gates.push_back(c.add_gate(clause_kind, std::move(ins)));
  }
  c.set_output(c.add_gate(top_kind, std::move(clause_gates)));
  c.validate();
  return c;
}

}  // namespace kcomp
