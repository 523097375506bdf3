#include "kcomp/reason.hpp"

#include <algorithm>
#include <map>

namespace kcomp {

namespace {

void require(bool cond, const char* what) {
  if (!cond) throw ContractError(what);
}

template <typename T>
std::vector<T> nnf_bottom_up(const NnfCircuit& d, T var_val, T not_val,
                             T and_unit, T or_unit) {
  // generic product/sum pass; T is BigInt or double
  std::vector<T> val(d.n_gates());
  for (int id = 0; id < d.n_gates(); ++id) {
    const NnfGate& g = d.gate(id);
    switch (g.kind) {
      case NnfKind::Var: val[id] = var_val; break;
      case NnfKind::Not: val[id] = not_val; break;
      case NnfKind::And: {
        T acc = and_unit;
        for (int in : g.inputs) acc *= val[in];
        val[id] = acc;
        break;
      }
      case NnfKind::Or: {
        T acc = or_unit;
        for (int in : g.inputs) acc += val[in];
        val[id] = acc;
        break;
      }
    }
  }
  return val;
}

}  // namespace

BigInt count_models(const NnfCircuit& d) {
  require(d.flags.decomposable, "count_models needs the decomposable flag");
  require(d.flags.deterministic, "count_models needs the deterministic flag");
  require(d.flags.complete, "count_models needs the complete flag");
  std::vector<BigInt> val =
      nnf_bottom_up<BigInt>(d, BigInt(1), BigInt(1), BigInt(1), BigInt(0));
  return val[d.output()];
}

BigInt count_models(const Nbdd& d) {
  require(d.flags.unambiguous, "count_models needs the unambiguous flag");
  require(d.flags.complete, "count_models needs the complete flag");
  std::vector<BigInt> cnt(d.n_nodes(), 0);
  cnt[Nbdd::kOne] = 1;
  for (int id = 2; id < d.n_nodes(); ++id) {
    const NbddNode& nd = d.node(id);
    if (nd.var >= 0) {
      cnt[id] = cnt[nd.lo] + cnt[nd.hi];
    } else {
      BigInt acc = 0;
      for (int c : nd.children) acc += cnt[c];
      cnt[id] = acc;
    }
  }
  return cnt[d.root()];
}

double wmc(const NnfCircuit& d, const ProbabilityAssignment& pi) {
  require(d.flags.decomposable, "wmc needs the decomposable flag");
  require(d.flags.deterministic, "wmc needs the deterministic flag");
  require(d.flags.complete, "wmc needs the complete flag");
  if (!pi.covers(d.vars()))
    throw InputError("probability assignment does not cover all variables");

  std::vector<double> val(d.n_gates());
  for (int id = 0; id < d.n_gates(); ++id) {
    const NnfGate& g = d.gate(id);
    switch (g.kind) {
      case NnfKind::Var: val[id] = pi.prob(g.var); break;
      case NnfKind::Not: val[id] = 1.0 - pi.prob(g.var); break;
      case NnfKind::And: {
        double acc = 1.0;
        for (int in : g.inputs) acc *= val[in];
        val[id] = acc;
        break;
      }
      case NnfKind::Or: {
        double acc = 0.0;
        for (int in : g.inputs) acc += val[in];
        val[id] = acc;
        break;
      }
    }
  }
  return val[d.output()];
}

double wmc(const Nbdd& d, const ProbabilityAssignment& pi) {
  require(d.flags.unambiguous, "wmc needs the unambiguous flag");
  require(d.flags.complete, "wmc needs the complete flag");
  if (!pi.covers(d.vars()))
    throw InputError("probability assignment does not cover all variables");

  std::vector<double> val(d.n_nodes(), 0.0);
  val[Nbdd::kOne] = 1.0;
  for (int id = 2; id < d.n_nodes(); ++id) {
    const NbddNode& nd = d.node(id);
    if (nd.var >= 0) {
      double p = pi.prob(nd.var);
      val[id] = (1.0 - p) * val[nd.lo] + p * val[nd.hi];
    } else {
      double acc = 0.0;
      for (int c : nd.children) acc += val[c];
      val[id] = acc;
    }
  }
  return val[d.root()];
}

namespace {

// Recursive model streams. Models are partial assignments over the variables
// below a gate; completeness makes them total at the output.
void nnf_models(const NnfCircuit& d, int gate,
                std::map<int, bool>& assignment,
                const std::function<void(std::map<int, bool>&)>& emit) {
  const NnfGate& g = d.gate(gate);
  switch (g.kind) {
    case NnfKind::Var:
      assignment[g.var] = true;
      emit(assignment);
      assignment.erase(g.var);
      break;
    case NnfKind::Not:
      assignment[g.var] = false;
      emit(assignment);
      assignment.erase(g.var);
      break;
    case NnfKind::Or: {
      // 0-branch before 1-branch: literal inputs sorted negation first,
      // other inputs by id
      std::vector<int> order = g.inputs;
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        const NnfGate& ga = d.gate(a);
        const NnfGate& gb = d.gate(b);
        bool la = ga.kind == NnfKind::Var || ga.kind == NnfKind::Not;
        bool lb = gb.kind == NnfKind::Var || gb.kind == NnfKind::Not;
        if (la && lb && ga.var == gb.var)
          return ga.kind == NnfKind::Not && gb.kind == NnfKind::Var;
        return a < b;
      });
      for (int in : order) nnf_models(d, in, assignment, emit);
      break;
    }
    case NnfKind::And: {
      // cross product over the (variable-disjoint) inputs
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == g.inputs.size()) {
          emit(assignment);
          return;
        }
        nnf_models(d, g.inputs[i], assignment,
                   [&](std::map<int, bool>&) { rec(i + 1); });
      };
      rec(0);
      break;
    }
  }
}

}  // namespace

void enumerate_models(const NnfCircuit& d,
                      const std::function<void(const Valuation&)>& sink) {
  require(d.flags.decomposable, "enumeration needs the decomposable flag");
  require(d.flags.deterministic, "enumeration needs the deterministic flag");
  require(d.flags.complete, "enumeration needs the complete flag");

  std::map<int, bool> assignment;
  nnf_models(d, d.output(), assignment, [&](std::map<int, bool>& a) {
    std::vector<int> domain;
    std::vector<bool> bits;
    for (const auto& [var, value] : a) {
      domain.push_back(var);
      bits.push_back(value);
    }
    sink(Valuation(std::move(domain), std::move(bits)));
  });
}

void enumerate_models(const Nbdd& d,
                      const std::function<void(const Valuation&)>& sink) {
  require(d.flags.unambiguous, "enumeration needs the unambiguous flag");
  require(d.flags.complete, "enumeration needs the complete flag");

  std::map<int, bool> assignment;
  std::function<void(int)> rec = [&](int node) {
    if (node == Nbdd::kZero) return;
    if (node == Nbdd::kOne) {
      std::vector<int> domain;
      std::vector<bool> bits;
      for (const auto& [var, value] : assignment) {
        domain.push_back(var);
        bits.push_back(value);
      }
      sink(Valuation(std::move(domain), std::move(bits)));
      return;
    }
    const NbddNode& nd = d.node(node);
    if (nd.var >= 0) {
      assignment[nd.var] = false;
      rec(nd.lo);
      assignment[nd.var] = true;
      rec(nd.hi);
      assignment.erase(nd.var);
    } else {
      for (int c : nd.children) rec(c);
    }
  };
  rec(d.root());
}

}  // namespace kcomp
