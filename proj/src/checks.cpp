#include "kcomp/checks.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace kcomp {

bool nnf_is_decomposable(const NnfCircuit& d) {
  std::vector<std::vector<int>> vars = d.gate_vars();
  for (int id = 0; id < d.n_gates(); ++id) {
    const NnfGate& g = d.gate(id);
    if (g.kind != NnfKind::And) continue;
    if (g.inputs.size() > 2) return false;
    if (g.inputs.size() == 2) {
      const auto& a = vars[g.inputs[0]];
      const auto& b = vars[g.inputs[1]];
      std::size_t i = 0, j = 0;
      while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        a[i] < b[j] ? ++i : ++j;
      }
    }
  }
  return true;
}

bool nnf_is_structured(const NnfCircuit& d) {
  if (!d.has_structure()) return false;
  const VTree& t = d.vtree();
  std::vector<std::vector<int>> vars = d.gate_vars();
  std::vector<std::vector<int>> under(t.n_nodes());
  for (int n = 0; n < t.n_nodes(); ++n) under[n] = t.leaves_under(n);

  for (int id = 0; id < d.n_gates(); ++id) {
    const NnfGate& g = d.gate(id);
    if (g.kind != NnfKind::And) continue;
    int n = d.rho(id);
    if (n < 0 || n >= t.n_nodes()) return false;
    if (g.inputs.empty()) continue;
    if (g.inputs.size() > 2) return false;
    if (t.is_leaf(n)) return false;  // inputs need distinct children
    int l = t.node(n).left, r = t.node(n).right;
    auto fits = [&](int input, int child) {
      return std::includes(under[child].begin(), under[child].end(),
                           vars[input].begin(), vars[input].end());
    };
    if (g.inputs.size() == 1) {
      if (!fits(g.inputs[0], l) && !fits(g.inputs[0], r)) return false;
    } else {
      bool a = fits(g.inputs[0], l) && fits(g.inputs[1], r);
      bool b = fits(g.inputs[0], r) && fits(g.inputs[1], l);
      if (!a && !b) return false;
    }
  }
  return true;
}

std::string nnf_structured_complete_violation(const NnfCircuit& d) {
  if (!d.has_structure()) return "no v-tree attached";
  const VTree& t = d.vtree();

  // leaf of each labeled variable
  std::map<int, int> leaf_of;
  for (int n = 0; n < t.n_nodes(); ++n)
    if (t.is_labeled_leaf(n)) leaf_of[t.node(n).var] = n;

  if (d.gate(d.output()).kind != NnfKind::Or)
    return "output gate is not an or-gate";

  for (int id = 0; id < d.n_gates(); ++id) {
    const NnfGate& g = d.gate(id);
    int n = d.rho(id);
    if (n < 0 || n >= t.n_nodes())
      return "gate " + std::to_string(id) + " is not structured";
    switch (g.kind) {
      case NnfKind::Var:
      case NnfKind::Not: {
        auto it = leaf_of.find(g.var);
        if (it == leaf_of.end() || it->second != n)
          return "literal gate " + std::to_string(id) +
                 " not structured at its variable leaf";
        break;
      }
      case NnfKind::Or: {
        for (int in : g.inputs) {
          if (d.gate(in).kind == NnfKind::Or)
            return "or-gate " + std::to_string(id) + " has an or input";
          if (d.rho(in) != n)
            return "or-gate " + std::to_string(id) +
                   " input structured elsewhere";
        }
        break;
      }
      case NnfKind::And: {
        std::set<int> child_nodes;
        for (int in : g.inputs) {
          if (d.gate(in).kind != NnfKind::Or)
            return "and-gate " + std::to_string(id) + " has a non-or input";
          int cn = d.rho(in);
          if (t.is_leaf(n) || (cn != t.node(n).left && cn != t.node(n).right))
            return "and-gate " + std::to_string(id) +
                   " input not structured at a child node";
          if (!child_nodes.insert(cn).second)
            return "and-gate " + std::to_string(id) +
                   " has two inputs at the same child";
        }
        if (!t.is_leaf(n) && g.inputs.size() != 2)
          return "and-gate " + std::to_string(id) +
                 " at an internal node without exactly two inputs";
        if (t.is_leaf(n) && !g.inputs.empty())
          return "and-gate " + std::to_string(id) + " at a leaf has inputs";
        break;
      }
    }
  }
  return {};
}

bool nnf_is_complete_structured(const NnfCircuit& d) {
  return nnf_structured_complete_violation(d).empty();
}

bool nnf_is_complete_dnnf(const NnfCircuit& d) {
  if (!nnf_is_decomposable(d)) return false;
  // number of variables along any trace below each gate; -1 marks a gate with
  // inconsistent or-branches, -2 an unsatisfiable gate (no trace)
  std::vector<long> cnt(d.n_gates(), 0);
  for (int id = 0; id < d.n_gates(); ++id) {
    const NnfGate& g = d.gate(id);
    switch (g.kind) {
      case NnfKind::Var:
      case NnfKind::Not:
        cnt[id] = 1;
        break;
      case NnfKind::And: {
        bool unsat = false, inconsistent = false;
        long acc = 0;
        for (int in : g.inputs) {
          if (cnt[in] == -2) unsat = true;
          else if (cnt[in] == -1) inconsistent = true;
          else acc += cnt[in];
        }
        cnt[id] = unsat ? -2 : (inconsistent ? -1 : acc);
        break;
      }
      case NnfKind::Or: {
        long acc = -2;
        bool bad = false;
        for (int in : g.inputs) {
          if (cnt[in] < 0) {
            if (cnt[in] == -1) bad = true;
            continue;
          }
          if (acc == -2) acc = cnt[in];
          else if (acc != cnt[in]) bad = true;
        }
        cnt[id] = bad ? -1 : acc;
        break;
      }
    }
  }
  long at_output = cnt[d.output()];
  if (at_output == -2) return true;  // no trace at all: vacuously complete
  return at_output == static_cast<long>(d.vars().size());
}

bool nnf_is_deterministic(const NnfCircuit& d, int cap, Exec exec) {
  int n = static_cast<int>(d.vars().size());
  if (n > cap)
    throw CapacityError("determinism check needs " + std::to_string(n) +
                        " variables <= cap " + std::to_string(cap));

  constexpr std::uint64_t kPat[6] = {
      0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
      0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
  std::map<int, int> bitpos;
  for (int i = 0; i < n; ++i) bitpos[d.vars()[i]] = n - 1 - i;

  std::uint64_t total = std::uint64_t{1} << n;
  std::uint64_t nwords = (total + 63) / 64;
  std::uint64_t tail_mask =
      n < 6 ? (std::uint64_t{1} << total) - 1 : ~std::uint64_t{0};

  std::vector<int> gate_bit(d.n_gates(), -1);
  for (int id = 0; id < d.n_gates(); ++id)
    if (d.gate(id).kind == NnfKind::Var || d.gate(id).kind == NnfKind::Not)
      gate_bit[id] = bitpos.at(d.gate(id).var);

  auto block_ok = [&](std::uint64_t base, std::vector<std::uint64_t>& val) {
    std::uint64_t mask = (base == 0) ? tail_mask : ~std::uint64_t{0};
    for (int id = 0; id < d.n_gates(); ++id) {
      const NnfGate& g = d.gate(id);
      switch (g.kind) {
        case NnfKind::Var:
          val[id] = gate_bit[id] < 6 ? kPat[gate_bit[id]]
                                     : ((base >> gate_bit[id]) & 1 ? ~0ull : 0ull);
          break;
        case NnfKind::Not:
          val[id] = ~(gate_bit[id] < 6
                          ? kPat[gate_bit[id]]
                          : ((base >> gate_bit[id]) & 1 ? ~0ull : 0ull));
          break;
        case NnfKind::And: {
          std::uint64_t acc = ~0ull;
          for (int in : g.inputs) acc &= val[in];
          val[id] = acc;
          break;
        }
        case NnfKind::Or: {
          std::uint64_t acc = 0;
          for (int in : g.inputs) {
            if (acc & val[in] & mask) return false;  // two inputs true
            acc |= val[in];
          }
          val[id] = acc;
          break;
        }
      }
    }
    return true;
  };

  bool ok = true;
  if (exec == Exec::Parallel) {
#pragma omp parallel reduction(&& : ok)
    {
      std::vector<std::uint64_t> val(d.n_gates());
#pragma omp for schedule(static)
      for (long long w = 0; w < static_cast<long long>(nwords); ++w)
        ok = block_ok(static_cast<std::uint64_t>(w) * 64, val) && ok;
    }
  } else {
    std::vector<std::uint64_t> val(d.n_gates());
    for (std::uint64_t w = 0; w < nwords && ok; ++w)
      ok = block_ok(w * 64, val);
  }
  return ok;
}

bool nbdd_is_free(const Nbdd& d) {
  // below[u]: variables tested at or below u; a repeat happens when a node's
  // own variable already occurs below one of its successors
  std::vector<std::set<int>> below(d.n_nodes());
  for (int id = 2; id < d.n_nodes(); ++id) {
    const NbddNode& nd = d.node(id);
    if (nd.var >= 0) {
      if (below[nd.lo].count(nd.var) || below[nd.hi].count(nd.var))
        return false;
      below[id] = below[nd.lo];
      below[id].insert(below[nd.hi].begin(), below[nd.hi].end());
      below[id].insert(nd.var);
    } else {
      for (int c : nd.children)
        below[id].insert(below[c].begin(), below[c].end());
    }
  }
  return true;
}

bool nbdd_is_ordered(const Nbdd& d, const std::vector<int>& order) {
  std::map<int, int> pos;
  for (std::size_t i = 0; i < order.size(); ++i)
    pos[order[i]] = static_cast<int>(i);

  // smallest position of a decision variable reachable from each node
  std::vector<int> minpos(d.n_nodes(), INT32_MAX);
  for (int id = 2; id < d.n_nodes(); ++id) {
    const NbddNode& nd = d.node(id);
    if (nd.var >= 0) {
      auto it = pos.find(nd.var);
      if (it == pos.end()) return false;
      int own = it->second;
      if (std::min(minpos[nd.lo], minpos[nd.hi]) <= own) return false;
      minpos[id] = own;
    } else {
      int m = INT32_MAX;
      for (int c : nd.children) m = std::min(m, minpos[c]);
      minpos[id] = m;
    }
  }
  return true;
}

bool nbdd_is_complete(const Nbdd& d) {
  int n = static_cast<int>(d.vars().size());
  // depth[u]: number of variables tested on every path from u to a sink;
  // -1 marks inconsistency
  std::vector<int> depth(d.n_nodes(), 0);
  for (int id = 2; id < d.n_nodes(); ++id) {
    const NbddNode& nd = d.node(id);
    if (nd.var >= 0) {
      if (depth[nd.lo] < 0 || depth[nd.lo] != depth[nd.hi]) {
        depth[id] = -1;
      } else {
        depth[id] = depth[nd.lo] + 1;
      }
    } else {
      if (nd.children.empty()) {
        depth[id] = -1;  // an or-node with no children reaches no sink
        continue;
      }
      int m = depth[nd.children[0]];
      for (int c : nd.children)
        if (depth[c] < 0 || depth[c] != m) m = -1;
      depth[id] = m;
    }
  }
  if (!nbdd_is_free(d)) return false;
  return depth[d.root()] == n;
}

bool nbdd_is_unambiguous(const Nbdd& d, int cap, Exec exec) {
  int n = static_cast<int>(d.vars().size());
  if (n > cap)
    throw CapacityError("unambiguity check needs " + std::to_string(n) +
                        " variables <= cap " + std::to_string(cap));

  std::uint64_t total = std::uint64_t{1} << n;
  std::vector<int> shift_of(d.n_nodes(), -1);
  {
    std::map<int, int> pos;
    for (int i = 0; i < n; ++i) pos[d.vars()[i]] = n - 1 - i;
    for (int id = 2; id < d.n_nodes(); ++id)
      if (d.node(id).var >= 0) shift_of[id] = pos.at(d.node(id).var);
  }

  auto count_ok = [&](std::uint64_t idx, std::vector<std::uint32_t>& cnt) {
    // saturating count of accepting paths per node
    cnt[Nbdd::kZero] = 0;
    cnt[Nbdd::kOne] = 1;
    for (int id = 2; id < d.n_nodes(); ++id) {
      const NbddNode& nd = d.node(id);
      if (nd.var >= 0) {
        bool bit = (idx >> shift_of[id]) & 1;
        cnt[id] = cnt[bit ? nd.hi : nd.lo];
      } else {
        std::uint32_t acc = 0;
        for (int c : nd.children) acc = std::min<std::uint32_t>(2, acc + cnt[c]);
        cnt[id] = acc;
      }
    }
    return cnt[d.root()] <= 1;
  };

  bool ok = true;
  if (exec == Exec::Parallel) {
#pragma omp parallel reduction(&& : ok)
    {
      std::vector<std::uint32_t> cnt(d.n_nodes());
#pragma omp for schedule(static)
      for (long long idx = 0; idx < static_cast<long long>(total); ++idx)
        ok = count_ok(static_cast<std::uint64_t>(idx), cnt) && ok;
    }
  } else {
    std::vector<std::uint32_t> cnt(d.n_nodes());
    for (std::uint64_t idx = 0; idx < total && ok; ++idx)
      ok = count_ok(idx, cnt);
  }
  return ok;
}

NnfClassReport check_class(const NnfCircuit& d, const NnfClassRequest& req,
                           int cap) {
  NnfClassReport r;
  if (req.decomposable) r.decomposable = nnf_is_decomposable(d);
  if (req.structured) r.structured = nnf_is_structured(d);
  if (req.complete)
    r.complete = d.has_structure() ? nnf_is_complete_structured(d)
                                   : nnf_is_complete_dnnf(d);
  if (req.deterministic) r.deterministic = nnf_is_deterministic(d, cap);
  return r;
}

NbddClassReport check_class(const Nbdd& d, const NbddClassRequest& req,
                            int cap) {
  NbddClassReport r;
  if (req.free_diagram) r.free_diagram = nbdd_is_free(d);
  if (req.ordered) {
    if (d.order()) r.ordered = nbdd_is_ordered(d, *d.order());
    else r.ordered = false;
  }
  if (req.complete) r.complete = nbdd_is_complete(d);
  if (req.unambiguous) r.unambiguous = nbdd_is_unambiguous(d, cap);
  return r;
}

}  // namespace kcomp
