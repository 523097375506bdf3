#include "kcomp/transform.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "kcomp/checks.hpp"

namespace kcomp {

namespace {

// scratch gate kinds during reduction; True/False are explicit constants
enum class WKind : std::uint8_t { Var, Not, And, Or, True, False };

struct Scratch {
  std::vector<WKind> kind;
  std::vector<int> var;
  std::vector<int> rho;
  std::vector<std::vector<int>> inputs;
  std::vector<char> alive;
  int output = -1;

  // mutable v-tree mirror
  struct VNode {
    int parent = -1, left = -1, right = -1, var = -1;
    bool alive = true;
  };
  std::vector<VNode> vnodes;
  int vroot = -1;

  int n() const { return static_cast<int>(kind.size()); }
};

Scratch load(const NnfCircuit& d) {
  Scratch s;
  int n = d.n_gates();
  s.kind.resize(n);
  s.var.resize(n);
  s.rho.resize(n);
  s.inputs.resize(n);
  s.alive.assign(n, 1);
  for (int id = 0; id < n; ++id) {
    const NnfGate& g = d.gate(id);
    switch (g.kind) {
      case NnfKind::Var: s.kind[id] = WKind::Var; break;
      case NnfKind::Not: s.kind[id] = WKind::Not; break;
      case NnfKind::And: s.kind[id] = WKind::And; break;
      case NnfKind::Or: s.kind[id] = WKind::Or; break;
    }
    s.var[id] = g.var;
    s.rho[id] = d.rho(id);
    s.inputs[id] = g.inputs;
  }
  s.output = d.output();
  const VTree& t = d.vtree();
  s.vnodes.resize(t.n_nodes());
  for (int m = 0; m < t.n_nodes(); ++m) {
    s.vnodes[m].parent = t.node(m).parent;
    s.vnodes[m].left = t.node(m).left;
    s.vnodes[m].right = t.node(m).right;
    s.vnodes[m].var = t.node(m).var;
  }
  s.vroot = t.root();
  return s;
}

void drop_unreachable(Scratch& s) {
  std::vector<char> seen(s.n(), 0);
  std::vector<int> stack{s.output};
  seen[s.output] = 1;
  while (!stack.empty()) {
    int g = stack.back();
    stack.pop_back();
    for (int in : s.inputs[g])
      if (!seen[in]) {
        seen[in] = 1;
        stack.push_back(in);
      }
  }
  for (int g = 0; g < s.n(); ++g)
    if (!seen[g]) s.alive[g] = 0;
}

// merge and-gates with identical (rho, input set); rewires or-gate inputs
void dedup_ands(Scratch& s) {
  std::map<std::pair<int, std::vector<int>>, int> seen;
  std::vector<int> remap(s.n());
  for (int g = 0; g < s.n(); ++g) remap[g] = g;
  for (int g = 0; g < s.n(); ++g) {
    if (!s.alive[g] || s.kind[g] != WKind::And) continue;
    std::vector<int> key_inputs = s.inputs[g];
    std::sort(key_inputs.begin(), key_inputs.end());
    auto key = std::make_pair(s.rho[g], std::move(key_inputs));
    auto [it, inserted] = seen.emplace(std::move(key), g);
    if (!inserted) {
      remap[g] = it->second;
      s.alive[g] = 0;
    }
  }
  for (int g = 0; g < s.n(); ++g) {
    if (!s.alive[g] || s.kind[g] != WKind::Or) continue;
    for (int& in : s.inputs[g]) in = remap[in];
    std::sort(s.inputs[g].begin(), s.inputs[g].end());
    s.inputs[g].erase(std::unique(s.inputs[g].begin(), s.inputs[g].end()),
                      s.inputs[g].end());
  }
}

// applies the two constant-elimination rules until convergence; returns the
// constant when the output collapses
std::optional<bool> propagate_constants(Scratch& s) {
  std::vector<std::vector<int>> fanout(s.n());
  for (int g = 0; g < s.n(); ++g)
    if (s.alive[g])
      for (int in : s.inputs[g]) fanout[in].push_back(g);

  std::queue<int> work;
  for (int g = 0; g < s.n(); ++g) {
    if (!s.alive[g]) continue;
    if (s.kind[g] == WKind::And && s.inputs[g].empty()) {
      s.kind[g] = WKind::True;
      work.push(g);
    } else if (s.kind[g] == WKind::Or && s.inputs[g].empty()) {
      s.kind[g] = WKind::False;
      work.push(g);
    } else if (s.kind[g] == WKind::True || s.kind[g] == WKind::False) {
      work.push(g);
    }
  }

  auto make_constant = [&](int g, bool value) {
    s.kind[g] = value ? WKind::True : WKind::False;
    s.inputs[g].clear();
    work.push(g);
  };

  while (!work.empty()) {
    int g = work.front();
    work.pop();
    if (!s.alive[g]) continue;
    bool value = s.kind[g] == WKind::True;
    if (g == s.output) return value;
    for (int f : fanout[g]) {
      if (!s.alive[f]) continue;
      if (s.kind[f] == WKind::And) {
        if (value) {
          auto& ins = s.inputs[f];
          ins.erase(std::remove(ins.begin(), ins.end(), g), ins.end());
          if (ins.empty()) make_constant(f, true);
        } else {
          make_constant(f, false);
        }
      } else if (s.kind[f] == WKind::Or) {
        if (!value) {
          auto& ins = s.inputs[f];
          ins.erase(std::remove(ins.begin(), ins.end(), g), ins.end());
          if (ins.empty()) make_constant(f, false);
        } else {
          make_constant(f, true);
        }
      }
      // True/False fanouts were already rewritten; nothing feeds literals
    }
    s.alive[g] = 0;
  }
  return std::nullopt;
}

std::variant<NnfCircuit, Constant> rebuild(Scratch& s, bool deterministic) {
  drop_unreachable(s);

  // surviving v-tree: compact alive nodes
  std::vector<int> vmap(s.vnodes.size(), -1);
  VTree t;
  // emit in a bottom-up order over alive nodes
  {
    std::vector<int> order;
    std::vector<std::pair<int, bool>> stack{{s.vroot, false}};
    while (!stack.empty()) {
      auto [m, expanded] = stack.back();
      stack.pop_back();
      if (s.vnodes[m].left < 0) {
        order.push_back(m);
        continue;
      }
      if (expanded) {
        order.push_back(m);
        continue;
      }
      stack.push_back({m, true});
      stack.push_back({s.vnodes[m].left, false});
      stack.push_back({s.vnodes[m].right, false});
    }
    for (int m : order) {
      if (s.vnodes[m].left < 0) {
        vmap[m] = t.add_leaf(s.vnodes[m].var);
      } else {
        vmap[m] = t.add_internal(vmap[s.vnodes[m].left],
                                 vmap[s.vnodes[m].right]);
      }
    }
    t.set_root(vmap[s.vroot]);
  }

  NnfCircuit out;
  std::vector<int> gmap(s.n(), -1);
  std::vector<int> rho;
  std::vector<int> vars;
  for (int g = 0; g < s.n(); ++g) {
    if (!s.alive[g]) continue;
    int id = -1;
    switch (s.kind[g]) {
      case WKind::Var:
        id = out.add_var(s.var[g]);
        vars.push_back(s.var[g]);
        break;
      case WKind::Not: id = out.add_not(s.var[g]); break;
      case WKind::And:
      case WKind::Or: {
        std::vector<int> ins;
        ins.reserve(s.inputs[g].size());
        for (int in : s.inputs[g]) ins.push_back(gmap[in]);
        std::sort(ins.begin(), ins.end());
        ins.erase(std::unique(ins.begin(), ins.end()), ins.end());
        id = s.kind[g] == WKind::And ? out.add_and(std::move(ins))
                                     : out.add_or(std::move(ins));
        break;
      }
      case WKind::True: id = out.add_and({}); break;
      case WKind::False: id = out.add_or({}); break;
    }
    gmap[g] = id;
    rho.push_back(vmap[s.rho[g]]);
  }
  out.set_output(gmap[s.output]);
  out.set_vars(t.all_vars());
  out.set_structure(std::move(t), std::move(rho));
  out.flags.decomposable = true;
  out.flags.structured = true;
  out.flags.complete = true;
  out.flags.deterministic = deterministic;
  return out;
}

std::variant<NnfCircuit, Constant> reduce_scratch(Scratch s,
                                                  bool deterministic) {
  drop_unreachable(s);
  dedup_ands(s);
  if (auto c = propagate_constants(s)) return Constant{*c};
  drop_unreachable(s);
  dedup_ands(s);

  // per-node gate lists
  int nv = static_cast<int>(s.vnodes.size());
  std::vector<std::vector<int>> ors_at(nv);
  for (int g = 0; g < s.n(); ++g)
    if (s.alive[g] && s.kind[g] == WKind::Or) ors_at[s.rho[g]].push_back(g);

  // eliminate unlabeled leaves bottom-up
  std::queue<int> leaves;
  for (int m = 0; m < nv; ++m)
    if (s.vnodes[m].left < 0 && s.vnodes[m].var < 0) leaves.push(m);

  while (!leaves.empty()) {
    int l = leaves.front();
    leaves.pop();
    if (!s.vnodes[l].alive) continue;
    int n = s.vnodes[l].parent;
    if (n < 0) {
      // the whole tree is one unlabeled leaf: the function is constant and
      // propagate_constants must already have reported it
      throw Error("reduce: root collapsed to an unlabeled leaf");
    }
    int sib = s.vnodes[n].left == l ? s.vnodes[n].right : s.vnodes[n].left;

    for (int g : ors_at[l])
      if (s.alive[g]) throw Error("reduce: live gate at an unlabeled leaf");

    // the or-gates formerly structured at sib are spliced out first
    std::vector<int> old_sib = ors_at[sib];

    std::vector<int> moved;
    for (int g : ors_at[n]) {
      if (!s.alive[g]) continue;
      std::set<int> ig;
      for (int a : s.inputs[g]) {  // and-gates at n
        if (!s.alive[a]) continue;
        for (int b : s.inputs[a]) {  // or-gates (or literals) at sib
          if (!s.alive[b]) continue;
          if (s.kind[b] == WKind::Or) {
            for (int c : s.inputs[b])
              if (s.alive[c]) ig.insert(c);
          } else {
            ig.insert(b);  // literal at a labeled-leaf sibling
          }
        }
        s.alive[a] = 0;  // the and-gate at n disappears
      }
      s.inputs[g].assign(ig.begin(), ig.end());
      s.rho[g] = sib;
      moved.push_back(g);
    }
    for (int g : old_sib)
      if (s.alive[g] && s.kind[g] == WKind::Or) s.alive[g] = 0;
    ors_at[sib] = std::move(moved);
    ors_at[n].clear();
    ors_at[l].clear();

    // contract the v-tree: sib takes n's place
    int p = s.vnodes[n].parent;
    s.vnodes[sib].parent = p;
    if (p >= 0) {
      if (s.vnodes[p].left == n) s.vnodes[p].left = sib;
      else s.vnodes[p].right = sib;
    } else {
      s.vroot = sib;
    }
    s.vnodes[n].alive = false;
    s.vnodes[l].alive = false;
    if (s.vnodes[sib].left < 0 && s.vnodes[sib].var < 0) leaves.push(sib);
  }

  return rebuild(s, deterministic);
}

}  // namespace

std::variant<NnfCircuit, Constant> reduce_extended(const NnfCircuit& d) {
  std::string violation = nnf_structured_complete_violation(d);
  if (!violation.empty())
    throw ContractError("reduce_extended: input is not an extended complete "
                        "structured circuit: " +
                        violation);
  return reduce_scratch(load(d), d.flags.deterministic);
}

std::variant<NnfCircuit, Constant> condition_sdnnf(const NnfCircuit& d,
                                                   const Valuation& v) {
  std::string violation = nnf_structured_complete_violation(d);
  if (!violation.empty())
    throw ContractError("condition_sdnnf: input is not complete structured: " +
                        violation);
  for (int x : v.domain())
    if (!std::binary_search(d.vars().begin(), d.vars().end(), x))
      throw InputError("condition: variable not in the circuit");

  Scratch s = load(d);
  // relabel assigned leaves unlabeled, replace literal gates by constants
  for (auto& vn : s.vnodes)
    if (vn.left < 0 && vn.var >= 0 && v.contains(vn.var)) vn.var = -1;
  for (int g = 0; g < s.n(); ++g) {
    if (s.kind[g] == WKind::Var && v.contains(s.var[g]))
      s.kind[g] = v.value(s.var[g]) ? WKind::True : WKind::False;
    else if (s.kind[g] == WKind::Not && v.contains(s.var[g]))
      s.kind[g] = v.value(s.var[g]) ? WKind::False : WKind::True;
  }
  return reduce_scratch(std::move(s), d.flags.deterministic);
}

Nbdd condition_nobdd(const Nbdd& d, const Valuation& v) {
  for (int x : v.domain())
    if (!std::binary_search(d.vars().begin(), d.vars().end(), x))
      throw InputError("condition: variable not in the diagram");

  Nbdd out;
  std::vector<int> map(d.n_nodes(), -1);
  map[Nbdd::kZero] = Nbdd::kZero;
  map[Nbdd::kOne] = Nbdd::kOne;
  for (int id = 2; id < d.n_nodes(); ++id) {
    const NbddNode& nd = d.node(id);
    if (nd.var >= 0) {
      if (v.contains(nd.var)) {
        map[id] = map[v.value(nd.var) ? nd.hi : nd.lo];
      } else {
        map[id] = out.add_decision(nd.var, map[nd.lo], map[nd.hi]);
      }
    } else {
      std::vector<int> cs;
      for (int c : nd.children) cs.push_back(map[c]);
      std::sort(cs.begin(), cs.end());
      cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
      map[id] = out.add_or(std::move(cs));
    }
  }
  out.set_root(map[d.root()]);

  std::vector<int> rest;
  for (int x : d.vars())
    if (!v.contains(x)) rest.push_back(x);
  out.set_vars(rest);
  if (d.order()) {
    std::vector<int> order;
    for (int x : *d.order())
      if (!v.contains(x)) order.push_back(x);
    out.set_order(std::move(order));
  }
  out.flags = d.flags;
  return out;
}

namespace {

// don't-care chain testing `chain` (ordered) above `target`
int dont_care_chain(Nbdd& out, const std::vector<int>& chain, int target,
                    std::map<std::pair<std::vector<int>, int>, int>& memo) {
  if (chain.empty()) return target;
  auto key = std::make_pair(chain, target);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  int cur = target;
  for (auto rit = chain.rbegin(); rit != chain.rend(); ++rit)
    cur = out.add_decision(*rit, cur, cur);
  memo.emplace(std::move(key), cur);
  return cur;
}

}  // namespace

namespace {

// completion for ordered diagrams: fill position gaps along every edge
Nbdd complete_ordered(const Nbdd& d, const std::vector<int>& order) {
  int n = static_cast<int>(order.size());
  std::map<int, int> pos;
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  Nbdd out;
  std::map<std::pair<std::vector<int>, int>, int> memo;
  std::vector<int> map(d.n_nodes(), -1);
  std::vector<int> first(d.n_nodes(), n);  // first tested position below
  map[Nbdd::kZero] = Nbdd::kZero;
  map[Nbdd::kOne] = Nbdd::kOne;

  auto fill = [&](int from_pos, int to_node) {
    // tests positions (from_pos, first[to_node]) exclusive
    std::vector<int> chain;
    for (int p = from_pos + 1; p < first[to_node]; ++p)
      chain.push_back(order[p]);
    return dont_care_chain(out, chain, map[to_node], memo);
  };

  for (int id = 2; id < d.n_nodes(); ++id) {
    const NbddNode& nd = d.node(id);
    if (nd.var >= 0) {
      int p = pos.at(nd.var);
      map[id] = out.add_decision(nd.var, fill(p, nd.lo), fill(p, nd.hi));
      first[id] = p;
    } else {
      // align all children to the smallest first position
      int m = n;
      for (int c : nd.children) m = std::min(m, first[c]);
      std::vector<int> cs;
      for (int c : nd.children) {
        std::vector<int> chain;
        for (int p = m; p < first[c]; ++p) chain.push_back(order[p]);
        cs.push_back(dont_care_chain(out, chain, map[c], memo));
      }
      map[id] = out.add_or(std::move(cs));
      first[id] = m;
    }
  }
  {
    std::vector<int> chain;
    for (int p = 0; p < first[d.root()]; ++p) chain.push_back(order[p]);
    out.set_root(dont_care_chain(out, chain, map[d.root()], memo));
  }
  out.set_vars(d.vars());
  out.set_order(order);
  out.flags = d.flags;
  out.flags.complete = true;
  return out;
}

}  // namespace

Nbdd complete_nbdd(const Nbdd& d) {
  if (!nbdd_is_free(d))
    throw ContractError("complete_nbdd expects a free diagram");
  if (d.order()) return complete_ordered(d, *d.order());

  // tested[u]: variables tested on some path from u down to a sink; freeness
  // makes the per-edge insertion sets well defined
  std::vector<std::set<int>> tested(d.n_nodes());
  for (int id = 2; id < d.n_nodes(); ++id) {
    const NbddNode& nd = d.node(id);
    if (nd.var >= 0) {
      tested[id] = tested[nd.lo];
      tested[id].insert(tested[nd.hi].begin(), tested[nd.hi].end());
      tested[id].insert(nd.var);
    } else {
      for (int c : nd.children)
        tested[id].insert(tested[c].begin(), tested[c].end());
    }
  }

  const std::vector<int>& global = d.vars();
  auto chain_between = [&](const std::set<int>& have_below,
                           const std::set<int>& child_below, int own_var) {
    std::vector<int> chain;
    for (int x : global) {
      if (!have_below.count(x)) continue;
      if (x == own_var) continue;
      if (!child_below.count(x)) chain.push_back(x);
    }
    return chain;
  };

  Nbdd out;
  std::map<std::pair<std::vector<int>, int>, int> memo;
  std::vector<int> map(d.n_nodes(), -1);
  map[Nbdd::kZero] = Nbdd::kZero;
  map[Nbdd::kOne] = Nbdd::kOne;
  for (int id = 2; id < d.n_nodes(); ++id) {
    const NbddNode& nd = d.node(id);
    if (nd.var >= 0) {
      int lo =
          dont_care_chain(out, chain_between(tested[id], tested[nd.lo], nd.var),
                          map[nd.lo], memo);
      int hi =
          dont_care_chain(out, chain_between(tested[id], tested[nd.hi], nd.var),
                          map[nd.hi], memo);
      map[id] = out.add_decision(nd.var, lo, hi);
    } else {
      std::vector<int> cs;
      for (int c : nd.children)
        cs.push_back(dont_care_chain(
            out, chain_between(tested[id], tested[c], -1), map[c], memo));
      map[id] = out.add_or(std::move(cs));
    }
  }

  // top chain: variables never tested below the root
  std::vector<int> top;
  for (int x : global)
    if (!tested[d.root()].count(x)) top.push_back(x);
  out.set_root(dont_care_chain(out, top, map[d.root()], memo));

  out.set_vars(d.vars());
  out.flags = d.flags;
  out.flags.complete = true;
  return out;
}

NnfCircuit complete_dnnf(const NnfCircuit& d) {
  if (!nnf_is_decomposable(d))
    throw ContractError("complete_dnnf expects a decomposable circuit");

  std::vector<std::vector<int>> vars = d.gate_vars();
  NnfCircuit out;
  // shared (x or not-x) block per variable
  std::map<int, int> free_block;
  for (int x : d.vars()) {
    int pos = out.add_var(x);
    int neg = out.add_not(x);
    free_block[x] = out.add_or({pos, neg});
  }

  std::vector<int> map(d.n_gates(), -1);
  auto smooth = [&](int mapped, const std::vector<int>& have,
                    const std::vector<int>& want) {
    int cur = mapped;
    for (int x : want) {
      if (std::binary_search(have.begin(), have.end(), x)) continue;
      cur = out.add_and({cur, free_block[x]});
    }
    return cur;
  };

  for (int id = 0; id < d.n_gates(); ++id) {
    const NnfGate& g = d.gate(id);
    switch (g.kind) {
      case NnfKind::Var: map[id] = out.add_var(g.var); break;
      case NnfKind::Not: map[id] = out.add_not(g.var); break;
      case NnfKind::And: {
        std::vector<int> ins;
        for (int in : g.inputs) ins.push_back(map[in]);
        map[id] = out.add_and(std::move(ins));
        break;
      }
      case NnfKind::Or: {
        std::vector<int> ins;
        for (int in : g.inputs)
          ins.push_back(smooth(map[in], vars[in], vars[id]));
        map[id] = out.add_or(std::move(ins));
        break;
      }
    }
  }
  int top = smooth(map[d.output()], vars[d.output()], d.vars());
  if (d.gate(d.output()).kind != NnfKind::Or || top != map[d.output()]) {
    // keep the output an or-gate so downstream passes treat it uniformly
    top = out.add_or({top});
  }
  out.set_output(top);
  out.set_vars(d.vars());
  out.flags.decomposable = true;
  out.flags.deterministic = d.flags.deterministic;
  out.flags.complete = true;
  return out;
}

namespace {

NnfCircuit bdd_rewrite(const Nbdd& d) {
  NnfCircuit out;
  std::map<int, std::pair<int, int>> literal;  // var -> (pos gate, neg gate)
  for (int x : d.vars()) {
    int pos = out.add_var(x);
    int neg = out.add_not(x);
    literal[x] = {pos, neg};
  }
  int const_true = out.add_and({});
  int const_false = out.add_or({});

  std::vector<int> map(d.n_nodes(), -1);
  map[Nbdd::kZero] = const_false;
  map[Nbdd::kOne] = const_true;

  for (int id = 2; id < d.n_nodes(); ++id) {
    const NbddNode& nd = d.node(id);
    if (nd.var >= 0) {
      int hi_and = out.add_and({literal[nd.var].first, map[nd.hi]});
      int lo_and = out.add_and({literal[nd.var].second, map[nd.lo]});
      map[id] = out.add_or({hi_and, lo_and});
    } else {
      std::vector<int> cs;
      for (int c : nd.children) cs.push_back(map[c]);
      map[id] = out.add_or(std::move(cs));
    }
  }
  int root = map[d.root()];
  if (out.gate(root).kind != NnfKind::Or) root = out.add_or({root});
  out.set_output(root);
  out.set_vars(d.vars());
  out.flags.decomposable = true;
  out.flags.deterministic = d.flags.unambiguous || d.flags.free_diagram;
  return out;
}

}  // namespace

NnfCircuit nfbdd_to_dnnf(const Nbdd& d) {
  if (!nbdd_is_free(d))
    throw ContractError("nfbdd_to_dnnf expects a free diagram");
  return bdd_rewrite(d);
}

NnfCircuit nobdd_to_sdnnf(const Nbdd& d) {
  if (!d.order())
    throw ContractError("nobdd_to_sdnnf expects an ordered diagram");
  if (!nbdd_is_ordered(d, *d.order()))
    throw ContractError("nobdd_to_sdnnf: diagram violates its witness order");

  NnfCircuit out = bdd_rewrite(d);
  if (d.vars().empty()) return out;  // no v-tree over an empty variable set

  // right-linear v-tree over the witness order; the and-gates introduced for
  // a decision node on x are structured at the spine node whose right leaf
  // is x
  std::vector<int> full_order = *d.order();
  for (int x : d.vars())
    if (std::find(full_order.begin(), full_order.end(), x) ==
        full_order.end())
      full_order.push_back(x);
  VTree t = VTree::right_linear(full_order);

  std::map<int, int> spine_of;
  {
    int n = t.root();
    while (!t.is_leaf(n)) {
      int rl = t.node(n).right;
      if (t.node(rl).var >= 0) spine_of[t.node(rl).var] = n;
      n = t.node(n).left;
    }
    if (t.node(n).var >= 0) spine_of[t.node(n).var] = n;
  }
  std::map<int, int> pos;
  for (std::size_t i = 0; i < full_order.size(); ++i)
    pos[full_order[i]] = static_cast<int>(i);

  std::vector<std::vector<int>> gate_vars = out.gate_vars();
  std::vector<int> rho(out.n_gates(), -1);
  for (int id = 0; id < out.n_gates(); ++id) {
    const NnfGate& g = out.gate(id);
    if (g.kind != NnfKind::And) continue;
    int first = INT32_MAX;
    for (int x : gate_vars[id]) first = std::min(first, pos.at(x));
    rho[id] = first == INT32_MAX ? t.root() : spine_of.at(full_order[first]);
  }
  out.set_structure(std::move(t), std::move(rho));
  out.flags.structured = true;
  return out;
}

}  // namespace kcomp
