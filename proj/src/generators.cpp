#include "kcomp/generators.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace kcomp {

Circuit random_circuit(std::uint64_t seed, int max_vars, int max_gates) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) {  // inclusive
    return lo + static_cast<int>(rng() % (hi - lo + 1));
  };

  Circuit c;
  int n_vars = pick(1, max_vars);
  for (int i = 0; i < n_vars; ++i) c.add_var();
  int extra = pick(1, std::max(1, max_gates - n_vars));
  for (int i = 0; i < extra; ++i) {
    int avail = c.n_gates();
    int kind_roll = pick(0, 9);
    if (kind_roll < 2) {
      c.add_gate(GateKind::Not, {pick(0, avail - 1)});
    } else {
      GateKind k = (kind_roll % 2 == 0) ? GateKind::And : GateKind::Or;
      int fanin = pick(0, 4);
      std::vector<int> ins;
      for (int j = 0; j < fanin; ++j) ins.push_back(pick(0, avail - 1));
      std::sort(ins.begin(), ins.end());
      ins.erase(std::unique(ins.begin(), ins.end()), ins.end());
      c.add_gate(k, std::move(ins));
    }
  }
  c.set_output(c.n_gates() - 1);
  c.validate();
  return c;
}

PathCircuit random_path_circuit(std::uint64_t seed, int n_gates, int window) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % (hi - lo + 1));
  };

  Circuit c;
  for (int i = 0; i < n_gates; ++i) {
    int lo = std::max(0, i - window);
    bool make_var = (i == 0) || pick(0, 2) == 0;
    if (make_var) {
      c.add_var();
      continue;
    }
    int roll = pick(0, 9);
    if (roll < 3) {
      c.add_gate(GateKind::Not, {pick(lo, i - 1)});
    } else {
      GateKind k = (roll % 2 == 0) ? GateKind::And : GateKind::Or;
      int fanin = pick(1, 2);
      std::set<int> ins;
      for (int j = 0; j < fanin; ++j) ins.insert(pick(lo, i - 1));
      c.add_gate(k, {ins.begin(), ins.end()});
    }
  }
  c.set_output(n_gates - 1);
  c.validate();

  TreeDecomp t;
  int prev = -1;
  for (int i = 0; i < n_gates; ++i) {
    std::vector<int> bag;
    for (int g = std::max(0, i - window); g <= i; ++g) bag.push_back(g);
    prev = t.add_bag(std::move(bag), prev);
  }
  t.root = 0;
  return PathCircuit{std::move(c), std::move(t)};
}

Hypergraph random_hypergraph(std::uint64_t seed, int max_vertices,
                             int max_arity, int max_edges) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % (hi - lo + 1));
  };

  int n = pick(2, max_vertices);
  std::vector<int> verts(n);
  for (int i = 0; i < n; ++i) verts[i] = i + 1;

  int m = pick(1, max_edges);
  std::set<std::vector<int>> edges;
  for (int e = 0; e < m; ++e) {
    int size = pick(1, std::min(max_arity, n));
    std::set<int> ed;
    while (static_cast<int>(ed.size()) < size) ed.insert(pick(1, n));
    edges.insert({ed.begin(), ed.end()});
  }
  return Hypergraph::make(std::move(verts), {edges.begin(), edges.end()});
}

ClauseForm random_monotone_form(std::uint64_t seed, FormKind kind, int n_vars,
                                int max_arity, int max_degree) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % (hi - lo + 1));
  };

  std::vector<int> occurrences(n_vars + 1, 0);
  std::set<std::vector<int>> clauses;
  int attempts = 0;
  int target = pick(1, std::max(1, n_vars));
  while (static_cast<int>(clauses.size()) < target && attempts < 200) {
    ++attempts;
    int size = pick(1, max_arity);
    std::set<int> cl;
    for (int tries = 0; static_cast<int>(cl.size()) < size && tries < 40;
         ++tries) {
      int v = pick(1, n_vars);
      if (occurrences[v] < max_degree) cl.insert(v);
    }
    if (cl.empty()) continue;
    std::vector<int> clause(cl.begin(), cl.end());
    if (clauses.count(clause)) continue;
    for (int v : clause) ++occurrences[v];
    clauses.insert(std::move(clause));
  }
  if (clauses.empty()) clauses.insert({1});

  std::vector<int> vars(n_vars);
  for (int i = 0; i < n_vars; ++i) vars[i] = i + 1;
  return minimize_clause_form(
      ClauseForm(kind, std::move(vars), {clauses.begin(), clauses.end()}));
}

PlantedSplitForm random_planted_split_form(std::uint64_t seed, FormKind kind,
                                           int max_arity, int max_degree) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % (hi - lo + 1));
  };

  // variables 1..n_x on the X side, n_x+1..n_x+n_y on the Y side
  int planted = pick(2, 6);
  int n_x = pick(planted, planted + 3);
  int n_y = pick(planted, planted + 3);
  std::vector<int> xs(n_x), ys(n_y);
  for (int i = 0; i < n_x; ++i) xs[i] = i + 1;
  for (int i = 0; i < n_y; ++i) ys[i] = n_x + i + 1;

  std::vector<int> occurrences(n_x + n_y + 1, 0);
  std::set<std::vector<int>> clauses;
  auto room = [&](int v) { return occurrences[v] < max_degree; };

  for (int i = 0; i < planted; ++i) {
    std::set<int> cl;
    std::vector<int> xr, yr;
    for (int v : xs)
      if (room(v)) xr.push_back(v);
    for (int v : ys)
      if (room(v)) yr.push_back(v);
    if (xr.empty() || yr.empty()) break;
    cl.insert(xr[pick(0, static_cast<int>(xr.size()) - 1)]);
    cl.insert(yr[pick(0, static_cast<int>(yr.size()) - 1)]);
    while (static_cast<int>(cl.size()) < max_arity && pick(0, 2) == 0) {
      int v = pick(1, n_x + n_y);
      if (room(v)) cl.insert(v);
    }
    std::vector<int> clause(cl.begin(), cl.end());
    if (clauses.count(clause)) continue;
    for (int v : clause) ++occurrences[v];
    clauses.insert(std::move(clause));
  }

  // a few side clauses entirely on one side
  int fillers = pick(0, 3);
  for (int i = 0; i < fillers; ++i) {
    const std::vector<int>& side = pick(0, 1) ? xs : ys;
    std::set<int> cl;
    int size = pick(1, max_arity);
    for (int tries = 0; static_cast<int>(cl.size()) < size && tries < 20;
         ++tries) {
      int v = side[pick(0, static_cast<int>(side.size()) - 1)];
      if (room(v)) cl.insert(v);
    }
    if (cl.empty()) continue;
    std::vector<int> clause(cl.begin(), cl.end());
    if (clauses.count(clause)) continue;
    for (int v : clause) ++occurrences[v];
    clauses.insert(std::move(clause));
  }

  std::vector<int> vars(n_x + n_y);
  for (int i = 0; i < n_x + n_y; ++i) vars[i] = i + 1;
  ClauseForm form = minimize_clause_form(
      ClauseForm(kind, std::move(vars), {clauses.begin(), clauses.end()}));

  PlantedSplitForm out{std::move(form), std::move(xs), std::move(ys), 0};
  for (const auto& cl : out.form.clauses()) {
    bool in_x = false, in_y = false;
    for (int v : cl) (v <= n_x ? in_x : in_y) = true;
    if (in_x && in_y) ++out.planted_clauses;
  }
  return out;
}

}  // namespace kcomp
