#include "kcomp/splitwidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>

namespace kcomp {

namespace {

void check_permutation(const std::vector<int>& order, const Hypergraph& h) {
  std::vector<int> a = order;
  std::sort(a.begin(), a.end());
  if (a != h.vertices)
    throw InputError("order must be a permutation of the hypergraph vertices");
}

}  // namespace

SplitProfile split_profile_order(const std::vector<int>& order,
                                 const Hypergraph& h) {
  check_permutation(order, h);
  int n = static_cast<int>(order.size());
  std::map<int, int> pos;
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  SplitProfile p;
  p.split_sets.assign(n, {});
  for (int ei = 0; ei < static_cast<int>(h.edges.size()); ++ei) {
    int lo = n, hi = -1;
    for (int v : h.edges[ei]) {
      lo = std::min(lo, pos[v]);
      hi = std::max(hi, pos[v]);
    }
    // split at prefixes of length lo+1 .. hi (1-based positions)
    for (int i = lo; i < hi; ++i) p.split_sets[i].push_back(ei);
  }
  for (auto& s : p.split_sets)
    p.max_size = std::max(p.max_size, static_cast<int>(s.size()));
  return p;
}

SplitProfile split_profile_vtree(const VTree& vt, const Hypergraph& h) {
  std::vector<int> leaf_vars = vt.all_vars();
  if (leaf_vars != h.vertices)
    throw InputError(
        "v-tree leaf labels must coincide with the hypergraph vertices");

  SplitProfile p;
  p.split_sets.assign(vt.n_nodes(), {});
  for (int n = 0; n < vt.n_nodes(); ++n) {
    std::vector<int> under = vt.leaves_under(n);
    for (int ei = 0; ei < static_cast<int>(h.edges.size()); ++ei) {
      bool inside = false, outside = false;
      for (int v : h.edges[ei]) {
        if (std::binary_search(under.begin(), under.end(), v)) inside = true;
        else outside = true;
      }
      if (inside && outside) p.split_sets[n].push_back(ei);
    }
    p.max_size =
        std::max(p.max_size, static_cast<int>(p.split_sets[n].size()));
  }
  return p;
}

namespace {

// edge masks over dense vertex indices
struct DenseEdges {
  int n = 0;
  std::vector<std::uint32_t> edges;
  std::vector<int> verts;
};

DenseEdges densify(const Hypergraph& h, int cap, const char* what) {
  int n = static_cast<int>(h.vertices.size());
  if (n > cap)
    throw CapacityError(std::string(what) + ": " + std::to_string(n) +
                        " vertices exceed cap " + std::to_string(cap));
  std::map<int, int> idx;
  for (int i = 0; i < n; ++i) idx[h.vertices[i]] = i;
  DenseEdges d;
  d.n = n;
  d.verts = h.vertices;
  for (const auto& e : h.edges) {
    std::uint32_t m = 0;
    for (int v : e) m |= std::uint32_t{1} << idx[v];
    d.edges.push_back(m);
  }
  return d;
}

// number of edges with a vertex inside S and a vertex outside S
int cut_size(const DenseEdges& d, std::uint32_t S) {
  int c = 0;
  for (std::uint32_t e : d.edges)
    if ((e & S) && (e & ~S)) ++c;
  return c;
}

}  // namespace

PathSplitResult exact_pathsplitwidth(const Hypergraph& h, int cap) {
  DenseEdges d = densify(h, cap, "exact_pathsplitwidth");
  int n = d.n;
  std::uint32_t full = (n == 32) ? ~0u : ((std::uint32_t{1} << n) - 1);

  std::vector<int> f(std::size_t{1} << n, 0);
  std::vector<signed char> pick(std::size_t{1} << n, -1);
  for (std::uint32_t S = 1; S <= full; ++S) {
    int cut = cut_size(d, S);
    int best = INT32_MAX;
    signed char best_v = -1;
    for (std::uint32_t rem = S; rem;) {
      int v = std::countr_zero(rem);
      rem &= rem - 1;
      int sub = f[S & ~(std::uint32_t{1} << v)];
      if (sub < best) {
        best = sub;
        best_v = static_cast<signed char>(v);
      }
    }
    f[S] = std::max(cut, best);
    pick[S] = best_v;
  }

  PathSplitResult r;
  r.value = f[full];
  std::uint32_t S = full;
  while (S) {
    int v = pick[S];
    r.order.push_back(d.verts[v]);
    S &= ~(std::uint32_t{1} << v);
  }
  std::reverse(r.order.begin(), r.order.end());
  return r;
}

TreeSplitResult exact_treesplitwidth(const Hypergraph& h, int cap) {
  DenseEdges d = densify(h, cap, "exact_treesplitwidth");
  int n = d.n;
  std::uint32_t full = (n == 32) ? ~0u : ((std::uint32_t{1} << n) - 1);

  // t[S]: best max split over any v-subtree with leaf set exactly S
  std::vector<int> t(std::size_t{1} << n, 0);
  std::vector<std::uint32_t> split_pick(std::size_t{1} << n, 0);
  std::vector<std::uint32_t> subsets_by_popcount;

  for (std::uint32_t S = 1; S <= full; ++S) {
    int cut = cut_size(d, S);
    if (std::popcount(S) == 1) {
      t[S] = cut;
      continue;
    }
    int best = INT32_MAX;
    std::uint32_t best_A = 0;
    // proper nonempty subsets of S; consider each unordered pair once by
    // fixing the lowest bit of S on the A side
    std::uint32_t low = S & (~S + 1);
    for (std::uint32_t A = (S - 1) & S; A; A = (A - 1) & S) {
      if (!(A & low)) continue;
      if (A == S) continue;
      int m = std::max(t[A], t[S & ~A]);
      if (m < best) {
        best = m;
        best_A = A;
      }
    }
    t[S] = std::max(cut, best);
    split_pick[S] = best_A;
  }

  TreeSplitResult r;
  r.value = t[full];

  // rebuild the witness v-tree
  VTree vt;
  auto build = [&](auto&& self, std::uint32_t S) -> int {
    if (std::popcount(S) == 1)
      return vt.add_leaf(d.verts[std::countr_zero(S)]);
    std::uint32_t A = split_pick[S];
    int l = self(self, A);
    int rgt = self(self, S & ~A);
    return vt.add_internal(l, rgt);
  };
  vt.set_root(build(build, full));
  vt.validate();
  r.vtree = std::move(vt);
  return r;
}

TreeDecomp path_decomp_from_order(const std::vector<int>& order,
                                  const Hypergraph& h) {
  check_permutation(order, h);
  SplitProfile p = split_profile_order(order, h);
  TreeDecomp t;
  int prev = -1;
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    std::vector<int> bag{order[i]};
    for (int ei : p.split_sets[i])
      bag.insert(bag.end(), h.edges[ei].begin(), h.edges[ei].end());
    prev = t.add_bag(std::move(bag), prev);
  }
  t.root = 0;
  DecompCheck chk = validate_decomposition(h, t);
  if (!chk.ok)
    throw Error("path_decomp_from_order produced an invalid decomposition: " +
                chk.violation);
  return t;
}

TreeDecomp tree_decomp_from_vtree(const VTree& vt, const Hypergraph& h) {
  SplitProfile p = split_profile_vtree(vt, h);
  TreeDecomp t;
  t.bags.resize(vt.n_nodes());
  for (int n = 0; n < vt.n_nodes(); ++n) {
    std::vector<int> bag;
    auto add_split = [&](int m) {
      for (int ei : p.split_sets[m])
        bag.insert(bag.end(), h.edges[ei].begin(), h.edges[ei].end());
    };
    if (vt.is_leaf(n)) {
      if (vt.node(n).var >= 0) bag.push_back(vt.node(n).var);
    } else {
      add_split(n);
      add_split(vt.node(n).left);
      add_split(vt.node(n).right);
    }
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    t.bags[n].vertices = std::move(bag);
    t.bags[n].parent = vt.node(n).parent;
  }
  for (int n = 0; n < vt.n_nodes(); ++n)
    if (!vt.is_leaf(n)) {
      t.bags[n].children = {vt.node(n).left, vt.node(n).right};
    }
  t.root = vt.root();
  DecompCheck chk = validate_decomposition(h, t);
  if (!chk.ok)
    throw Error("tree_decomp_from_vtree produced an invalid decomposition: " +
                chk.violation);
  return t;
}

}  // namespace kcomp
