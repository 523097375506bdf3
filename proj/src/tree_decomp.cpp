#include "kcomp/tree_decomp.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <queue>
#include <set>
#include <sstream>
#include <tuple>

namespace kcomp {

int TreeDecomp::width() const {
  std::size_t m = 0;
  for (const Bag& b : bags) m = std::max(m, b.vertices.size());
  return static_cast<int>(m) - 1;
}

bool TreeDecomp::is_path() const {
  for (const Bag& b : bags)
    if (b.children.size() > 1) return false;
  return true;
}

int TreeDecomp::add_bag(std::vector<int> vertices, int parent) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()),
                 vertices.end());
  int id = n_bags();
  bags.push_back(Bag{std::move(vertices), parent, {}});
  if (parent >= 0) bags[parent].children.push_back(id);
  return id;
}

void TreeDecomp::check_tree() const {
  if (bags.empty()) throw InputError("decomposition has no bags");
  if (root < 0 || root >= n_bags()) throw InputError("invalid root bag");
  if (bags[root].parent != -1) throw InputError("root bag has a parent");
  int reached = 0;
  std::vector<int> stack{root};
  std::vector<char> seen(n_bags(), 0);
  seen[root] = 1;
  while (!stack.empty()) {
    int b = stack.back();
    stack.pop_back();
    ++reached;
    for (int c : bags[b].children) {
      if (c < 0 || c >= n_bags() || bags[c].parent != b || seen[c])
        throw InputError("inconsistent bag tree links");
      seen[c] = 1;
      stack.push_back(c);
    }
  }
  if (reached != n_bags()) throw InputError("bag tree is disconnected");
}

void TreeDecomp::reroot(int new_root) {
  check_tree();
  if (new_root == root) return;
  // flip parent pointers along the path from new_root up to the old root
  std::vector<int> path;
  for (int b = new_root; b != -1; b = bags[b].parent) path.push_back(b);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    int child = path[i], parent = path[i + 1];
    auto& pc = bags[parent].children;
    pc.erase(std::find(pc.begin(), pc.end(), child));
    bags[child].children.push_back(parent);
    bags[parent].parent = child;
  }
  bags[new_root].parent = -1;
  root = new_root;
}

DecompCheck validate_decomposition(const Hypergraph& h, const TreeDecomp& t) {
  t.check_tree();
  DecompCheck r;
  for (const TreeDecomp::Bag& b : t.bags)
    for (int v : b.vertices)
      if (!h.has_vertex(v)) {
        r.violation = "bag uses unknown vertex " + std::to_string(v);
        return r;
      }

  // occurrence: map each vertex to the bags containing it, then scan edges
  std::map<int, std::vector<int>> bags_of;
  for (int bi = 0; bi < t.n_bags(); ++bi)
    for (int v : t.bags[bi].vertices) bags_of[v].push_back(bi);

  for (const auto& e : h.edges) {
    bool covered = false;
    auto it = bags_of.find(e[0]);
    if (it != bags_of.end())
      for (int bi : it->second)
        if (std::includes(t.bags[bi].vertices.begin(),
                          t.bags[bi].vertices.end(), e.begin(), e.end())) {
          covered = true;
          break;
        }
    if (!covered) {
      std::string edge;
      for (int v : e) edge += (edge.empty() ? "" : ",") + std::to_string(v);
      r.violation = "edge {" + edge + "} not contained in any bag";
      return r;
    }
  }

  // connectedness: for each vertex, its bags induce a connected subtree
  for (const auto& [v, vbags] : bags_of) {
    std::set<int> members(vbags.begin(), vbags.end());
    std::queue<int> q;
    std::set<int> seen;
    q.push(vbags[0]);
    seen.insert(vbags[0]);
    while (!q.empty()) {
      int b = q.front();
      q.pop();
      std::vector<int> adj = t.bags[b].children;
      if (t.bags[b].parent != -1) adj.push_back(t.bags[b].parent);
      for (int nb : adj)
        if (members.count(nb) && !seen.count(nb)) {
          seen.insert(nb);
          q.push(nb);
        }
    }
    if (seen.size() != members.size()) {
      r.violation = "vertex " + std::to_string(v) +
                    " occurs in a disconnected set of bags";
      return r;
    }
  }

  r.ok = true;
  r.width = t.width();
  return r;
}

TreeDecomp heuristic_tree_decomposition(const Hypergraph& h) {
  // fill graph: clique per hyperedge
  const std::vector<int>& verts = h.vertices;
  int n = static_cast<int>(verts.size());
  std::map<int, int> dense;
  for (int i = 0; i < n; ++i) dense[verts[i]] = i;

  std::vector<std::set<int>> adj(n);
  for (const auto& e : h.edges)
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j) {
        int a = dense[e[i]], b = dense[e[j]];
        adj[a].insert(b);
        adj[b].insert(a);
      }

  auto fill_count = [&](int v) {
    long f = 0;
    for (auto it = adj[v].begin(); it != adj[v].end(); ++it)
      for (auto jt = std::next(it); jt != adj[v].end(); ++jt)
        if (!adj[*it].count(*jt)) ++f;
    return f;
  };

  using Entry = std::tuple<long, int>;  // (fill, vertex): lexicographic
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  std::vector<long> fill(n);
  for (int v = 0; v < n; ++v) {
    fill[v] = fill_count(v);
    heap.emplace(fill[v], v);
  }

  std::vector<char> gone(n, 0);
  std::vector<int> position(n, -1);
  std::vector<std::vector<int>> elim_neighbors(n);
  std::vector<int> elim_order;
  elim_order.reserve(n);

  for (int step = 0; step < n; ++step) {
    int v = -1;
    while (!heap.empty()) {
      auto [f, u] = heap.top();
      heap.pop();
      if (!gone[u] && f == fill[u]) {
        v = u;
        break;
      }
    }
    if (v < 0) throw Error("min-fill: heap exhausted");

    gone[v] = 1;
    position[v] = step;
    elim_order.push_back(v);
    elim_neighbors[v].assign(adj[v].begin(), adj[v].end());

    // connect the neighborhood of v into a clique
    std::vector<int> nb(adj[v].begin(), adj[v].end());
    for (int u : nb) adj[u].erase(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        adj[nb[i]].insert(nb[j]);
        adj[nb[j]].insert(nb[i]);
      }

    // refresh fill counts of vertices whose neighborhood changed
    std::set<int> dirty(nb.begin(), nb.end());
    for (int u : nb)
      for (int w : adj[u]) dirty.insert(w);
    for (int u : dirty)
      if (!gone[u]) {
        fill[u] = fill_count(u);
        heap.emplace(fill[u], u);
      }
  }

  // bags in elimination order; parent = bag of the first-eliminated remaining
  // neighbor, or the final bag for vertices with none
  TreeDecomp t;
  t.bags.resize(n);
  t.root = n - 1;
  for (int step = 0; step < n; ++step) {
    int v = elim_order[step];
    std::vector<int> bag{verts[v]};
    for (int u : elim_neighbors[v]) bag.push_back(verts[u]);
    std::sort(bag.begin(), bag.end());
    t.bags[step].vertices = std::move(bag);

    int parent = -1;
    int best_pos = n;
    for (int u : elim_neighbors[v])
      if (position[u] < best_pos) {
        best_pos = position[u];
        parent = position[u];
      }
    if (step == n - 1) parent = -1;
    else if (parent < 0) parent = n - 1;
    t.bags[step].parent = parent;
    if (parent >= 0) t.bags[parent].children.push_back(step);
  }

  DecompCheck chk = validate_decomposition(h, t);
  if (!chk.ok)
    throw Error("min-fill produced an invalid decomposition: " +
                chk.violation);
  return t;
}

FriendlyCheck check_friendly(const TreeDecomp& t, int root_vertex) {
  FriendlyCheck r;
  t.check_tree();
  if (t.bags[t.root].vertices != std::vector<int>{root_vertex}) {
    r.violation = "root bag is not exactly {root vertex}";
    return r;
  }
  for (int bi = 0; bi < t.n_bags(); ++bi) {
    const auto& b = t.bags[bi];
    if (b.children.empty()) {
      if (b.vertices.size() > 1) {
        r.violation = "leaf bag " + std::to_string(bi) + " has size > 1";
        return r;
      }
    } else if (b.children.size() == 2) {
      std::vector<int> uni;
      const auto& l = t.bags[b.children[0]].vertices;
      const auto& rr = t.bags[b.children[1]].vertices;
      std::set_union(l.begin(), l.end(), rr.begin(), rr.end(),
                     std::back_inserter(uni));
      if (!std::includes(uni.begin(), uni.end(), b.vertices.begin(),
                         b.vertices.end())) {
        r.violation = "internal bag " + std::to_string(bi) +
                      " not covered by its children";
        return r;
      }
    } else {
      r.violation = "bag " + std::to_string(bi) + " has " +
                    std::to_string(b.children.size()) + " children";
      return r;
    }
  }
  r.ok = true;
  return r;
}

FriendlyDecomp make_friendly(const TreeDecomp& input, int root_vertex) {
  TreeDecomp t = input;
  t.check_tree();

  // root bag {v} above the lowest-id bag containing v (else the current root)
  int target = -1;
  for (int bi = 0; bi < t.n_bags(); ++bi)
    if (std::binary_search(t.bags[bi].vertices.begin(),
                           t.bags[bi].vertices.end(), root_vertex)) {
      target = bi;
      break;
    }
  if (target < 0) target = t.root;
  t.reroot(target);
  int new_root = t.n_bags();
  t.bags.push_back(
      TreeDecomp::Bag{std::vector<int>{root_vertex}, -1, {target}});
  t.bags[target].parent = new_root;
  t.root = new_root;

  // binarize: a bag with more than two children delegates the extras to a
  // chain of copies of itself
  for (int bi = 0; bi < t.n_bags(); ++bi) {
    while (t.bags[bi].children.size() > 2) {
      std::vector<int> kids = t.bags[bi].children;
      int keep = kids[0];
      std::vector<int> rest(kids.begin() + 1, kids.end());
      int copy = t.n_bags();
      t.bags.push_back(TreeDecomp::Bag{t.bags[bi].vertices, bi, rest});
      for (int c : rest) t.bags[c].parent = copy;
      t.bags[bi].children = {keep, copy};
    }
  }

  // leaf bags of size > 1 become introduction chains ending in singletons
  int original_bags = t.n_bags();
  for (int bi = 0; bi < original_bags; ++bi) {
    if (!t.bags[bi].children.empty() || t.bags[bi].vertices.size() <= 1)
      continue;
    std::vector<int> vs = t.bags[bi].vertices;
    int cur = bi;
    while (vs.size() > 1) {
      int last = vs.back();
      vs.pop_back();
      int chain = t.add_bag(vs, cur);
      t.add_bag({last}, cur);
      cur = chain;
    }
  }

  // internal bags must be covered by their children: introduce the missing
  // vertices along a chain, each with a singleton leaf child
  original_bags = t.n_bags();
  for (int bi = 0; bi < original_bags; ++bi) {
    if (t.bags[bi].children.empty()) continue;
    std::vector<int> child_union;
    for (int c : t.bags[bi].children)
      child_union.insert(child_union.end(), t.bags[c].vertices.begin(),
                         t.bags[c].vertices.end());
    std::sort(child_union.begin(), child_union.end());
    std::vector<int> missing;
    for (int v : t.bags[bi].vertices)
      if (!std::binary_search(child_union.begin(), child_union.end(), v))
        missing.push_back(v);
    if (missing.empty()) continue;

    std::vector<int> orig_children = t.bags[bi].children;
    t.bags[bi].children.clear();
    std::vector<int> label = t.bags[bi].vertices;
    int cur = bi;
    for (int v : missing) {
      label.erase(std::find(label.begin(), label.end(), v));
      int next_chain = t.add_bag(label, cur);
      t.add_bag({v}, cur);
      cur = next_chain;
    }
    t.bags[cur].children = orig_children;
    for (int c : orig_children) t.bags[c].parent = cur;
  }

  // make the tree full: empty second children for unary internal bags
  original_bags = t.n_bags();
  for (int bi = 0; bi < original_bags; ++bi)
    if (t.bags[bi].children.size() == 1) t.add_bag({}, bi);

  FriendlyCheck chk = check_friendly(t, root_vertex);
  if (!chk.ok)
    throw Error("make_friendly produced an invalid result: " + chk.violation);

  FriendlyDecomp out;
  out.tree = std::move(t);
  out.root_vertex = root_vertex;
  for (int bi = 0; bi < out.tree.n_bags(); ++bi) {
    const auto& b = out.tree.bags[bi];
    if (b.children.empty() && b.vertices.size() == 1) {
      int v = b.vertices[0];
      if (!out.singleton_leaf.count(v)) out.singleton_leaf[v] = bi;
    }
  }
  return out;
}

namespace {

struct DenseGraph {
  int n = 0;
  std::vector<std::uint32_t> adj;  // bitmask adjacency
};

DenseGraph primal_dense(const Hypergraph& h, int cap, const char* what) {
  int n = static_cast<int>(h.vertices.size());
  if (n > cap)
    throw CapacityError(std::string(what) + ": " + std::to_string(n) +
                        " vertices exceed cap " + std::to_string(cap));
  std::map<int, int> dense;
  for (int i = 0; i < n; ++i) dense[h.vertices[i]] = i;
  DenseGraph g;
  g.n = n;
  g.adj.assign(n, 0);
  for (const auto& e : h.edges)
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j) {
        int a = dense.at(e[i]), b = dense.at(e[j]);
        g.adj[a] |= std::uint32_t{1} << b;
        g.adj[b] |= std::uint32_t{1} << a;
      }
  return g;
}

}  // namespace

int exact_treewidth(const Hypergraph& h, int cap) {
  DenseGraph g = primal_dense(h, cap, "exact_treewidth");
  int n = g.n;
  if (n == 0) return -1;
  std::uint32_t full = (n == 32) ? ~0u : ((std::uint32_t{1} << n) - 1);

  // f[S] = best max elimination clique size when eliminating S first
  std::vector<int> f(std::size_t{1} << n, 0);
  for (std::uint32_t S = 1; S <= full; ++S) {
    int best = n + 1;
    for (std::uint32_t rem = S; rem;) {
      int v = std::countr_zero(rem);
      rem &= rem - 1;
      std::uint32_t W = S & ~(std::uint32_t{1} << v);
      // neighbors of v after eliminating W: BFS through W
      std::uint32_t reach = std::uint32_t{1} << v;
      std::uint32_t frontier = reach;
      std::uint32_t result = 0;
      while (frontier) {
        std::uint32_t next = 0;
        while (frontier) {
          int u = std::countr_zero(frontier);
          frontier &= frontier - 1;
          next |= g.adj[u] & ~reach;
        }
        result |= next & ~W;
        frontier = next & W & ~reach;
        reach |= next;
      }
      result &= ~(std::uint32_t{1} << v);
      int q = std::popcount(result);
      best = std::min(best, std::max(f[W], q));
    }
    f[S] = best;
  }
  return f[full];
}

int exact_pathwidth(const Hypergraph& h, int cap) {
  DenseGraph g = primal_dense(h, cap, "exact_pathwidth");
  int n = g.n;
  if (n == 0) return -1;
  std::uint32_t full = (n == 32) ? ~0u : ((std::uint32_t{1} << n) - 1);

  // vertex separation: boundary of the placed prefix set
  std::vector<int> f(std::size_t{1} << n, 0);
  for (std::uint32_t S = 1; S <= full; ++S) {
    int bnd = 0;
    for (std::uint32_t rem = S; rem;) {
      int v = std::countr_zero(rem);
      rem &= rem - 1;
      if (g.adj[v] & ~S) ++bnd;
    }
    int best = n + 1;
    for (std::uint32_t rem = S; rem;) {
      int v = std::countr_zero(rem);
      rem &= rem - 1;
      best = std::min(best, f[S & ~(std::uint32_t{1} << v)]);
    }
    f[S] = std::max(bnd, best);
  }
  return f[full];
}

TreeDecomp parse_pace_td(std::istream& in) {
  std::string line;
  int n_bags = -1;
  std::vector<std::vector<int>> bag_content;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c") continue;
    if (tok == "s") {
      std::string td;
      int max_bag, n_vertices;
      if (!(ls >> td >> n_bags >> max_bag >> n_vertices) || td != "td")
        throw ParseError("malformed PACE header");
      bag_content.assign(n_bags, {});
      continue;
    }
    if (tok == "b") {
      int id;
      if (!(ls >> id) || n_bags < 0 || id < 1 || id > n_bags)
        throw ParseError("malformed PACE bag line");
      int v;
      while (ls >> v) bag_content[id - 1].push_back(v);
      continue;
    }
    int a, b;
    try {
      a = std::stoi(tok);
    } catch (const std::exception&) {
      throw ParseError("unexpected PACE line: " + line);
    }
    if (!(ls >> b)) throw ParseError("malformed PACE edge line");
    edges.emplace_back(a - 1, b - 1);
  }
  if (n_bags <= 0) throw ParseError("PACE file without header");

  TreeDecomp t;
  t.bags.resize(n_bags);
  for (int i = 0; i < n_bags; ++i) {
    std::sort(bag_content[i].begin(), bag_content[i].end());
    bag_content[i].erase(
        std::unique(bag_content[i].begin(), bag_content[i].end()),
        bag_content[i].end());
    t.bags[i].vertices = bag_content[i];
  }
  // root at bag 1: BFS orientation
  std::vector<std::vector<int>> adj(n_bags);
  for (auto [a, b] : edges) {
    if (a < 0 || a >= n_bags || b < 0 || b >= n_bags)
      throw ParseError("PACE edge names unknown bag");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  t.root = 0;
  std::vector<char> seen(n_bags, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 0;
  while (!q.empty()) {
    int b = q.front();
    q.pop();
    ++reached;
    for (int nb : adj[b])
      if (!seen[nb]) {
        seen[nb] = 1;
        t.bags[nb].parent = b;
        t.bags[b].children.push_back(nb);
        q.push(nb);
      }
  }
  if (reached != n_bags) throw ParseError("PACE decomposition is disconnected");
  return t;
}

std::string to_pace_td(const TreeDecomp& t, int n_vertices) {
  std::ostringstream out;
  out << "s td " << t.n_bags() << ' ' << t.width() + 1 << ' ' << n_vertices
      << '\n';
  for (int bi = 0; bi < t.n_bags(); ++bi) {
    out << "b " << bi + 1;
    for (int v : t.bags[bi].vertices) out << ' ' << v;
    out << '\n';
  }
  for (int bi = 0; bi < t.n_bags(); ++bi)
    if (t.bags[bi].parent != -1)
      out << t.bags[bi].parent + 1 << ' ' << bi + 1 << '\n';
  return out.str();
}

}  // namespace kcomp
