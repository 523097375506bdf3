#include <algorithm>
#include <random>
#include <sstream>

#include "doctest.h"
#include "kcomp/generators.hpp"
#include "kcomp/hypergraph.hpp"
#include "kcomp/splitwidth.hpp"
#include "kcomp/tree_decomp.hpp"
#include "kcomp/vtree.hpp"

using namespace kcomp;

namespace {

Hypergraph scov_graph(int n) {
  std::vector<int> verts;
  std::vector<std::vector<int>> edges;
  for (int i = 1; i <= n; ++i) {
    verts.push_back(2 * i - 1);
    verts.push_back(2 * i);
    edges.push_back({2 * i - 1, 2 * i});
  }
  return Hypergraph::make(verts, edges);
}

Hypergraph triangle() {
  return Hypergraph::make({1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}});
}

VTree random_vtree(const std::vector<int>& vars, std::mt19937_64& rng) {
  VTree t;
  auto build = [&](auto&& self, std::vector<int> vs) -> int {
    if (vs.size() == 1) return t.add_leaf(vs[0]);
    std::shuffle(vs.begin(), vs.end(), rng);
    std::size_t cut = 1 + rng() % (vs.size() - 1);
    std::vector<int> l(vs.begin(), vs.begin() + cut);
    std::vector<int> r(vs.begin() + cut, vs.end());
    return t.add_internal(self(self, l), self(self, r));
  };
  t.set_root(build(build, vars));
  t.validate();
  return t;
}

}  // namespace

TEST_CASE("validate_decomposition") {
  Hypergraph h = scov_graph(2);

  TreeDecomp good;
  good.add_bag({1, 2}, -1);
  good.add_bag({3, 4}, 0);
  DecompCheck ok = validate_decomposition(h, good);
  CHECK(ok.ok);
  CHECK(ok.width == 1);

  TreeDecomp split_edge;
  split_edge.add_bag({1}, -1);
  split_edge.add_bag({2, 3, 4}, 0);
  DecompCheck bad1 = validate_decomposition(h, split_edge);
  CHECK(!bad1.ok);
  CHECK(bad1.violation.find("edge") != std::string::npos);

  TreeDecomp disconnected;
  disconnected.add_bag({1, 2}, -1);
  disconnected.add_bag({3, 4}, 0);
  disconnected.add_bag({1, 2, 3}, 1);  // vertex 1 in bags 0 and 2 only
  DecompCheck bad2 = validate_decomposition(h, disconnected);
  CHECK(!bad2.ok);
  CHECK(bad2.violation.find("disconnected") != std::string::npos);
}

TEST_CASE("heuristic_tree_decomposition") {
  for (int n : {1, 2, 3, 6}) {
    Hypergraph h = scov_graph(n);
    TreeDecomp t = heuristic_tree_decomposition(h);
    CHECK(validate_decomposition(h, t).ok);
    CHECK(t.width() == 1);
  }

  TreeDecomp tri = heuristic_tree_decomposition(triangle());
  CHECK(validate_decomposition(triangle(), tri).ok);
  CHECK(tri.width() == 2);

  Hypergraph single = Hypergraph::make({5}, {{5}});
  TreeDecomp ts = heuristic_tree_decomposition(single);
  CHECK(validate_decomposition(single, ts).ok);
  CHECK(ts.width() == 0);
}

TEST_CASE("heuristic decomposition on random hypergraphs") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    Hypergraph h = random_hypergraph(seed, 10, 3, 12);
    TreeDecomp t = heuristic_tree_decomposition(h);
    DecompCheck chk = validate_decomposition(h, t);
    CHECK(chk.ok);
    // heuristic width is an upper bound on the exact treewidth
    CHECK(chk.width >= exact_treewidth(h));
  }
}

TEST_CASE("make_friendly satisfies the four conditions") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Hypergraph h = random_hypergraph(seed + 1000, 9, 3, 10);
    TreeDecomp t = heuristic_tree_decomposition(h);
    int v = h.vertices[seed % h.vertices.size()];
    FriendlyDecomp f = make_friendly(t, v);
    CHECK(check_friendly(f.tree, v).ok);
    CHECK(validate_decomposition(h, f.tree).ok);
    CHECK(f.tree.width() == t.width());
    // every vertex has a singleton leaf
    for (int u : h.vertices) CHECK(f.singleton_leaf.count(u) == 1);
    // responsible leaves really are singleton bags
    for (auto [u, leaf] : f.singleton_leaf) {
      CHECK(f.tree.bags[leaf].children.empty());
      CHECK(f.tree.bags[leaf].vertices == std::vector<int>{u});
    }
  }
}

TEST_CASE("make_friendly is stable on friendly input") {
  Hypergraph h = scov_graph(2);
  TreeDecomp t = heuristic_tree_decomposition(h);
  FriendlyDecomp f1 = make_friendly(t, 1);
  FriendlyDecomp f2 = make_friendly(f1.tree, 1);
  CHECK(check_friendly(f2.tree, 1).ok);
  CHECK(f2.tree.width() == f1.tree.width());
}

TEST_CASE("split_profile_order") {
  Hypergraph h = scov_graph(2);
  SplitProfile interleaved = split_profile_order({1, 2, 3, 4}, h);
  CHECK(interleaved.max_size == 1);

  SplitProfile blocked = split_profile_order({1, 3, 2, 4}, h);
  CHECK(blocked.max_size == 2);

  Hypergraph single = Hypergraph::make({7}, {{7}});
  SplitProfile sp = split_profile_order({7}, single);
  CHECK(sp.max_size == 0);
  CHECK(sp.split_sets.back().empty());
}

TEST_CASE("split_profile_vtree") {
  Hypergraph h = scov_graph(2);
  VTree rl = VTree::right_linear({1, 2, 3, 4});
  CHECK(split_profile_vtree(rl, h).max_size == 1);

  // balanced v-tree separating {1,3} from {2,4}
  VTree bal;
  int l = bal.add_internal(bal.add_leaf(1), bal.add_leaf(3));
  int r = bal.add_internal(bal.add_leaf(2), bal.add_leaf(4));
  bal.set_root(bal.add_internal(l, r));
  bal.validate();
  CHECK(split_profile_vtree(bal, h).max_size == 2);

  Hypergraph pair = Hypergraph::make({1, 2}, {{1, 2}});
  VTree two;
  two.set_root(two.add_internal(two.add_leaf(1), two.add_leaf(2)));
  CHECK(split_profile_vtree(two, pair).max_size == 1);
}

TEST_CASE("exact splitwidth") {
  PathSplitResult p3 = exact_pathsplitwidth(scov_graph(3));
  CHECK(p3.value == 1);
  CHECK(split_profile_order(p3.order, scov_graph(3)).max_size == 1);

  PathSplitResult tri = exact_pathsplitwidth(triangle());
  CHECK(tri.value == 2);

  Hypergraph single = Hypergraph::make({7}, {{7}});
  CHECK(exact_pathsplitwidth(single).value == 0);
  CHECK(exact_treesplitwidth(single).value == 0);

  TreeSplitResult t3 = exact_treesplitwidth(scov_graph(3));
  CHECK(t3.value == 1);
  CHECK(split_profile_vtree(t3.vtree, scov_graph(3)).max_size == 1);

  Hypergraph big = random_hypergraph(1, 20, 3, 12);
  if (static_cast<int>(big.vertices.size()) > 12)
    CHECK_THROWS_AS(exact_pathsplitwidth(big), CapacityError);
}

TEST_CASE("treesplitwidth versus pathsplitwidth") {
  // tsw maxes over all v-tree nodes including leaves, so it is not dominated
  // by psw; each leaf cut is covered by the two adjacent prefix splits of a
  // right-linear tree, giving tsw <= 2 * psw.
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Hypergraph h = random_hypergraph(seed + 40, 8, 3, 9);
    int psw = exact_pathsplitwidth(h).value;
    int tsw = exact_treesplitwidth(h).value;
    CHECK(tsw <= 2 * std::max(psw, 1));
    // internal v-tree nodes of the optimal order's right-linear tree realize
    // exactly the prefix cuts
    VTree rl = VTree::right_linear(exact_pathsplitwidth(h).order);
    SplitProfile prof = split_profile_vtree(rl, h);
    int internal_max = 0;
    for (int n = 0; n < rl.n_nodes(); ++n)
      if (!rl.is_leaf(n))
        internal_max =
            std::max(internal_max, static_cast<int>(prof.split_sets[n].size()));
    CHECK(internal_max <= psw);
  }
}

TEST_CASE("path_decomp_from_order bound") {
  Hypergraph h = scov_graph(2);
  TreeDecomp pd = path_decomp_from_order({1, 2, 3, 4}, h);
  CHECK(pd.is_path());
  CHECK(validate_decomposition(h, pd).ok);
  CHECK(pd.width() == 1);

  TreeDecomp tri = path_decomp_from_order({1, 2, 3}, triangle());
  CHECK(tri.width() <= 2 * 2);

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Hypergraph rh = random_hypergraph(seed + 500, 10, 3, 12);
    std::mt19937_64 rng(seed);
    for (int rep = 0; rep < 10; ++rep) {
      std::vector<int> order = rh.vertices;
      std::shuffle(order.begin(), order.end(), rng);
      int psw = split_profile_order(order, rh).max_size;
      TreeDecomp pd2 = path_decomp_from_order(order, rh);
      CHECK(validate_decomposition(rh, pd2).ok);
      CHECK(pd2.width() <= rh.arity() * std::max(psw, 1));
    }
  }
}

TEST_CASE("tree_decomp_from_vtree bound") {
  Hypergraph h = scov_graph(2);
  VTree bal;
  int l = bal.add_internal(bal.add_leaf(1), bal.add_leaf(3));
  int r = bal.add_internal(bal.add_leaf(2), bal.add_leaf(4));
  bal.set_root(bal.add_internal(l, r));
  TreeDecomp td = tree_decomp_from_vtree(bal, h);
  CHECK(validate_decomposition(h, td).ok);
  CHECK(td.width() <= 3 * 2 * 2);

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Hypergraph rh = random_hypergraph(seed + 900, 10, 3, 12);
    std::mt19937_64 rng(seed);
    VTree vt = random_vtree(rh.vertices, rng);
    int tsw = split_profile_vtree(vt, rh).max_size;
    TreeDecomp td2 = tree_decomp_from_vtree(vt, rh);
    CHECK(validate_decomposition(rh, td2).ok);
    CHECK(td2.width() <= 3 * rh.arity() * std::max(tsw, 1));
  }
}

TEST_CASE("exact treewidth and pathwidth") {
  CHECK(exact_treewidth(triangle()) == 2);
  CHECK(exact_pathwidth(triangle()) == 2);
  CHECK(exact_treewidth(scov_graph(4)) == 1);
  CHECK(exact_pathwidth(scov_graph(4)) == 1);

  // a path graph has pathwidth 1
  Hypergraph path = Hypergraph::make({1, 2, 3, 4, 5},
                                     {{1, 2}, {2, 3}, {3, 4}, {4, 5}});
  CHECK(exact_treewidth(path) == 1);
  CHECK(exact_pathwidth(path) == 1);

  // a 7-node complete binary tree is a caterpillar: both widths are 1
  Hypergraph tree = Hypergraph::make(
      {1, 2, 3, 4, 5, 6, 7}, {{1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 6}, {3, 7}});
  CHECK(exact_treewidth(tree) == 1);
  CHECK(exact_pathwidth(tree) == 1);

  Hypergraph c5 =
      Hypergraph::make({1, 2, 3, 4, 5}, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
  CHECK(exact_treewidth(c5) == 2);
  CHECK(exact_pathwidth(c5) == 2);

  Hypergraph k4 = Hypergraph::make(
      {1, 2, 3, 4}, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(exact_treewidth(k4) == 3);
  CHECK(exact_pathwidth(k4) == 3);

  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Hypergraph h = random_hypergraph(seed + 77, 9, 3, 10);
    int tw = exact_treewidth(h);
    int pw = exact_pathwidth(h);
    CHECK(tw <= pw);
    // the split width lemmas connect the exact measures
    CHECK(pw <= h.arity() * std::max(exact_pathsplitwidth(h).value, 1));
    CHECK(tw <= 3 * h.arity() * std::max(exact_treesplitwidth(h).value, 1));
  }
}

TEST_CASE("PACE round trip") {
  Hypergraph h = triangle();
  TreeDecomp t = heuristic_tree_decomposition(h);
  std::string text = to_pace_td(t, 3);
  std::istringstream in(text);
  TreeDecomp back = parse_pace_td(in);
  CHECK(back.n_bags() == t.n_bags());
  CHECK(validate_decomposition(h, back).ok);
  CHECK(back.width() == t.width());
  CHECK(back.root == 0);

  CHECK_THROWS_AS(
      [] {
        std::istringstream bad("b 1 2 3\n");
        parse_pace_td(bad);
      }(),
      ParseError);
}

TEST_CASE("vtree basics and reduction") {
  VTree t1;
  int a = t1.add_leaf(1), b = t1.add_leaf(2);
  int c = t1.add_leaf(3), d = t1.add_leaf(4);
  int l = t1.add_internal(a, b), r = t1.add_internal(c, d);
  t1.set_root(t1.add_internal(l, r));
  t1.validate();
  CHECK(vtree_is_reduction(t1, t1));

  // contracting an unlabeled leaf keeps the reduction property
  VTree ext;
  int xl = ext.add_leaf(1);
  int ul = ext.add_leaf(-1);
  int lo = ext.add_internal(xl, ul);
  int x2 = ext.add_leaf(2);
  ext.set_root(ext.add_internal(lo, x2));
  ext.validate();
  CHECK(ext.extended());
  VTree contracted;
  contracted.set_root(contracted.add_internal(contracted.add_leaf(1),
                                              contracted.add_leaf(2)));
  CHECK(vtree_is_reduction(contracted, ext));

  // separating variables the original keeps together is not a reduction
  VTree crossed;
  int ca = crossed.add_leaf(1), cc = crossed.add_leaf(3);
  int cb = crossed.add_leaf(2), cd = crossed.add_leaf(4);
  int cl = crossed.add_internal(ca, cc), cr = crossed.add_internal(cb, cd);
  crossed.set_root(crossed.add_internal(cl, cr));
  CHECK(!vtree_is_reduction(crossed, t1));

  // right-linear order round trip
  VTree rl = VTree::right_linear({5, 3, 8});
  CHECK(rl.is_right_linear());
  CHECK(rl.right_linear_order() == std::vector<int>{5, 3, 8});

  std::istringstream io(rl.to_text());
  VTree parsed = VTree::parse(io);
  CHECK(parsed.right_linear_order() == std::vector<int>{5, 3, 8});
}

TEST_CASE("cut detection") {
  CHECK(order_cut_index({1, 3, 2, 4}, {1, 3}, {2, 4}) == 3);
  CHECK(!order_cut_index({1, 2, 3, 4}, {1, 3}, {2, 4}).has_value());

  VTree bal;
  int l = bal.add_internal(bal.add_leaf(1), bal.add_leaf(3));
  int r = bal.add_internal(bal.add_leaf(2), bal.add_leaf(4));
  bal.set_root(bal.add_internal(l, r));
  auto node = vtree_cut_node(bal, {1, 3}, {2, 4});
  REQUIRE(node.has_value());
  CHECK(*node == l);
  CHECK(!vtree_cut_node(bal, {1, 2}, {3, 4}).has_value());
}
