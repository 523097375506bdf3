#include "kcomp/obdd_build.hpp"

#include <algorithm>
#include <map>

namespace kcomp {

Nbdd build_canonical_obdd(const TruthTable& t, const std::vector<int>& order) {
  int n = t.n;
  if (static_cast<int>(order.size()) != n)
    throw InputError("canonical obdd: order size does not match the table");

  // Cofactors of prefix assignments are contiguous table slices (order[0] is
  // the most significant index bit). Layer i holds the distinct slices of
  // length 2^(n-i); nodes are built bottom-up, sinks first.
  Nbdd out;
  out.set_vars(order);
  out.set_order(order);

  auto slice_bit = [&](std::uint64_t start, std::uint64_t offset) {
    std::uint64_t idx = start + offset;
    return (t.words[idx >> 6] >> (idx & 63)) & 1;
  };

  // node ids per layer, indexed by slice start; layer n are the sinks
  std::map<std::uint64_t, int> below;  // slice start -> node id (layer i+1)
  below.clear();

  // layer n: single-entry slices are constants
  std::vector<int> node_of_prefix;  // for the current layer, by prefix index
  std::uint64_t total = std::uint64_t{1} << n;

  // start with layer n: prefix length n, slice length 1
  node_of_prefix.resize(total);
  for (std::uint64_t p = 0; p < total; ++p)
    node_of_prefix[p] = slice_bit(p, 0) ? Nbdd::kOne : Nbdd::kZero;

  for (int layer = n - 1; layer >= 0; --layer) {
    std::uint64_t prefixes = std::uint64_t{1} << layer;
    std::vector<int> next(prefixes);
    // merge equal (lo, hi) pairs within the layer
    std::map<std::pair<int, int>, int> unique_nodes;
    for (std::uint64_t p = 0; p < prefixes; ++p) {
      int lo = node_of_prefix[2 * p];      // next variable = 0
      int hi = node_of_prefix[2 * p + 1];  // next variable = 1
      auto key = std::make_pair(lo, hi);
      auto it = unique_nodes.find(key);
      if (it == unique_nodes.end()) {
        int id = out.add_decision(order[layer], lo, hi);
        unique_nodes.emplace(key, id);
        next[p] = id;
      } else {
        next[p] = it->second;
      }
    }
    node_of_prefix = std::move(next);
  }

  out.set_root(node_of_prefix[0]);
  out.flags.free_diagram = true;
  out.flags.ordered = true;
  out.flags.unambiguous = true;
  out.flags.complete = true;
  return out;
}

Nbdd build_canonical_obdd(const Circuit& c, const std::vector<int>& order,
                          int cap) {
  if (static_cast<int>(order.size()) > cap)
    throw CapacityError("canonical obdd: variable count over cap");
  return build_canonical_obdd(truth_table(c, order), order);
}

Nbdd build_canonical_obdd(const ClauseForm& f, const std::vector<int>& order,
                          int cap) {
  if (static_cast<int>(order.size()) > cap)
    throw CapacityError("canonical obdd: variable count over cap");
  return build_canonical_obdd(truth_table(f, order), order);
}

}  // namespace kcomp
