#include "kcomp/nbdd.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

namespace kcomp {

Nbdd::Nbdd() {
  nodes_.resize(2);  // 0-sink, 1-sink
}

int Nbdd::add_decision(int var, int lo, int hi) {
  int id = n_nodes();
  if (var < 0) throw InputError("decision node needs a variable");
  if (lo < 0 || lo >= id || hi < 0 || hi >= id)
    throw InputError("nbdd edges must point to older nodes");
  nodes_.push_back(NbddNode{var, lo, hi, {}});
  return id;
}

int Nbdd::add_or(std::vector<int> children) {
  int id = n_nodes();
  for (int c : children)
    if (c < 0 || c >= id) throw InputError("nbdd edges must point to older nodes");
  nodes_.push_back(NbddNode{-1, -1, -1, std::move(children)});
  return id;
}

void Nbdd::set_root(int node) {
  if (node < 0 || node >= n_nodes()) throw InputError("nbdd root does not exist");
  root_ = node;
}

std::size_t Nbdd::n_edges() const {
  std::size_t e = 0;
  for (int id = 2; id < n_nodes(); ++id) {
    const NbddNode& n = nodes_[id];
    e += n.var >= 0 ? 2 : n.children.size();
  }
  return e;
}

void Nbdd::set_vars(std::vector<int> vars) {
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  vars_ = std::move(vars);
}

void Nbdd::set_order(std::vector<int> order) { order_ = std::move(order); }

bool Nbdd::evaluate(const Valuation& v) const {
  std::vector<char> acc(n_nodes(), 0);
  acc[kOne] = 1;
  for (int id = 2; id < n_nodes(); ++id) {
    const NbddNode& n = nodes_[id];
    if (n.var >= 0) {
      acc[id] = acc[v.value(n.var) ? n.hi : n.lo];
    } else {
      char a = 0;
      for (int c : n.children) a |= acc[c];
      acc[id] = a;
    }
  }
  return acc[root_];
}

TruthTable Nbdd::table(const std::vector<int>& order, Exec exec) const {
  {
    std::vector<int> a = order, b = vars_;
    std::sort(a.begin(), a.end());
    if (a != b)
      throw InputError("nbdd table: order must be a permutation of vars");
  }
  int n = static_cast<int>(order.size());
  if (n > kBruteForceCap) throw CapacityError("nbdd table: too many variables");

  constexpr std::uint64_t kPat[6] = {
      0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
      0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
  std::vector<int> bitpos_of(n_nodes(), -1);
  {
    std::map<int, int> bitpos;
    for (int i = 0; i < n; ++i) bitpos[order[i]] = n - 1 - i;
    for (int id = 2; id < n_nodes(); ++id)
      if (nodes_[id].var >= 0) bitpos_of[id] = bitpos.at(nodes_[id].var);
  }

  TruthTable t;
  t.n = n;
  std::uint64_t total = std::uint64_t{1} << n;
  std::uint64_t nwords = (total + 63) / 64;
  t.words.assign(nwords, 0);

  auto eval_block = [&](std::uint64_t base, std::vector<std::uint64_t>& acc) {
    acc[kZero] = 0;
    acc[kOne] = ~0ull;
    for (int id = 2; id < n_nodes(); ++id) {
      const NbddNode& nd = nodes_[id];
      if (nd.var >= 0) {
        int p = bitpos_of[id];
        std::uint64_t w = p < 6 ? kPat[p] : ((base >> p) & 1 ? ~0ull : 0ull);
        acc[id] = (w & acc[nd.hi]) | (~w & acc[nd.lo]);
      } else {
        std::uint64_t a = 0;
        for (int c : nd.children) a |= acc[c];
        acc[id] = a;
      }
    }
    return acc[root_];
  };

  if (exec == Exec::Parallel) {
#pragma omp parallel
    {
      std::vector<std::uint64_t> acc(n_nodes());
#pragma omp for schedule(static)
      for (long long w = 0; w < static_cast<long long>(nwords); ++w)
        t.words[w] = eval_block(static_cast<std::uint64_t>(w) * 64, acc);
    }
  } else {
    std::vector<std::uint64_t> acc(n_nodes());
    for (std::uint64_t w = 0; w < nwords; ++w)
      t.words[w] = eval_block(w * 64, acc);
  }
  if (n < 6) t.words[0] &= (std::uint64_t{1} << total) - 1;
  return t;
}

std::string Nbdd::to_text() const {
  std::ostringstream out;
  out << "nbdd " << n_nodes() << ' ' << n_edges() << ' ' << vars_.size()
      << '\n';
  out << "root " << root_ << '\n';
  if (order_) {
    out << "order";
    for (int v : *order_) out << ' ' << v;
    out << '\n';
  }
  for (int id = 2; id < n_nodes(); ++id) {
    const NbddNode& n = nodes_[id];
    if (n.var >= 0) {
      out << id << " var " << n.var << ' ' << n.lo << ' ' << n.hi << '\n';
    } else {
      out << id << " or";
      for (int c : n.children) out << ' ' << c;
      out << '\n';
    }
  }
  return out.str();
}

Nbdd Nbdd::parse(std::istream& in) {
  Nbdd d;
  std::string line;
  int root = -1;
  bool have_header = false;
  std::vector<int> vars;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c") continue;
    if (tok == "nbdd") {
      have_header = true;
      continue;
    }
    if (tok == "root") {
      if (!(ls >> root)) throw ParseError("malformed nbdd root line");
      continue;
    }
    if (tok == "order") {
      std::vector<int> order;
      int v;
      while (ls >> v) order.push_back(v);
      d.set_order(std::move(order));
      continue;
    }
    int id;
    try {
      id = std::stoi(tok);
    } catch (const std::exception&) {
      throw ParseError("unexpected nbdd line: " + line);
    }
    if (id != d.n_nodes()) throw ParseError("nbdd nodes must be consecutive");
    std::string kind;
    if (!(ls >> kind)) throw ParseError("malformed nbdd node line");
    if (kind == "var") {
      int var, lo, hi;
      if (!(ls >> var >> lo >> hi)) throw ParseError("malformed var node");
      d.add_decision(var, lo, hi);
      vars.push_back(var);
    } else if (kind == "or") {
      std::vector<int> cs;
      int cnode;
      while (ls >> cnode) cs.push_back(cnode);
      d.add_or(std::move(cs));
    } else {
      throw ParseError("unknown nbdd node kind " + kind);
    }
  }
  if (!have_header) throw ParseError("missing nbdd header");
  if (root < 0) throw ParseError("missing nbdd root");
  d.set_root(root);
  if (d.order())
    d.set_vars(*d.order());
  else
    d.set_vars(std::move(vars));
  return d;
}

std::string Nbdd::to_dot() const {
  std::ostringstream out;
  out << "digraph nbdd {\n";
  out << "  n0 [shape=box,label=\"0\"];\n  n1 [shape=box,label=\"1\"];\n";
  for (int id = 2; id < n_nodes(); ++id) {
    const NbddNode& n = nodes_[id];
    if (n.var >= 0) {
      out << "  n" << id << " [label=\"x" << n.var << "\"];\n";
      out << "  n" << id << " -> n" << n.lo << " [style=dashed];\n";
      out << "  n" << id << " -> n" << n.hi << ";\n";
    } else {
      out << "  n" << id << " [shape=diamond,label=\"or\"];\n";
      for (int c : n.children) out << "  n" << id << " -> n" << c << ";\n";
    }
  }
  out << "  root -> n" << root_ << ";\n  root [shape=none];\n}\n";
  return out.str();
}

std::map<int, int> nbdd_var_widths(const Nbdd& d) {
  std::map<int, int> w;
  for (int v : d.vars()) w[v] = 0;
  for (int id = 2; id < d.n_nodes(); ++id)
    if (d.node(id).var >= 0) ++w[d.node(id).var];
  return w;
}

int nbdd_width(const Nbdd& d) {
  int m = 0;
  for (const auto& [v, c] : nbdd_var_widths(d)) m = std::max(m, c);
  return m;
}

}  // namespace kcomp
