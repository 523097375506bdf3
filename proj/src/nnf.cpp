#include "kcomp/nnf.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <sstream>

namespace kcomp {

namespace {

constexpr std::uint64_t kPat[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};

std::uint64_t var_word(int p, std::uint64_t base) {
  if (p < 6) return kPat[p];
  return (base >> p) & 1 ? ~0ull : 0ull;
}

}  // namespace

int NnfCircuit::add_var(int var) {
  gates_.push_back(NnfGate{NnfKind::Var, var, {}});
  return n_gates() - 1;
}

int NnfCircuit::add_not(int var) {
  gates_.push_back(NnfGate{NnfKind::Not, var, {}});
  return n_gates() - 1;
}

int NnfCircuit::add_and(std::vector<int> inputs) {
  int id = n_gates();
  for (int in : inputs)
    if (in < 0 || in >= id) throw InputError("nnf gate inputs must be older");
  gates_.push_back(NnfGate{NnfKind::And, -1, std::move(inputs)});
  return id;
}

int NnfCircuit::add_or(std::vector<int> inputs) {
  int id = n_gates();
  for (int in : inputs)
    if (in < 0 || in >= id) throw InputError("nnf gate inputs must be older");
  gates_.push_back(NnfGate{NnfKind::Or, -1, std::move(inputs)});
  return id;
}

void NnfCircuit::set_output(int gate) {
  if (gate < 0 || gate >= n_gates())
    throw InputError("nnf output gate does not exist");
  output_ = gate;
}

std::size_t NnfCircuit::n_edges() const {
  std::size_t e = 0;
  for (const NnfGate& g : gates_) e += g.inputs.size();
  return e;
}

void NnfCircuit::set_vars(std::vector<int> vars) {
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  vars_ = std::move(vars);
}

void NnfCircuit::set_structure(VTree vtree, std::vector<int> rho) {
  if (static_cast<int>(rho.size()) != n_gates())
    throw InputError("rho must map every gate");
  vtree.validate();
  vtree_ = std::move(vtree);
  rho_ = std::move(rho);
}

const VTree& NnfCircuit::vtree() const {
  if (!vtree_) throw ContractError("nnf circuit has no v-tree");
  return *vtree_;
}

std::vector<std::vector<int>> NnfCircuit::gate_vars() const {
  std::vector<std::vector<int>> vars(n_gates());
  for (int id = 0; id < n_gates(); ++id) {
    const NnfGate& g = gates_[id];
    if (g.kind == NnfKind::Var || g.kind == NnfKind::Not) {
      vars[id] = {g.var};
      continue;
    }
    std::vector<int> acc;
    for (int in : g.inputs)
      acc.insert(acc.end(), vars[in].begin(), vars[in].end());
    std::sort(acc.begin(), acc.end());
    acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
    vars[id] = std::move(acc);
  }
  return vars;
}

bool NnfCircuit::evaluate(const Valuation& v) const {
  std::vector<char> val(n_gates());
  for (int id = 0; id < n_gates(); ++id) {
    const NnfGate& g = gates_[id];
    switch (g.kind) {
      case NnfKind::Var: val[id] = v.value(g.var); break;
      case NnfKind::Not: val[id] = !v.value(g.var); break;
      case NnfKind::And: {
        char acc = 1;
        for (int in : g.inputs) acc &= val[in];
        val[id] = acc;
        break;
      }
      case NnfKind::Or: {
        char acc = 0;
        for (int in : g.inputs) acc |= val[in];
        val[id] = acc;
        break;
      }
    }
  }
  return val[output_];
}

TruthTable NnfCircuit::table(const std::vector<int>& order, Exec exec) const {
  {
    std::vector<int> a = order, b = vars_;
    std::sort(a.begin(), a.end());
    if (a != b)
      throw InputError("nnf table: order must be a permutation of vars");
  }
  int n = static_cast<int>(order.size());
  if (n > kBruteForceCap) throw CapacityError("nnf table: too many variables");

  std::map<int, int> bitpos;
  for (int i = 0; i < n; ++i) bitpos[order[i]] = n - 1 - i;

  TruthTable t;
  t.n = n;
  std::uint64_t total = std::uint64_t{1} << n;
  std::uint64_t nwords = (total + 63) / 64;
  t.words.assign(nwords, 0);

  std::vector<int> gate_bit(n_gates(), -1);
  for (int id = 0; id < n_gates(); ++id)
    if (gates_[id].kind == NnfKind::Var || gates_[id].kind == NnfKind::Not)
      gate_bit[id] = bitpos.at(gates_[id].var);

  auto eval_block = [&](std::uint64_t base, std::vector<std::uint64_t>& val) {
    for (int id = 0; id < n_gates(); ++id) {
      const NnfGate& g = gates_[id];
      switch (g.kind) {
        case NnfKind::Var: val[id] = var_word(gate_bit[id], base); break;
        case NnfKind::Not: val[id] = ~var_word(gate_bit[id], base); break;
        case NnfKind::And: {
          std::uint64_t acc = ~0ull;
          for (int in : g.inputs) acc &= val[in];
          val[id] = acc;
          break;
        }
        case NnfKind::Or: {
          std::uint64_t acc = 0;
          for (int in : g.inputs) acc |= val[in];
          val[id] = acc;
          break;
        }
      }
    }
    return val[output_];
  };

  if (exec == Exec::Parallel) {
#pragma omp parallel
    {
      std::vector<std::uint64_t> val(n_gates());
#pragma omp for schedule(static)
      for (long long w = 0; w < static_cast<long long>(nwords); ++w)
        t.words[w] = eval_block(static_cast<std::uint64_t>(w) * 64, val);
    }
  } else {
    std::vector<std::uint64_t> val(n_gates());
    for (std::uint64_t w = 0; w < nwords; ++w)
      t.words[w] = eval_block(w * 64, val);
  }
  if (n < 6) t.words[0] &= (std::uint64_t{1} << total) - 1;
  return t;
}

std::string NnfCircuit::to_nnf_text() const {
  std::ostringstream out;
  std::map<int, int> var_index;  // variable -> 1-based file index
  for (std::size_t i = 0; i < vars_.size(); ++i)
    var_index[vars_[i]] = static_cast<int>(i) + 1;

  out << "nnf " << n_gates() << ' ' << n_edges() << ' ' << vars_.size()
      << '\n';
  for (std::size_t i = 0; i < vars_.size(); ++i)
    out << "c idx " << i + 1 << ' ' << vars_[i] << '\n';
  for (int id = 0; id < n_gates(); ++id) {
    const NnfGate& g = gates_[id];
    switch (g.kind) {
      case NnfKind::Var: out << "L " << var_index.at(g.var); break;
      case NnfKind::Not: out << "L -" << var_index.at(g.var); break;
      case NnfKind::And: {
        out << "A " << g.inputs.size();
        for (int in : g.inputs) out << ' ' << in;
        break;
      }
      case NnfKind::Or: {
        out << "O 0 " << g.inputs.size();
        for (int in : g.inputs) out << ' ' << in;
        break;
      }
    }
    out << '\n';
  }
  out << "c output " << output_ << '\n';
  return out.str();
}

NnfCircuit NnfCircuit::parse_nnf(std::istream& in) {
  std::string line;
  NnfCircuit d;
  std::map<int, int> index_var;
  int declared_nodes = -1, declared_vars = 0;
  int output = -1;
  int next_id = 0;

  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c") {
      std::string kind;
      if (ls >> kind) {
        if (kind == "idx") {
          int idx, var;
          if (ls >> idx >> var) index_var[idx] = var;
        } else if (kind == "output") {
          ls >> output;
        }
      }
      continue;
    }
    if (tok == "nnf") {
      long edges;
      if (!(ls >> declared_nodes >> edges >> declared_vars))
        throw ParseError("malformed nnf header");
      continue;
    }
    if (declared_nodes < 0) throw ParseError("nnf node before header");
    if (tok == "L") {
      int lit;
      if (!(ls >> lit)) throw ParseError("malformed literal node");
      int idx = lit > 0 ? lit : -lit;
      int var = index_var.count(idx) ? index_var[idx] : idx;
      if (lit > 0) d.add_var(var);
      else d.add_not(var);
      ++next_id;
    } else if (tok == "A" || tok == "O") {
      int count;
      int j = 0;
      if (tok == "O" && !(ls >> j)) throw ParseError("malformed or node");
      if (!(ls >> count)) throw ParseError("malformed nnf node");
      std::vector<int> ins(count);
      for (int i = 0; i < count; ++i)
        if (!(ls >> ins[i]) || ins[i] >= next_id)
          throw ParseError("nnf node references a later node");
      if (tok == "A") d.add_and(std::move(ins));
      else d.add_or(std::move(ins));
      ++next_id;
    } else {
      throw ParseError("unexpected nnf line: " + line);
    }
  }
  if (d.n_gates() == 0) throw ParseError("empty nnf file");
  if (declared_nodes != d.n_gates())
    throw ParseError("nnf node count mismatch");
  d.set_output(output >= 0 ? output : d.n_gates() - 1);

  std::vector<int> vars;
  if (!index_var.empty()) {
    for (auto [idx, var] : index_var) vars.push_back(var);
  } else {
    for (int id = 0; id < d.n_gates(); ++id)
      if (d.gate(id).kind == NnfKind::Var || d.gate(id).kind == NnfKind::Not)
        vars.push_back(d.gate(id).var);
  }
  d.set_vars(std::move(vars));
  return d;
}

std::string NnfCircuit::vtree_text() const { return vtree().to_text(); }

std::string NnfCircuit::rho_text() const {
  if (!vtree_) throw ContractError("nnf circuit has no v-tree");
  std::ostringstream out;
  for (int id = 0; id < n_gates(); ++id) out << id << ' ' << rho_[id] << '\n';
  return out.str();
}

std::optional<int> nnf_width(const NnfCircuit& d) {
  if (!d.has_structure()) return std::nullopt;
  std::vector<int> per_node(d.vtree().n_nodes(), 0);
  for (int id = 0; id < d.n_gates(); ++id)
    if (d.gate(id).kind == NnfKind::Or) {
      int n = d.rho(id);
      if (n < 0) return std::nullopt;
      ++per_node[n];
    }
  int w = 0;
  for (int c : per_node) w = std::max(w, c);
  return w;
}

}  // namespace kcomp
