#include "kcomp/circuit.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <set>
#include <sstream>

namespace kcomp {

int Circuit::add_var(std::string name) {
  int id = n_gates();
  gates_.push_back(Gate{GateKind::Var, {}});
  names_.push_back(name.empty() ? "g" + std::to_string(id) : std::move(name));
  var_order_.push_back(id);
  return id;
}

int Circuit::add_gate(GateKind kind, std::vector<int> inputs,
                      std::string name) {
  if (kind == GateKind::Var) {
    if (!inputs.empty()) throw InputError("var gates take no inputs");
    return add_var(std::move(name));
  }
  int id = n_gates();
  gates_.push_back(Gate{kind, std::move(inputs)});
  names_.push_back(name.empty() ? "g" + std::to_string(id) : std::move(name));
  return id;
}

void Circuit::set_output(int gate) {
  if (gate < 0 || gate >= n_gates())
    throw InputError("output names a non-existent gate");
  output_ = gate;
}

std::size_t Circuit::n_wires() const {
  std::size_t w = 0;
  for (const Gate& g : gates_) w += g.inputs.size();
  return w;
}

void Circuit::validate() const {
  if (output_ < 0 || output_ >= n_gates())
    throw InputError("circuit has no valid output gate");
  for (int id = 0; id < n_gates(); ++id) {
    const Gate& g = gates_[id];
    for (int in : g.inputs)
      if (in < 0 || in >= n_gates())
        throw InputError("gate " + names_[id] + " wires a non-existent gate");
    if (g.kind == GateKind::Not && g.inputs.size() != 1)
      throw InputError("not-gate " + names_[id] + " must have exactly one input");
    if (g.kind == GateKind::Var && !g.inputs.empty())
      throw InputError("var gate " + names_[id] + " must have no inputs");
  }
  topo_order();  // throws on cycles
}

std::vector<int> Circuit::topo_order() const {
  int n = n_gates();
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> fanout(n);
  for (int id = 0; id < n; ++id)
    for (int in : gates_[id].inputs) {
      fanout[in].push_back(id);
      ++indeg[id];
    }
  std::vector<int> order;
  order.reserve(n);
  std::vector<int> queue;
  for (int id = 0; id < n; ++id)
    if (indeg[id] == 0) queue.push_back(id);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int id = queue[head];
    order.push_back(id);
    for (int out : fanout[id])
      if (--indeg[out] == 0) queue.push_back(out);
  }
  if (static_cast<int>(order.size()) != n)
    throw InputError("circuit wire relation is cyclic");
  return order;
}

namespace {

GateKind kind_from_word(const std::string& w) {
  if (w == "VAR") return GateKind::Var;
  if (w == "NOT") return GateKind::Not;
  if (w == "AND") return GateKind::And;
  if (w == "OR") return GateKind::Or;
  throw ParseError("unknown gate kind '" + w + "'");
}

}  // namespace

Circuit Circuit::parse(std::istream& in) {
  // One gate per line: `g<id> VAR|NOT|AND|OR [inputs...]`, final `OUTPUT g<id>`.
  // Gate labels are mapped to dense ids in order of definition.
  struct RawGate {
    std::string label;
    GateKind kind;
    std::vector<std::string> inputs;
  };
  std::vector<RawGate> raw;
  std::string output_label;
  bool have_output = false;

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "OUTPUT") {
      if (!(ls >> output_label))
        throw ParseError("line " + std::to_string(lineno) +
                         ": OUTPUT needs a gate label");
      have_output = true;
      continue;
    }
    std::string kind_word;
    if (!(ls >> kind_word))
      throw ParseError("line " + std::to_string(lineno) + ": missing gate kind");
    RawGate rg;
    rg.label = first;
    rg.kind = kind_from_word(kind_word);
    std::string tok;
    while (ls >> tok) rg.inputs.push_back(tok);
    raw.push_back(std::move(rg));
  }
  if (!have_output) throw ParseError("missing OUTPUT line");

  std::map<std::string, int> ids;
  Circuit c;
  for (const RawGate& rg : raw) {
    if (ids.count(rg.label))
      throw ParseError("gate " + rg.label + " defined twice");
    ids[rg.label] = c.add_gate(rg.kind, {}, rg.label);
  }
  for (std::size_t i = 0; i < raw.size(); ++i) {
    std::vector<int> inputs;
    for (const std::string& in_label : raw[i].inputs) {
      auto it = ids.find(in_label);
      if (it == ids.end())
        throw ParseError("gate " + raw[i].label + " wires undefined gate " +
                         in_label);
      inputs.push_back(it->second);
    }
    c.gates_[i].inputs = std::move(inputs);
  }
  auto out_it = ids.find(output_label);
  if (out_it == ids.end())
    throw ParseError("OUTPUT names undefined gate " + output_label);
  c.set_output(out_it->second);
  c.validate();
  return c;
}

Circuit Circuit::parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

std::string Circuit::to_text() const {
  std::ostringstream out;
  for (int id = 0; id < n_gates(); ++id) {
    const Gate& g = gates_[id];
    out << names_[id];
    switch (g.kind) {
      case GateKind::Var: out << " VAR"; break;
      case GateKind::Not: out << " NOT"; break;
      case GateKind::And: out << " AND"; break;
      case GateKind::Or: out << " OR"; break;
    }
    for (int in : g.inputs) out << ' ' << names_[in];
    out << '\n';
  }
  out << "OUTPUT " << names_[output_] << '\n';
  return out.str();
}

bool evaluate_circuit(const Circuit& c, const Valuation& v) {
  const std::vector<int>& vars = c.var_order();
  if (v.size() != vars.size())
    throw InputError("valuation domain does not match circuit variables");
  for (int x : vars)
    if (!v.contains(x))
      throw InputError("valuation missing circuit variable " + c.name(x));

  std::vector<char> val(c.n_gates(), 0);
  for (int id : c.topo_order()) {
    const Gate& g = c.gate(id);
    switch (g.kind) {
      case GateKind::Var:
        val[id] = v.value(id);
        break;
      case GateKind::Not:
        val[id] = !val[g.inputs[0]];
        break;
      case GateKind::And: {
        char acc = 1;
        for (int in : g.inputs) acc &= val[in];
        val[id] = acc;
        break;
      }
      case GateKind::Or: {
        char acc = 0;
        for (int in : g.inputs) acc |= val[in];
        val[id] = acc;
        break;
      }
    }
  }
  return val[c.output()];
}

}  // namespace kcomp
