#include "kcomp/valuation.hpp"

#include <algorithm>
#include <set>

namespace kcomp {

Valuation::Valuation(std::vector<int> domain, std::vector<bool> bits)
    : domain_(std::move(domain)), bits_(std::move(bits)) {
  if (domain_.size() != bits_.size())
    throw InputError("valuation: bit count does not match domain size");
  std::set<int> seen(domain_.begin(), domain_.end());
  if (seen.size() != domain_.size())
    throw InputError("valuation: duplicate variable in domain");
}

Valuation Valuation::from_mask(const std::vector<int>& domain,
                               std::uint64_t mask) {
  if (domain.size() > 64)
    throw InputError("valuation: mask form limited to 64 variables");
  std::vector<bool> bits(domain.size());
  for (std::size_t i = 0; i < domain.size(); ++i)
    bits[i] = (mask >> i) & 1;
  return Valuation(domain, std::move(bits));
}

bool Valuation::contains(int var) const {
  return std::find(domain_.begin(), domain_.end(), var) != domain_.end();
}

bool Valuation::value(int var) const {
  for (std::size_t i = 0; i < domain_.size(); ++i)
    if (domain_[i] == var) return bits_[i];
  throw InputError("valuation: variable " + std::to_string(var) +
                   " not in domain");
}

std::vector<int> Valuation::true_vars() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < domain_.size(); ++i)
    if (bits_[i]) out.push_back(domain_[i]);
  std::sort(out.begin(), out.end());
  return out;
}

Valuation Valuation::restricted_to(const std::vector<int>& vars) const {
  std::vector<int> dom;
  std::vector<bool> bits;
  for (int v : vars) {
    dom.push_back(v);
    bits.push_back(value(v));
  }
  return Valuation(std::move(dom), std::move(bits));
}

Valuation Valuation::united_with(const Valuation& other) const {
  std::vector<int> dom = domain_;
  std::vector<bool> bits = bits_;
  for (std::size_t i = 0; i < other.domain_.size(); ++i) {
    dom.push_back(other.domain_[i]);
    bits.push_back(other.bits_[i]);
  }
  return Valuation(std::move(dom), std::move(bits));
}

ProbabilityAssignment::ProbabilityAssignment(std::map<int, double> p)
    : p_(std::move(p)) {
  for (const auto& [v, prob] : p_)
    if (prob < 0.0 || prob > 1.0)
      throw InputError("probability for variable " + std::to_string(v) +
                       " outside [0,1]");
}

ProbabilityAssignment ProbabilityAssignment::uniform(
    const std::vector<int>& vars, double p) {
  std::map<int, double> m;
  for (int v : vars) m[v] = p;
  return ProbabilityAssignment(std::move(m));
}

bool ProbabilityAssignment::covers(const std::vector<int>& vars) const {
  for (int v : vars)
    if (!p_.count(v)) return false;
  return true;
}

double ProbabilityAssignment::prob(int var) const {
  auto it = p_.find(var);
  if (it == p_.end())
    throw InputError("no probability for variable " + std::to_string(var));
  return it->second;
}

}  // namespace kcomp
