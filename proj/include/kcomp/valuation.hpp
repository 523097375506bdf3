#ifndef KCOMP_VALUATION_HPP
#define KCOMP_VALUATION_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "kcomp/common.hpp"

namespace kcomp {

// A Boolean valuation of an ordered list of variables. Variables are plain
// integer ids (gate ids for circuits, 1-based DIMACS ids for clause forms).
class Valuation {
 public:
  Valuation() = default;
  Valuation(std::vector<int> domain, std::vector<bool> bits);

  // bit i of `mask` gives the value of domain[i]; domain.size() <= 64.
  static Valuation from_mask(const std::vector<int>& domain, std::uint64_t mask);

  const std::vector<int>& domain() const { return domain_; }
  std::size_t size() const { return domain_.size(); }
  bool empty() const { return domain_.empty(); }

  bool contains(int var) const;
  bool value(int var) const;  // throws InputError if var not in domain

  std::vector<int> true_vars() const;

  Valuation restricted_to(const std::vector<int>& vars) const;
  Valuation united_with(const Valuation& other) const;  // domains must be disjoint

 private:
  std::vector<int> domain_;
  std::vector<bool> bits_;
};

// Independent per-variable probabilities; used for weighted counting.
class ProbabilityAssignment {
 public:
  ProbabilityAssignment() = default;
  explicit ProbabilityAssignment(std::map<int, double> p);

  // All variables in `vars` get probability p.
  static ProbabilityAssignment uniform(const std::vector<int>& vars, double p);

  bool covers(const std::vector<int>& vars) const;
  double prob(int var) const;  // throws InputError if absent

  const std::map<int, double>& entries() const { return p_; }

 private:
  std::map<int, double> p_;
};

}  // namespace kcomp

#endif
