#include "kcomp/oracle.hpp"

#include <algorithm>
#include <bit>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kcomp {

namespace {

// bit j of kPat[p] is (j >> p) & 1, for 64-aligned index blocks
constexpr std::uint64_t kPat[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};

// Word of 64 consecutive values of the variable at `msb_pos` positions below
// the top index bit, for the block starting at index `base` (64-aligned).
// n index bits total; position p counts from the least significant bit.
std::uint64_t var_word(int p, std::uint64_t base) {
  if (p < 6) return kPat[p];
  return (base >> p) & 1 ? ~0ull : 0ull;
}

void check_order(const std::vector<int>& order, const std::vector<int>& vars,
                 const char* what) {
  std::vector<int> a = order, b = vars;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw InputError(std::string(what) + ": order must be a permutation of the variables");
}

struct Bitplan {
  // For each evaluation step: gate kind, input slots, and for vars the index
  // bit position (from the LSB of the table index).
  std::vector<int> topo;
  std::vector<int> var_bitpos;  // per gate id, -1 if not a var
};

template <typename EvalBlock>
TruthTable sweep(int n, Exec exec, EvalBlock eval_block) {
  TruthTable t;
  t.n = n;
  std::uint64_t total = std::uint64_t{1} << n;
  std::uint64_t nwords = (total + 63) / 64;
  t.words.assign(nwords, 0);

  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (long long w = 0; w < static_cast<long long>(nwords); ++w)
      t.words[w] = eval_block(static_cast<std::uint64_t>(w) * 64);
  } else {
    for (std::uint64_t w = 0; w < nwords; ++w) t.words[w] = eval_block(w * 64);
  }

  if (n < 6) t.words[0] &= (std::uint64_t{1} << total) - 1;
  return t;
}

}  // namespace

std::uint64_t TruthTable::ones() const {
  std::uint64_t c = 0;
  for (std::uint64_t w : words) c += std::popcount(w);
  return c;
}

TruthTable truth_table(const Circuit& c, const std::vector<int>& order,
                       Exec exec) {
  check_order(order, c.var_order(), "truth_table");
  int n = static_cast<int>(order.size());
  if (n > kBruteForceCap) throw CapacityError("truth_table: too many variables");

  std::vector<int> bitpos(c.n_gates(), -1);
  for (int i = 0; i < n; ++i) bitpos[order[i]] = n - 1 - i;  // order[0] is MSB
  std::vector<int> topo = c.topo_order();

  auto eval_block = [&](std::uint64_t base) {
    std::vector<std::uint64_t> val(c.n_gates());
    for (int id : topo) {
      const Gate& g = c.gate(id);
      switch (g.kind) {
        case GateKind::Var:
          val[id] = var_word(bitpos[id], base);
          break;
        case GateKind::Not:
          val[id] = ~val[g.inputs[0]];
          break;
        case GateKind::And: {
          std::uint64_t acc = ~0ull;
          for (int in : g.inputs) acc &= val[in];
          val[id] = acc;
          break;
        }
        case GateKind::Or: {
          std::uint64_t acc = 0;
          for (int in : g.inputs) acc |= val[in];
          val[id] = acc;
          break;
        }
      }
    }
    return val[c.output()];
  };
  return sweep(n, exec, eval_block);
}

TruthTable truth_table(const ClauseForm& f, const std::vector<int>& order,
                       Exec exec) {
  check_order(order, f.vars(), "truth_table");
  int n = static_cast<int>(order.size());
  if (n > kBruteForceCap) throw CapacityError("truth_table: too many variables");

  int max_var = 0;
  for (int v : order) max_var = std::max(max_var, v);
  std::vector<int> pos_of(max_var + 1, -1);
  for (int i = 0; i < n; ++i) pos_of[order[i]] = n - 1 - i;

  const bool cnf = f.kind() == FormKind::Cnf;
  auto eval_block = [&](std::uint64_t base) {
    std::uint64_t acc = cnf ? ~0ull : 0ull;
    for (const auto& cl : f.clauses()) {
      std::uint64_t cw = cnf ? 0ull : ~0ull;
      for (int v : cl) {
        std::uint64_t vw = var_word(pos_of[v], base);
        if (cnf) cw |= vw; else cw &= vw;
      }
      if (cnf) acc &= cw; else acc |= cw;
    }
    return acc;
  };
  return sweep(n, exec, eval_block);
}

TruthTable truth_table_serial_reference(const Circuit& c,
                                        const std::vector<int>& order) {
  check_order(order, c.var_order(), "truth_table");
  int n = static_cast<int>(order.size());
  if (n > kBruteForceCap) throw CapacityError("truth_table: too many variables");
  TruthTable t;
  t.n = n;
  std::uint64_t total = std::uint64_t{1} << n;
  t.words.assign((total + 63) / 64, 0);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<bool> bits(n);
    for (int i = 0; i < n; ++i) bits[i] = (idx >> (n - 1 - i)) & 1;
    if (evaluate_circuit(c, Valuation(order, bits)))
      t.words[idx >> 6] |= std::uint64_t{1} << (idx & 63);
  }
  return t;
}

namespace {

template <typename Src>
BruteForceResult brute_force_impl(const Src& src,
                                  const std::vector<int>& order,
                                  bool want_models, int cap, Exec exec) {
  int n = static_cast<int>(order.size());
  if (n > cap)
    throw CapacityError("brute force: " + std::to_string(n) +
                        " variables exceed cap " + std::to_string(cap));
  TruthTable t = truth_table(src, order, exec);
  BruteForceResult r;
  r.count = t.ones();
  if (want_models) {
    std::vector<Valuation> models;
    models.reserve(r.count);
    std::uint64_t total = t.size();
    for (std::uint64_t idx = 0; idx < total; ++idx)
      if (t.get(idx)) {
        std::vector<bool> bits(n);
        for (int i = 0; i < n; ++i) bits[i] = (idx >> (n - 1 - i)) & 1;
        models.emplace_back(order, std::move(bits));
      }
    r.models = std::move(models);
  }
  return r;
}

}  // namespace

BruteForceResult brute_force_models(const Circuit& c, bool want_models,
                                    int cap, Exec exec) {
  return brute_force_impl(c, c.var_order(), want_models, cap, exec);
}

BruteForceResult brute_force_models(const ClauseForm& f, bool want_models,
                                    int cap, Exec exec) {
  return brute_force_impl(f, f.vars(), want_models, cap, exec);
}

double brute_force_weighted_count(const Circuit& c,
                                  const ProbabilityAssignment& pi, int cap,
                                  Exec exec) {
  const std::vector<int>& order = c.var_order();
  int n = static_cast<int>(order.size());
  if (n > cap) throw CapacityError("weighted brute force: over cap");
  if (!pi.covers(order))
    throw InputError("probability assignment does not cover all variables");

  TruthTable t = truth_table(c, order, exec);
  std::vector<double> p1(n), p0(n);
  for (int i = 0; i < n; ++i) {
    p1[i] = pi.prob(order[i]);
    p0[i] = 1.0 - p1[i];
  }

  // Fixed block partition; per-block partial sums folded in block order so
  // the result does not depend on scheduling.
  std::uint64_t total = std::uint64_t{1} << n;
  std::uint64_t nwords = (total + 63) / 64;
  std::vector<double> partial(nwords, 0.0);

  auto block_sum = [&](std::uint64_t w) {
    std::uint64_t word = t.words[w];
    double s = 0.0;
    while (word) {
      int bit = std::countr_zero(word);
      word &= word - 1;
      std::uint64_t idx = w * 64 + bit;
      double prod = 1.0;
      for (int i = 0; i < n; ++i)
        prod *= ((idx >> (n - 1 - i)) & 1) ? p1[i] : p0[i];
      s += prod;
    }
    return s;
  };

  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (long long w = 0; w < static_cast<long long>(nwords); ++w)
      partial[w] = block_sum(static_cast<std::uint64_t>(w));
  } else {
    for (std::uint64_t w = 0; w < nwords; ++w) partial[w] = block_sum(w);
  }

  double sum = 0.0;
  for (double s : partial) sum += s;
  return sum;
}

double brute_force_weighted_count_serial(const Circuit& c,
                                         const ProbabilityAssignment& pi,
                                         int cap) {
  return brute_force_weighted_count(c, pi, cap, Exec::Serial);
}

}  // namespace kcomp
