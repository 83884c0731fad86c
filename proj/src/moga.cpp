#include "ecga/moga.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>

#include "ecga/error.hpp"
#include "ecga/stats.hpp"

namespace ecga::moga {

namespace {

double sorted_entropy(std::vector<std::size_t> counts, std::size_t total) {
  std::sort(counts.begin(), counts.end(), std::greater<>());
  return stats::entropy_from_counts(counts, total);
}

// Target count per symbol: the r = l mod 2^m most frequent symbols (ties
// broken by smaller symbol) get q + 1, the rest q.
std::vector<std::size_t> target_counts(const std::vector<std::size_t>& counts, std::size_t length) {
  const std::size_t k = counts.size();
  const std::size_t q = length / k;
  const std::size_t r = length % k;
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return counts[a] > counts[b]; });
  std::vector<std::size_t> target(k, q);
  for (std::size_t i = 0; i < r; ++i) target[order[i]] = q + 1;
  return target;
}

}  // namespace

double h_max(std::size_t length, unsigned m) {
  if (length == 0) throw Error(ErrorCode::InvalidConfig, "h_max needs length >= 1");
  if (m < 1 || m > 16) throw Error(ErrorCode::InvalidConfig, "m must be in [1, 16]");
  const std::size_t k = std::size_t{1} << m;
  const std::size_t q = length / k;
  const std::size_t r = length % k;
  std::vector<std::size_t> counts(k, q);
  for (std::size_t i = 0; i < r; ++i) counts[i] = q + 1;
  return stats::entropy_from_counts(counts, length);
}

FitnessValue evaluate(const Sequence& s) {
  FitnessValue fv;
  fv.H = sorted_entropy(s.histogram(), s.size());
  fv.T = stats::period(s);
  fv.f = fv.H + static_cast<double>(fv.T);
  return fv;
}

void CrossoverPlan::validate(std::size_t length, unsigned m) const {
  const std::size_t k = std::size_t{1} << m;
  if (perm.size() != k || positions.size() != k) {
    throw Error(ErrorCode::InvalidPlan, "plan must hold 2^m entries, got perm " + std::to_string(perm.size()) +
                                            " and positions " + std::to_string(positions.size()));
  }
  std::vector<bool> seen(k, false);
  for (auto v : perm) {
    if (v >= k || seen[v]) throw Error(ErrorCode::InvalidPlan, "perm is not a permutation of [0, 2^m)");
    seen[v] = true;
  }
  std::vector<std::size_t> sorted(positions);
  std::sort(sorted.begin(), sorted.end());
  if (sorted.back() >= length) throw Error(ErrorCode::InvalidPlan, "position out of range");
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::InvalidPlan, "positions are not distinct");
  }
}

Sequence crossover(const Sequence& s, const CrossoverPlan& plan) {
  const unsigned m = s.bits_per_symbol();
  if (s.size() < s.alphabet_size()) {
    throw Error(ErrorCode::SequenceTooShort, "crossover needs at least 2^m symbols");
  }
  plan.validate(s.size(), m);
  Sequence out = s;
  auto& sym = out.mutable_symbols();
  for (std::size_t j = 0; j < plan.positions.size(); ++j) sym[plan.positions[j]] = plan.perm[j];
  return out;
}

Sequence mutate_swap(const Sequence& s, std::size_t r, std::size_t r2) {
  if (r >= s.size() || r2 >= s.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "swap index out of range for length " + std::to_string(s.size()));
  }
  Sequence out = s;
  std::swap(out.mutable_symbols()[r], out.mutable_symbols()[r2]);
  return out;
}

CrossoverPlan draw_crossover_plan(const Sequence& s, Xoshiro256ss& rng) {
  const std::size_t k = s.alphabet_size();
  const std::size_t length = s.size();
  if (length < k) throw Error(ErrorCode::SequenceTooShort, "crossover needs at least 2^m symbols");

  const auto counts = s.histogram();
  const auto target = target_counts(counts, length);

  std::vector<Sequence::Symbol> slots;
  for (std::size_t v = 0; v < k; ++v) {
    const std::size_t surplus = counts[v] + 1 > target[v] ? counts[v] + 1 - target[v] : 0;
    slots.insert(slots.end(), surplus, static_cast<Sequence::Symbol>(v));
  }
  // Partial Fisher-Yates: the first k slots are a uniform k-subset.
  std::vector<std::size_t> take(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(slots.size() - i));
    std::swap(slots[i], slots[j]);
    ++take[slots[i]];
  }

  std::vector<std::vector<std::size_t>> where(k);
  for (std::size_t v = 0; v < k; ++v) where[v].reserve(counts[v]);
  const auto sym = s.symbols();
  for (std::size_t i = 0; i < length; ++i) where[sym[i]].push_back(i);

  CrossoverPlan plan;
  plan.positions.reserve(k);
  for (std::size_t v = 0; v < k; ++v) {
    auto& occ = where[v];
    for (std::size_t i = 0; i < take[v]; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(rng.below(occ.size() - i));
      std::swap(occ[i], occ[j]);
      plan.positions.push_back(occ[i]);
    }
  }
  plan.perm.resize(k);
  std::iota(plan.perm.begin(), plan.perm.end(), Sequence::Symbol{0});
  rng.shuffle(std::span<Sequence::Symbol>(plan.perm));
  return plan;
}

void OptimizerConfig::validate() const {
  if (max_generations < 1) throw Error(ErrorCode::InvalidConfig, "max_generations must be >= 1");
  if (!(epsilon >= 0.0)) throw Error(ErrorCode::InvalidConfig, "epsilon must be >= 0");
}

std::string_view to_string(Accepted a) noexcept {
  switch (a) {
    case Accepted::None: return "none";
    case Accepted::Crossover: return "crossover";
    case Accepted::Mutation: return "mutation";
    case Accepted::Both: return "both";
  }
  return "none";
}

std::string_view to_string(Status s) noexcept {
  return s == Status::Optimal ? "Optimal" : "CapReached";
}

bool is_optimal(const FitnessValue& fv, std::size_t length, unsigned m, double epsilon) {
  return fv.T == length && fv.H >= h_max(length, m) - epsilon;
}

OptimizationResult optimize(const Sequence& input, const OptimizerConfig& cfg) {
  cfg.validate();
  const std::size_t length = input.size();
  const unsigned m = input.bits_per_symbol();
  if (length < input.alphabet_size()) {
    throw Error(ErrorCode::SequenceTooShort, "optimize needs at least 2^m symbols");
  }
  const double target_h = h_max(length, m) - cfg.epsilon;

  Xoshiro256ss rng(cfg.rng_seed);
  OptimizationResult res{input, {}};
  Sequence& cur = res.sequence;
  auto& records = res.trace.records;
  std::vector<std::size_t> scratch;

  FitnessValue fit = evaluate(cur);
  records.push_back({0, fit.H, fit.T, Accepted::None});
  auto done = [&] { return fit.T == length && fit.H >= target_h; };
  if (done()) {
    res.trace.status = Status::Optimal;
    return res;
  }

  for (std::uint64_t g = 1; g <= cfg.max_generations; ++g) {
    bool took_c = false, took_m = false;

    const CrossoverPlan plan = draw_crossover_plan(cur, rng);
    Sequence cand = crossover(cur, plan);
    const double hc = sorted_entropy(cand.histogram(), length);
    if (hc >= fit.H) {
      const std::size_t tc = stats::period(cand.symbols(), scratch);
      if (tc >= fit.T) {
        cur = std::move(cand);
        fit.H = hc;
        fit.T = tc;
        took_c = true;
      }
    }

    const auto r = static_cast<std::size_t>(rng.below(length));
    const auto r2 = static_cast<std::size_t>(rng.below(length));
    auto& sym = cur.mutable_symbols();
    std::swap(sym[r], sym[r2]);
    const std::size_t tm = stats::period(cur.symbols(), scratch);
    if (tm >= fit.T) {
      fit.T = tm;
      took_m = true;
    } else {
      std::swap(sym[r], sym[r2]);
    }

    const Accepted acc = took_c ? (took_m ? Accepted::Both : Accepted::Crossover)
                                : (took_m ? Accepted::Mutation : Accepted::None);
    records.push_back({g, fit.H, fit.T, acc});
    if (done()) {
      res.trace.status = Status::Optimal;
      return res;
    }
  }
  res.trace.status = Status::CapReached;
  return res;
}

void write_trace_csv(std::ostream& os, const OptimizationTrace& trace) {
  os << "generation,H,T,accepted\n";
  const auto old_prec = os.precision(17);
  for (const auto& r : trace.records) {
    os << r.generation << ',' << r.H << ',' << r.T << ',' << to_string(r.accepted) << '\n';
  }
  os.precision(old_prec);
}

}  // namespace ecga::moga
