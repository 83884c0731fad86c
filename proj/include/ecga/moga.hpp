#pragma once

// Single-candidate genetic hill climb on (entropy, period).

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "ecga/rng.hpp"
#include "ecga/sequence.hpp"

namespace ecga::moga {

/// Entropy of the most uniform histogram of l symbols over 2^m values.
[[nodiscard]] double h_max(std::size_t length, unsigned m);

struct FitnessValue {
  double H = 0.0;
  std::size_t T = 0;
  double f = 0.0;  // H + T, reported only
};

/// H is summed over the sorted histogram so that equal count multisets give
/// bit-identical values.
[[nodiscard]] FitnessValue evaluate(const Sequence& s);

/// Zero-based: position positions[j] receives symbol perm[j].
struct CrossoverPlan {
  std::vector<Sequence::Symbol> perm;    // permutation of [0, 2^m)
  std::vector<std::size_t> positions;    // 2^m distinct indices in [0, l)

  /// Throws InvalidPlan if the plan does not fit a sequence of length l.
  void validate(std::size_t length, unsigned m) const;
};

/// Throws SequenceTooShort for l < 2^m and InvalidPlan for a bad plan.
[[nodiscard]] Sequence crossover(const Sequence& s, const CrossoverPlan& plan);

/// Zero-based indices; throws IndexOutOfRange.
[[nodiscard]] Sequence mutate_swap(const Sequence& s, std::size_t r, std::size_t r2);

/// Draws a plan for `s`. perm is uniform. Positions are drawn so that the
/// resulting histogram moves toward the most uniform one: each symbol s with
/// count c_s and target t_s (q or q+1) offers max(0, c_s + 1 - t_s) slots,
/// 2^m slots are drawn uniformly without replacement, and symbol s then
/// contributes that many of its occurrences, chosen uniformly.
[[nodiscard]] CrossoverPlan draw_crossover_plan(const Sequence& s, Xoshiro256ss& rng);

struct OptimizerConfig {
  std::uint64_t max_generations = 1'000'000;
  std::uint64_t rng_seed = 0;
  double epsilon = 1e-9;

  void validate() const;
};

enum class Accepted { None, Crossover, Mutation, Both };
[[nodiscard]] std::string_view to_string(Accepted a) noexcept;

enum class Status { Optimal, CapReached };
[[nodiscard]] std::string_view to_string(Status s) noexcept;

struct TraceRecord {
  std::uint64_t generation = 0;
  double H = 0.0;
  std::size_t T = 0;
  Accepted accepted = Accepted::None;

  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

/// Row 0 is the input; row g is the state after generation g.
struct OptimizationTrace {
  std::vector<TraceRecord> records;
  Status status = Status::CapReached;

  [[nodiscard]] std::uint64_t generations() const noexcept {
    return records.empty() ? 0 : records.back().generation;
  }
};

struct OptimizationResult {
  Sequence sequence;
  OptimizationTrace trace;
};

[[nodiscard]] bool is_optimal(const FitnessValue& fv, std::size_t length, unsigned m, double epsilon);

/// Throws SequenceTooShort for |input| < 2^m.
[[nodiscard]] OptimizationResult optimize(const Sequence& input, const OptimizerConfig& cfg);

/// CSV with header generation,H,T,accepted; H printed with 17 significant digits.
void write_trace_csv(std::ostream& os, const OptimizationTrace& trace);

}  // namespace ecga::moga
