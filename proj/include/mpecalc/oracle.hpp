#pragma once

// Ground truth that does not reuse the formulas under test: exact
// enumeration of the joint space of independent events, seeded Monte Carlo
// over the same space, and an explicit contingency-table cohort.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mpecalc/probability.hpp"

namespace mpecalc {

inline constexpr std::size_t kMaxExactEvents = 24;

struct NamedEvent {
    std::string name;
    Probability probability;
};

// n independent events; the 2^n atoms are implicit, an atom being the
// bitmask of events that occur and its weight the product of p or 1 - p.
class SampleSpace {
public:
    explicit SampleSpace(std::vector<NamedEvent> events);

    // Events named e1, e2, ...
    static SampleSpace from_probabilities(std::span<const Probability> ps);

    [[nodiscard]] const std::vector<NamedEvent>& events() const noexcept { return events_; }
    [[nodiscard]] std::size_t size() const noexcept { return events_.size(); }

private:
    std::vector<NamedEvent> events_;
};

struct Enumeration {
    std::uint64_t atoms = 0;
    double total_weight = 0.0;  // should be 1
    double union_weight = 0.0;  // atoms where at least one event occurs
};

// Visits every atom. CapacityError above kMaxExactEvents.
Enumeration enumerate_atoms(const SampleSpace& space);

// P(at least one event) by summing atom weights.
Probability union_probability_exact(const SampleSpace& space);

// Per-trial counter-keyed SplitMix64 streams.
inline constexpr std::string_view kGeneratorName = "splitmix64-counter";

struct MonteCarloEstimate {
    Probability estimate;
    double std_error = 0.0;  // sqrt(p(1-p)/trials)
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

// Result depends only on (space, trials, seed); threads == 0 picks the
// hardware concurrency. ArgumentError when trials == 0.
MonteCarloEstimate union_probability_monte_carlo(const SampleSpace& space, std::uint64_t trials,
                                                 std::uint64_t seed, unsigned threads = 1);

struct Cohort {
    std::uint64_t size = 0;
    Probability disease_rate;
    Probability sensitivity;
    Probability false_positive_rate;
};

// Expected counts of the four contingency cells.
struct CohortCells {
    double true_positive = 0.0;
    double false_negative = 0.0;
    double false_positive = 0.0;
    double true_negative = 0.0;
};

CohortCells cohort_cells(const Cohort& cohort);

// Diseased positives over all positives. DivisionError with no positives.
Probability cohort_posterior(const Cohort& cohort);

}  // namespace mpecalc
