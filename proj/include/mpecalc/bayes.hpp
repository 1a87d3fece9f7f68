#pragma once

// Classical Bayesian baselines, reproduced with their failure modes intact:
// out-of-range quotients are errors, and Broad's chain reports raw values
// that may exceed 1.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mpecalc/probability.hpp"

namespace mpecalc {

struct BayesInputs {
    Probability prior;                             // P(H)
    Probability likelihood;                        // P(E|H)
    std::optional<Probability> evidence_marginal;  // P(E), for bayes_inverse
    std::optional<Probability> false_positive;     // P(E|~H), for bayes_total
};

// P(H) * P(E|H) / P(E).
Probability bayes_inverse(const BayesInputs& in);

// P(H) P(E|H) / (P(H) P(E|H) + P(~H) P(E|~H)).
Probability bayes_total(const BayesInputs& in);

// P(H) / P(E) for H implying E.
Probability bayes_implication(Probability prior, Probability e_ext);

struct FrequencyCounts {
    std::uint64_t favorable = 0;
    std::uint64_t possible = 0;
};

Probability relative_frequency(FrequencyCounts counts);

struct BroadStep {
    std::size_t step = 0;  // 1-based
    double value = 0.0;    // prior / prod_{i<=step} c_i, deliberately unbounded
    bool exceeds_one = false;
};

// One entry per consequence; empty input yields no steps.
std::vector<BroadStep> broad_chain(Probability prior, std::span<const Probability> consequences);

}  // namespace mpecalc
