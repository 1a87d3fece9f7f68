#pragma once

// Unit-interval scalar and the two classical multiplication rules.

#include <compare>
#include <initializer_list>
#include <span>
#include <vector>

namespace mpecalc {

// Absolute slack allowed when a *computed* value strays outside [0, 1]
// through rounding. Inputs get no slack.
inline constexpr double kRoundingSlack = 1e-12;

class Probability {
public:
    constexpr Probability() noexcept = default;

    // Throws ArgumentError for NaN or anything outside [0, 1].
    explicit Probability(double value);

    // Wraps the result of a formula: values within kRoundingSlack of the
    // interval are snapped onto it, anything else is a DomainError.
    static Probability from_computed(double value);

    static constexpr Probability impossible() noexcept { return Probability{}; }
    static Probability certain() noexcept;

    [[nodiscard]] constexpr double value() const noexcept { return value_; }

    friend constexpr auto operator<=>(Probability, Probability) noexcept = default;

private:
    double value_ = 0.0;
};

// Validates a batch of raw numbers.
std::vector<Probability> probabilities(std::span<const double> values);
std::vector<Probability> probabilities(std::initializer_list<double> values);

// 1 - p.
Probability complement(Probability p);

// A marginal together with a probability conditional on it, e.g. P(A), P(B|A).
struct ConditionalPair {
    Probability basis;
    Probability conditional;
};

// P(A & B & ... & N) for independent events. Empty input is an ArgumentError.
Probability conjoin_independent(std::span<const Probability> ps);

// P(A & B) = P(A) * P(B|A).
Probability conjoin_conditional(Probability p_a, Probability p_b_given_a);
Probability conjoin_conditional(const ConditionalPair& pair);

}  // namespace mpecalc
