#include "mpecalc/probability.hpp"

#include <cmath>
#include <string>

#include "mpecalc/error.hpp"

namespace mpecalc {

Probability::Probability(double value) : value_(value) {
    if (std::isnan(value) || value < 0.0 || value > 1.0) {
        throw ArgumentError("probability out of [0, 1]: " + std::to_string(value));
    }
}

Probability Probability::from_computed(double value) {
    if (std::isnan(value)) {
        throw DomainError("computed probability is NaN");
    }
    if (value < 0.0 && value >= -kRoundingSlack) {
        return Probability{0.0};
    }
    if (value > 1.0 && value <= 1.0 + kRoundingSlack) {
        return Probability{1.0};
    }
    if (value < 0.0 || value > 1.0) {
        throw DomainError("computed value leaves [0, 1]: " + std::to_string(value));
    }
    return Probability{value};
}

Probability Probability::certain() noexcept {
    Probability p;
    p.value_ = 1.0;
    return p;
}

std::vector<Probability> probabilities(std::span<const double> values) {
    std::vector<Probability> out;
    out.reserve(values.size());
    for (double v : values) {
        out.emplace_back(v);
    }
    return out;
}

std::vector<Probability> probabilities(std::initializer_list<double> values) {
    return probabilities(std::span<const double>(values.begin(), values.size()));
}

Probability complement(Probability p) {
    return Probability::from_computed(1.0 - p.value());
}

Probability conjoin_independent(std::span<const Probability> ps) {
    if (ps.empty()) {
        throw ArgumentError("conjoin_independent: empty list");
    }
    double product = 1.0;
    for (Probability p : ps) {
        product *= p.value();
    }
    return Probability::from_computed(product);
}

Probability conjoin_conditional(Probability p_a, Probability p_b_given_a) {
    return Probability::from_computed(p_a.value() * p_b_given_a.value());
}

Probability conjoin_conditional(const ConditionalPair& pair) {
    return conjoin_conditional(pair.basis, pair.conditional);
}

}  // namespace mpecalc
