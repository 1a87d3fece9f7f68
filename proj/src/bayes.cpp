#include "mpecalc/bayes.hpp"

#include <string>

#include "mpecalc/error.hpp"

namespace mpecalc {

namespace {

Probability bounded_quotient(const char* what, double num, double den) {
    if (den == 0.0) {
        throw DivisionError(std::string(what) + ": zero denominator");
    }
    const double q = num / den;
    if (q > 1.0 + kRoundingSlack) {
        throw DomainError(std::string(what) + ": quotient " + std::to_string(num) + " / " +
                          std::to_string(den) + " = " + std::to_string(q) + " exceeds 1");
    }
    return Probability::from_computed(q);
}

}  // namespace

Probability bayes_inverse(const BayesInputs& in) {
    if (!in.evidence_marginal) {
        throw ArgumentError("bayes_inverse: evidence marginal P(E) required");
    }
    return bounded_quotient("bayes_inverse", in.prior.value() * in.likelihood.value(),
                            in.evidence_marginal->value());
}

Probability bayes_total(const BayesInputs& in) {
    if (!in.false_positive) {
        throw ArgumentError("bayes_total: false-positive rate P(E|~H) required");
    }
    const double joint = in.prior.value() * in.likelihood.value();
    const double other = (1.0 - in.prior.value()) * in.false_positive->value();
    return bounded_quotient("bayes_total", joint, joint + other);
}

Probability bayes_implication(Probability prior, Probability e_ext) {
    if (e_ext.value() == 0.0) {
        throw DivisionError("bayes_implication: P(E) is 0");
    }
    if (e_ext < prior) {
        throw DomainError("bayes_implication: P(E) < P(H), quotient would exceed 1");
    }
    return Probability::from_computed(prior.value() / e_ext.value());
}

Probability relative_frequency(FrequencyCounts counts) {
    if (counts.possible == 0) {
        throw ArgumentError("relative_frequency: no possible cases");
    }
    if (counts.favorable > counts.possible) {
        throw ArgumentError("relative_frequency: more favorable than possible cases");
    }
    return Probability::from_computed(static_cast<double>(counts.favorable) /
                                      static_cast<double>(counts.possible));
}

std::vector<BroadStep> broad_chain(Probability prior, std::span<const Probability> consequences) {
    std::vector<BroadStep> steps;
    steps.reserve(consequences.size());
    double denominator = 1.0;
    for (std::size_t i = 0; i < consequences.size(); ++i) {
        const double c = consequences[i].value();
        if (c == 0.0) {
            throw DivisionError("broad_chain: consequence " + std::to_string(i + 1) + " is 0");
        }
        denominator *= c;
        const double value = prior.value() / denominator;
        steps.push_back({i + 1, value, value > 1.0});
    }
    return steps;
}

}  // namespace mpecalc
