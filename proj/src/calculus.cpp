#include "mpecalc/calculus.hpp"

#include <array>
#include <string>

#include "mpecalc/error.hpp"

namespace mpecalc {

Probability mpe(std::span<const Probability> error_probs) {
    if (error_probs.empty()) {
        throw ArgumentError("mpe: empty list");
    }
    double product = 1.0;
    for (Probability e : error_probs) {
        product *= e.value();
    }
    return Probability::from_computed(product);
}

Probability cmpe_add(std::span<const Probability> ps) {
    if (ps.empty()) {
        throw ArgumentError("cmpe_add: empty list");
    }
    // acc + p(1 - acc) equals 1 - prod(1 - p) but keeps x + 0 == x and x + 1 == 1 exact.
    double acc = 0.0;
    for (Probability p : ps) {
        acc += p.value() * (1.0 - acc);
    }
    return Probability::from_computed(acc);
}

Probability cmpe_add_expanded(Probability a, Probability b) {
    return Probability::from_computed(a.value() + b.value() - a.value() * b.value());
}

Probability dpe_subtract(Probability minuend, std::span<const Probability> subtrahends) {
    if (subtrahends.empty()) {
        throw ArgumentError("dpe_subtract: empty subtrahend list");
    }
    double divisor = 1.0;
    double removed = 0.0;  // cMPE union of the subtrahends, 1 - divisor
    for (Probability s : subtrahends) {
        if (s.value() == 1.0) {
            throw DivisionError("dpe_subtract: subtrahend of 1 leaves a zero probability of error");
        }
        divisor *= 1.0 - s.value();
        removed += s.value() * (1.0 - removed);
    }
    if (divisor == 0.0) {
        throw DivisionError("dpe_subtract: product of error probabilities underflows to 0");
    }
    // 1 - (1 - m) / divisor, rearranged so that subtracting 0 returns m unchanged.
    const double result = (minuend.value() - removed) / divisor;
    if (result < -kRoundingSlack) {
        throw DomainError("dpe_subtract: minuend does not dominate (result " +
                          std::to_string(result) + ")");
    }
    return Probability::from_computed(result);
}

SupportMeasure support(Probability posterior, Probability baseline) {
    SupportMeasure s;
    s.linear = posterior.value() - baseline.value();
    if (posterior >= baseline && baseline.value() < 1.0) {
        const std::array<Probability, 1> sub{baseline};
        s.dpe_based = dpe_subtract(posterior, sub);
    }
    return s;
}

}  // namespace mpecalc
