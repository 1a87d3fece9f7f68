#pragma once

// Ascending operations on probabilities built from their complements.
//
// MPE multiplies probabilities of error; cMPE adds supporting probabilities
// as 1 - prod(1 - p_i) (the probabilistic sum); DPE undoes a cMPE addition
// by dividing the probabilities of error.
//
// cMPE assumes the inputs support one another and are semantically
// independent (obtained by different ways of observation). That is a claim
// about the inputs which cannot be checked here; callers carry it as an
// assertion. Inputs that support only in part must be pre-scaled by the
// caller to their effective part.

#include <optional>
#include <span>

#include "mpecalc/probability.hpp"

namespace mpecalc {

// prod(e_i) over probabilities of error. Empty input is an ArgumentError.
Probability mpe(std::span<const Probability> error_probs);

// 1 - prod(1 - p_i). Empty input is an ArgumentError.
Probability cmpe_add(std::span<const Probability> ps);

// a + b - a*b; algebraically identical to cmpe_add({a, b}).
Probability cmpe_add_expanded(Probability a, Probability b);

// 1 - (1 - minuend) / prod(1 - s_i), evaluated as a single quotient.
// DivisionError if any subtrahend is 1, DomainError if the minuend does not
// dominate (result below 0), ArgumentError if subtrahends is empty.
Probability dpe_subtract(Probability minuend, std::span<const Probability> subtrahends);

struct SupportMeasure {
    double linear = 0.0;                   // posterior - baseline, in [-1, 1]
    std::optional<Probability> dpe_based;  // only when posterior >= baseline and baseline < 1
};

// Linear and DPE support of a posterior over a baseline. The baseline is
// explicit so both S = P(H|E) - P(H) and P(H|E) -DPE- P(E) are expressible.
SupportMeasure support(Probability posterior, Probability baseline);

}  // namespace mpecalc
