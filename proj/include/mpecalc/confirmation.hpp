#pragma once

// Confirmation of a hypothesis H by evidence E that H implies.
//
// The extensional evidence P(E_EXT) splits into the part inside H and the
// residual P(E_EXT) - P(H) lying outside it. The weight-bearing evidence
// P(E_W) = 1 - residual is what raises H, and the confirmed value is the
// cMPE sum of P(H) and P(E_W):
//
//     P(H_W) = 1 - (1 - P(H)) * (P(E_EXT) - P(H))
//
// Several semantically independent pieces of evidence multiply their
// residuals. Non-implication conditionals have no analogue here; use the
// Bayesian baseline for those.

#include <optional>
#include <span>
#include <string_view>

#include "mpecalc/probability.hpp"

namespace mpecalc {

struct EvidenceCase {
    Probability prior;   // P(H)
    Probability e_ext;   // P(E_EXT)
    bool independence_asserted = true;
};

enum class Method {
    rmpe,
    bayes_inverse,
    bayes_total,
    bayes_implication,
    relative_frequency,
};

std::string_view to_string(Method m);

struct ConfirmationResult {
    Method method = Method::rmpe;
    Probability value;
    std::optional<Probability> e_w;
    std::optional<Probability> residual;  // P(E_EXT) - P(H); e_w == 1 - residual
};

// P(E_EXT) - P(H). DomainError when e_ext < prior (not an implication case).
Probability residual_evidence(const EvidenceCase& c);

// 1 - (P(E_EXT) - P(H)).
Probability weight_bearing_evidence(const EvidenceCase& c);

// Exactly 1 when e_ext == prior; 2h - h^2 when e_ext == 1.
ConfirmationResult rmpe_implication(const EvidenceCase& c);

// 1 - (1 - P(H)) * prod(P(E_i) - P(H)). The result's residual is the product
// of the individual residuals.
ConfirmationResult rmpe_multi(Probability prior, std::span<const Probability> e_exts);

}  // namespace mpecalc
