#include "mpecalc/confirmation.hpp"

#include <string>

#include "mpecalc/error.hpp"

namespace mpecalc {

std::string_view to_string(Method m) {
    switch (m) {
        case Method::rmpe: return "rmpe";
        case Method::bayes_inverse: return "bayes_inverse";
        case Method::bayes_total: return "bayes_total";
        case Method::bayes_implication: return "bayes_implication";
        case Method::relative_frequency: return "relative_frequency";
    }
    return "unknown";
}

Probability residual_evidence(const EvidenceCase& c) {
    if (c.e_ext < c.prior) {
        throw DomainError("not an implication case: P(E_EXT) = " + std::to_string(c.e_ext.value()) +
                          " < P(H) = " + std::to_string(c.prior.value()));
    }
    return Probability::from_computed(c.e_ext.value() - c.prior.value());
}

Probability weight_bearing_evidence(const EvidenceCase& c) {
    return complement(residual_evidence(c));
}

ConfirmationResult rmpe_implication(const EvidenceCase& c) {
    const Probability residual = residual_evidence(c);
    ConfirmationResult r;
    r.method = Method::rmpe;
    r.value = Probability::from_computed(1.0 - (1.0 - c.prior.value()) * residual.value());
    r.e_w = complement(residual);
    r.residual = residual;
    return r;
}

ConfirmationResult rmpe_multi(Probability prior, std::span<const Probability> e_exts) {
    if (e_exts.empty()) {
        throw ArgumentError("rmpe_multi: empty evidence list");
    }
    double residual_product = 1.0;
    for (Probability e : e_exts) {
        residual_product *= residual_evidence({prior, e}).value();
    }
    const Probability residual = Probability::from_computed(residual_product);
    ConfirmationResult r;
    r.method = Method::rmpe;
    r.value = Probability::from_computed(1.0 - (1.0 - prior.value()) * residual.value());
    r.e_w = complement(residual);
    r.residual = residual;
    return r;
}

}  // namespace mpecalc
