#include "qmet/measurements.hpp"

#include <cassert>
#include <cmath>

#include <json.hpp>

namespace qmet {

Povm::Povm(std::vector<Element> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) throw DomainError("Povm: no elements");
    const std::size_t n = elements_.front().second.dim();
    SquareComplexMatrix sum(n);
    for (const auto& [label, op] : elements_) {
        if (op.dim() != n) throw DimensionError("Povm: mixed element dimensions");
        if (!op.is_hermitian(1e-9))
            throw NotHermitianError("Povm: element '" + label + "' is not Hermitian");
        if (!op.is_psd(1e-9))
            throw NotPsdError("Povm: element '" + label + "' is not PSD");
        sum = sum + op;
    }
    if (max_abs_diff(sum, SquareComplexMatrix::identity(n)) > 1e-9)
        throw DomainError("Povm: elements do not sum to identity");
}

OutcomeDistribution::OutcomeDistribution(std::vector<std::string> labels_in,
                                         std::vector<double> probs_in,
                                         std::optional<std::vector<double>> dprobs_in)
    : labels(std::move(labels_in)),
      probabilities(std::move(probs_in)),
      dprob_dphi(std::move(dprobs_in)) {
    if (labels.size() != probabilities.size())
        throw DomainError("OutcomeDistribution: label/probability count mismatch");
    double total = 0.0;
    for (double& p : probabilities) {
        if (p < -1e-12) throw DomainError("OutcomeDistribution: negative probability");
        p = std::max(p, 0.0);
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw DomainError("OutcomeDistribution: probabilities do not sum to 1");
    if (dprob_dphi) {
        if (dprob_dphi->size() != labels.size())
            throw DomainError("OutcomeDistribution: derivative count mismatch");
        double dsum = 0.0;
        for (double d : *dprob_dphi) dsum += d;
        if (std::abs(dsum) > 1e-9)
            throw DomainError("OutcomeDistribution: derivatives do not sum to 0");
    }
}

std::string OutcomeDistribution::to_json() const {
    nlohmann::json j;
    j["labels"] = labels;
    j["p"] = probabilities;
    return j.dump();
}

VisibilityModelParams::VisibilityModelParams(double eta_in, double visibility_in)
    : eta(eta_in), visibility(visibility_in) {
    if (eta < 0.0 || eta > 1.0)
        throw DomainError("VisibilityModelParams: eta must lie in [0,1]");
    if (visibility < 0.0 || visibility > 1.0)
        throw DomainError("VisibilityModelParams: visibility must lie in [0,1]");
}

Povm bell_povm() {
    std::vector<Povm::Element> elems;
    elems.emplace_back(kLabelB00, bell_state(0, 0).projector());
    elems.emplace_back(kLabelB10, bell_state(1, 0).projector());
    elems.emplace_back(kLabelB01, bell_state(0, 1).projector());
    elems.emplace_back(kLabelB11, bell_state(1, 1).projector());
    return Povm(std::move(elems));
}

Povm grouped_bell_povm() {
    std::vector<Povm::Element> elems;
    elems.emplace_back(kLabelB00, bell_state(0, 0).projector());
    elems.emplace_back(kLabelB10, bell_state(1, 0).projector());
    elems.emplace_back(kLabelGroup,
                       bell_state(0, 1).projector() + bell_state(1, 1).projector());
    return Povm(std::move(elems));
}

Povm local_diag_povm() {
    const double s = 1.0 / std::sqrt(2.0);
    const PureState plus({cd{s}, cd{s}});
    const PureState minus({cd{s}, cd{-s}});
    auto joint = [](const PureState& a, const PureState& b) {
        return kron(a.projector(), b.projector());
    };
    std::vector<Povm::Element> elems;
    elems.emplace_back(kLabelPP, joint(plus, plus));
    elems.emplace_back(kLabelPM, joint(plus, minus));
    elems.emplace_back(kLabelMP, joint(minus, plus));
    elems.emplace_back(kLabelMM, joint(minus, minus));
    return Povm(std::move(elems));
}

OutcomeDistribution probabilities(const Povm& povm, const DensityMatrix& rho) {
    if (povm.dim() != rho.dim()) throw DimensionError("probabilities: dimension mismatch");
    std::vector<std::string> labels;
    std::vector<double> probs;
    for (const auto& [label, op] : povm.elements()) {
        labels.push_back(label);
        probs.push_back((op * rho.matrix()).trace().real());
    }
    return OutcomeDistribution(std::move(labels), std::move(probs));
}

OutcomeDistribution probabilities_with_derivative(const Povm& povm, const DensityMatrix& rho_phi,
                                                  const SquareComplexMatrix& generator) {
    if (povm.dim() != rho_phi.dim() || generator.dim() != rho_phi.dim())
        throw DimensionError("probabilities_with_derivative: dimension mismatch");
    // d rho/d phi = i [H, rho] for rho_phi = e^{iH phi} rho e^{-iH phi}.
    const SquareComplexMatrix drho =
        cd{0.0, 1.0} * (generator * rho_phi.matrix() - rho_phi.matrix() * generator);
    std::vector<std::string> labels;
    std::vector<double> probs, dprobs;
    for (const auto& [label, op] : povm.elements()) {
        labels.push_back(label);
        probs.push_back((op * rho_phi.matrix()).trace().real());
        dprobs.push_back((op * drho).trace().real());
    }
    return OutcomeDistribution(std::move(labels), std::move(probs), std::move(dprobs));
}

OutcomeDistribution model_bell_probs(double phi, const VisibilityModelParams& params) {
    const double eta = params.eta;
    const double v = params.visibility;
    const double c = v * eta * std::cos(2.0 * phi) / 2.0;
    const double d = v * eta * std::sin(2.0 * phi);
    const double base = (1.0 + eta) / 4.0;
    const double tail = (1.0 - eta) / 4.0;
    return OutcomeDistribution({kLabelB00, kLabelB10, kLabelB01, kLabelB11},
                               {base + c, base - c, tail, tail},
                               std::vector<double>{-d, d, 0.0, 0.0});
}

OutcomeDistribution model_grouped_bell_probs(double phi, const VisibilityModelParams& params) {
    const double eta = params.eta;
    const double v = params.visibility;
    const double c = v * eta * std::cos(2.0 * phi) / 2.0;
    const double d = v * eta * std::sin(2.0 * phi);
    const double base = (1.0 + eta) / 4.0;
    return OutcomeDistribution({kLabelB00, kLabelB10, kLabelGroup},
                               {base + c, base - c, (1.0 - eta) / 2.0},
                               std::vector<double>{-d, d, 0.0});
}

OutcomeDistribution model_local_probs(double phi, const VisibilityModelParams& params) {
    const double c = params.visibility * params.eta * std::cos(2.0 * phi);
    const double d = params.visibility * params.eta * std::sin(2.0 * phi) / 2.0;
    return OutcomeDistribution({kLabelPP, kLabelPM, kLabelMP, kLabelMM},
                               {(1.0 + c) / 4.0, (1.0 - c) / 4.0, (1.0 - c) / 4.0, (1.0 + c) / 4.0},
                               std::vector<double>{-d, d, d, -d});
}

AdaptiveProjection adaptive_project(const DensityMatrix& rho_phi, const PureState& m) {
    if (rho_phi.dim() != 4) throw DimensionError("adaptive_project: expected a two-qubit state");
    if (m.dim() != 2) throw DimensionError("adaptive_project: projector must be a single qubit");
    const SquareComplexMatrix p = kron(m.projector(), SquareComplexMatrix::identity(2));
    const double prob = (p * rho_phi.matrix()).trace().real();
    if (prob < 1e-12)
        throw CannotConditionError("adaptive_project: outcome probability vanishes");
    const SquareComplexMatrix post = p * rho_phi.matrix() * p;
    SquareComplexMatrix cond = (1.0 / prob) * partial_trace(post, Subsystem::Second);
    cond = 0.5 * (cond + cond.adjoint());
    return AdaptiveProjection{prob, DensityMatrix(std::move(cond))};
}

}  // namespace qmet
