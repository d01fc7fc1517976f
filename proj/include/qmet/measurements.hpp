#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmet/states.hpp"

namespace qmet {

// Outcome labels are the wire contract for counts files.
inline constexpr const char* kLabelB00 = "B00";
inline constexpr const char* kLabelB10 = "B10";
inline constexpr const char* kLabelB01 = "B01";
inline constexpr const char* kLabelB11 = "B11";
inline constexpr const char* kLabelGroup = "group_B01_B11";
inline constexpr const char* kLabelPP = "++";
inline constexpr const char* kLabelPM = "+-";
inline constexpr const char* kLabelMP = "-+";
inline constexpr const char* kLabelMM = "--";

/// Finite labeled POVM; elements must be Hermitian PSD and sum to identity.
class Povm {
public:
    using Element = std::pair<std::string, SquareComplexMatrix>;

    explicit Povm(std::vector<Element> elements);

    std::size_t size() const { return elements_.size(); }
    std::size_t dim() const { return elements_.front().second.dim(); }
    const Element& operator[](std::size_t i) const { return elements_[i]; }
    const std::vector<Element>& elements() const { return elements_; }

private:
    std::vector<Element> elements_;
};

/// Probabilities over labeled outcomes, with optional analytic
/// d(probability)/d(phi) in the same order.
struct OutcomeDistribution {
    std::vector<std::string> labels;
    std::vector<double> probabilities;
    std::optional<std::vector<double>> dprob_dphi;

    OutcomeDistribution(std::vector<std::string> labels_in, std::vector<double> probs_in,
                        std::optional<std::vector<double>> dprobs_in = std::nullopt);

    std::string to_json() const;  // {"labels": [...], "p": [...]}
};

struct VisibilityModelParams {
    double eta;
    double visibility;

    VisibilityModelParams(double eta_in, double visibility_in);
};

/// The four Bell projectors, labels B00, B10, B01, B11.
Povm bell_povm();

/// Three-outcome analyzer: {B00}, {B10}, {B01, B11} merged.
Povm grouped_bell_povm();

/// Projectors onto |++>, |+->, |-+>, |--> with |+-> = (|0> +- |1>)/sqrt(2).
Povm local_diag_povm();

/// Born rule p_i = Tr(M_i rho). No derivatives populated.
OutcomeDistribution probabilities(const Povm& povm, const DensityMatrix& rho);

/// Born-rule probabilities plus analytic phase derivatives
/// dp_i = Tr(M_i i[H, rho]) for the unitary family generated by H.
OutcomeDistribution probabilities_with_derivative(const Povm& povm, const DensityMatrix& rho_phi,
                                                  const SquareComplexMatrix& generator);

/// Bell-analyzer model with visibility damping the cosine terms:
///   P_B00 = (1+eta)/4 + V eta cos(2 phi)/2,  P_B10 mirrored,
///   P_B01 = P_B11 = (1-eta)/4.
OutcomeDistribution model_bell_probs(double phi, const VisibilityModelParams& params);

/// Same model with the phase-independent outcomes merged.
OutcomeDistribution model_grouped_bell_probs(double phi, const VisibilityModelParams& params);

/// Local |+-+-> model: P_++ = P_-- = (1 + V eta cos 2 phi)/4, the
/// mixed-sign outcomes mirrored.
OutcomeDistribution model_local_probs(double phi, const VisibilityModelParams& params);

struct AdaptiveProjection {
    double probability;
    DensityMatrix conditional;  // state of the unmeasured qubit
};

/// Project the first qubit onto |m><m| and return the outcome probability
/// together with the normalized conditional state of the second qubit.
AdaptiveProjection adaptive_project(const DensityMatrix& rho_phi, const PureState& m);

}  // namespace qmet
