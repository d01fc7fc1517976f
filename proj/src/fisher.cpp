#include "qmet/fisher.hpp"

#include <cmath>

namespace qmet {

double classical_fisher(const OutcomeDistribution& dist) {
    if (!dist.dprob_dphi)
        throw DomainError("classical_fisher: distribution carries no derivatives");
    double f = 0.0;
    for (std::size_t i = 0; i < dist.probabilities.size(); ++i) {
        const double p = dist.probabilities[i];
        const double dp = (*dist.dprob_dphi)[i];
        if (p < 1e-12) {
            if (std::abs(dp) < 1e-9) continue;  // 0/0 limit is 0
            throw DivergentInformationError(
                "classical_fisher: outcome '" + dist.labels[i] +
                "' has zero probability but non-zero derivative");
        }
        f += dp * dp / p;
    }
    return f;
}

double qfi_unitary_family(const DensityMatrix& rho, const SquareComplexMatrix& generator) {
    if (rho.dim() != generator.dim())
        throw DimensionError("qfi_unitary_family: dimension mismatch");
    const auto eig = hermitian_eig(rho.matrix());
    const std::size_t n = rho.dim();

    // h(i,j) = <psi_i | H | psi_j>
    SquareComplexMatrix h(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            cd s{0.0, 0.0};
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    s += std::conj(eig.eigenvectors(a, i)) * generator(a, b) *
                         eig.eigenvectors(b, j);
            h(i, j) = s;
        }

    double f = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double li = eig.eigenvalues[i], lj = eig.eigenvalues[j];
            if (li + lj < 1e-12) continue;
            const double diff = li - lj;
            f += 2.0 * diff * diff / (li + lj) * std::norm(h(i, j));
        }
    return f;
}

double qfi_coherent_closed(double eta) {
    if (eta < 0.0 || eta > 1.0) throw DomainError("qfi_coherent_closed: eta must lie in [0,1]");
    return 8.0 * eta * eta / (1.0 + eta);
}

double fisher_bell_closed(double phi, double eta) {
    if (eta < 0.0 || eta > 1.0) throw DomainError("fisher_bell_closed: eta must lie in [0,1]");
    const double s2 = std::sin(2.0 * phi);
    const double c2 = std::cos(2.0 * phi);
    const double num = 8.0 * eta * eta * (1.0 + eta) * s2 * s2;
    const double den = (1.0 + eta) * (1.0 + eta) - 4.0 * eta * eta * c2 * c2;
    // den vanishes only at eta=1 with cos^2(2 phi)=1, where num vanishes
    // too; the distribution then carries no extractable information.
    if (num == 0.0 || den <= 0.0) return 0.0;
    return num / den;
}

double fisher_local_closed(double phi, double eta) {
    if (eta < 0.0 || eta > 1.0) throw DomainError("fisher_local_closed: eta must lie in [0,1]");
    const double s2 = std::sin(2.0 * phi);
    const double c2 = std::cos(2.0 * phi);
    const double num = 4.0 * eta * eta * s2 * s2;
    const double den = 1.0 - eta * eta * c2 * c2;
    if (num == 0.0 || den <= 0.0) return 0.0;
    return num / den;
}

double qfi_adaptive_closed(cd m0, cd m1, double eta) {
    if (eta < 0.0 || eta > 1.0) throw DomainError("qfi_adaptive_closed: eta must lie in [0,1]");
    if (std::abs(std::norm(m0) + std::norm(m1) - 1.0) > 1e-9)
        throw DomainError("qfi_adaptive_closed: projector amplitudes are not normalized");
    return 16.0 * std::norm(m0 * m1) * eta * eta;
}

}  // namespace qmet
