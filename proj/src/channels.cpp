#include "qmet/channels.hpp"

#include <cmath>

namespace qmet {

SquareComplexMatrix phase_generator() {
    return SquareComplexMatrix::diagonal({cd{0.0}, cd{1.0}, cd{1.0}, cd{2.0}});
}

SquareComplexMatrix conditional_phase_generator() {
    return SquareComplexMatrix::diagonal({cd{0.0}, cd{2.0}});
}

DensityMatrix depolarize(const DensityMatrix& rho, double eta) {
    if (eta < 0.0 || eta > 1.0) throw DomainError("depolarize: eta must lie in [0,1]");
    if (rho.dim() != 4) throw DimensionError("depolarize: expected a two-qubit state");
    const SquareComplexMatrix mixed = (0.25 * (1.0 - eta)) * SquareComplexMatrix::identity(4);
    return DensityMatrix(mixed + eta * rho.matrix());
}

DensityMatrix phase_imprint(const DensityMatrix& rho, double phi) {
    if (rho.dim() != 4) throw DimensionError("phase_imprint: expected a two-qubit state");
    const cd e1 = std::polar(1.0, phi);
    const cd e2 = std::polar(1.0, 2.0 * phi);
    const SquareComplexMatrix u = SquareComplexMatrix::diagonal({cd{1.0}, e1, e1, e2});
    return DensityMatrix(u * rho.matrix() * u.adjoint());
}

double check_order_independence(const DensityMatrix& rho, double eta, double phi) {
    const DensityMatrix a = phase_imprint(depolarize(rho, eta), phi);
    const DensityMatrix b = depolarize(phase_imprint(rho, phi), eta);
    return max_abs_diff(a.matrix(), b.matrix());
}

}  // namespace qmet
