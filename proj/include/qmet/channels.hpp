#pragma once

#include "qmet/states.hpp"

namespace qmet {

/// Generator of the phase imprint on two qubits:
/// H = |1><1| (x) I + I (x) |1><1| = diag(0, 1, 1, 2).
SquareComplexMatrix phase_generator();

/// Single-qubit phase generator used on a conditional probe, 2|1><1|,
/// matching the e^{i 2 phi} dependence of the conditional family.
SquareComplexMatrix conditional_phase_generator();

/// Global white noise: (1-eta) I/4 + eta rho.
DensityMatrix depolarize(const DensityMatrix& rho, double eta);

/// U rho U^dagger with U = exp(i H phi) = diag(1, e^{i phi}, e^{i phi}, e^{i 2 phi}).
DensityMatrix phase_imprint(const DensityMatrix& rho, double phi);

/// Max entrywise difference between imprint-then-depolarize and
/// depolarize-then-imprint. Identically ~0 for this noise model.
double check_order_independence(const DensityMatrix& rho, double eta, double phi);

}  // namespace qmet
