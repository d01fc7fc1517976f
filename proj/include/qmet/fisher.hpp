#pragma once

#include <string>

#include "qmet/measurements.hpp"

namespace qmet {

struct FisherReport {
    std::string strategy;
    double eta;
    double phi;
    double visibility;
    double value;
};

/// Classical Fisher information F = sum_x (dp_x)^2 / p_x.
/// Outcomes with p < 1e-12 and |dp| < 1e-9 contribute 0; p < 1e-12 with a
/// non-vanishing derivative raises DivergentInformationError.
double classical_fisher(const OutcomeDistribution& dist);

/// QFI of the unitary family e^{iH phi} rho e^{-iH phi}:
/// 2 sum_{ij} (l_i - l_j)^2 / (l_i + l_j) |<psi_i|H|psi_j>|^2,
/// skipping pairs with l_i + l_j < 1e-12.
double qfi_unitary_family(const DensityMatrix& rho, const SquareComplexMatrix& generator);

/// Closed form 8 eta^2 / (1 + eta) for the Werner family.
double qfi_coherent_closed(double eta);

/// Bell-basis Fisher information,
/// 8 eta^2 (1+eta) sin^2(2 phi) / ((1+eta)^2 - 4 eta^2 cos^2(2 phi)).
double fisher_bell_closed(double phi, double eta);

/// Local diagonal-basis Fisher information,
/// 4 eta^2 sin^2(2 phi) / (1 - eta^2 cos^2(2 phi)).
double fisher_local_closed(double phi, double eta);

/// QFI of the conditional single-qubit family: 16 |m0 m1|^2 eta^2.
double qfi_adaptive_closed(cd m0, cd m1, double eta);

}  // namespace qmet
