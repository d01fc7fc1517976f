#pragma once

#include <string>
#include <vector>

#include "qmet/linalg.hpp"

namespace qmet {

/// Normalized state vector on 2 or 4 dimensions.
/// Basis order for two qubits is |00>, |01>, |10>, |11>.
class PureState {
public:
    explicit PureState(std::vector<cd> amplitudes);

    std::size_t dim() const { return amplitudes_.size(); }
    const std::vector<cd>& amplitudes() const { return amplitudes_; }
    const cd& operator[](std::size_t i) const { return amplitudes_[i]; }

    /// Outer product |psi><psi|.
    SquareComplexMatrix projector() const;

    cd inner(const PureState& other) const;  // <this|other>

private:
    std::vector<cd> amplitudes_;
};

/// Trace-1 Hermitian PSD operator. Construction validates eagerly; invalid
/// matrices are rejected rather than repaired.
class DensityMatrix {
public:
    explicit DensityMatrix(SquareComplexMatrix m);
    explicit DensityMatrix(const PureState& psi) : DensityMatrix(psi.projector()) {}

    std::size_t dim() const { return matrix_.dim(); }
    const SquareComplexMatrix& matrix() const { return matrix_; }

private:
    SquareComplexMatrix matrix_;
};

/// |B_kj> = (|0,j> + (-1)^k |1, 1 xor j>) / sqrt(2).
PureState bell_state(int k, int j);

/// (1-eta) I/4 + eta |B00><B00|.
DensityMatrix werner(double eta);

/// Same state assembled as a convex mixture over the four Bell projectors.
DensityMatrix werner_from_bell_mixture(double eta);

/// Uhlmann fidelity Tr sqrt(sqrt(rho) sigma sqrt(rho)).
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Tr(rho^2).
double purity(const DensityMatrix& rho);

/// JSON wire format: {"dim": n, "re": [[...]], "im": [[...]]}.
std::string density_matrix_to_json(const DensityMatrix& rho);
DensityMatrix density_matrix_from_json(const std::string& text);

}  // namespace qmet
