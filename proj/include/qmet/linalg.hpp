#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qmet/errors.hpp"

namespace qmet {

using cd = std::complex<double>;

/// Dense square complex matrix, row-major. Small dimensions only (2 and 4
/// in practice); everything is value-semantic and immutable-friendly.
class SquareComplexMatrix {
public:
    explicit SquareComplexMatrix(std::size_t dim)
        : dim_(dim), entries_(dim * dim, cd{0.0, 0.0}) {}

    static SquareComplexMatrix identity(std::size_t dim);
    static SquareComplexMatrix diagonal(const std::vector<cd>& diag);

    std::size_t dim() const { return dim_; }

    cd& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
    const cd& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

    SquareComplexMatrix adjoint() const;
    cd trace() const;

    /// Largest entrywise |a_ij|.
    double max_abs() const;

    bool is_hermitian(double tol = 1e-9) const;
    bool is_psd(double tol = 1e-9) const;

    friend SquareComplexMatrix operator+(const SquareComplexMatrix& a, const SquareComplexMatrix& b);
    friend SquareComplexMatrix operator-(const SquareComplexMatrix& a, const SquareComplexMatrix& b);
    friend SquareComplexMatrix operator*(const SquareComplexMatrix& a, const SquareComplexMatrix& b);
    friend SquareComplexMatrix operator*(cd scalar, const SquareComplexMatrix& a);
    friend SquareComplexMatrix operator*(double scalar, const SquareComplexMatrix& a);

private:
    std::size_t dim_;
    std::vector<cd> entries_;
};

/// Largest entrywise |a_ij - b_ij|.
double max_abs_diff(const SquareComplexMatrix& a, const SquareComplexMatrix& b);

struct HermitianEigenDecomposition {
    std::vector<double> eigenvalues;     // ascending
    SquareComplexMatrix eigenvectors;    // orthonormal columns, same order
};

/// Cyclic complex Jacobi. Converges when the off-diagonal Frobenius mass
/// drops below 1e-14; gives up after 100 sweeps.
HermitianEigenDecomposition hermitian_eig(const SquareComplexMatrix& a);

/// Principal square root of a Hermitian PSD matrix. Eigenvalues in
/// [-1e-9, 0) are clipped to zero; anything below -1e-9 is rejected.
SquareComplexMatrix matrix_sqrt(const SquareComplexMatrix& a);

/// Kronecker product, subsystem a as the left factor.
SquareComplexMatrix kron(const SquareComplexMatrix& a, const SquareComplexMatrix& b);

enum class Subsystem { First, Second };

/// Trace out one qubit of a two-qubit operator (dim 4 -> dim 2).
SquareComplexMatrix partial_trace(const SquareComplexMatrix& a, Subsystem keep);

}  // namespace qmet
