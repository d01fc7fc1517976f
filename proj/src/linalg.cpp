#include "qmet/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qmet {

SquareComplexMatrix SquareComplexMatrix::identity(std::size_t dim) {
    SquareComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

SquareComplexMatrix SquareComplexMatrix::diagonal(const std::vector<cd>& diag) {
    SquareComplexMatrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

SquareComplexMatrix SquareComplexMatrix::adjoint() const {
    SquareComplexMatrix m(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

cd SquareComplexMatrix::trace() const {
    cd t{0.0, 0.0};
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

double SquareComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const cd& e : entries_) m = std::max(m, std::abs(e));
    return m;
}

bool SquareComplexMatrix::is_hermitian(double tol) const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
    return true;
}

bool SquareComplexMatrix::is_psd(double tol) const {
    if (!is_hermitian(1e-9)) return false;
    const auto eig = hermitian_eig(*this);
    return eig.eigenvalues.front() >= -tol;
}

SquareComplexMatrix operator+(const SquareComplexMatrix& a, const SquareComplexMatrix& b) {
    if (a.dim_ != b.dim_) throw DimensionError("matrix addition: dimension mismatch");
    SquareComplexMatrix r = a;
    for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] += b.entries_[i];
    return r;
}

SquareComplexMatrix operator-(const SquareComplexMatrix& a, const SquareComplexMatrix& b) {
    if (a.dim_ != b.dim_) throw DimensionError("matrix subtraction: dimension mismatch");
    SquareComplexMatrix r = a;
    for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] -= b.entries_[i];
    return r;
}

SquareComplexMatrix operator*(const SquareComplexMatrix& a, const SquareComplexMatrix& b) {
    if (a.dim_ != b.dim_) throw DimensionError("matrix product: dimension mismatch");
    const std::size_t n = a.dim_;
    SquareComplexMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const cd aik = a(i, k);
            if (aik == cd{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

SquareComplexMatrix operator*(cd scalar, const SquareComplexMatrix& a) {
    SquareComplexMatrix r = a;
    for (cd& e : r.entries_) e *= scalar;
    return r;
}

SquareComplexMatrix operator*(double scalar, const SquareComplexMatrix& a) {
    return cd{scalar, 0.0} * a;
}

double max_abs_diff(const SquareComplexMatrix& a, const SquareComplexMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionError("max_abs_diff: dimension mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

namespace {

double off_diagonal_mass(const SquareComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return s;
}

}  // namespace

HermitianEigenDecomposition hermitian_eig(const SquareComplexMatrix& input) {
    if (!input.is_hermitian(1e-9))
        throw NotHermitianError("hermitian_eig: input is not Hermitian within 1e-9");

    const std::size_t n = input.dim();

    // Work on the exactly-Hermitian part so roundoff in the input cannot
    // leak imaginary diagonal entries into the iteration.
    SquareComplexMatrix a(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a(i, j) = 0.5 * (input(i, j) + std::conj(input(j, i)));

    SquareComplexMatrix v = SquareComplexMatrix::identity(n);

    // Converged once the off-diagonal Frobenius norm is below 1e-14.
    constexpr double kOffTol = 1e-28;  // compared against the squared mass
    constexpr int kMaxSweeps = 100;

    bool converged = off_diagonal_mass(a) < kOffTol;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double r = std::abs(a(p, q));
                if (r == 0.0) continue;
                const cd phase = a(p, q) / r;

                // Annihilate a_pq with a unitary plane rotation.
                const double tau = (a(p, p).real() - a(q, q).real()) / (2.0 * r);
                const double t = (tau >= 0.0)
                                     ? -1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                     : 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                const cd gpq = s * phase;          // G(p,q)
                const cd gqp = -s * std::conj(phase);  // G(q,p)

                // A <- G^dagger A G, columns then rows.
                for (std::size_t k = 0; k < n; ++k) {
                    const cd akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp + gqp * akq;
                    a(k, q) = gpq * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cd apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk + std::conj(gqp) * aqk;
                    a(q, k) = std::conj(gpq) * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();

                for (std::size_t k = 0; k < n; ++k) {
                    const cd vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp + gqp * vkq;
                    v(k, q) = gpq * vkp + c * vkq;
                }
            }
        }
        converged = off_diagonal_mass(a) < kOffTol;
    }
    if (!converged)
        throw ConvergenceError("hermitian_eig: Jacobi iteration did not converge in 100 sweeps");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&a](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    HermitianEigenDecomposition out{std::vector<double>(n), SquareComplexMatrix(n)};
    for (std::size_t col = 0; col < n; ++col) {
        out.eigenvalues[col] = a(order[col], order[col]).real();
        for (std::size_t k = 0; k < n; ++k) out.eigenvectors(k, col) = v(k, order[col]);
    }
    return out;
}

SquareComplexMatrix matrix_sqrt(const SquareComplexMatrix& a) {
    const auto eig = hermitian_eig(a);
    const std::size_t n = a.dim();
    SquareComplexMatrix r(n);
    for (std::size_t k = 0; k < n; ++k) {
        double lam = eig.eigenvalues[k];
        if (lam < -1e-9)
            throw NotPsdError("matrix_sqrt: eigenvalue below -1e-9, matrix is not PSD");
        lam = std::max(lam, 0.0);
        const double s = std::sqrt(lam);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                r(i, j) += s * eig.eigenvectors(i, k) * std::conj(eig.eigenvectors(j, k));
    }
    return r;
}

SquareComplexMatrix kron(const SquareComplexMatrix& a, const SquareComplexMatrix& b) {
    const std::size_t na = a.dim(), nb = b.dim();
    SquareComplexMatrix r(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l)
                    r(i * nb + k, j * nb + l) = a(i, j) * b(k, l);
    return r;
}

SquareComplexMatrix partial_trace(const SquareComplexMatrix& a, Subsystem keep) {
    if (a.dim() != 4) throw DimensionError("partial_trace: only dim 4 is supported");
    SquareComplexMatrix r(2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k) {
                if (keep == Subsystem::First)
                    r(i, j) += a(2 * i + k, 2 * j + k);
                else
                    r(i, j) += a(2 * k + i, 2 * k + j);
            }
    return r;
}

}  // namespace qmet
