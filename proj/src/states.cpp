#include "qmet/states.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

namespace qmet {

PureState::PureState(std::vector<cd> amplitudes) : amplitudes_(std::move(amplitudes)) {
    double norm2 = 0.0;
    for (const cd& a : amplitudes_) norm2 += std::norm(a);
    if (std::abs(norm2 - 1.0) > 1e-10)
        throw DomainError("PureState: amplitudes are not normalized");
}

SquareComplexMatrix PureState::projector() const {
    SquareComplexMatrix p(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j)
            p(i, j) = amplitudes_[i] * std::conj(amplitudes_[j]);
    return p;
}

cd PureState::inner(const PureState& other) const {
    if (dim() != other.dim()) throw DimensionError("PureState::inner: dimension mismatch");
    cd s{0.0, 0.0};
    for (std::size_t i = 0; i < dim(); ++i) s += std::conj(amplitudes_[i]) * other.amplitudes_[i];
    return s;
}

DensityMatrix::DensityMatrix(SquareComplexMatrix m) : matrix_(std::move(m)) {
    if (!matrix_.is_hermitian(1e-9))
        throw NotHermitianError("DensityMatrix: matrix is not Hermitian within 1e-9");
    if (std::abs(matrix_.trace() - cd{1.0, 0.0}) > 1e-9)
        throw DomainError("DensityMatrix: trace differs from 1 by more than 1e-9");
    if (!matrix_.is_psd(1e-9))
        throw NotPsdError("DensityMatrix: matrix has an eigenvalue below -1e-9");
}

PureState bell_state(int k, int j) {
    if ((k != 0 && k != 1) || (j != 0 && j != 1))
        throw DomainError("bell_state: k and j must be 0 or 1");
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<cd> amps(4, cd{0.0, 0.0});
    amps[static_cast<std::size_t>(j)] = inv_sqrt2;                    // |0,j>
    amps[static_cast<std::size_t>(2 + (1 - j))] = (k == 0 ? 1.0 : -1.0) * inv_sqrt2;  // |1, 1^j>
    return PureState(std::move(amps));
}

DensityMatrix werner(double eta) {
    if (eta < 0.0 || eta > 1.0) throw DomainError("werner: eta must lie in [0,1]");
    const SquareComplexMatrix mixed = 0.25 * (1.0 - eta) * SquareComplexMatrix::identity(4);
    return DensityMatrix(mixed + eta * bell_state(0, 0).projector());
}

DensityMatrix werner_from_bell_mixture(double eta) {
    if (eta < 0.0 || eta > 1.0)
        throw DomainError("werner_from_bell_mixture: eta must lie in [0,1]");
    SquareComplexMatrix m = (0.25 * (1.0 + 3.0 * eta)) * bell_state(0, 0).projector();
    const double w = 0.25 * (1.0 - eta);
    m = m + w * bell_state(1, 0).projector();
    m = m + w * bell_state(0, 1).projector();
    m = m + w * bell_state(1, 1).projector();
    return DensityMatrix(m);
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (rho.dim() != sigma.dim()) throw DimensionError("fidelity: dimension mismatch");
    const SquareComplexMatrix sr = matrix_sqrt(rho.matrix());
    SquareComplexMatrix inner = sr * sigma.matrix() * sr;
    // Symmetrize away roundoff before the eigensolve.
    inner = 0.5 * (inner + inner.adjoint());
    double f = 0.0;
    for (double lam : hermitian_eig(inner).eigenvalues)
        f += std::sqrt(std::max(lam, 0.0));
    return std::clamp(f, 0.0, 1.0);
}

double purity(const DensityMatrix& rho) {
    return (rho.matrix() * rho.matrix()).trace().real();
}

std::string density_matrix_to_json(const DensityMatrix& rho) {
    const std::size_t n = rho.dim();
    nlohmann::json j;
    j["dim"] = n;
    auto re = nlohmann::json::array();
    auto im = nlohmann::json::array();
    for (std::size_t i = 0; i < n; ++i) {
        auto re_row = nlohmann::json::array();
        auto im_row = nlohmann::json::array();
        for (std::size_t k = 0; k < n; ++k) {
            re_row.push_back(rho.matrix()(i, k).real());
            im_row.push_back(rho.matrix()(i, k).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    j["re"] = std::move(re);
    j["im"] = std::move(im);
    return j.dump();
}

DensityMatrix density_matrix_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    const std::size_t n = j.at("dim").get<std::size_t>();
    const auto& re = j.at("re");
    const auto& im = j.at("im");
    if (re.size() != n || im.size() != n)
        throw DimensionError("density_matrix_from_json: row count does not match dim");
    SquareComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (re[i].size() != n || im[i].size() != n)
            throw DimensionError("density_matrix_from_json: column count does not match dim");
        for (std::size_t k = 0; k < n; ++k)
            m(i, k) = cd{re[i][k].get<double>(), im[i][k].get<double>()};
    }
    return DensityMatrix(std::move(m));
}

}  // namespace qmet
