#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qmet/linalg.hpp"
#include "qmet/states.hpp"

using namespace qmet;

namespace {

SquareComplexMatrix random_hermitian(std::mt19937_64& gen, std::size_t n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    SquareComplexMatrix a(n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = u(gen);
        for (std::size_t j = i + 1; j < n; ++j) {
            const cd v{u(gen), u(gen)};
            a(i, j) = v;
            a(j, i) = std::conj(v);
        }
    }
    return a;
}

SquareComplexMatrix random_psd(std::mt19937_64& gen, std::size_t n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    SquareComplexMatrix b(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) = cd{u(gen), u(gen)};
    return b.adjoint() * b;
}

double reconstruction_error(const SquareComplexMatrix& a, const HermitianEigenDecomposition& e) {
    const std::size_t n = a.dim();
    SquareComplexMatrix sum(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                sum(i, j) += e.eigenvalues[k] * e.eigenvectors(i, k) * std::conj(e.eigenvectors(j, k));
    return max_abs_diff(a, sum);
}

}  // namespace

TEST_CASE("hermitian_eig: identity") {
    const auto e = hermitian_eig(SquareComplexMatrix::identity(4));
    for (double lam : e.eigenvalues) CHECK(lam == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hermitian_eig: Werner spectrum at eta=0.6") {
    const auto e = hermitian_eig(werner(0.6).matrix());
    CHECK(e.eigenvalues[0] == doctest::Approx(0.1).epsilon(1e-10));
    CHECK(e.eigenvalues[1] == doctest::Approx(0.1).epsilon(1e-10));
    CHECK(e.eigenvalues[2] == doctest::Approx(0.1).epsilon(1e-10));
    CHECK(e.eigenvalues[3] == doctest::Approx(0.7).epsilon(1e-10));
}

TEST_CASE("hermitian_eig: Pauli X") {
    SquareComplexMatrix x(2);
    x(0, 1) = 1.0;
    x(1, 0) = 1.0;
    const auto e = hermitian_eig(x);
    CHECK(e.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-12));
    CHECK(e.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("hermitian_eig: rejects non-Hermitian input") {
    SquareComplexMatrix a(2);
    a(0, 1) = cd{1.0, 0.0};
    a(1, 0) = cd{0.5, 0.0};
    CHECK_THROWS_AS(hermitian_eig(a), NotHermitianError);
}

TEST_CASE("hermitian_eig: random round-trips and orthonormality") {
    std::mt19937_64 gen(12345);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto a = random_hermitian(gen, 4);
        const auto e = hermitian_eig(a);
        REQUIRE(reconstruction_error(a, e) <= 1e-10);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                cd dot{0.0, 0.0};
                for (std::size_t k = 0; k < 4; ++k)
                    dot += std::conj(e.eigenvectors(k, i)) * e.eigenvectors(k, j);
                const double expected = (i == j) ? 1.0 : 0.0;
                REQUIRE(std::abs(dot - cd{expected, 0.0}) <= 1e-10);
            }
    }
}

TEST_CASE("matrix_sqrt: examples") {
    const auto id = SquareComplexMatrix::identity(4);
    CHECK(max_abs_diff(matrix_sqrt(id), id) <= 1e-12);

    const auto d = SquareComplexMatrix::diagonal({cd{4.0}, cd{9.0}});
    const auto s = matrix_sqrt(d);
    CHECK(s(0, 0).real() == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(s(1, 1).real() == doctest::Approx(3.0).epsilon(1e-12));

    const auto proj = bell_state(0, 0).projector();
    CHECK(max_abs_diff(matrix_sqrt(proj), proj) <= 1e-8);
}

TEST_CASE("matrix_sqrt: rejects indefinite input") {
    const auto d = SquareComplexMatrix::diagonal({cd{1.0}, cd{-0.5}});
    CHECK_THROWS_AS(matrix_sqrt(d), NotPsdError);
}

TEST_CASE("matrix_sqrt: squares back for random PSD matrices") {
    std::mt19937_64 gen(777);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto a = random_psd(gen, 4);
        const auto s = matrix_sqrt(a);
        REQUIRE(max_abs_diff(s * s, a) <= 1e-8);
    }
}

TEST_CASE("kron: examples") {
    const auto i2 = SquareComplexMatrix::identity(2);
    CHECK(max_abs_diff(kron(i2, i2), SquareComplexMatrix::identity(4)) == 0.0);

    SquareComplexMatrix one(2);
    one(1, 1) = 1.0;
    const auto h = kron(one, i2) + kron(i2, one);
    CHECK(max_abs_diff(h, SquareComplexMatrix::diagonal({cd{0.0}, cd{1.0}, cd{1.0}, cd{2.0}})) == 0.0);

    const auto d = kron(SquareComplexMatrix::diagonal({cd{2.0}, cd{3.0}}),
                        SquareComplexMatrix::diagonal({cd{5.0}, cd{7.0}}));
    CHECK(max_abs_diff(d, SquareComplexMatrix::diagonal({cd{10.0}, cd{14.0}, cd{15.0}, cd{21.0}})) == 0.0);
}

TEST_CASE("kron: trace is multiplicative") {
    std::mt19937_64 gen(31);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_hermitian(gen, 2);
        const auto b = random_hermitian(gen, 2);
        CHECK(std::abs(kron(a, b).trace() - a.trace() * b.trace()) <= 1e-12);
    }
}

TEST_CASE("partial_trace: examples") {
    const auto bell = bell_state(0, 0).projector();
    const auto half = 0.5 * SquareComplexMatrix::identity(2);
    CHECK(max_abs_diff(partial_trace(bell, Subsystem::First), half) <= 1e-12);
    CHECK(max_abs_diff(partial_trace(bell, Subsystem::Second), half) <= 1e-12);

    std::mt19937_64 gen(5);
    auto rho = random_psd(gen, 2);
    rho = (1.0 / rho.trace().real()) * rho;
    auto sigma = random_psd(gen, 2);
    sigma = (1.0 / sigma.trace().real()) * sigma;
    CHECK(max_abs_diff(partial_trace(kron(rho, sigma), Subsystem::First), rho) <= 1e-12);

    CHECK(max_abs_diff(partial_trace(0.25 * SquareComplexMatrix::identity(4), Subsystem::Second),
                       half) <= 1e-12);
}

TEST_CASE("partial_trace: rejects unsupported dimensions") {
    CHECK_THROWS_AS(partial_trace(SquareComplexMatrix::identity(2), Subsystem::First),
                    DimensionError);
}

TEST_CASE("partial_trace: preserves density-matrix structure") {
    std::mt19937_64 gen(99);
    for (int trial = 0; trial < 200; ++trial) {
        auto rho = random_psd(gen, 4);
        rho = (1.0 / rho.trace().real()) * rho;
        for (Subsystem keep : {Subsystem::First, Subsystem::Second}) {
            const auto r = partial_trace(rho, keep);
            REQUIRE(std::abs(r.trace() - cd{1.0, 0.0}) <= 1e-9);
            REQUIRE(r.is_hermitian(1e-9));
            REQUIRE(r.is_psd(1e-9));
        }
    }
}
