#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qmet/channels.hpp"

using namespace qmet;

namespace {

DensityMatrix random_density(std::mt19937_64& gen) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    SquareComplexMatrix b(4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) b(i, j) = cd{u(gen), u(gen)};
    SquareComplexMatrix rho = b.adjoint() * b;
    rho = (1.0 / rho.trace().real()) * rho;
    return DensityMatrix(rho);
}

}  // namespace

TEST_CASE("phase_generator is diag(0,1,1,2)") {
    const auto h = phase_generator();
    CHECK(max_abs_diff(h, SquareComplexMatrix::diagonal({cd{0.0}, cd{1.0}, cd{1.0}, cd{2.0}})) == 0.0);
}

TEST_CASE("depolarize: reproduces the Werner family from B00") {
    const DensityMatrix bell(bell_state(0, 0));
    for (double eta : {0.0, 0.3, 1.0})
        CHECK(max_abs_diff(depolarize(bell, eta).matrix(), werner(eta).matrix()) <= 1e-12);
}

TEST_CASE("depolarize: endpoints and domain") {
    std::mt19937_64 gen(2);
    const auto rho = random_density(gen);
    CHECK(max_abs_diff(depolarize(rho, 1.0).matrix(), rho.matrix()) <= 1e-15);
    CHECK(max_abs_diff(depolarize(rho, 0.0).matrix(), 0.25 * SquareComplexMatrix::identity(4)) <= 1e-15);
    CHECK_THROWS_AS(depolarize(rho, -0.2), DomainError);
    CHECK_THROWS_AS(depolarize(rho, 1.2), DomainError);
}

TEST_CASE("depolarize: composes multiplicatively") {
    std::mt19937_64 gen(3);
    const auto rho = random_density(gen);
    const auto twice = depolarize(depolarize(rho, 0.7), 0.4);
    const auto direct = depolarize(rho, 0.28);
    CHECK(max_abs_diff(twice.matrix(), direct.matrix()) <= 1e-12);
}

TEST_CASE("phase_imprint: identity at phi=0, invariant maximally mixed") {
    std::mt19937_64 gen(4);
    const auto rho = random_density(gen);
    CHECK(max_abs_diff(phase_imprint(rho, 0.0).matrix(), rho.matrix()) <= 1e-15);
    CHECK(max_abs_diff(phase_imprint(werner(0.0), 1.1).matrix(), werner(0.0).matrix()) <= 1e-15);
}

TEST_CASE("phase_imprint: the |00><11| entry carries phase -2 phi") {
    for (double eta : {0.3, 0.8}) {
        for (double phi : {0.2, 0.9, 1.4}) {
            const auto rho = phase_imprint(werner(eta), phi);
            const cd e = rho.matrix()(0, 3);
            CHECK(std::abs(e) == doctest::Approx(eta / 2.0).epsilon(1e-12));
            CHECK(std::abs(e - std::polar(eta / 2.0, -2.0 * phi)) <= 1e-12);
        }
    }
}

TEST_CASE("phase_imprint: spectrum preserved") {
    std::mt19937_64 gen(5);
    const auto rho = random_density(gen);
    const auto before = hermitian_eig(rho.matrix()).eigenvalues;
    const auto after = hermitian_eig(phase_imprint(rho, 0.77).matrix()).eigenvalues;
    for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(before[i] - after[i]) <= 1e-10);
}

TEST_CASE("phase_imprint: periodicity") {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    std::mt19937_64 gen(6);
    const auto rho = random_density(gen);
    CHECK(max_abs_diff(phase_imprint(rho, 0.3).matrix(),
                       phase_imprint(rho, 0.3 + two_pi).matrix()) <= 1e-12);

    // Werner inputs have period pi.
    const auto w = werner(0.6);
    CHECK(max_abs_diff(phase_imprint(w, 0.4).matrix(),
                       phase_imprint(w, 0.4 + std::numbers::pi).matrix()) <= 1e-12);
}

TEST_CASE("check_order_independence: zero for every input with this noise model") {
    const DensityMatrix bell(bell_state(0, 0));
    for (double eta : {0.0, 0.5, 1.0})
        for (double phi : {0.0, 0.7, 1.5})
            CHECK(check_order_independence(bell, eta, phi) <= 1e-12);

    std::mt19937_64 gen(7);
    CHECK(check_order_independence(random_density(gen), 0.5, 0.7) <= 1e-12);
    CHECK(check_order_independence(random_density(gen), 1.0, 0.3) <= 1e-12);
}
