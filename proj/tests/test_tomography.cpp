#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "qmet/channels.hpp"
#include "qmet/tomography.hpp"

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

TEST_CASE("setting_probabilities: eigenstates and Bell correlations") {
    const DensityMatrix zz(PureState({cd{1.0}, cd{0.0}, cd{0.0}, cd{0.0}}));  // |00>
    const auto pz = setting_probabilities(zz, "ZZ");
    CHECK(pz[0] == doctest::Approx(1.0).epsilon(1e-12));  // ++ means (0,0) in Z
    CHECK(pz[1] + pz[2] + pz[3] <= 1e-12);

    const DensityMatrix bell(bell_state(0, 0));
    const auto px = setting_probabilities(bell, "XX");
    CHECK(px[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(px[3] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(px[1] + px[2] <= 1e-12);
}

TEST_CASE("generate_tomography_counts: deterministic, 36 projector groups") {
    const TomographySettings settings{1000, 5};
    const auto a = generate_tomography_counts(werner(0.5), settings);
    const auto b = generate_tomography_counts(werner(0.5), settings);
    REQUIRE(a.size() == 9);
    for (std::size_t i = 0; i < 9; ++i) {
        CHECK(a[i].bases == b[i].bases);
        CHECK(a[i].counts == b[i].counts);
        CHECK(a[i].counts[0] + a[i].counts[1] + a[i].counts[2] + a[i].counts[3] ==
              doctest::Approx(1000.0));
    }
}

TEST_CASE("generate_tomography_counts: maximally mixed is uniform") {
    const TomographySettings settings{100000, 13};
    for (const auto& d : generate_tomography_counts(werner(0.0), settings)) {
        const double sigma = std::sqrt(0.25 * 0.75 / 100000.0);
        for (double c : d.counts) REQUIRE(std::abs(c / 100000.0 - 0.25) <= 5.0 * sigma);
    }
}

TEST_CASE("linear_inversion: exact on exact data") {
    for (double eta : {0.5, 1.0}) {
        const auto rho = werner(eta);
        const auto rec = linear_inversion(exact_setting_probabilities(rho));
        CHECK(max_abs_diff(rec, rho.matrix()) <= 1e-12);
    }

    std::mt19937_64 gen(808);
    for (int trial = 0; trial < 100; ++trial) {
        const auto rho = random_density(gen);
        const auto rec = linear_inversion(exact_setting_probabilities(rho));
        REQUIRE(max_abs_diff(rec, rho.matrix()) <= 1e-12);
    }
}

TEST_CASE("linear_inversion: rejects incomplete data") {
    auto data = exact_setting_probabilities(werner(0.5));
    data.pop_back();
    CHECK_THROWS_AS(linear_inversion(data), IncompleteDataError);
}

TEST_CASE("linear_inversion: sampled reconstruction error is small at 1e5 shots") {
    const TomographySettings settings{100000, 21};
    const auto counts = generate_tomography_counts(werner(0.8), settings);
    CHECK(max_abs_diff(linear_inversion(counts), werner(0.8).matrix()) <= 0.01);
}

TEST_CASE("project_to_physical: fixed point and clip rule") {
    const auto w = werner(0.6);
    CHECK(max_abs_diff(project_to_physical(w.matrix()).matrix(), w.matrix()) <= 1e-12);

    const auto m = SquareComplexMatrix::diagonal({cd{1.1}, cd{0.1}, cd{-0.1}, cd{-0.1}});
    const auto fixed = project_to_physical(m);
    const auto expected =
        SquareComplexMatrix::diagonal({cd{1.1 / 1.2}, cd{0.1 / 1.2}, cd{0.0}, cd{0.0}});
    CHECK(max_abs_diff(fixed.matrix(), expected) <= 1e-12);

    SquareComplexMatrix nh(2);
    nh(0, 0) = 1.0;
    nh(0, 1) = cd{0.0, 0.2};
    nh(1, 0) = cd{0.0, 0.2};
    CHECK_THROWS_AS(project_to_physical(nh), NotHermitianError);
}

TEST_CASE("project_to_physical: output is always a valid state") {
    std::mt19937_64 gen(44);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        // Hermitian trace-1 perturbation of a state; often slightly non-PSD.
        SquareComplexMatrix m = random_density(gen).matrix();
        SquareComplexMatrix noise(4);
        for (std::size_t i = 0; i < 4; ++i) {
            noise(i, i) = 0.05 * u(gen);
            for (std::size_t j = i + 1; j < 4; ++j) {
                const cd v{0.05 * u(gen), 0.05 * u(gen)};
                noise(i, j) = v;
                noise(j, i) = std::conj(v);
            }
        }
        noise = noise - (noise.trace().real() / 4.0) * SquareComplexMatrix::identity(4);
        const auto fixed = project_to_physical(m + noise);
        REQUIRE(fixed.matrix().is_psd(1e-9));
        REQUIRE(std::abs(fixed.matrix().trace() - cd{1.0}) <= 1e-9);
    }
}

TEST_CASE("tomography_report: faithful at 1e5 shots per setting") {
    for (double eta : {0.4, 0.7, 1.0}) {
        const auto report = tomography_report(werner(eta), TomographySettings{100000, 3});
        REQUIRE(report.fidelity >= 0.99);
    }
}

TEST_CASE("tomography_report: exact data reproduces the target") {
    const auto report = tomography_report_exact(werner(1.0), werner(1.0));
    CHECK(report.fidelity == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(report.purity == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("tomography_report: detects a state/target mismatch") {
    const double direct = fidelity(werner(0.4), werner(0.7));
    const auto report =
        tomography_report(werner(0.4), werner(0.7), TomographySettings{100000, 9});
    CHECK(report.fidelity < 0.99);
    CHECK(report.fidelity == doctest::Approx(direct).epsilon(0.01));
}

TEST_CASE("reconstruction error scales like 1/sqrt(shots)") {
    std::vector<double> err_small, err_large;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto rho = werner(0.7);
        err_small.push_back(max_abs_diff(
            linear_inversion(generate_tomography_counts(rho, {2500, seed})), rho.matrix()));
        err_large.push_back(max_abs_diff(
            linear_inversion(generate_tomography_counts(rho, {10000, seed + 1000})), rho.matrix()));
    }
    auto median = [](std::vector<double> v) {
        std::sort(v.begin(), v.end());
        return 0.5 * (v[9] + v[10]);
    };
    const double ratio = median(err_small) / median(err_large);
    // 4x the shots should halve the error, within a generous band.
    CHECK(ratio >= 2.0 / 1.5);
    CHECK(ratio <= 2.0 * 1.5);
}

TEST_CASE("tomography counts JSON round-trip") {
    const auto data = generate_tomography_counts(werner(0.5), TomographySettings{500, 2});
    const auto back = tomography_counts_from_json(tomography_counts_to_json(data));
    REQUIRE(back.size() == data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        CHECK(back[i].bases == data[i].bases);
        CHECK(back[i].counts == data[i].counts);
    }
}
