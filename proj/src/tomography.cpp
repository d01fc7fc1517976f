#include "qmet/tomography.hpp"

#include <cmath>
#include <map>

#include <json.hpp>

namespace qmet {

namespace {

SquareComplexMatrix pauli(char basis) {
    SquareComplexMatrix m(2);
    switch (basis) {
        case 'I': return SquareComplexMatrix::identity(2);
        case 'X':
            m(0, 1) = 1.0;
            m(1, 0) = 1.0;
            return m;
        case 'Y':
            m(0, 1) = cd{0.0, -1.0};
            m(1, 0) = cd{0.0, 1.0};
            return m;
        case 'Z':
            m(0, 0) = 1.0;
            m(1, 1) = -1.0;
            return m;
        default: throw DomainError("pauli: unknown basis");
    }
}

/// Rank-1 projector onto the +1 or -1 eigenstate of a Pauli.
SquareComplexMatrix eigenprojector(char basis, int sign) {
    const double s = sign >= 0 ? 1.0 : -1.0;
    return 0.5 * (SquareComplexMatrix::identity(2) + s * pauli(basis));
}

constexpr std::array<char, 3> kBases = {'X', 'Y', 'Z'};

}  // namespace

std::vector<std::string> tomography_bases() {
    std::vector<std::string> out;
    for (char a : kBases)
        for (char b : kBases) out.push_back(std::string{a, b});
    return out;
}

std::array<double, 4> setting_probabilities(const DensityMatrix& rho, const std::string& bases) {
    if (rho.dim() != 4) throw DimensionError("setting_probabilities: expected a two-qubit state");
    if (bases.size() != 2) throw DomainError("setting_probabilities: bad basis-pair name");
    std::array<double, 4> probs{};
    int idx = 0;
    for (int sa : {+1, -1})
        for (int sb : {+1, -1}) {
            const SquareComplexMatrix proj =
                kron(eigenprojector(bases[0], sa), eigenprojector(bases[1], sb));
            probs[idx++] = (proj * rho.matrix()).trace().real();
        }
    return probs;
}

std::vector<SettingData> generate_tomography_counts(const DensityMatrix& rho,
                                                    const TomographySettings& settings) {
    if (settings.shots_per_setting < 1)
        throw DomainError("generate_tomography_counts: shots_per_setting must be >= 1");
    std::vector<SettingData> out;
    std::uint64_t setting_index = 0;
    for (const std::string& bases : tomography_bases()) {
        const auto probs = setting_probabilities(rho, bases);
        OutcomeDistribution dist(
            {kSettingOutcomeLabels[0], kSettingOutcomeLabels[1], kSettingOutcomeLabels[2],
             kSettingOutcomeLabels[3]},
            {probs[0], probs[1], probs[2], probs[3]});
        SeededRng rng(settings.seed, setting_index++);
        const Counts counts = sample_counts(dist, settings.shots_per_setting, rng);
        SettingData data{bases, {}};
        for (int i = 0; i < 4; ++i)
            data.counts[i] = static_cast<double>(counts.at(kSettingOutcomeLabels[i]));
        out.push_back(std::move(data));
    }
    return out;
}

std::vector<SettingData> exact_setting_probabilities(const DensityMatrix& rho) {
    std::vector<SettingData> out;
    for (const std::string& bases : tomography_bases()) {
        const auto probs = setting_probabilities(rho, bases);
        out.push_back(SettingData{bases, probs});
    }
    return out;
}

SquareComplexMatrix linear_inversion(const std::vector<SettingData>& data) {
    std::map<std::string, std::array<double, 4>> freq;
    for (const SettingData& d : data) {
        double total = d.counts[0] + d.counts[1] + d.counts[2] + d.counts[3];
        if (total <= 0.0)
            throw IncompleteDataError("linear_inversion: setting '" + d.bases + "' has no counts");
        freq[d.bases] = {d.counts[0] / total, d.counts[1] / total, d.counts[2] / total,
                         d.counts[3] / total};
    }
    for (const std::string& bases : tomography_bases())
        if (!freq.count(bases))
            throw IncompleteDataError("linear_inversion: missing setting '" + bases + "'");

    // Outcome signs in the fixed ++, +-, -+, -- ordering.
    constexpr std::array<int, 4> sa = {+1, +1, -1, -1};
    constexpr std::array<int, 4> sb = {+1, -1, +1, -1};

    auto joint_correlator = [&](char a, char b) {
        const auto& f = freq.at(std::string{a, b});
        double e = 0.0;
        for (int i = 0; i < 4; ++i) e += sa[i] * sb[i] * f[i];
        return e;
    };
    // Single-side correlators from marginals, averaged over the three
    // partner settings to use all the data.
    auto first_correlator = [&](char a) {
        double e = 0.0;
        for (char b : kBases) {
            const auto& f = freq.at(std::string{a, b});
            for (int i = 0; i < 4; ++i) e += sa[i] * f[i];
        }
        return e / 3.0;
    };
    auto second_correlator = [&](char b) {
        double e = 0.0;
        for (char a : kBases) {
            const auto& f = freq.at(std::string{a, b});
            for (int i = 0; i < 4; ++i) e += sb[i] * f[i];
        }
        return e / 3.0;
    };

    SquareComplexMatrix rho = 0.25 * SquareComplexMatrix::identity(4);
    for (char a : kBases)
        rho = rho + (0.25 * first_correlator(a)) * kron(pauli(a), pauli('I'));
    for (char b : kBases)
        rho = rho + (0.25 * second_correlator(b)) * kron(pauli('I'), pauli(b));
    for (char a : kBases)
        for (char b : kBases)
            rho = rho + (0.25 * joint_correlator(a, b)) * kron(pauli(a), pauli(b));
    return rho;
}

DensityMatrix project_to_physical(const SquareComplexMatrix& m) {
    if (!m.is_hermitian(1e-9))
        throw NotHermitianError("project_to_physical: input is not Hermitian");
    if (std::abs(m.trace() - cd{1.0, 0.0}) > 1e-6)
        throw DomainError("project_to_physical: trace differs from 1 by more than 1e-6");
    const auto eig = hermitian_eig(m);
    const std::size_t n = m.dim();
    double total = 0.0;
    std::vector<double> clipped(n);
    for (std::size_t i = 0; i < n; ++i) {
        clipped[i] = std::max(eig.eigenvalues[i], 0.0);
        total += clipped[i];
    }
    if (total <= 0.0) throw DomainError("project_to_physical: spectrum is entirely non-positive");

    SquareComplexMatrix out(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double lam = clipped[k] / total;
        if (lam == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                out(i, j) += lam * eig.eigenvectors(i, k) * std::conj(eig.eigenvectors(j, k));
    }
    out = 0.5 * (out + out.adjoint());
    return DensityMatrix(std::move(out));
}

TomographyReport tomography_report(const DensityMatrix& state, const DensityMatrix& target,
                                   const TomographySettings& settings) {
    const auto counts = generate_tomography_counts(state, settings);
    const DensityMatrix rho_hat = project_to_physical(linear_inversion(counts));
    return TomographyReport{fidelity(rho_hat, target), purity(rho_hat)};
}

TomographyReport tomography_report(const DensityMatrix& target,
                                   const TomographySettings& settings) {
    return tomography_report(target, target, settings);
}

TomographyReport tomography_report_exact(const DensityMatrix& state, const DensityMatrix& target) {
    const auto probs = exact_setting_probabilities(state);
    const DensityMatrix rho_hat = project_to_physical(linear_inversion(probs));
    return TomographyReport{fidelity(rho_hat, target), purity(rho_hat)};
}

std::string tomography_counts_to_json(const std::vector<SettingData>& data) {
    nlohmann::json j;
    j["settings"] = nlohmann::json::array();
    for (const SettingData& d : data) {
        nlohmann::json s;
        s["bases"] = d.bases;
        s["counts"] = nlohmann::json::object();
        for (int i = 0; i < 4; ++i) s["counts"][kSettingOutcomeLabels[i]] = d.counts[i];
        j["settings"].push_back(std::move(s));
    }
    return j.dump();
}

std::vector<SettingData> tomography_counts_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    std::vector<SettingData> out;
    for (const auto& s : j.at("settings")) {
        SettingData d{s.at("bases").get<std::string>(), {}};
        for (int i = 0; i < 4; ++i)
            d.counts[i] = s.at("counts").at(kSettingOutcomeLabels[i]).get<double>();
        out.push_back(std::move(d));
    }
    return out;
}

}  // namespace qmet
