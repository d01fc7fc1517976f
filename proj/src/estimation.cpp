#include "qmet/estimation.hpp"

#include "qmet/fisher.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include <json.hpp>

namespace qmet {

namespace {

// splitmix64; mixes (seed, stream) into one well-spread 64-bit value.
std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr double kHalfPi = std::numbers::pi / 2.0;

}  // namespace

std::string to_string(Strategy s) {
    switch (s) {
        case Strategy::Bell: return "bell";
        case Strategy::GroupedBell: return "grouped_bell";
        case Strategy::Local: return "local";
    }
    throw DomainError("to_string: unknown strategy");
}

Strategy strategy_from_string(const std::string& name) {
    if (name == "bell") return Strategy::Bell;
    if (name == "grouped_bell") return Strategy::GroupedBell;
    if (name == "local") return Strategy::Local;
    throw DomainError("strategy_from_string: unknown strategy '" + name + "'");
}

SeededRng::SeededRng(std::uint64_t seed) : gen_(splitmix64(seed)) {}

SeededRng::SeededRng(std::uint64_t seed, std::uint64_t stream)
    : gen_(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632be59bd9b4e019ULL))) {}

double SeededRng::uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

void ExperimentConfig::validate() const {
    if (eta_true < 0.0 || eta_true > 1.0)
        throw DomainError("ExperimentConfig: eta_true must lie in [0,1]");
    if (visibility < 0.0 || visibility > 1.0)
        throw DomainError("ExperimentConfig: visibility must lie in [0,1]");
    if (phi_true < 0.0 || phi_true > kHalfPi)
        throw DomainError("ExperimentConfig: phi_true must lie in [0, pi/2]");
    if (shots < 1) throw DomainError("ExperimentConfig: shots must be >= 1");
    if (trials < 1) throw DomainError("ExperimentConfig: trials must be >= 1");
}

Counts sample_counts(const OutcomeDistribution& dist, std::uint64_t shots, SeededRng& rng) {
    if (shots < 1) throw DomainError("sample_counts: shots must be >= 1");
    const std::size_t k = dist.probabilities.size();
    std::vector<double> cdf(k);
    double acc = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        acc += dist.probabilities[i];
        cdf[i] = acc;
    }
    cdf.back() = 1.0;

    std::vector<std::uint64_t> tally(k, 0);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.uniform();
        const std::size_t idx = static_cast<std::size_t>(
            std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
        ++tally[std::min(idx, k - 1)];
    }

    Counts counts;
    for (std::size_t i = 0; i < k; ++i) counts[dist.labels[i]] = tally[i];
    return counts;
}

namespace {

std::uint64_t count_of(const Counts& counts, const std::string& label) {
    const auto it = counts.find(label);
    return it == counts.end() ? 0 : it->second;
}

std::uint64_t total_counts(const Counts& counts) {
    std::uint64_t n = 0;
    for (const auto& [label, c] : counts) n += c;
    return n;
}

}  // namespace

double estimate_eta(const Counts& counts, Strategy strategy) {
    if (strategy == Strategy::Local)
        throw NotIdentifiableError(
            "estimate_eta: local counts cannot separate eta from phi");
    const std::uint64_t n = total_counts(counts);
    if (n == 0) throw DomainError("estimate_eta: empty counts");
    const std::uint64_t g = (strategy == Strategy::Bell)
                                ? count_of(counts, kLabelB01) + count_of(counts, kLabelB11)
                                : count_of(counts, kLabelGroup);
    const double eta = 1.0 - 2.0 * static_cast<double>(g) / static_cast<double>(n);
    return std::clamp(eta, 0.0, 1.0);
}

OutcomeDistribution model_distribution(Strategy strategy, double phi,
                                       const VisibilityModelParams& params) {
    switch (strategy) {
        case Strategy::Bell: return model_bell_probs(phi, params);
        case Strategy::GroupedBell: return model_grouped_bell_probs(phi, params);
        case Strategy::Local: return model_local_probs(phi, params);
    }
    throw DomainError("model_distribution: unknown strategy");
}

double mle_phi(const Counts& counts, Strategy strategy, double eta, double visibility) {
    const VisibilityModelParams params(eta, visibility);
    if (eta * visibility == 0.0)
        throw FlatLikelihoodError("mle_phi: eta * visibility is 0, phase is unidentifiable");
    if (total_counts(counts) == 0) throw DomainError("mle_phi: empty counts");

    const auto log_likelihood = [&](double phi) {
        const OutcomeDistribution dist = model_distribution(strategy, phi, params);
        double ll = 0.0;
        for (std::size_t i = 0; i < dist.labels.size(); ++i) {
            const std::uint64_t n = count_of(counts, dist.labels[i]);
            if (n == 0) continue;
            if (dist.probabilities[i] <= 0.0)
                return -std::numeric_limits<double>::infinity();
            ll += static_cast<double>(n) * std::log(dist.probabilities[i]);
        }
        return ll;
    };

    // Grid scan; the likelihood is unimodal in cos(2 phi) so the best grid
    // point brackets the maximum.
    constexpr int kGridPoints = 1024;
    double best_ll = -std::numeric_limits<double>::infinity();
    int best_idx = 0;
    for (int i = 0; i < kGridPoints; ++i) {
        const double phi = kHalfPi * static_cast<double>(i) / (kGridPoints - 1);
        const double ll = log_likelihood(phi);
        if (ll > best_ll) {  // strict: ties resolve toward smaller phi
            best_ll = ll;
            best_idx = i;
        }
    }
    if (std::isinf(best_ll))
        throw InfeasibleCountsError(
            "mle_phi: some observed outcome has zero model probability everywhere");

    double lo = kHalfPi * static_cast<double>(std::max(best_idx - 1, 0)) / (kGridPoints - 1);
    double hi = kHalfPi * static_cast<double>(std::min(best_idx + 1, kGridPoints - 1)) /
                (kGridPoints - 1);

    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - gr * (hi - lo);
    double x2 = lo + gr * (hi - lo);
    double f1 = log_likelihood(x1);
    double f2 = log_likelihood(x2);
    while (hi - lo > 1e-9) {
        if (f1 >= f2) {  // keep the left interval on ties
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = log_likelihood(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = log_likelihood(x2);
        }
    }
    return 0.5 * (lo + hi);
}

double crb(double fisher, std::uint64_t shots) {
    if (fisher <= 0.0) throw DomainError("crb: no bound for non-positive Fisher information");
    if (shots < 1) throw DomainError("crb: shots must be >= 1");
    return 1.0 / (static_cast<double>(shots) * fisher);
}

CrbReport run_monte_carlo(const ExperimentConfig& config) {
    config.validate();
    const VisibilityModelParams truth(config.eta_true, config.visibility);
    if (config.eta_true * config.visibility == 0.0)
        throw FlatLikelihoodError("run_monte_carlo: no phase information at eta * V = 0");

    const OutcomeDistribution dist =
        model_distribution(config.strategy, config.phi_true, truth);

    std::vector<double> phi_hats;
    phi_hats.reserve(config.trials);
    for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
        SeededRng rng(config.seed, trial);
        const Counts counts = sample_counts(dist, config.shots, rng);
        // The local strategy takes eta as known a priori; the Bell
        // strategies recover it from the same counts set.
        const double eta_hat = (config.strategy == Strategy::Local)
                                   ? config.eta_true
                                   : estimate_eta(counts, config.strategy);
        phi_hats.push_back(mle_phi(counts, config.strategy, eta_hat, config.visibility));
    }

    double mean = 0.0;
    for (double p : phi_hats) mean += p;
    mean /= static_cast<double>(phi_hats.size());
    double var = 0.0;
    for (double p : phi_hats) var += (p - mean) * (p - mean);
    var /= std::max<double>(1.0, static_cast<double>(phi_hats.size()) - 1.0);

    const double fisher_truth = classical_fisher(dist);
    const double bound = crb(fisher_truth, config.shots);
    return CrbReport{var, mean - config.phi_true, bound, var / bound};
}

std::string counts_to_json(Strategy strategy, const Counts& counts) {
    nlohmann::json j;
    j["strategy"] = to_string(strategy);
    j["counts"] = nlohmann::json::object();
    for (const auto& [label, c] : counts) j["counts"][label] = c;
    return j.dump();
}

}  // namespace qmet
