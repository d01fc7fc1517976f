#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>

#include "qmet/measurements.hpp"

namespace qmet {

enum class Strategy { Bell, GroupedBell, Local };

std::string to_string(Strategy s);
Strategy strategy_from_string(const std::string& name);

using Counts = std::map<std::string, std::uint64_t>;

/// Deterministic stream for reproducible sampling. Substreams are derived
/// by hashing (seed, stream-index) so trial order never matters.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed);
    SeededRng(std::uint64_t seed, std::uint64_t stream);

    /// Uniform double in [0, 1).
    double uniform();

private:
    std::mt19937_64 gen_;
};

struct ExperimentConfig {
    double eta_true;
    double phi_true;
    double visibility;
    std::uint64_t shots;
    std::uint64_t trials;
    Strategy strategy;
    std::uint64_t seed;

    void validate() const;
};

struct TrialResult {
    Counts counts;
    double eta_hat;
    double phi_hat;
};

struct CrbReport {
    double variance;
    double bias;
    double crb;
    double ratio;  // variance / crb
};

/// Multinomial draw of `shots` outcomes; sum of counts equals shots.
Counts sample_counts(const OutcomeDistribution& dist, std::uint64_t shots, SeededRng& rng);

/// eta from the phase-independent outcomes: 1 - 2 (n_B01 + n_B11)/N
/// (or the merged group count), clamped to [0,1]. The local strategy
/// cannot separate eta from phi and raises NotIdentifiableError.
double estimate_eta(const Counts& counts, Strategy strategy);

/// Maximum-likelihood phase on [0, pi/2]: 1024-point grid scan followed by
/// golden-section refinement to bracket width 1e-9.
double mle_phi(const Counts& counts, Strategy strategy, double eta, double visibility);

/// Cramer-Rao lower bound 1/(shots * fisher).
double crb(double fisher, std::uint64_t shots);

/// Model distribution for a strategy at (phi; eta, V), with derivatives.
OutcomeDistribution model_distribution(Strategy strategy, double phi,
                                       const VisibilityModelParams& params);

/// Run `trials` independent seeded trials and compare the phi-estimator
/// variance against the Cramer-Rao bound at the true parameters.
CrbReport run_monte_carlo(const ExperimentConfig& config);

/// Counts file wire format: {"strategy": ..., "counts": {label: int}}.
std::string counts_to_json(Strategy strategy, const Counts& counts);

}  // namespace qmet
