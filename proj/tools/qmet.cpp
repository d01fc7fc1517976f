// qmet: simulate two-qubit phase estimation with Werner-state probes and
// emit probability sweeps, Fisher-information curves, Monte Carlo
// Cramer-Rao reports, and tomography reports as CSV/JSON on stdout.

#include <cstdio>
#include <iostream>
#include <numbers>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qmet/channels.hpp"
#include "qmet/estimation.hpp"
#include "qmet/fisher.hpp"
#include "qmet/measurements.hpp"
#include "qmet/states.hpp"
#include "qmet/tomography.hpp"

namespace {

constexpr int kExitDomain = 2;
constexpr int kExitFlatLikelihood = 3;
constexpr int kExitInfeasibleCounts = 4;

constexpr double kHalfPi = std::numbers::pi / 2.0;

void print_value(const char* fmt, double v) { std::printf(fmt, v); }

int cmd_probabilities(const std::string& strategy_name, double eta, double visibility,
                      double start, double stop, int points) {
    const qmet::Strategy strategy = qmet::strategy_from_string(strategy_name);
    const qmet::VisibilityModelParams params(eta, visibility);
    if (points < 2) throw qmet::DomainError("probabilities: need at least 2 points");
    if (!(start < stop)) throw qmet::DomainError("probabilities: start must be below stop");

    const auto header = qmet::model_distribution(strategy, start, params);
    std::printf("phi");
    for (const std::string& label : header.labels) std::printf(",%s", label.c_str());
    std::printf("\n");
    for (int i = 0; i < points; ++i) {
        const double phi = start + (stop - start) * static_cast<double>(i) / (points - 1);
        const auto dist = qmet::model_distribution(strategy, phi, params);
        print_value("%.12g", phi);
        for (double p : dist.probabilities) print_value(",%.12g", p);
        std::printf("\n");
    }
    return 0;
}

int cmd_fisher_sweep(double phi, double start, double stop, int points) {
    if (points < 2) throw qmet::DomainError("fisher-sweep: need at least 2 points");
    if (!(start < stop)) throw qmet::DomainError("fisher-sweep: start must be below stop");
    std::printf("eta,F_bell,F_local,QFI\n");
    for (int i = 0; i < points; ++i) {
        const double eta = start + (stop - start) * static_cast<double>(i) / (points - 1);
        print_value("%.12g", eta);
        print_value(",%.12g", qmet::fisher_bell_closed(phi, eta));
        print_value(",%.12g", qmet::fisher_local_closed(phi, eta));
        print_value(",%.12g", qmet::qfi_coherent_closed(eta));
        std::printf("\n");
    }
    return 0;
}

int cmd_simulate(const qmet::ExperimentConfig& config, const std::string& output) {
    const qmet::CrbReport report = qmet::run_monte_carlo(config);
    if (output == "csv") {
        std::printf("strategy,eta_true,phi_true,visibility,shots,trials,seed,");
        std::printf("variance,bias,crb,ratio\n");
        std::printf("%s,%.12g,%.12g,%.12g,%llu,%llu,%llu,%.12g,%.12g,%.12g,%.12g\n",
                    qmet::to_string(config.strategy).c_str(), config.eta_true, config.phi_true,
                    config.visibility, static_cast<unsigned long long>(config.shots),
                    static_cast<unsigned long long>(config.trials),
                    static_cast<unsigned long long>(config.seed), report.variance, report.bias,
                    report.crb, report.ratio);
    } else {
        nlohmann::json j;
        j["strategy"] = qmet::to_string(config.strategy);
        j["eta_true"] = config.eta_true;
        j["phi_true"] = config.phi_true;
        j["visibility"] = config.visibility;
        j["shots"] = config.shots;
        j["trials"] = config.trials;
        j["seed"] = config.seed;
        j["variance"] = report.variance;
        j["bias"] = report.bias;
        j["crb"] = report.crb;
        j["ratio"] = report.ratio;
        std::printf("%s\n", j.dump().c_str());
    }
    return 0;
}

int cmd_tomography(double eta, std::uint64_t shots, std::uint64_t seed, bool exact) {
    const qmet::DensityMatrix target = qmet::werner(eta);
    const qmet::TomographyReport report =
        exact ? qmet::tomography_report_exact(target, target)
              : qmet::tomography_report(target, qmet::TomographySettings{shots, seed});
    nlohmann::json j;
    j["fidelity"] = report.fidelity;
    j["purity"] = report.purity;
    std::printf("%s\n", j.dump().c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-qubit phase estimation with Werner-state probes"};
    app.require_subcommand(1);

    std::string strategy = "bell";
    double eta = 1.0;
    double phi = kHalfPi / 2.0;
    double visibility = 1.0;
    double start = 0.0;
    double stop = kHalfPi;
    int points = 101;
    std::uint64_t shots = 10000;
    std::uint64_t trials = 300;
    std::uint64_t seed = 0;
    std::string output = "json";
    bool exact = false;

    auto* probs = app.add_subcommand("probabilities", "Outcome probabilities over a phi sweep (CSV)");
    probs->add_option("--strategy", strategy, "bell | grouped_bell | local");
    probs->add_option("--eta", eta, "Werner noise parameter in [0,1]");
    probs->add_option("--visibility", visibility, "interference visibility in [0,1]");
    probs->add_option("--start", start, "sweep start, radians");
    probs->add_option("--stop", stop, "sweep stop, radians");
    probs->add_option("--points", points, "number of grid points (>= 2)");

    auto* sweep = app.add_subcommand("fisher-sweep", "Fisher information vs eta (CSV)");
    sweep->add_option("--phi", phi, "phase at which to evaluate, radians (default pi/4)");
    sweep->add_option("--start", start, "eta sweep start");
    double eta_stop = 1.0;
    sweep->add_option("--stop", eta_stop, "eta sweep stop");
    sweep->add_option("--points", points, "number of grid points (>= 2)");

    auto* sim = app.add_subcommand("simulate", "Monte Carlo Cramer-Rao report");
    sim->add_option("--strategy", strategy, "bell | grouped_bell | local");
    sim->add_option("--eta", eta, "true eta");
    sim->add_option("--phi", phi, "true phase, radians in [0, pi/2]");
    sim->add_option("--visibility", visibility, "interference visibility");
    sim->add_option("--shots", shots, "probe pairs per trial");
    sim->add_option("--trials", trials, "independent trials");
    sim->add_option("--seed", seed, "RNG seed");
    sim->add_option("--output", output, "csv | json");

    auto* tomo = app.add_subcommand("tomography", "Reconstruct werner(eta) and report fidelity");
    tomo->add_option("--eta", eta, "Werner noise parameter");
    tomo->add_option("--shots", shots, "shots per measurement setting");
    tomo->add_option("--seed", seed, "RNG seed");
    tomo->add_flag("--exact", exact, "use exact probabilities instead of sampling");

    CLI11_PARSE(app, argc, argv);

    try {
        if (probs->parsed()) return cmd_probabilities(strategy, eta, visibility, start, stop, points);
        if (sweep->parsed()) return cmd_fisher_sweep(phi, start, eta_stop, points);
        if (sim->parsed()) {
            qmet::ExperimentConfig config{eta, phi, visibility, shots, trials,
                                          qmet::strategy_from_string(strategy), seed};
            return cmd_simulate(config, output);
        }
        if (tomo->parsed()) return cmd_tomography(eta, shots, seed, exact);
    } catch (const qmet::FlatLikelihoodError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFlatLikelihood;
    } catch (const qmet::InfeasibleCountsError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasibleCounts;
    } catch (const qmet::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitDomain;
}
