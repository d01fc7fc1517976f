#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qmet/estimation.hpp"
#include "qmet/states.hpp"

namespace qmet {

/// Two-qubit tomography over the 9 local basis pairs drawn from {X, Y, Z},
/// 4 joint outcomes each (36 projector combinations in total).
struct TomographySettings {
    std::uint64_t shots_per_setting;
    std::uint64_t seed;
};

/// Counts (or exact probabilities) for one basis pair. Outcomes are
/// ordered ++, +-, -+, -- by eigenvalue sign.
struct SettingData {
    std::string bases;             // e.g. "XY"
    std::array<double, 4> counts;  // raw counts or probabilities
};

inline constexpr std::array<const char*, 4> kSettingOutcomeLabels = {"++", "+-", "-+", "--"};

/// The 9 basis-pair names in fixed order XX, XY, ..., ZZ.
std::vector<std::string> tomography_bases();

/// Joint outcome probabilities of rho for one basis pair, ordered as above.
std::array<double, 4> setting_probabilities(const DensityMatrix& rho, const std::string& bases);

/// Multinomial counts per setting; substream i of the seed drives setting i.
std::vector<SettingData> generate_tomography_counts(const DensityMatrix& rho,
                                                    const TomographySettings& settings);

/// Infinite-shot limit: exact probabilities in place of counts.
std::vector<SettingData> exact_setting_probabilities(const DensityMatrix& rho);

/// Pauli linear inversion. Frequencies estimate the 15 correlators; the
/// result is Hermitian with unit trace but may be non-PSD.
SquareComplexMatrix linear_inversion(const std::vector<SettingData>& data);

/// Clip negative eigenvalues to 0 and renormalize the spectrum to sum 1.
DensityMatrix project_to_physical(const SquareComplexMatrix& m);

struct TomographyReport {
    double fidelity;  // of the reconstruction against the target
    double purity;    // of the reconstruction
};

/// generate -> invert -> project -> compare. `state` is measured,
/// `target` is what the reconstruction is scored against.
TomographyReport tomography_report(const DensityMatrix& state, const DensityMatrix& target,
                                   const TomographySettings& settings);

/// Common case: measure the target itself.
TomographyReport tomography_report(const DensityMatrix& target,
                                   const TomographySettings& settings);

/// Exact-data variant (no sampling).
TomographyReport tomography_report_exact(const DensityMatrix& state, const DensityMatrix& target);

/// Counts file wire format:
/// {"settings": [{"bases": "XY", "counts": {"++": n, ...}}, ...]}.
std::string tomography_counts_to_json(const std::vector<SettingData>& data);
std::vector<SettingData> tomography_counts_from_json(const std::string& text);

}  // namespace qmet
