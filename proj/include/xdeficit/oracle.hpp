#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "xdeficit/deficit.hpp"
#include "xdeficit/xstate.hpp"

namespace xdeficit {

/// Name of the random stream recorded in reports. Uniforms are the top 53 bits of a
/// mt19937_64 draw scaled by 2^-53; normals use the Box-Muller transform on pairs.
inline constexpr std::string_view kRngAlgorithm = "mt19937_64/u53/box-muller";

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1).
    double uniform() noexcept;
    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }
    double normal() noexcept;

private:
    std::mt19937_64 engine_;
    std::optional<double> spare_;
};

/// Independent stream seed for item `index` of a batch seeded with `seed` (splitmix64).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

class SamplerExhaustedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Region {
    paper_region,  ///< Σ|c_i| < 1 and |r3| + |s3| + |c3| < 1
    psd_only,      ///< the full Bloch box
};

std::string_view to_string(Region region) noexcept;

struct SamplerConfig {
    std::uint64_t seed = 42;
    Region region = Region::paper_region;
    std::size_t count = 1;
};

struct GridResolution {
    int n_alpha = 101;
    int n_phi = 101;
};

/// Max of 2 - F(theta(alpha, phi), phi) over the inclusive uniform lattice on
/// [0, 2π] × [0, 1], with theta = (1 - phi²)(c1² cos²α + c2² sin²α) + c3² phi².
double grid_oracle(const XStateParams& p, int n_alpha = 101, int n_phi = 101);

/// Max of G over the n_phi uniform partition points of [0, 1].
double g_sample_max(const XStateParams& p, int n_phi = 101);

/// Max over `samples` Haar-random V in SU(2) of 2 - S(dephased state). Bypasses the
/// theta reduction entirely.
double su2_oracle(const XStateParams& p, std::size_t samples, std::uint64_t seed);

/// Rejection sampler, uniform in the chosen region and positive semidefinite.
std::vector<XStateParams> random_states(const SamplerConfig& cfg);

/// Random valid states satisfying the region conditions of `label`. Equalities in the
/// conditions (r3 = 0, c3² = c², s3 = r3 c3) are imposed exactly.
std::vector<XStateParams> random_case_states(CaseLabel label, std::uint64_t seed, std::size_t count);

/// Random unit vector, uniform on the sphere.
MeasurementDirection random_direction(Rng& rng) noexcept;

struct OracleReport {
    XStateParams params;
    double closed_value = 0.0;    ///< g_max from deficit_exact
    double sample_value = 0.0;    ///< max over the n_phi G samples
    double grid_value = 0.0;      ///< grid_oracle
    double su2_value = 0.0;       ///< su2_oracle, NaN when not requested
    double abs_diff_grid = 0.0;
    double abs_diff_sample = 0.0;  ///< |grid - sample|
    double abs_diff_su2 = 0.0;
    GridResolution grid;
    std::size_t samples = 0;
    std::string method;
    std::string error;  ///< empty on success

    bool failed() const noexcept { return !error.empty(); }
};

struct VerifySummary {
    std::size_t n = 0;
    std::size_t failures = 0;
    double max_diff_grid = 0.0;
    double mean_diff_grid = 0.0;
    double max_diff_sample = 0.0;
    double max_diff_su2 = 0.0;
};

struct VerifyOptions {
    GridResolution grid;
    std::size_t su2_samples = 0;  ///< 0 skips the SU(2) oracle
    std::uint64_t seed = 42;      ///< base seed for the SU(2) oracle streams
    unsigned threads = 0;         ///< 0 means hardware concurrency
};

struct VerifyBatch {
    std::vector<OracleReport> reports;
    VerifySummary summary;
    std::string rng_algorithm{kRngAlgorithm};
};

/// Compares the exact pipeline against the oracles on explicit states. Per-state errors are
/// recorded in the report; reports keep the input order.
VerifyBatch verify_states(std::span<const XStateParams> states, const VerifyOptions& options);

VerifyBatch verify_random_states(const SamplerConfig& cfg, const VerifyOptions& options);

}  // namespace xdeficit
