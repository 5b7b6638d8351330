#include "xdeficit/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "xdeficit/measurement.hpp"

namespace xdeficit {

namespace {

constexpr std::size_t kExhaustionDraws = 1'000'000;
constexpr double kMinAcceptance = 1e-3;

bool in_region(const XStateParams& p, Region region) noexcept {
    if (region == Region::psd_only) return true;
    return std::abs(p.c1) + std::abs(p.c2) + std::abs(p.c3) < 1.0 &&
           std::abs(p.r3) + std::abs(p.s3) + std::abs(p.c3) < 1.0;
}

// Draws until `count` candidates are accepted, or the acceptance rate collapses.
template <class Draw, class Accept>
std::vector<XStateParams> rejection_sample(Rng& rng, std::size_t count, Draw draw, Accept accept,
                                           std::string_view what) {
    std::vector<XStateParams> out;
    out.reserve(count);
    std::size_t draws = 0;
    while (out.size() < count) {
        XStateParams p = draw(rng);
        ++draws;
        if (accept(p)) out.push_back(p);
        if (draws >= kExhaustionDraws &&
            static_cast<double>(out.size()) < kMinAcceptance * static_cast<double>(draws)) {
            throw SamplerExhaustedError("sampler for " + std::string(what) + " accepted " +
                                        std::to_string(out.size()) + " of " + std::to_string(draws) +
                                        " draws");
        }
    }
    return out;
}

XStateParams uniform_box(Rng& rng) {
    XStateParams p;
    p.r3 = rng.uniform(-1.0, 1.0);
    p.s3 = rng.uniform(-1.0, 1.0);
    p.c1 = rng.uniform(-1.0, 1.0);
    p.c2 = rng.uniform(-1.0, 1.0);
    p.c3 = rng.uniform(-1.0, 1.0);
    return p;
}

double sign_of(double x) noexcept { return x < 0.0 ? -1.0 : 1.0; }

}  // namespace

double Rng::uniform() noexcept {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() noexcept {
    if (spare_) {
        const double v = *spare_;
        spare_.reset();
        return v;
    }
    // 1 - u keeps the log argument in (0, 1].
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    return radius * std::cos(angle);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::string_view to_string(Region region) noexcept {
    return region == Region::psd_only ? "psd_only" : "paper_region";
}

MeasurementDirection random_direction(Rng& rng) noexcept {
    for (;;) {
        const double x = rng.normal();
        const double y = rng.normal();
        const double z = rng.normal();
        const double n = std::sqrt(x * x + y * y + z * z);
        if (n > 1e-12) return {x / n, y / n, z / n};
    }
}

double grid_oracle(const XStateParams& p, int n_alpha, int n_phi) {
    if (n_alpha < 2 || n_phi < 2) throw std::invalid_argument("grid resolution must be at least 2x2");
    require_valid(p);
    const double a_sq = p.c1 * p.c1;
    const double b_sq = p.c2 * p.c2;
    const double c3_sq = p.c3 * p.c3;

    std::vector<double> cos_sq(static_cast<std::size_t>(n_alpha));
    for (int i = 0; i < n_alpha; ++i) {
        const double alpha = 2.0 * std::numbers::pi * i / (n_alpha - 1);
        const double c = std::cos(alpha);
        cos_sq[static_cast<std::size_t>(i)] = c * c;
    }

    double best = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < n_phi; ++j) {
        const double phi = j == n_phi - 1 ? 1.0 : static_cast<double>(j) / (n_phi - 1);
        const double transverse = 1.0 - phi * phi;
        for (double cs : cos_sq) {
            const double theta = transverse * (a_sq * cs + b_sq * (1.0 - cs)) + c3_sq * phi * phi;
            best = std::max(best, 2.0 - measured_entropy_F_unchecked(p, theta, phi));
        }
    }
    return best;
}

double g_sample_max(const XStateParams& p, int n_phi) {
    if (n_phi < 2) throw std::invalid_argument("n_phi must be at least 2");
    require_valid(p);
    double best = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < n_phi; ++j) {
        const double phi = j == n_phi - 1 ? 1.0 : static_cast<double>(j) / (n_phi - 1);
        best = std::max(best, G_unchecked(p, phi));
    }
    return best;
}

double su2_oracle(const XStateParams& p, std::size_t samples, std::uint64_t seed) {
    if (samples == 0) throw std::invalid_argument("su2_oracle needs at least one sample");
    require_valid(p);
    Rng rng(seed);
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < samples; ++k) {
        SU2Params u{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
        const double n = u.norm();
        if (n < 1e-12) continue;
        u = {u.t / n, u.y1 / n, u.y2 / n, u.y3 / n};
        const Spectrum s = measured_spectrum_unchecked(p, su2_to_bloch(u));
        best = std::max(best, 2.0 - von_neumann_entropy(s));
    }
    return best;
}

std::vector<XStateParams> random_states(const SamplerConfig& cfg) {
    if (cfg.count == 0) throw std::invalid_argument("sampler count must be at least 1");
    Rng rng(cfg.seed);
    return rejection_sample(
        rng, cfg.count, uniform_box,
        [&](const XStateParams& p) { return in_region(p, cfg.region) && validate_state(p).ok; },
        to_string(cfg.region));
}

std::vector<XStateParams> random_case_states(CaseLabel label, std::uint64_t seed, std::size_t count) {
    if (label == CaseLabel::none) throw std::invalid_argument("no region for label none");
    Rng rng(seed);
    auto draw = [label](Rng& g) {
        XStateParams p = uniform_box(g);
        switch (label) {
            case CaseLabel::case_iii:
                p.c3 = sign_of(p.c3) * p.c_transverse();
                p.s3 = p.r3 * p.c3;
                break;
            case CaseLabel::case_iv_top:
            case CaseLabel::case_iv_bottom:
                p.r3 = 0.0;
                break;
            default:
                break;
        }
        return p;
    };
    auto accept = [label](const XStateParams& p) { return satisfies_case(p, label) && validate_state(p).ok; };
    return rejection_sample(rng, count, draw, accept, to_string(label));
}

namespace {

OracleReport verify_one(const XStateParams& p, std::size_t index, const VerifyOptions& options) {
    OracleReport r;
    r.params = p;
    r.grid = options.grid;
    r.samples = options.su2_samples;
    r.su2_value = std::numeric_limits<double>::quiet_NaN();
    r.abs_diff_su2 = std::numeric_limits<double>::quiet_NaN();
    try {
        const DeficitResult exact = deficit_exact(p);
        r.method = std::string(to_string(exact.method));
        r.closed_value = exact.g_max;
        r.grid_value = grid_oracle(p, options.grid.n_alpha, options.grid.n_phi);
        r.sample_value = g_sample_max(p, options.grid.n_phi);
        r.abs_diff_grid = std::abs(r.closed_value - r.grid_value);
        r.abs_diff_sample = std::abs(r.grid_value - r.sample_value);
        if (options.su2_samples > 0) {
            r.su2_value = su2_oracle(p, options.su2_samples, derive_seed(options.seed, index));
            r.abs_diff_su2 = std::abs(r.closed_value - r.su2_value);
        }
    } catch (const std::exception& e) {
        r.error = e.what();
    }
    return r;
}

}  // namespace

VerifyBatch verify_states(std::span<const XStateParams> states, const VerifyOptions& options) {
    VerifyBatch batch;
    batch.reports.resize(states.size());

    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(states.size(), 1)));
    auto work = [&](unsigned worker) {
        for (std::size_t i = worker; i < states.size(); i += threads) {
            batch.reports[i] = verify_one(states[i], i, options);
        }
    };
    if (threads <= 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    }

    VerifySummary& s = batch.summary;
    s.n = states.size();
    double total = 0.0;
    for (const OracleReport& r : batch.reports) {
        if (r.failed()) {
            ++s.failures;
            continue;
        }
        s.max_diff_grid = std::max(s.max_diff_grid, r.abs_diff_grid);
        s.max_diff_sample = std::max(s.max_diff_sample, r.abs_diff_sample);
        if (options.su2_samples > 0) s.max_diff_su2 = std::max(s.max_diff_su2, r.abs_diff_su2);
        total += r.abs_diff_grid;
    }
    const std::size_t ok = s.n - s.failures;
    s.mean_diff_grid = ok ? total / static_cast<double>(ok) : 0.0;
    return batch;
}

VerifyBatch verify_random_states(const SamplerConfig& cfg, const VerifyOptions& options) {
    const std::vector<XStateParams> states = random_states(cfg);
    return verify_states(states, options);
}

}  // namespace xdeficit
