#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "xdeficit/deficit.hpp"
#include "xdeficit/oracle.hpp"
#include "xdeficit/xstate.hpp"

namespace xdeficit::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kInvalidState = 2,
    kToleranceBreach = 3,
};

enum class MethodChoice { automatic, numeric_only, closed_form_only };

struct ComputeRequest {
    XStateParams params;
    Side side = Side::measure_b;
    MethodChoice method = MethodChoice::automatic;
};

struct VerifyRequest {
    SamplerConfig sampler;
    VerifyOptions options;
    double tolerance = 1e-4;
    std::optional<XStateParams> fixed_state;  ///< replaces the sampler with a single state
    std::string out;                           ///< empty writes to stdout
};

enum class SweepParam { r3, s3, c1, c2, c3 };

struct SweepSpec {
    SweepParam varying = SweepParam::c3;
    double from = 0.0;
    double to = 1.0;
    int steps = 11;
    XStateParams fixed;
    std::string out;
};

struct GCurveRequest {
    XStateParams params;
    int points = 101;
    std::string out;
};

/// printf "%.17g" (lossless for doubles); NaN prints as "nan".
std::string format_number(double value);

/// Five numbers "r3 s3 c1 c2 c3", or one object text {"r3":..,"s3":..,"c1":..,"c2":..,"c3":..}.
/// Throws std::invalid_argument on malformed input.
XStateParams parse_params(const std::vector<std::string>& tokens);

std::string_view to_string(SweepParam param) noexcept;
double& sweep_slot(XStateParams& p, SweepParam param) noexcept;

int cmd_compute(const ComputeRequest& req, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyRequest& req, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepSpec& spec, std::ostream& out, std::ostream& err);
int cmd_gcurve(const GCurveRequest& req, std::ostream& out, std::ostream& err);

/// Parses argv (without the program name) and dispatches to a subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xdeficit::cli
