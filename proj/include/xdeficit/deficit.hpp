#pragma once

#include <stdexcept>
#include <string_view>

#include "xdeficit/measurement.hpp"
#include "xdeficit/xstate.hpp"

namespace xdeficit {

/// Which qubit is measured. The X form is symmetric under qubit exchange with r3 <-> s3.
enum class Side { measure_b, measure_a };

enum class Method {
    closed_form_case_i,
    closed_form_case_ii,
    closed_form_case_iii,
    closed_form_case_iv,
    bell_diagonal,
    numeric,
};

/// Parameter regions in which the maximum of G sits at a known endpoint.
enum class CaseLabel { case_i, case_ii, case_iii, case_iv_top, case_iv_bottom, none };

class CaseMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::string_view to_string(Side side) noexcept;
std::string_view to_string(Method method) noexcept;
std::string_view to_string(CaseLabel label) noexcept;

/// Tolerance for equality comparisons in the region conditions.
inline constexpr double kCaseTolerance = 1e-12;
/// A closed-form value further than this from the numeric optimum is discarded.
inline constexpr double kClosedFormAgreement = 1e-8;

struct RadiusPair {
    double plus = 0.0;   ///< sqrt((r3 + c3 phi)² + c² (1 - phi²))
    double minus = 0.0;  ///< sqrt((r3 - c3 phi)² + c² (1 - phi²))
};

RadiusPair radius_pair(const XStateParams& p, double phi) noexcept;

/// 2 - F(theta_max(phi), phi). Throws DomainError for phi outside [0, 1] and
/// InvalidStateError for an unphysical state.
double G(const XStateParams& p, double phi);
double G_unchecked(const XStateParams& p, double phi) noexcept;

/// Closed-form G at the endpoints.
double G_at_one(const XStateParams& p) noexcept;
double G_at_zero(const XStateParams& p) noexcept;

struct MaximizerConfig {
    /// Uniform scan resolution on [0, 1]. G need not be unimodal, so this is a correctness knob.
    int scan_points = 2001;
    /// Golden-section refinement stops once the bracket is narrower than this.
    double phi_tolerance = 1e-12;
    /// Candidates within this of the best value count as ties; the smallest phi wins.
    double tie_tolerance = 1e-12;
};

struct GMaximum {
    double phi_star = 0.0;
    double g_max = 0.0;
};

GMaximum maximize_G(const XStateParams& p, const MaximizerConfig& config = {});
GMaximum maximize_G_unchecked(const XStateParams& p, const MaximizerConfig& config = {});

/// True if the region conditions of `label` hold for `p`. `none` never matches.
bool satisfies_case(const XStateParams& p, CaseLabel label) noexcept;

/// First label in the order i, ii, iii, iv_top, iv_bottom whose conditions hold.
CaseLabel classify_case(const XStateParams& p) noexcept;

/// 1 for cases i, ii, iv_top; 0 for iii, iv_bottom.
double endpoint_of(CaseLabel label);

Method method_of(CaseLabel label) noexcept;

struct DeficitResult {
    double deficit = 0.0;
    double phi_star = 0.0;
    double g_max = 0.0;
    double s_rho = 0.0;
    Method method = Method::numeric;
    Side side = Side::measure_b;
    CaseLabel case_label = CaseLabel::none;
    /// Set when a region matched but its endpoint value disagreed with the numeric optimum.
    bool closed_form_rejected = false;
};

/// Deficit from the endpoint value of the region `label`. Throws CaseMismatchError if the
/// region conditions do not hold for `p`.
DeficitResult deficit_closed_form(const XStateParams& p, CaseLabel label);

/// Deficit from the numeric maximum of G only.
DeficitResult deficit_numeric(const XStateParams& p, Side side = Side::measure_b,
                              const MaximizerConfig& config = {});

/// Exact one-way deficit: closed form when a region applies and agrees with the numeric
/// maximum, numeric otherwise.
DeficitResult deficit_exact(const XStateParams& p, Side side = Side::measure_b,
                            const MaximizerConfig& config = {});

/// Deficit of the Bell-diagonal state with correlations (c1, c2, c3).
double bell_diagonal_deficit(double c1, double c2, double c3);

}  // namespace xdeficit
