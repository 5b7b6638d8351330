#include "xdeficit/deficit.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace xdeficit {

namespace {

constexpr double kInvGolden = 0.6180339887498948482;  // (sqrt(5) - 1) / 2

double quarter_sum(double a, double b, double c, double d) noexcept {
    return 0.25 * (xlog2x(a) + xlog2x(b) + xlog2x(c) + xlog2x(d));
}

// Golden-section search for a maximum of G on [lo, hi].
GMaximum golden_section(const XStateParams& p, double lo, double hi, double tol) {
    double x1 = hi - kInvGolden * (hi - lo);
    double x2 = lo + kInvGolden * (hi - lo);
    double f1 = G_unchecked(p, x1);
    double f2 = G_unchecked(p, x2);
    while (hi - lo > tol) {
        if (f1 >= f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kInvGolden * (hi - lo);
            f1 = G_unchecked(p, x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kInvGolden * (hi - lo);
            f2 = G_unchecked(p, x2);
        }
    }
    return f1 >= f2 ? GMaximum{x1, f1} : GMaximum{x2, f2};
}

bool near(double a, double b) noexcept { return std::abs(a - b) <= kCaseTolerance; }

DeficitResult with_side(DeficitResult r, Side side) {
    r.side = side;
    return r;
}

}  // namespace

std::string_view to_string(Side side) noexcept {
    return side == Side::measure_a ? "measure_a" : "measure_b";
}

std::string_view to_string(Method method) noexcept {
    switch (method) {
        case Method::closed_form_case_i: return "closed_form_case_i";
        case Method::closed_form_case_ii: return "closed_form_case_ii";
        case Method::closed_form_case_iii: return "closed_form_case_iii";
        case Method::closed_form_case_iv: return "closed_form_case_iv";
        case Method::bell_diagonal: return "bell_diagonal";
        case Method::numeric: return "numeric";
    }
    return "numeric";
}

std::string_view to_string(CaseLabel label) noexcept {
    switch (label) {
        case CaseLabel::case_i: return "case_i";
        case CaseLabel::case_ii: return "case_ii";
        case CaseLabel::case_iii: return "case_iii";
        case CaseLabel::case_iv_top: return "case_iv_top";
        case CaseLabel::case_iv_bottom: return "case_iv_bottom";
        case CaseLabel::none: return "none";
    }
    return "none";
}

RadiusPair radius_pair(const XStateParams& p, double phi) noexcept {
    const double c = p.c_transverse();
    const double transverse = c * c * (1.0 - phi * phi);
    const double up = p.r3 + p.c3 * phi;
    const double down = p.r3 - p.c3 * phi;
    return {std::sqrt(std::max(0.0, up * up + transverse)), std::sqrt(std::max(0.0, down * down + transverse))};
}

double G_unchecked(const XStateParams& p, double phi) noexcept {
    const RadiusPair r = radius_pair(p, phi);
    const double bias = p.s3 * phi;
    return quarter_sum(1.0 + bias + r.plus, 1.0 + bias - r.plus, 1.0 - bias + r.minus, 1.0 - bias - r.minus);
}

double G(const XStateParams& p, double phi) {
    if (!(phi >= -kCaseTolerance && phi <= 1.0 + kCaseTolerance)) {
        throw DomainError("phi outside [0, 1]: " + std::to_string(phi));
    }
    require_valid(p);
    return G_unchecked(p, std::clamp(phi, 0.0, 1.0));
}

double G_at_one(const XStateParams& p) noexcept {
    const double up = std::abs(p.r3 + p.c3);
    const double down = std::abs(p.r3 - p.c3);
    return quarter_sum(1.0 + p.s3 + up, 1.0 + p.s3 - up, 1.0 - p.s3 + down, 1.0 - p.s3 - down);
}

double G_at_zero(const XStateParams& p) noexcept {
    const double c = p.c_transverse();
    const double radius = std::sqrt(p.r3 * p.r3 + c * c);
    return 0.5 * (xlog2x(1.0 + radius) + xlog2x(1.0 - radius));
}

GMaximum maximize_G_unchecked(const XStateParams& p, const MaximizerConfig& config) {
    const int n = std::max(config.scan_points, 2);
    const double step = 1.0 / (n - 1);
    std::vector<double> values(static_cast<std::size_t>(n));
    std::size_t best = 0;
    for (int i = 0; i < n; ++i) {
        const double phi = (i == n - 1) ? 1.0 : i * step;
        values[static_cast<std::size_t>(i)] = G_unchecked(p, phi);
        if (values[static_cast<std::size_t>(i)] > values[best]) best = static_cast<std::size_t>(i);
    }

    const auto phi_at = [&](std::size_t i) { return i + 1 == values.size() ? 1.0 : static_cast<double>(i) * step; };
    const double lo = phi_at(best == 0 ? 0 : best - 1);
    const double hi = phi_at(std::min(best + 1, values.size() - 1));
    const GMaximum refined = golden_section(p, lo, hi, config.phi_tolerance);

    // The refined point competes only if it beats every scan point; otherwise a search that
    // converged onto an endpoint would shadow the endpoint itself.
    const double top = std::max(values[best], refined.g_max);
    const double cutoff = top - config.tie_tolerance;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] >= cutoff) return {phi_at(i), values[i]};
    }
    return refined;
}

GMaximum maximize_G(const XStateParams& p, const MaximizerConfig& config) {
    require_valid(p);
    return maximize_G_unchecked(p, config);
}

bool satisfies_case(const XStateParams& p, CaseLabel label) noexcept {
    const double c = p.c_transverse();
    const double c_sq = c * c;
    const double c3_sq = p.c3 * p.c3;
    const double r3_sq = p.r3 * p.r3;
    const double rc = p.r3 * p.c3;
    const double tol = kCaseTolerance;
    switch (label) {
        case CaseLabel::case_i:
            return c3_sq - c_sq >= r3_sq - tol && rc <= tol && p.s3 >= -tol;
        case CaseLabel::case_ii:
            return c3_sq - c_sq >= r3_sq - tol && rc >= -tol && p.s3 <= tol;
        case CaseLabel::case_iii:
            return near(c3_sq, c_sq) && near(p.s3, rc) && rc <= tol &&
                   std::max(c, std::abs(p.r3)) >= std::sqrt(0.5) - tol;
        case CaseLabel::case_iv_top:
            return near(p.r3, 0.0) && c3_sq >= c_sq - tol && p.s3 >= -tol;
        case CaseLabel::case_iv_bottom:
            return near(p.r3, 0.0) && c3_sq <= c_sq + tol && p.s3 <= tol;
        case CaseLabel::none:
            return false;
    }
    return false;
}

CaseLabel classify_case(const XStateParams& p) noexcept {
    for (CaseLabel label : {CaseLabel::case_i, CaseLabel::case_ii, CaseLabel::case_iii, CaseLabel::case_iv_top,
                            CaseLabel::case_iv_bottom}) {
        if (satisfies_case(p, label)) return label;
    }
    return CaseLabel::none;
}

double endpoint_of(CaseLabel label) {
    switch (label) {
        case CaseLabel::case_i:
        case CaseLabel::case_ii:
        case CaseLabel::case_iv_top:
            return 1.0;
        case CaseLabel::case_iii:
        case CaseLabel::case_iv_bottom:
            return 0.0;
        case CaseLabel::none:
            break;
    }
    throw CaseMismatchError("no closed-form endpoint for label none");
}

Method method_of(CaseLabel label) noexcept {
    switch (label) {
        case CaseLabel::case_i: return Method::closed_form_case_i;
        case CaseLabel::case_ii: return Method::closed_form_case_ii;
        case CaseLabel::case_iii: return Method::closed_form_case_iii;
        case CaseLabel::case_iv_top:
        case CaseLabel::case_iv_bottom: return Method::closed_form_case_iv;
        case CaseLabel::none: return Method::numeric;
    }
    return Method::numeric;
}

DeficitResult deficit_closed_form(const XStateParams& p, CaseLabel label) {
    require_valid(p);
    if (!satisfies_case(p, label)) {
        throw CaseMismatchError(std::string("state does not satisfy the conditions of ") +
                                std::string(to_string(label)));
    }
    DeficitResult r;
    r.phi_star = endpoint_of(label);
    r.g_max = r.phi_star == 1.0 ? G_at_one(p) : G_at_zero(p);
    r.s_rho = von_neumann_entropy(state_spectrum_unchecked(p));
    r.deficit = (2.0 - r.g_max) - r.s_rho;
    r.method = method_of(label);
    r.case_label = label;
    return r;
}

DeficitResult deficit_numeric(const XStateParams& p, Side side, const MaximizerConfig& config) {
    const XStateParams q = side == Side::measure_a ? p.swapped() : p;
    require_valid(q);
    const GMaximum best = maximize_G_unchecked(q, config);
    DeficitResult r;
    r.phi_star = best.phi_star;
    r.g_max = best.g_max;
    r.s_rho = von_neumann_entropy(state_spectrum_unchecked(q));
    r.deficit = (2.0 - r.g_max) - r.s_rho;
    r.method = Method::numeric;
    r.side = side;
    r.case_label = classify_case(q);
    return r;
}

DeficitResult deficit_exact(const XStateParams& p, Side side, const MaximizerConfig& config) {
    DeficitResult numeric = deficit_numeric(p, side, config);
    if (numeric.case_label == CaseLabel::none) return numeric;

    const XStateParams q = side == Side::measure_a ? p.swapped() : p;
    DeficitResult closed = deficit_closed_form(q, numeric.case_label);
    if (std::abs(closed.deficit - numeric.deficit) <= kClosedFormAgreement) return with_side(closed, side);

    numeric.closed_form_rejected = true;
    return numeric;
}

double bell_diagonal_deficit(double c1, double c2, double c3) {
    require_valid({0.0, 0.0, c1, c2, c3});
    const double big_c = std::max({std::abs(c1), std::abs(c2), std::abs(c3)});
    const double dephased = quarter_sum(1.0 - c1 + c2 + c3, 1.0 - c1 - c2 - c3, 1.0 + c1 + c2 - c3, 1.0 + c1 - c2 + c3);
    return dephased - 0.5 * (xlog2x(1.0 + big_c) + xlog2x(1.0 - big_c));
}

}  // namespace xdeficit
