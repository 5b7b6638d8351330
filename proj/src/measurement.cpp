#include "xdeficit/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace xdeficit {

namespace {

constexpr double kNormTolerance = 1e-9;

// Sum of x log2 x over the four eigenvalue numerators (1 ± s3 phi ± R).
double four_term_sum(double s3_phi, double radius_plus, double radius_minus) noexcept {
    return xlog2x(1.0 + s3_phi + radius_plus) + xlog2x(1.0 + s3_phi - radius_plus) +
           xlog2x(1.0 - s3_phi + radius_minus) + xlog2x(1.0 - s3_phi - radius_minus);
}

std::string describe(double value) {
    std::ostringstream out;
    out.precision(17);
    out << value;
    return out.str();
}

}  // namespace

double SU2Params::norm() const noexcept { return std::sqrt(t * t + y1 * y1 + y2 * y2 + y3 * y3); }

double MeasurementDirection::norm() const noexcept { return std::sqrt(z1 * z1 + z2 * z2 + z3 * z3); }

MeasurementDirection su2_to_bloch(const SU2Params& u) {
    if (std::abs(u.norm() - 1.0) > kNormTolerance) {
        throw NormalizationError("SU(2) parameters are not normalized: |u| = " + describe(u.norm()));
    }
    return {2.0 * (u.y1 * u.y3 - u.t * u.y2), 2.0 * (u.t * u.y1 + u.y2 * u.y3),
            u.t * u.t + u.y3 * u.y3 - u.y1 * u.y1 - u.y2 * u.y2};
}

SU2Params bloch_to_su2(const MeasurementDirection& d) {
    if (std::abs(d.norm() - 1.0) > kNormTolerance) {
        throw NormalizationError("direction is not a unit vector: |z| = " + describe(d.norm()));
    }
    // Shortest rotation taking e3 to w has quaternion ∝ (1 + w3, e3 × w).
    auto from_north = [](double w1, double w2, double w3) {
        const double n = std::sqrt(2.0 * (1.0 + w3));
        return SU2Params{(1.0 + w3) / n, w2 / n, -w1 / n, 0.0};
    };
    if (d.z3 >= 0.0) return from_north(d.z1, d.z2, d.z3);
    // Rotate to -z from the north pole, then compose with i σx which flips e3.
    const SU2Params v = from_north(-d.z1, -d.z2, -d.z3);
    return {-v.y1, v.t, -v.y3, v.y2};
}

Spectrum measured_spectrum_unchecked(const XStateParams& p, const MeasurementDirection& d) noexcept {
    const double a1 = p.c1 * d.z1;
    const double a2 = p.c2 * d.z2;
    const double transverse = a1 * a1 + a2 * a2;
    const double plus = std::sqrt(transverse + (p.r3 + p.c3 * d.z3) * (p.r3 + p.c3 * d.z3));
    const double minus = std::sqrt(transverse + (p.r3 - p.c3 * d.z3) * (p.r3 - p.c3 * d.z3));
    const double bias = p.s3 * d.z3;
    Spectrum s;
    s.values = {0.25 * (1.0 + bias + plus), 0.25 * (1.0 + bias - plus), 0.25 * (1.0 - bias + minus),
                0.25 * (1.0 - bias - minus)};
    std::sort(s.values.begin(), s.values.end(), std::greater<>());
    return s;
}

Spectrum measured_spectrum(const XStateParams& p, const MeasurementDirection& d) {
    require_valid(p);
    if (std::abs(d.norm() - 1.0) > kNormTolerance) {
        throw NormalizationError("direction is not a unit vector: |z| = " + describe(d.norm()));
    }
    return measured_spectrum_unchecked(p, d);
}

MeasuredQuantities measured_quantities(const XStateParams& p, const MeasurementDirection& d) noexcept {
    return {p.c1 * p.c1 * d.z1 * d.z1 + p.c2 * p.c2 * d.z2 * d.z2 + p.c3 * p.c3 * d.z3 * d.z3, d.z3};
}

std::pair<double, double> theta_range(const XStateParams& p, double phi) noexcept {
    const double a = p.c1 * p.c1;
    const double b = p.c2 * p.c2;
    const double transverse = 1.0 - phi * phi;
    const double axial = p.c3 * p.c3 * phi * phi;
    return {std::min(a, b) * transverse + axial, std::max(a, b) * transverse + axial};
}

double measured_entropy_F_unchecked(const XStateParams& p, double theta, double phi) noexcept {
    const double cross = 2.0 * p.r3 * p.c3 * phi;
    const double base = p.r3 * p.r3 + theta;
    const double plus = std::sqrt(std::max(0.0, base + cross));
    const double minus = std::sqrt(std::max(0.0, base - cross));
    return 2.0 - 0.25 * four_term_sum(p.s3 * phi, plus, minus);
}

double measured_entropy_F(const XStateParams& p, const MeasuredQuantities& q) {
    if (!(std::abs(q.phi) <= 1.0)) throw DomainError("phi outside [-1, 1]: " + describe(q.phi));
    const auto [lo, hi] = theta_range(p, q.phi);
    if (!(q.theta >= lo - kThetaTolerance && q.theta <= hi + kThetaTolerance)) {
        throw DomainError("theta " + describe(q.theta) + " not attainable at phi " + describe(q.phi) +
                          " (range [" + describe(lo) + ", " + describe(hi) + "])");
    }
    return measured_entropy_F_unchecked(p, std::clamp(q.theta, lo, hi), q.phi);
}

ThetaBound theta_max(const XStateParams& p, double phi) {
    if (!(std::abs(phi) <= 1.0)) throw DomainError("phi outside [-1, 1]: " + describe(phi));
    const double c = p.c_transverse();
    const double transverse = std::sqrt(std::max(0.0, 1.0 - phi * phi));
    ThetaBound out;
    out.theta = c * c + (p.c3 * p.c3 - c * c) * phi * phi;
    if (std::abs(p.c1) >= std::abs(p.c2)) {
        out.witness = {transverse, 0.0, phi};
    } else {
        out.witness = {0.0, transverse, phi};
    }
    return out;
}

}  // namespace xdeficit
