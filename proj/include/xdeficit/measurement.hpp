#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "xdeficit/xstate.hpp"

namespace xdeficit {

class NormalizationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// V = t I + i (y1 σx + y2 σy + y3 σz) in SU(2).
struct SU2Params {
    double t = 1.0;
    double y1 = 0.0;
    double y2 = 0.0;
    double y3 = 0.0;

    double norm() const noexcept;
};

/// Bloch vector of the projector V|0><0|V†; z3 plays the role of phi.
struct MeasurementDirection {
    double z1 = 0.0;
    double z2 = 0.0;
    double z3 = 1.0;

    double norm() const noexcept;
};

struct MeasuredQuantities {
    double theta = 0.0;  ///< c1² z1² + c2² z2² + c3² z3²
    double phi = 0.0;    ///< z3
};

struct ThetaBound {
    double theta = 0.0;
    MeasurementDirection witness;
};

inline constexpr double kThetaTolerance = 1e-9;

/// Throws NormalizationError if | |u| - 1 | > 1e-9.
MeasurementDirection su2_to_bloch(const SU2Params& u);

/// Some V with su2_to_bloch(V) == d. Requires |d| = 1 within 1e-9.
SU2Params bloch_to_su2(const MeasurementDirection& d);

/// Eigenvalues of Σ_k (I⊗B_k) rho (I⊗B_k) for the measurement on qubit b along d.
Spectrum measured_spectrum(const XStateParams& p, const MeasurementDirection& d);
Spectrum measured_spectrum_unchecked(const XStateParams& p, const MeasurementDirection& d) noexcept;

MeasuredQuantities measured_quantities(const XStateParams& p, const MeasurementDirection& d) noexcept;

/// Attainable [min, max] of theta at fixed phi.
std::pair<double, double> theta_range(const XStateParams& p, double phi) noexcept;

/// Entropy of the measured ensemble as a function of (theta, phi).
/// Throws DomainError if theta lies outside theta_range by more than 1e-9 or |phi| > 1.
double measured_entropy_F(const XStateParams& p, const MeasuredQuantities& q);

/// F(theta, phi) with no range checks; log arguments are clamped at zero.
double measured_entropy_F_unchecked(const XStateParams& p, double theta, double phi) noexcept;

/// Largest attainable theta at fixed phi, c² + (c3² - c²) phi², with a direction achieving it.
ThetaBound theta_max(const XStateParams& p, double phi);

}  // namespace xdeficit
