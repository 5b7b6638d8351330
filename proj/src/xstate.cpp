#include "xdeficit/xstate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace xdeficit {

namespace {

constexpr double kLogFloor = 1e-15;

void sort_descending(std::array<double, 4>& v) { std::sort(v.begin(), v.end(), std::greater<>()); }

}  // namespace

double XStateParams::c_transverse() const noexcept { return std::max(std::abs(c1), std::abs(c2)); }

double XStateParams::c_max() const noexcept { return std::max(c_transverse(), std::abs(c3)); }

Complex DensityMatrix::trace() const noexcept {
    return data_[0] + data_[5] + data_[10] + data_[15];
}

bool DensityMatrix::is_hermitian(double tol) const noexcept {
    for (int i = 0; i < 4; ++i) {
        for (int j = i; j < 4; ++j) {
            if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
        }
    }
    return true;
}

bool DensityMatrix::is_x_shaped() const noexcept {
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i == j || i + j == 3) continue;
            if ((*this)(i, j) != Complex{}) return false;
        }
    }
    return true;
}

DensityMatrix build_density_matrix(const XStateParams& p) {
    // Diagonal of σz⊗I is (1,1,-1,-1), of I⊗σz is (1,-1,1,-1), of σz⊗σz is (1,-1,-1,1).
    // σx⊗σx puts 1 on every anti-diagonal slot; σy⊗σy puts -1 on the corners and 1 in the middle.
    DensityMatrix m;
    m(0, 0) = 0.25 * (1.0 + p.r3 + p.s3 + p.c3);
    m(1, 1) = 0.25 * (1.0 + p.r3 - p.s3 - p.c3);
    m(2, 2) = 0.25 * (1.0 - p.r3 + p.s3 - p.c3);
    m(3, 3) = 0.25 * (1.0 - p.r3 - p.s3 + p.c3);
    const double corner = 0.25 * (p.c1 - p.c2);
    const double middle = 0.25 * (p.c1 + p.c2);
    m(0, 3) = corner;
    m(3, 0) = corner;
    m(1, 2) = middle;
    m(2, 1) = middle;
    return m;
}

Spectrum state_spectrum_unchecked(const XStateParams& p) noexcept {
    const double middle_radius = std::hypot(p.r3 - p.s3, p.c1 + p.c2);
    const double corner_radius = std::hypot(p.r3 + p.s3, p.c1 - p.c2);
    Spectrum s;
    s.values = {0.25 * (1.0 - p.c3 + middle_radius), 0.25 * (1.0 - p.c3 - middle_radius),
                0.25 * (1.0 + p.c3 + corner_radius), 0.25 * (1.0 + p.c3 - corner_radius)};
    sort_descending(s.values);
    return s;
}

Validity validate_state(const XStateParams& p) {
    const std::array<std::pair<const char*, double>, 5> fields{
        {{"r3", p.r3}, {"s3", p.s3}, {"c1", p.c1}, {"c2", p.c2}, {"c3", p.c3}}};
    for (const auto& [name, value] : fields) {
        if (!std::isfinite(value)) return {false, std::string("non-finite parameter ") + name};
        if (std::abs(value) > 1.0) {
            return {false, std::string("Bloch bound violated: |") + name + "| > 1"};
        }
    }
    const Spectrum s = state_spectrum_unchecked(p);
    if (s.min() < -kPsdTolerance) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "not positive semidefinite (min eigenvalue " << s.min() << ")";
        return {false, msg.str()};
    }
    return {};
}

void require_valid(const XStateParams& p) {
    if (auto v = validate_state(p); !v) throw InvalidStateError(v.reason);
}

Spectrum state_spectrum(const XStateParams& p) {
    require_valid(p);
    return state_spectrum_unchecked(p);
}

double xlog2x(double x) noexcept {
    if (x <= kLogFloor) return 0.0;
    return x * std::log2(x);
}

double von_neumann_entropy(const Spectrum& s) noexcept {
    double h = 0.0;
    for (double v : s.values) h -= xlog2x(std::clamp(v, 0.0, 1.0));
    // -0.0 for pure states reads badly in output.
    return h == 0.0 ? 0.0 : h;
}

}  // namespace xdeficit
