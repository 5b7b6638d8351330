#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

namespace xdeficit {

using Complex = std::complex<double>;

/// Tolerance on the smallest eigenvalue when deciding positivity.
inline constexpr double kPsdTolerance = 1e-12;

class InvalidStateError : public std::invalid_argument {
public:
    explicit InvalidStateError(const std::string& reason)
        : std::invalid_argument(reason), reason_(reason) {}
    const std::string& reason() const noexcept { return reason_; }

private:
    std::string reason_;
};

/// Two-qubit X state with both local Bloch vectors along z:
///   rho = 1/4 (I⊗I + r3 σz⊗I + s3 I⊗σz + Σ_i c_i σ_i⊗σ_i)
struct XStateParams {
    double r3 = 0.0;
    double s3 = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;

    /// max(|c1|, |c2|): the transverse correlation that bounds theta.
    double c_transverse() const noexcept;
    /// max(|c1|, |c2|, |c3|).
    double c_max() const noexcept;
    /// Same state with the two qubits exchanged (r3 <-> s3).
    XStateParams swapped() const noexcept { return {s3, r3, c1, c2, c3}; }

    friend bool operator==(const XStateParams&, const XStateParams&) = default;
};

/// 4x4 density matrix in the basis |00>, |01>, |10>, |11>, row-major.
class DensityMatrix {
public:
    DensityMatrix() = default;

    Complex& operator()(int row, int col) { return data_[static_cast<std::size_t>(4 * row + col)]; }
    const Complex& operator()(int row, int col) const {
        return data_[static_cast<std::size_t>(4 * row + col)];
    }

    Complex trace() const noexcept;
    bool is_hermitian(double tol) const noexcept;
    /// Only the main diagonal and anti-diagonal may be nonzero.
    bool is_x_shaped() const noexcept;

    const std::array<Complex, 16>& entries() const noexcept { return data_; }

private:
    std::array<Complex, 16> data_{};
};

/// Four eigenvalues, descending.
struct Spectrum {
    std::array<double, 4> values{};

    double sum() const noexcept { return values[0] + values[1] + values[2] + values[3]; }
    double min() const noexcept { return values[3]; }
};

struct Validity {
    bool ok = true;
    std::string reason;

    explicit operator bool() const noexcept { return ok; }
};

DensityMatrix build_density_matrix(const XStateParams& p);

/// Checks the per-coordinate Bloch box and positivity of the induced matrix.
Validity validate_state(const XStateParams& p);

/// Throws InvalidStateError when validate_state fails.
void require_valid(const XStateParams& p);

/// Closed-form eigenvalues of the X-state matrix.
///
/// The block on {|01>,|10>} gives (1 - c3 ± sqrt((r3-s3)^2 + (c1+c2)^2)) / 4 and the
/// block on {|00>,|11>} gives (1 + c3 ± sqrt((r3+s3)^2 + (c1-c2)^2)) / 4.
Spectrum state_spectrum(const XStateParams& p);

/// Same as state_spectrum but without the validity check. Eigenvalues may be negative.
Spectrum state_spectrum_unchecked(const XStateParams& p) noexcept;

/// Von Neumann entropy in bits, with 0 log 0 = 0.
double von_neumann_entropy(const Spectrum& s) noexcept;

/// x log2 x, zero for x <= 1e-15. Used for the G/F four-term sums.
double xlog2x(double x) noexcept;

}  // namespace xdeficit
