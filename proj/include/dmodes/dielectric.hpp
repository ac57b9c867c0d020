#pragma once

// Drude dielectric response in plasma-frequency units.
//
// Frequencies are measured in units of the plasma frequency and the damping
// enters only through x = (eta / 2) / omega_pl, so that
//
//     eps_upper(w) = 1 - 1 / (w (w + 2 i x))
//     eps_lower(w) = 1 - 1 / (w (w - 2 i x))
//
// The upper form is the retarded function continued off the real axis from
// above; the lower form is its mirror, eps_lower(w) = conj(eps_upper(conj(w))).

#include <complex>

namespace dmodes {

using ComplexValue = std::complex<double>;

class DampingRatio {
public:
    // Throws DomainError unless value is finite and >= 0.
    explicit DampingRatio(double value);

    double value() const noexcept { return value_; }
    bool lossless() const noexcept { return value_ == 0.0; }

    friend bool operator==(DampingRatio, DampingRatio) = default;

private:
    double value_;
};

enum class HalfPlaneBranch { Upper, Lower };

ComplexValue epsilon(ComplexValue omega, DampingRatio x, HalfPlaneBranch branch);

// eps(i w) for real w > 0. Real by construction: 1 + 1 / (w (w + 2x)).
double epsilon_imag_axis(double omega, DampingRatio x);

// Im eps(w + i0) on the positive real axis: 2x / (w (w^2 + 4x^2)).
double im_epsilon(double omega, DampingRatio x);

}  // namespace dmodes
