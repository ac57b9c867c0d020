#pragma once

// Surface-mode condition between two Drude half spaces separated by a gap d.
//
// For in-plane wave number k the mode condition factorises as
//     f(w) = [(eps+1) - e (eps-1)] [(eps+1) + e (eps-1)],   e = exp(-k d),
// the first factor producing the acoustical (lower) branch and the second
// the optical (upper) branch.

#include <limits>

#include "dmodes/dielectric.hpp"

namespace dmodes {

class ModePoint {
public:
    // kappa = k d must be finite and > 0.
    ModePoint(DampingRatio x, double kappa);

    // Infinitely separated surfaces: exp(-kappa) is exactly 0.
    static ModePoint decoupled(DampingRatio x);

    DampingRatio x() const noexcept { return x_; }
    double kappa() const noexcept { return kappa_; }
    bool is_decoupled() const noexcept { return coupling_ == 0.0; }

    // exp(-kappa), 1 - exp(-kappa), 1 + exp(-kappa); computed once.
    double coupling() const noexcept { return coupling_; }
    double one_minus_coupling() const noexcept { return one_minus_; }
    double one_plus_coupling() const noexcept { return 1.0 + coupling_; }

private:
    ModePoint(DampingRatio x, double kappa, double coupling, double one_minus)
        : x_(x), kappa_(kappa), coupling_(coupling), one_minus_(one_minus) {}

    DampingRatio x_;
    double kappa_;
    double coupling_;
    double one_minus_;
};

enum class FactorId { F1, F2 };

ComplexValue mode_factor(FactorId factor, ComplexValue omega, const ModePoint& point,
                         HalfPlaneBranch branch);

// Factor evaluated on the imaginary axis, omega -> i*omega (omega > 0). Real-valued.
double mode_factor_imag_axis(FactorId factor, double omega, const ModePoint& point);

struct ComplexZeros {
    ComplexValue omega1;   // zero of f1, acoustical
    ComplexValue omega2;   // zero of f2, optical
    bool overdamped1 = false;
    bool overdamped2 = false;
};

// Right-half-plane zeros of the upper-branch mode condition:
//     w_l = sqrt(r_l - x^2) - i x,  r_1 = (1 - e)/2,  r_2 = (1 + e)/2.
// A negative radicand sets the real part to 0 and raises the overdamped flag.
ComplexZeros complex_zeros(const ModePoint& point);

// Sum of the real parts of both zeros (units hbar*w_pl/2). The poles at 0 and
// -2ix carry no real part.
double naive_real_part_energy(const ModePoint& point);

}  // namespace dmodes
