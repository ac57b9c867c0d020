#pragma once

// Mode summation over a discretised spectral representation of eps.
//
// Replacing the frequency integral of the spectral representation by a
// midpoint sum over i_max nodes w'_i = (i - 1/2) w'_max / i_max gives a real
// rational function
//
//     eps_d(w) = 1 - (8x / 2pi) (w'_max / i_max) sum_i 1 / ((w^2 - w'_i^2)(w'_i^2 + 4x^2))
//
// with simple poles at the nodes. eps_d rises monotonically from -inf to +inf
// between neighbouring nodes and from -inf to 1 above the last one, so each
// factor f_l = 0 (eps_d = -coth(kd/2) or -tanh(kd/2)) has exactly one zero per
// interval. The energy is sum(zeros) - sum(poles) over both factors.

#include <vector>

#include "dmodes/mode_spectrum.hpp"

namespace dmodes {

class LehmanGrid {
public:
    // omega_max > 0 and finite, i_max >= 1.
    LehmanGrid(double omega_max, int i_max);

    double omega_max() const noexcept { return omega_max_; }
    int i_max() const noexcept { return i_max_; }
    double spacing() const noexcept { return omega_max_ / i_max_; }

    // 0-based: node(0) = spacing / 2.
    double node(int i) const noexcept { return (i + 0.5) * spacing(); }
    std::vector<double> nodes() const;

private:
    double omega_max_;
    int i_max_;
};

struct DiscreteSpectrum {
    std::vector<double> poles;
    std::vector<double> zeros_f1;
    std::vector<double> zeros_f2;
    std::vector<double> shifts_f1;  // zeros_f1[i] - poles[i]
    std::vector<double> shifts_f2;
};

// Evaluates eps_d at real omega >= 0 that is not a node. x must be > 0.
double epsilon_discrete(double omega, DampingRatio x, const LehmanGrid& grid);

// Value of eps at which the factor vanishes: -coth(kd/2) for F1, -tanh(kd/2) for F2.
double branch_target(FactorId factor, double kappa);

DiscreteSpectrum discrete_spectrum(const ModePoint& point, const LehmanGrid& grid);

// Sum of all shifts of both factors, units hbar*w_pl/2.
double discrete_energy(const ModePoint& point, const LehmanGrid& grid);

namespace detail {

// Spectral sum scaled by `strength`; strength -> 0 switches the interaction off.
// Test hook only.
double epsilon_discrete_scaled(double omega, DampingRatio x, const LehmanGrid& grid, double strength);
DiscreteSpectrum discrete_spectrum_scaled(const ModePoint& point, const LehmanGrid& grid, double strength);

}  // namespace detail

}  // namespace dmodes
