#pragma once

// Zero-point energy of the coupled surface modes for one wave vector,
// in units of hbar*w_pl/2.
//
// Two contour choices give the same number:
//   RealAxis: E = int_0^inf F(w) dw, F = (theta_1 + theta_2) / pi, where
//             theta_l in [0, pi] is the angle of f_l(w + i0) in the plane.
//   ImagAxis: E = int_0^inf G(w) dw, G = ln(f(iw) / 4) / pi.

#include <string_view>

#include "dmodes/mode_spectrum.hpp"
#include "dmodes/quadrature.hpp"

namespace dmodes {

enum class EnergyRoute { RealAxis, ImagAxis };

std::string_view to_string(EnergyRoute route);

struct EnergyValue {
    double value = 0.0;
    EnergyRoute route = EnergyRoute::ImagAxis;
    IntegralResult quadrature;
};

double integrand_F(double omega, const ModePoint& point);
double integrand_G(double omega, const ModePoint& point);

// Throws NumericalError (naming the route) if the quadrature does not converge.
// At x = 0 the RealAxis integrand is a step function whose integral is the
// closed form; that value is returned without quadrature.
EnergyValue energy_k(const ModePoint& point, EnergyRoute route, const QuadratureConfig& cfg = {});

// sqrt((1 - e^-kd)/2) + sqrt((1 + e^-kd)/2): the lossless mode sum.
double closed_form_energy_x0(double kappa);

// energy_k(point) - energy_k(decoupled), integrated as a single difference
// integrand. Negative for every valid point.
double interaction_energy_k(const ModePoint& point, const QuadratureConfig& cfg = {},
                            EnergyRoute route = EnergyRoute::ImagAxis);

// C(x) = (1/2pi) int_0^inf u * interaction_energy_k(x, u) du.
// Energy per unit area of one surface is C(x) * (hbar w_pl / 2) / d^2.
double area_coefficient(DampingRatio x, const QuadratureConfig& cfg = {});

// E per unit area at separation d (d in the same length unit as 1/k).
double energy_per_area(double area_coeff, double d);

}  // namespace dmodes
