#include "dmodes/energy.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dmodes/errors.hpp"

namespace dmodes {

namespace {

// Angle of (Re f_l, Im f_l) after multiplying both by w (w^2 + 4x^2) > 0:
//   Re -> w (2 (w^2 + 4x^2) - weight),  Im -> 2 x weight,
// which keeps the small-w limit finite. Im >= 0 so atan2 lands in [0, pi].
double factor_angle(double omega, double x, double weight)
{
    const double im = 2.0 * x * weight;
    const double re = omega * (2.0 * (omega * omega + 4.0 * x * x) - weight);
    return std::atan2(im, re);
}

void require_positive(double omega, const char* who)
{
    if (!(omega > 0.0))
        throw DomainError(std::string(who) + ": omega must be > 0");
}

void require_converged(const IntegralResult& r, EnergyRoute route, const ModePoint& point)
{
    if (r.converged) return;
    throw NumericalError("quadrature did not converge on the " + std::string(to_string(route)) +
                         " route (x = " + std::to_string(point.x().value()) +
                         ", kd = " + std::to_string(point.kappa()) + ", estimate = " +
                         std::to_string(r.value) + " +/- " + std::to_string(r.error_estimate) + ")");
}

double integrand(EnergyRoute route, double omega, const ModePoint& point)
{
    return route == EnergyRoute::RealAxis ? integrand_F(omega, point) : integrand_G(omega, point);
}

}  // namespace

std::string_view to_string(EnergyRoute route)
{
    return route == EnergyRoute::RealAxis ? "real-axis" : "imag-axis";
}

double integrand_F(double omega, const ModePoint& point)
{
    require_positive(omega, "integrand_F");
    const double x = point.x().value();
    return (factor_angle(omega, x, point.one_minus_coupling()) +
            factor_angle(omega, x, point.one_plus_coupling())) /
           std::numbers::pi;
}

double integrand_G(double omega, const ModePoint& point)
{
    require_positive(omega, "integrand_G");
    // ln(f1 f2 / 4) = ln(1 + (1-e) d / 2) + ln(1 + (1+e) d / 2), d = eps(iw) - 1.
    const double excess = 1.0 / (omega * (omega + 2.0 * point.x().value()));
    return (std::log1p(0.5 * point.one_minus_coupling() * excess) +
            std::log1p(0.5 * point.one_plus_coupling() * excess)) /
           std::numbers::pi;
}

double closed_form_energy_x0(double kappa)
{
    if (!(kappa > 0.0))
        throw DomainError("closed_form_energy_x0: kd must be > 0");
    const double e = std::exp(-kappa);
    return std::sqrt(-0.5 * std::expm1(-kappa)) + std::sqrt(0.5 * (1.0 + e));
}

namespace {

double closed_form_x0(const ModePoint& point)
{
    return std::sqrt(0.5 * point.one_minus_coupling()) + std::sqrt(0.5 * point.one_plus_coupling());
}

}  // namespace

EnergyValue energy_k(const ModePoint& point, EnergyRoute route, const QuadratureConfig& cfg)
{
    EnergyValue out;
    out.route = route;
    if (route == EnergyRoute::RealAxis && point.x().lossless()) {
        out.value = closed_form_x0(point);
        out.quadrature = {out.value, 0.0, 0, true};
        return out;
    }
    out.quadrature = integrate_semi_infinite([&](double w) { return integrand(route, w, point); }, cfg);
    require_converged(out.quadrature, route, point);
    out.value = out.quadrature.value;
    return out;
}

double interaction_energy_k(const ModePoint& point, const QuadratureConfig& cfg, EnergyRoute route)
{
    const ModePoint reference = ModePoint::decoupled(point.x());
    if (point.is_decoupled()) return 0.0;
    if (route == EnergyRoute::RealAxis && point.x().lossless())
        return closed_form_x0(point) - closed_form_x0(reference);

    const IntegralResult r = integrate_semi_infinite(
        [&](double w) { return integrand(route, w, point) - integrand(route, w, reference); }, cfg);
    require_converged(r, route, point);
    return r.value;
}

double area_coefficient(DampingRatio x, const QuadratureConfig& cfg)
{
    const IntegralResult r = integrate_semi_infinite(
        [&](double u) {
            // e^{-u} underflows long before u reaches the top of double range.
            if (std::exp(-u) == 0.0) return 0.0;
            return u * interaction_energy_k(ModePoint(x, u), cfg);
        },
        cfg);
    if (!r.converged)
        throw NumericalError("area_coefficient: outer wave-vector integral did not converge");
    return r.value / (2.0 * std::numbers::pi);
}

double energy_per_area(double area_coeff, double d)
{
    if (!(d > 0.0) || !std::isfinite(d))
        throw DomainError("separation d must be finite and > 0");
    return area_coeff / (d * d);
}

}  // namespace dmodes
