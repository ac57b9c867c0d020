#include "dmodes/mode_spectrum.hpp"

#include <cmath>
#include <string>

#include "dmodes/errors.hpp"

namespace dmodes {

ModePoint::ModePoint(DampingRatio x, double kappa)
    : x_(x), kappa_(kappa), coupling_(std::exp(-kappa)), one_minus_(-std::expm1(-kappa))
{
    if (!std::isfinite(kappa) || !(kappa > 0.0))
        throw DomainError("reduced wave vector kd must be finite and > 0, got " + std::to_string(kappa));
}

ModePoint ModePoint::decoupled(DampingRatio x)
{
    return ModePoint(x, std::numeric_limits<double>::infinity(), 0.0, 1.0);
}

namespace {

ComplexValue combine(FactorId factor, ComplexValue eps, const ModePoint& p)
{
    const double sign = factor == FactorId::F1 ? -1.0 : 1.0;
    return (eps + 1.0) + sign * p.coupling() * (eps - 1.0);
}

}  // namespace

ComplexValue mode_factor(FactorId factor, ComplexValue omega, const ModePoint& point,
                         HalfPlaneBranch branch)
{
    return combine(factor, epsilon(omega, point.x(), branch), point);
}

double mode_factor_imag_axis(FactorId factor, double omega, const ModePoint& point)
{
    // (eps+1) -/+ e (eps-1) = 2 + (1 -/+ e) (eps-1), written to keep 1-e accurate at small kappa.
    const double excess = epsilon_imag_axis(omega, point.x()) - 1.0;
    const double weight = factor == FactorId::F1 ? point.one_minus_coupling() : point.one_plus_coupling();
    return 2.0 + weight * excess;
}

ComplexZeros complex_zeros(const ModePoint& point)
{
    const double x = point.x().value();
    const double r1 = 0.5 * point.one_minus_coupling() - x * x;
    const double r2 = 0.5 * point.one_plus_coupling() - x * x;

    ComplexZeros z;
    z.overdamped1 = r1 < 0.0;
    z.overdamped2 = r2 < 0.0;
    z.omega1 = {z.overdamped1 ? 0.0 : std::sqrt(r1), -x};
    z.omega2 = {z.overdamped2 ? 0.0 : std::sqrt(r2), -x};
    return z;
}

double naive_real_part_energy(const ModePoint& point)
{
    const ComplexZeros z = complex_zeros(point);
    return z.omega1.real() + z.omega2.real();
}

}  // namespace dmodes
