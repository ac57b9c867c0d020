#include "dmodes/dielectric.hpp"

#include <cmath>
#include <string>

#include "dmodes/errors.hpp"

namespace dmodes {

DampingRatio::DampingRatio(double value) : value_(value)
{
    if (!std::isfinite(value) || value < 0.0)
        throw DomainError("damping ratio must be finite and non-negative, got " + std::to_string(value));
}

ComplexValue epsilon(ComplexValue omega, DampingRatio x, HalfPlaneBranch branch)
{
    if (!std::isfinite(omega.real()) || !std::isfinite(omega.imag()))
        throw DomainError("epsilon: non-finite frequency");
    if (omega == ComplexValue{0.0, 0.0})
        throw DomainError("epsilon: pole at omega = 0");

    const double shift = branch == HalfPlaneBranch::Upper ? 2.0 * x.value() : -2.0 * x.value();
    const ComplexValue denom_factor = omega + ComplexValue{0.0, shift};
    if (denom_factor == ComplexValue{0.0, 0.0})
        throw DomainError("epsilon: pole of the selected branch at omega = " +
                          std::to_string(-shift) + "i");
    return 1.0 - 1.0 / (omega * denom_factor);
}

double epsilon_imag_axis(double omega, DampingRatio x)
{
    if (!(omega > 0.0))
        throw DomainError("epsilon_imag_axis: omega must be > 0");
    return 1.0 + 1.0 / (omega * (omega + 2.0 * x.value()));
}

double im_epsilon(double omega, DampingRatio x)
{
    if (!(omega > 0.0))
        throw DomainError("im_epsilon: omega must be > 0");
    const double xv = x.value();
    return 2.0 * xv / (omega * (omega * omega + 4.0 * xv * xv));
}

}  // namespace dmodes
