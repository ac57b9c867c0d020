#pragma once

// Adaptive integration over [0, inf).
//
// The half line is mapped onto [0, 1) by w = t / (1 - t) and the transformed
// integrand is integrated with a globally adaptive 7/15-point Gauss-Kronrod
// scheme. Both rules use interior nodes only, so neither w = 0 nor w = inf is
// ever evaluated; integrable logarithmic singularities at the origin are
// resolved by repeated bisection of the offending interval.

#include <functional>

namespace dmodes {

struct QuadratureConfig {
    double abs_tol = 1e-9;
    double rel_tol = 1e-8;
    int max_subdivisions = 2000;

    // Throws DomainError if a tolerance is not positive or the budget is < 1.
    void validate() const;
};

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int subdivisions_used = 0;
    bool converged = true;
};

// Integrates f over (0, inf). Returns the best estimate with converged = false
// when the subdivision budget runs out. A NaN or infinite sample of f throws
// NumericalError naming the abscissa.
IntegralResult integrate_semi_infinite(const std::function<double(double)>& f,
                                       const QuadratureConfig& cfg = {});

// Same machinery on a finite interval [a, b] (no variable change).
IntegralResult integrate_interval(const std::function<double(double)>& f, double a, double b,
                                  const QuadratureConfig& cfg = {});

}  // namespace dmodes
