#include "dmodes/discrete_modes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "dmodes/errors.hpp"

namespace dmodes {

LehmanGrid::LehmanGrid(double omega_max, int i_max) : omega_max_(omega_max), i_max_(i_max)
{
    if (!std::isfinite(omega_max) || !(omega_max > 0.0))
        throw DomainError("Lehman grid: omega_max must be finite and > 0");
    if (i_max < 1)
        throw DomainError("Lehman grid: i_max must be >= 1");
}

std::vector<double> LehmanGrid::nodes() const
{
    std::vector<double> out(static_cast<std::size_t>(i_max_));
    for (int i = 0; i < i_max_; ++i) out[static_cast<std::size_t>(i)] = node(i);
    return out;
}

namespace {

constexpr double kRootRelTol = 1e-13;

void require_lossy(DampingRatio x, const char* who)
{
    if (x.lossless())
        throw DomainError(std::string(who) + ": requires x > 0 (the spectral sum vanishes at x = 0)");
}

class ScaledEpsilon {
public:
    ScaledEpsilon(DampingRatio x, const LehmanGrid& grid, double strength)
        : nodes_sq_(static_cast<std::size_t>(grid.i_max())),
          weights_(static_cast<std::size_t>(grid.i_max()))
    {
        const double xv = x.value();
        prefactor_ = strength * 8.0 * xv / (2.0 * std::numbers::pi) * grid.spacing();
        for (int i = 0; i < grid.i_max(); ++i) {
            const double w = grid.node(i);
            nodes_sq_[static_cast<std::size_t>(i)] = w * w;
            weights_[static_cast<std::size_t>(i)] = 1.0 / (w * w + 4.0 * xv * xv);
        }
    }

    double operator()(double omega) const
    {
        const double w2 = omega * omega;
        double sum = 0.0;
        for (std::size_t i = 0; i < nodes_sq_.size(); ++i) sum += weights_[i] / (w2 - nodes_sq_[i]);
        return 1.0 - prefactor_ * sum;
    }

private:
    std::vector<double> nodes_sq_;
    std::vector<double> weights_;
    double prefactor_ = 0.0;
};

// g(w) = eps_d(w) - target is -inf just above `lo` and +inf just below `hi`
// (or positive at hi for the top interval); bisect on that sign pattern.
double bisect(const ScaledEpsilon& eps, double target, double lo, double hi)
{
    while (hi - lo > kRootRelTol * hi) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (eps(mid) - target < 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<double> factor_zeros(const ScaledEpsilon& eps, double target, const LehmanGrid& grid,
                                 FactorId factor)
{
    const int n = grid.i_max();
    std::vector<double> zeros(static_cast<std::size_t>(n));
    for (int i = 0; i + 1 < n; ++i)
        zeros[static_cast<std::size_t>(i)] = bisect(eps, target, grid.node(i), grid.node(i + 1));

    const double last = grid.node(n - 1);
    const double limit = 10.0 * std::max(1.0, grid.omega_max());
    double step = grid.spacing();
    double hi = last + step;
    while (!(eps(hi) - target > 0.0)) {
        step *= 2.0;
        hi = last + step;
        if (hi > limit) {
            std::ostringstream msg;
            msg << "discrete spectrum: no sign change above the last pole for factor "
                << (factor == FactorId::F1 ? "F1" : "F2") << " in (" << last << ", " << limit << ")";
            throw NumericalError(msg.str());
        }
    }
    zeros[static_cast<std::size_t>(n - 1)] = bisect(eps, target, last, hi);
    return zeros;
}

std::vector<double> shifts_from(const std::vector<double>& zeros, const std::vector<double>& poles)
{
    std::vector<double> out(zeros.size());
    for (std::size_t i = 0; i < zeros.size(); ++i) out[i] = zeros[i] - poles[i];
    return out;
}

}  // namespace

namespace detail {

double epsilon_discrete_scaled(double omega, DampingRatio x, const LehmanGrid& grid, double strength)
{
    require_lossy(x, "epsilon_discrete");
    if (!std::isfinite(omega) || omega < 0.0)
        throw DomainError("epsilon_discrete: omega must be finite and >= 0");
    for (int i = 0; i < grid.i_max(); ++i)
        if (omega == grid.node(i))
            throw DomainError("epsilon_discrete: omega = " + std::to_string(omega) + " is a pole");
    return ScaledEpsilon(x, grid, strength)(omega);
}

DiscreteSpectrum discrete_spectrum_scaled(const ModePoint& point, const LehmanGrid& grid, double strength)
{
    require_lossy(point.x(), "discrete_spectrum");
    const ScaledEpsilon eps(point.x(), grid, strength);

    DiscreteSpectrum s;
    s.poles = grid.nodes();
    s.zeros_f1 = factor_zeros(eps, branch_target(FactorId::F1, point.kappa()), grid, FactorId::F1);
    s.zeros_f2 = factor_zeros(eps, branch_target(FactorId::F2, point.kappa()), grid, FactorId::F2);
    s.shifts_f1 = shifts_from(s.zeros_f1, s.poles);
    s.shifts_f2 = shifts_from(s.zeros_f2, s.poles);
    return s;
}

}  // namespace detail

double epsilon_discrete(double omega, DampingRatio x, const LehmanGrid& grid)
{
    return detail::epsilon_discrete_scaled(omega, x, grid, 1.0);
}

double branch_target(FactorId factor, double kappa)
{
    if (!(kappa > 0.0))
        throw DomainError("branch_target: kd must be > 0");
    const double t = std::tanh(0.5 * kappa);
    return factor == FactorId::F1 ? -1.0 / t : -t;
}

DiscreteSpectrum discrete_spectrum(const ModePoint& point, const LehmanGrid& grid)
{
    return detail::discrete_spectrum_scaled(point, grid, 1.0);
}

double discrete_energy(const ModePoint& point, const LehmanGrid& grid)
{
    const DiscreteSpectrum s = discrete_spectrum(point, grid);
    double total = 0.0;
    for (double v : s.shifts_f1) total += v;
    for (double v : s.shifts_f2) total += v;
    return total;
}

}  // namespace dmodes
