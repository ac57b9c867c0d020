#include "dmodes/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

#include "dmodes/errors.hpp"

namespace dmodes {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Weights of the embedded Gauss rule, attached to odd Kronrod nodes 1, 3, 5, 7.
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a;
    double b;
    double value;
    double error;
};

struct ByError {
    bool operator()(const Segment& lhs, const Segment& rhs) const
    {
        if (lhs.error != rhs.error) return lhs.error < rhs.error;
        return lhs.a > rhs.a;  // deterministic tie-break
    }
};

template <class Integrand>
Segment kronrod15(const Integrand& g, double a, double b)
{
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double f_center = g(center);
    double kronrod = f_center * kKronrodWeights[7];
    double gauss = f_center * kGaussWeights[3];
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kKronrodNodes[j];
        const double pair = g(center - dx) + g(center + dx);
        kronrod += kKronrodWeights[j] * pair;
        if (j % 2 == 1) gauss += kGaussWeights[j / 2] * pair;
    }
    return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

template <class Integrand>
IntegralResult adapt(const Integrand& g, double a, double b, const QuadratureConfig& cfg)
{
    cfg.validate();

    std::priority_queue<Segment, std::vector<Segment>, ByError> heap;
    heap.push(kronrod15(g, a, b));
    double total = heap.top().value;
    double error = heap.top().error;
    int segments = 1;

    auto tolerance = [&] { return std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total)); };

    IntegralResult out;
    while (error > tolerance()) {
        if (segments >= cfg.max_subdivisions) {
            out.converged = false;
            break;
        }
        const Segment worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            out.converged = false;  // interval can no longer be split in double precision
            break;
        }
        heap.pop();
        const Segment left = kronrod15(g, worst.a, mid);
        const Segment right = kronrod15(g, mid, worst.b);
        total += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++segments;
    }

    // Re-sum from scratch so the running-update roundoff does not leak into the result.
    std::vector<Segment> pieces;
    pieces.reserve(heap.size());
    while (!heap.empty()) {
        pieces.push_back(heap.top());
        heap.pop();
    }
    std::sort(pieces.begin(), pieces.end(), [](const Segment& l, const Segment& r) { return l.a < r.a; });
    double value = 0.0;
    double err = 0.0;
    for (const Segment& s : pieces) {
        value += s.value;
        err += s.error;
    }
    out.value = value;
    out.error_estimate = err;
    out.subdivisions_used = segments;
    return out;
}

[[noreturn]] void report_bad_sample(double abscissa, double sample)
{
    std::ostringstream msg;
    msg.precision(17);
    msg << "integrand returned " << sample << " at omega = " << abscissa;
    throw NumericalError(msg.str());
}

}  // namespace

void QuadratureConfig::validate() const
{
    if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
        throw DomainError("quadrature tolerances must be positive");
    if (max_subdivisions < 1)
        throw DomainError("quadrature subdivision budget must be >= 1");
}

IntegralResult integrate_semi_infinite(const std::function<double(double)>& f, const QuadratureConfig& cfg)
{
    auto mapped = [&f](double t) {
        const double s = 1.0 - t;
        const double omega = t / s;
        const double v = f(omega);
        if (!std::isfinite(v)) report_bad_sample(omega, v);
        return v / (s * s);
    };
    return adapt(mapped, 0.0, 1.0, cfg);
}

IntegralResult integrate_interval(const std::function<double(double)>& f, double a, double b,
                                  const QuadratureConfig& cfg)
{
    if (!(std::isfinite(a) && std::isfinite(b) && a < b))
        throw DomainError("integrate_interval: need finite a < b");
    auto checked = [&f](double w) {
        const double v = f(w);
        if (!std::isfinite(v)) report_bad_sample(w, v);
        return v;
    };
    return adapt(checked, a, b, cfg);
}

}  // namespace dmodes
