#include "dmodes/checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>

#include "dmodes/discrete_modes.hpp"
#include "dmodes/energy.hpp"
#include "dmodes/figures.hpp"

namespace dmodes {

bool CheckReport::all_pass() const
{
    return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.pass; });
}

int CheckReport::family_count() const
{
    std::set<std::string> names;
    for (const auto& l : lines) names.insert(l.family);
    return static_cast<int>(names.size());
}

void CheckReport::print(std::ostream& out) const
{
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-22s %-34s %14s %14s  %s\n", "family", "case", "measured", "threshold",
                  "result");
    out << buf;
    for (const auto& l : lines) {
        std::snprintf(buf, sizeof buf, "%-22s %-34s %14.6e %14.6e  %s\n", l.family.c_str(), l.detail.c_str(),
                      l.measured, l.threshold, l.pass ? "PASS" : "FAIL");
        out << buf;
    }
    out << (all_pass() ? "all checks passed" : "some checks FAILED") << '\n';
}

namespace {

std::string point_label(double x, double kd)
{
    return "x=" + format_number(x) + " kd=" + format_number(kd);
}

// Quadrature failures count as check failures, not aborts.
template <class Fn>
void guarded(CheckReport& report, const std::string& family, const std::string& detail, Fn&& fn)
{
    try {
        fn();
    } catch (const std::exception& e) {
        report.lines.push_back({family, detail + " (" + e.what() + ")", NAN, 0.0, false});
    }
}

void route_equivalence(const CheckOptions& opt, CheckReport& report)
{
    for (double x : opt.grid_x)
        for (double kd : opt.grid_kd)
            guarded(report, "route-equivalence", point_label(x, kd), [&] {
                const ModePoint p(DampingRatio(x), kd);
                const double real = energy_k(p, EnergyRoute::RealAxis, opt.quadrature).value;
                const double imag = energy_k(p, EnergyRoute::ImagAxis, opt.quadrature).value;
                const double gap = std::abs(real - imag);
                const double thr = std::max(opt.tol, 10.0 * opt.tol * std::abs(imag));
                report.lines.push_back({"route-equivalence", point_label(x, kd), gap, thr, gap <= thr});
            });
}

void lossless_limit(const CheckOptions& opt, CheckReport& report)
{
    for (double kd : opt.grid_kd) {
        guarded(report, "lossless-limit", "x=0 " + point_label(0, kd), [&] {
            const ModePoint p(DampingRatio(0.0), kd);
            const double gap = std::abs(energy_k(p, EnergyRoute::ImagAxis, opt.quadrature).value -
                                        closed_form_energy_x0(kd));
            report.lines.push_back({"lossless-limit", point_label(0, kd), gap, opt.tol, gap <= opt.tol});
        });
        guarded(report, "lossless-limit", point_label(1e-5, kd), [&] {
            const ModePoint p(DampingRatio(1e-5), kd);
            const double gap = std::abs(energy_k(p, EnergyRoute::ImagAxis, opt.quadrature).value -
                                        closed_form_energy_x0(kd));
            report.lines.push_back({"lossless-limit", point_label(1e-5, kd), gap, 1e-3, gap < 1e-3});
        });
    }
}

void zero_residuals(const CheckOptions& opt, CheckReport& report)
{
    for (double x : opt.grid_x)
        for (double kd : opt.grid_kd) {
            const ModePoint p(DampingRatio(x), kd);
            const ComplexZeros z = complex_zeros(p);
            if (z.overdamped1 || z.overdamped2) continue;  // no finite-frequency zero to test
            const double r1 = std::abs(mode_factor(FactorId::F1, z.omega1, p, HalfPlaneBranch::Upper));
            const double r2 = std::abs(mode_factor(FactorId::F2, z.omega2, p, HalfPlaneBranch::Upper));
            const double r = std::max(r1, r2);
            report.lines.push_back({"complex-zero-residual", point_label(x, kd), r, 1e-12, r < 1e-12});
            const double jump = std::abs(mode_factor(FactorId::F1, z.omega1, p, HalfPlaneBranch::Lower));
            report.lines.push_back({"branch-jump", point_label(x, kd), jump, 1e-3, jump > 1e-3});
        }
}

void interlacing(const CheckOptions& opt, CheckReport& report)
{
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> ux(0.0, 0.5), ukd(0.1, 3.0), uwmax(1.0, 5.0);
    std::uniform_int_distribution<int> uimax(5, 200);
    for (int c = 0; c < opt.interlacing_cases; ++c) {
        double x = ux(rng);
        if (x == 0.0) x = 0.5;
        const double kd = ukd(rng);
        const double wmax = uwmax(rng);
        const int imax = uimax(rng);
        char label_buf[96];
        std::snprintf(label_buf, sizeof label_buf, "x=%.4f kd=%.3f grid(%.3f,%d)", x, kd, wmax, imax);
        const std::string label(label_buf);
        guarded(report, "interlacing", label, [&] {
            const DiscreteSpectrum s = discrete_spectrum(ModePoint(DampingRatio(x), kd), LehmanGrid(wmax, imax));
            int violations = 0;
            for (const auto* zeros : {&s.zeros_f1, &s.zeros_f2}) {
                if (static_cast<int>(zeros->size()) != imax) ++violations;
                for (std::size_t i = 0; i < zeros->size(); ++i) {
                    const double z = (*zeros)[i];
                    const bool above = z > s.poles[i];
                    const bool below = i + 1 == s.poles.size() || z < s.poles[i + 1];
                    if (!(above && below)) ++violations;
                }
            }
            report.lines.push_back({"interlacing", label, static_cast<double>(violations), 0.0,
                                    violations == 0});
        });
    }
}

}  // namespace

CheckReport run_checks(const CheckOptions& opt)
{
    CheckReport report;
    route_equivalence(opt, report);
    lossless_limit(opt, report);
    zero_residuals(opt, report);
    interlacing(opt, report);
    return report;
}

}  // namespace dmodes
