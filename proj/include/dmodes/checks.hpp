#pragma once

// Machine-checkable consistency report: route equivalence, lossless limit,
// complex-zero residuals and a randomised interlacing sample.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "dmodes/quadrature.hpp"

namespace dmodes {

struct CheckOptions {
    std::vector<double> grid_x = {0.01, 0.05, 0.1, 0.2};
    std::vector<double> grid_kd = {0.25, 0.5, 1.0, 2.0};
    // Route-equivalence threshold is max(tol, 10 * tol * E).
    double tol = 1e-6;
    int interlacing_cases = 20;
    std::uint64_t seed = 20240611;
    QuadratureConfig quadrature;
};

struct CheckLine {
    std::string family;
    std::string detail;
    double measured = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

struct CheckReport {
    std::vector<CheckLine> lines;

    bool all_pass() const;
    int family_count() const;
    void print(std::ostream& out) const;
};

CheckReport run_checks(const CheckOptions& opt);

}  // namespace dmodes
