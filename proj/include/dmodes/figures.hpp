#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "dmodes/discrete_modes.hpp"
#include "dmodes/energy.hpp"

namespace dmodes {

// Ordered rows keyed by a strictly increasing first column. Cells other than
// the first may be empty (written as nothing between separators).
struct FigureTable {
    using Cell = std::optional<double>;

    std::string title;
    std::vector<std::string> column_names;
    std::vector<std::vector<Cell>> rows;

    // Throws DomainError on arity mismatch or a non-increasing abscissa.
    void add_row(std::vector<Cell> row);
};

// 12 significant digits, shortest general form, '.' decimal point regardless of locale.
std::string format_number(double value);

void write_csv(std::ostream& out, const FigureTable& table);
void write_svg(std::ostream& out, const FigureTable& table);

// Writes through a sibling temporary file and renames into place, so a
// failure never leaves a partial file at `path`.
void write_file_atomically(const std::filesystem::path& path, const std::string& contents);

struct Figure1Options {
    double kappa = 0.5;
    double omega_min = 1e-4;
    double omega_max = 2.5;
    int samples = 500;
};

// omega,F_x0.1,G_x0.1,F_x0.01,G_x0.01 on log-spaced omega.
FigureTable figure1_integrands(const Figure1Options& opt = {});

struct CirclePoint {
    double x;
    double omega_max;
    int i_max;
};

struct Figure2Options {
    double kappa = 0.5;
    double x_max = 0.3;
    int x_points = 31;
    std::vector<CirclePoint> circles = {{0.05, 2.0, 50}, {0.1, 2.0, 50}, {0.2, 3.0, 50}, {0.3, 3.0, 50}};
    QuadratureConfig quadrature;
};

// x,exact,naive,discrete. Circle abscissas not on the x grid are merged in.
FigureTable figure2_energies(const Figure2Options& opt = {});

struct Figure3Options {
    double x = 0.1;
    double kappa = 0.5;
    double omega_max = 3.0;
    int i_max = 50;
};

// pole_frequency,shift_f1,shift_f2,is_top_zero.
FigureTable figure3_shifts(const Figure3Options& opt = {});

struct SweepOptions {
    double x = 0.0;
    std::vector<double> separations = {0.5, 1.0, 2.0};
    QuadratureConfig quadrature;
};

// d,C,E_per_area_times_d2. Separations must be strictly increasing.
FigureTable sweep_table(const SweepOptions& opt);

}  // namespace dmodes
