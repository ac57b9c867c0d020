#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dmodes/checks.hpp"
#include "dmodes/discrete_modes.hpp"
#include "dmodes/energy.hpp"
#include "dmodes/errors.hpp"
#include "dmodes/figures.hpp"

namespace dmodes::cli {

namespace fs = std::filesystem;

namespace {

struct GlobalFlags {
    double tol_abs = QuadratureConfig{}.abs_tol;
    double tol_rel = QuadratureConfig{}.rel_tol;
    int max_subdivisions = QuadratureConfig{}.max_subdivisions;
    std::string out_dir = ".";

    QuadratureConfig quadrature() const
    {
        QuadratureConfig cfg{tol_abs, tol_rel, max_subdivisions};
        cfg.validate();
        return cfg;
    }
};

struct EnergyFlags {
    double x = 0.0;
    double kd = 0.0;
    std::string method;
    double omega_max = 3.0;
    int i_max = 50;
};

struct FigureFlags {
    int number = 0;
    std::string out;
    std::string svg;
    double kd = 0.5;
    int samples = 500;
    int x_points = 31;
    double x_max = 0.3;
    double x = 0.1;
    double omega_max = 3.0;
    int i_max = 50;
};

struct CheckFlags {
    std::vector<double> grid_x = CheckOptions{}.grid_x;
    std::vector<double> grid_kd = CheckOptions{}.grid_kd;
    double tol = CheckOptions{}.tol;
    int cases = CheckOptions{}.interlacing_cases;
    std::uint64_t seed = CheckOptions{}.seed;
};

struct SweepFlags {
    double x = 0.0;
    std::vector<double> d = {0.5, 1.0, 2.0};
    std::string out;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

fs::path prepare_out_dir(const GlobalFlags& g)
{
    const fs::path dir(g.out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (!fs::is_directory(dir)) throw UsageError("output directory " + dir.string() + " cannot be created");
    const fs::path probe = dir / ".dmodes-write-probe";
    {
        std::ofstream f(probe);
        if (!f) throw UsageError("output directory " + dir.string() + " is not writable");
    }
    fs::remove(probe, ec);
    return dir;
}

fs::path resolve(const fs::path& dir, const std::string& file)
{
    const fs::path p(file);
    return p.is_absolute() ? p : dir / p;
}

std::string render_csv(const FigureTable& t)
{
    std::ostringstream s;
    write_csv(s, t);
    return s.str();
}

std::string render_svg(const FigureTable& t)
{
    std::ostringstream s;
    write_svg(s, t);
    return s.str();
}

void emit(const FigureTable& t, const fs::path& csv, const std::string& svg_name, const fs::path& dir)
{
    write_file_atomically(csv, render_csv(t));
    if (svg_name.empty()) return;
    try {
        write_file_atomically(resolve(dir, svg_name), render_svg(t));
    } catch (...) {
        std::error_code ec;
        fs::remove(csv, ec);
        throw;
    }
}

int cmd_energy(const EnergyFlags& f, const GlobalFlags& g, std::ostream& out)
{
    const QuadratureConfig cfg = g.quadrature();
    const ModePoint p(DampingRatio(f.x), f.kd);
    double value = 0.0;
    if (f.method == "real-axis")
        value = energy_k(p, EnergyRoute::RealAxis, cfg).value;
    else if (f.method == "imag-axis")
        value = energy_k(p, EnergyRoute::ImagAxis, cfg).value;
    else if (f.method == "naive")
        value = naive_real_part_energy(p);
    else if (f.method == "discrete")
        value = discrete_energy(p, LehmanGrid(f.omega_max, f.i_max));
    else if (f.method == "closed-form-x0") {
        if (!p.x().lossless()) throw UsageError("closed-form-x0 requires --x 0");
        value = closed_form_energy_x0(f.kd);
    }
    out << format_number(value) << '\n';
    return kOk;
}

int cmd_figure(const FigureFlags& f, const GlobalFlags& g)
{
    const fs::path dir = prepare_out_dir(g);
    FigureTable table;
    switch (f.number) {
    case 1: {
        Figure1Options o;
        o.kappa = f.kd;
        o.samples = f.samples;
        table = figure1_integrands(o);
        break;
    }
    case 2: {
        Figure2Options o;
        o.kappa = f.kd;
        o.x_points = f.x_points;
        o.x_max = f.x_max;
        o.quadrature = g.quadrature();
        table = figure2_energies(o);
        break;
    }
    case 3: {
        Figure3Options o;
        o.x = f.x;
        o.kappa = f.kd;
        o.omega_max = f.omega_max;
        o.i_max = f.i_max;
        table = figure3_shifts(o);
        break;
    }
    default:
        throw UsageError("figure number must be 1, 2 or 3");
    }
    emit(table, resolve(dir, f.out), f.svg, dir);
    return kOk;
}

int cmd_check(const CheckFlags& f, const GlobalFlags& g, std::ostream& out)
{
    CheckOptions o;
    o.grid_x = f.grid_x;
    o.grid_kd = f.grid_kd;
    o.tol = f.tol;
    o.interlacing_cases = f.cases;
    o.seed = f.seed;
    o.quadrature = g.quadrature();
    if (!(o.tol > 0.0)) throw UsageError("--tol must be > 0");
    const CheckReport report = run_checks(o);
    report.print(out);
    out << report.family_count() << " check families, " << report.lines.size() << " checks\n";
    return report.all_pass() ? kOk : kCheckFailed;
}

int cmd_sweep(const SweepFlags& f, const GlobalFlags& g)
{
    const fs::path dir = prepare_out_dir(g);
    SweepOptions o;
    o.x = f.x;
    o.separations = f.d;
    o.quadrature = g.quadrature();
    write_file_atomically(resolve(dir, f.out), render_csv(sweep_table(o)));
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Zero-point energy of surface modes between two dissipative Drude half spaces"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Optional file of `key = value` lines; command-line flags take precedence");

    GlobalFlags g;
    app.add_option("--tol-abs", g.tol_abs, "Absolute quadrature tolerance")->capture_default_str();
    app.add_option("--tol-rel", g.tol_rel, "Relative quadrature tolerance")->capture_default_str();
    app.add_option("--max-subdivisions", g.max_subdivisions, "Quadrature subdivision budget")
        ->capture_default_str();
    app.add_option("--out-dir", g.out_dir, "Directory for relative output paths")->capture_default_str();

    EnergyFlags ef;
    auto* energy = app.add_subcommand("energy", "Energy of one wave vector in units of hbar*w_pl/2");
    energy->add_option("--x", ef.x, "Damping ratio (eta/2)/w_pl")->required();
    energy->add_option("--kd", ef.kd, "Reduced wave vector k*d")->required();
    energy->add_option("--method", ef.method, "Energy route")
        ->required()
        ->check(CLI::IsMember({"real-axis", "imag-axis", "naive", "discrete", "closed-form-x0"}));
    energy->add_option("--omega-max", ef.omega_max, "Spectral grid cutoff (discrete)")->capture_default_str();
    energy->add_option("--i-max", ef.i_max, "Spectral grid node count (discrete)")->capture_default_str();

    FigureFlags ff;
    auto* figure = app.add_subcommand("figure", "Write the data table of figure 1, 2 or 3");
    figure->add_option("n", ff.number, "Figure number")->required()->check(CLI::IsMember({1, 2, 3}));
    figure->add_option("--out", ff.out, "CSV output path")->required();
    figure->add_option("--svg", ff.svg, "Optional SVG output path");
    figure->add_option("--kd", ff.kd, "Reduced wave vector")->capture_default_str();
    figure->add_option("--samples", ff.samples, "Figure 1: number of log-spaced samples")->capture_default_str();
    figure->add_option("--x-points", ff.x_points, "Figure 2: x grid size")->capture_default_str();
    figure->add_option("--x-max", ff.x_max, "Figure 2: largest x")->capture_default_str();
    figure->add_option("--x", ff.x, "Figure 3: damping ratio")->capture_default_str();
    figure->add_option("--omega-max", ff.omega_max, "Figure 3: spectral grid cutoff")->capture_default_str();
    figure->add_option("--i-max", ff.i_max, "Figure 3: spectral grid node count")->capture_default_str();

    CheckFlags cf;
    auto* check = app.add_subcommand("check", "Run the consistency checks; exit 1 on any failure");
    check->add_option("--grid-x", cf.grid_x, "Damping ratios for the route grid")->delimiter(',');
    check->add_option("--grid-kd", cf.grid_kd, "Reduced wave vectors for the route grid")->delimiter(',');
    check->add_option("--tol", cf.tol, "Absolute route-equivalence threshold (relative is 10x)")
        ->capture_default_str();
    check->add_option("--cases", cf.cases, "Randomised interlacing cases")->capture_default_str();
    check->add_option("--seed", cf.seed, "Seed for the interlacing sample")->capture_default_str();

    SweepFlags sf;
    auto* sweep = app.add_subcommand("sweep", "Energy per unit area over a list of separations");
    sweep->add_option("--x", sf.x, "Damping ratio")->capture_default_str();
    sweep->add_option("--d", sf.d, "Separations")->delimiter(',')->capture_default_str();
    sweep->add_option("--out", sf.out, "CSV output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageError;
    }

    try {
        if (*energy) return cmd_energy(ef, g, out);
        if (*figure) return cmd_figure(ff, g);
        if (*check) return cmd_check(cf, g, out);
        if (*sweep) return cmd_sweep(sf, g);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kNumericalFailure;
    }
    return kUsageError;
}

}  // namespace dmodes::cli
