#include "dmodes/figures.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "dmodes/errors.hpp"

namespace dmodes {

void FigureTable::add_row(std::vector<Cell> row)
{
    if (row.size() != column_names.size())
        throw DomainError("figure table '" + title + "': row arity " + std::to_string(row.size()) +
                          " does not match " + std::to_string(column_names.size()) + " columns");
    if (!row.front())
        throw DomainError("figure table '" + title + "': abscissa cell is empty");
    if (!rows.empty() && !(*row.front() > *rows.back().front()))
        throw DomainError("figure table '" + title + "': abscissa must be strictly increasing");
    rows.push_back(std::move(row));
}

std::string format_number(double value)
{
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 12);
    return std::string(buf.data(), res.ptr);
}

void write_csv(std::ostream& out, const FigureTable& table)
{
    for (std::size_t c = 0; c < table.column_names.size(); ++c)
        out << (c ? "," : "") << table.column_names[c];
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << ',';
            if (row[c]) out << format_number(*row[c]);
        }
        out << '\n';
    }
}

namespace {

constexpr std::array<const char*, 6> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

std::string xml_escape(const std::string& s)
{
    std::string out;
    for (char ch : s) {
        switch (ch) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += ch;
        }
    }
    return out;
}

}  // namespace

void write_svg(std::ostream& out, const FigureTable& table)
{
    constexpr double width = 640, height = 420, left = 60, right = 160, top = 40, bottom = 50;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& row : table.rows) {
        xmin = std::min(xmin, *row[0]);
        xmax = std::max(xmax, *row[0]);
        for (std::size_t c = 1; c < row.size(); ++c) {
            if (!row[c]) continue;
            ymin = std::min(ymin, *row[c]);
            ymax = std::max(ymax, *row[c]);
        }
    }
    if (!(xmax > xmin)) { xmin -= 0.5; xmax += 0.5; }
    if (!(ymax > ymin)) { ymin -= 0.5; ymax += 0.5; }
    auto sx = [&](double v) { return left + (v - xmin) / (xmax - xmin) * plot_w; };
    auto sy = [&](double v) { return top + (ymax - v) / (ymax - ymin) * plot_h; };

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\""
        << height << "\">\n"
        << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n"
        << "<text x=\"" << left << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"14\">"
        << xml_escape(table.title) << "</text>\n"
        << "<g stroke=\"black\" stroke-width=\"1\">\n"
        << "<line x1=\"" << left << "\" y1=\"" << top + plot_h << "\" x2=\"" << left + plot_w << "\" y2=\""
        << top + plot_h << "\"/>\n"
        << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << top + plot_h
        << "\"/>\n</g>\n";
    out << "<g font-family=\"sans-serif\" font-size=\"11\">\n"
        << "<text x=\"" << left << "\" y=\"" << top + plot_h + 16 << "\">" << format_number(xmin) << "</text>\n"
        << "<text x=\"" << left + plot_w << "\" y=\"" << top + plot_h + 16 << "\" text-anchor=\"end\">"
        << format_number(xmax) << "</text>\n"
        << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << top + plot_h + 36 << "\" text-anchor=\"middle\">"
        << xml_escape(table.column_names[0]) << "</text>\n"
        << "<text x=\"" << left - 6 << "\" y=\"" << top + plot_h << "\" text-anchor=\"end\">"
        << format_number(ymin) << "</text>\n"
        << "<text x=\"" << left - 6 << "\" y=\"" << top + 10 << "\" text-anchor=\"end\">" << format_number(ymax)
        << "</text>\n</g>\n";

    for (std::size_t c = 1; c < table.column_names.size(); ++c) {
        const char* colour = kPalette[(c - 1) % kPalette.size()];
        out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (const auto& row : table.rows) {
            if (!row[c]) continue;
            out << (first ? "" : " ") << format_number(sx(*row[0])) << ',' << format_number(sy(*row[c]));
            first = false;
        }
        out << "\"/>\n";
        const double ly = top + 14.0 * static_cast<double>(c);
        out << "<line x1=\"" << left + plot_w + 12 << "\" y1=\"" << ly << "\" x2=\"" << left + plot_w + 32
            << "\" y2=\"" << ly << "\" stroke=\"" << colour << "\" stroke-width=\"1.5\"/>\n"
            << "<text x=\"" << left + plot_w + 36 << "\" y=\"" << ly + 4
            << "\" font-family=\"sans-serif\" font-size=\"11\">" << xml_escape(table.column_names[c])
            << "</text>\n";
    }
    out << "</svg>\n";
}

void write_file_atomically(const std::filesystem::path& path, const std::string& contents)
{
    std::filesystem::path tmp = path;
    tmp += ".partial";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        f << contents;
        f.flush();
        if (!f) {
            f.close();
            std::filesystem::remove(tmp);
            throw std::runtime_error("write to " + tmp.string() + " failed");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cannot move " + tmp.string() + " to " + path.string() + ": " + ec.message());
    }
}

FigureTable figure1_integrands(const Figure1Options& opt)
{
    if (!(opt.omega_min > 0.0) || !(opt.omega_max > opt.omega_min) || opt.samples < 2)
        throw DomainError("figure 1: need 0 < omega_min < omega_max and at least 2 samples");

    const ModePoint lossy(DampingRatio(0.1), opt.kappa);
    const ModePoint weak(DampingRatio(0.01), opt.kappa);

    FigureTable t;
    t.title = "Integrands F (real axis) and G (imaginary axis), kd = " + format_number(opt.kappa);
    t.column_names = {"omega", "F_x0.1", "G_x0.1", "F_x0.01", "G_x0.01"};
    const double log_lo = std::log(opt.omega_min);
    const double log_hi = std::log(opt.omega_max);
    for (int i = 0; i < opt.samples; ++i) {
        const double omega = i + 1 == opt.samples
                                 ? opt.omega_max
                                 : std::exp(log_lo + (log_hi - log_lo) * i / (opt.samples - 1));
        t.add_row({omega, integrand_F(omega, lossy), integrand_G(omega, lossy), integrand_F(omega, weak),
                   integrand_G(omega, weak)});
    }
    return t;
}

FigureTable figure2_energies(const Figure2Options& opt)
{
    if (opt.x_points < 2 || !(opt.x_max > 0.0))
        throw DomainError("figure 2: need x_max > 0 and at least 2 grid points");

    std::map<double, std::optional<CirclePoint>> abscissas;
    for (int i = 0; i < opt.x_points; ++i)
        abscissas.emplace(opt.x_max * i / (opt.x_points - 1), std::nullopt);
    for (const CirclePoint& c : opt.circles) {
        // Snap onto an existing grid abscissa when they agree to rounding.
        auto near = abscissas.lower_bound(c.x - 1e-12);
        if (near != abscissas.end() && std::abs(near->first - c.x) <= 1e-12)
            near->second = c;
        else
            abscissas.emplace(c.x, c);
    }

    FigureTable t;
    t.title = "Energy of one wave vector vs damping, kd = " + format_number(opt.kappa);
    t.column_names = {"x", "exact", "naive", "discrete"};
    for (const auto& [xv, circle] : abscissas) {
        const ModePoint p(DampingRatio(xv), opt.kappa);
        FigureTable::Cell discrete;
        if (circle) discrete = discrete_energy(p, LehmanGrid(circle->omega_max, circle->i_max));
        t.add_row({xv, energy_k(p, EnergyRoute::ImagAxis, opt.quadrature).value, naive_real_part_energy(p),
                   discrete});
    }
    return t;
}

FigureTable figure3_shifts(const Figure3Options& opt)
{
    const ModePoint p(DampingRatio(opt.x), opt.kappa);
    const DiscreteSpectrum s = discrete_spectrum(p, LehmanGrid(opt.omega_max, opt.i_max));

    FigureTable t;
    t.title = "Shifts of the zeros above their poles, x = " + format_number(opt.x) +
              ", kd = " + format_number(opt.kappa);
    t.column_names = {"pole_frequency", "shift_f1", "shift_f2", "is_top_zero"};
    for (std::size_t i = 0; i < s.poles.size(); ++i)
        t.add_row({s.poles[i], s.shifts_f1[i], s.shifts_f2[i], i + 1 == s.poles.size() ? 1.0 : 0.0});
    return t;
}

FigureTable sweep_table(const SweepOptions& opt)
{
    if (opt.separations.empty())
        throw DomainError("sweep: need at least one separation");
    const double coeff = area_coefficient(DampingRatio(opt.x), opt.quadrature);

    FigureTable t;
    t.title = "Interaction energy per unit area, x = " + format_number(opt.x);
    t.column_names = {"d", "C", "E_per_area_times_d2"};
    for (double d : opt.separations) t.add_row({d, coeff, energy_per_area(coeff, d) * d * d});
    return t;
}

}  // namespace dmodes
