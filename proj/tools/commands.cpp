#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "mollow/chrw.hpp"
#include "mollow/floquet.hpp"
#include "mollow/format.hpp"
#include "mollow/resonance.hpp"
#include "mollow/spectrum.hpp"
#include "mollow/version.hpp"

namespace mollow::cli {

namespace {

constexpr double pi = std::numbers::pi;

const char* const omega_c_note =
    "omega_c is not given for this figure; the default omega_c = 10 is used, so values are not exact";

std::ofstream open_out(const fs::path& p) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    return out;
}

void header(std::ostream& os, const std::string& command, const RunConfig& c, const Notes& notes,
            const std::vector<std::string>& warnings = {}) {
    os << "# mollow " << version << '\n';
    os << "# command: " << command << '\n';
    os << "# config: " << to_json(c).dump() << '\n';
    for (const auto& n : notes) os << "# note: " << n << '\n';
    for (const auto& w : warnings) os << "# warning: " << w << '\n';
}

std::vector<double> linspace(double lo, double hi, int n) {
    if (n == 1) return {lo};
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i == n - 1 ? hi : lo + (hi - lo) * i / (n - 1);
    return v;
}

struct Emission {
    EmissionResult result;
    std::vector<std::string> warnings;
};

Emission emission(const RunConfig& c) {
    const DrivingSpec spec = c.drive.build();
    Emission e;
    TransitionSet t;
    if (c.solver == Solver::sambe) {
        SolveOptions opt;
        opt.n_max = c.n_max;
        opt.coupling = c.coupling;
        const auto sol = solve(spec, opt);
        e.warnings = sol.warnings;
        t = emission_frame(make_transition_set(sol));
    } else {
        t = solve_transitions(spec, c.solver, c.n_max);
    }
    e.result = emission_from(t, c.baths, c.lamb_shift);
    e.warnings.insert(e.warnings.end(), e.result.rates.warnings.begin(), e.result.rates.warnings.end());
    return e;
}

std::string rates_line(const EmissionResult& r) {
    const auto& q = r.rates;
    return "# rates: W_minus_plus=" + fmt17(q.W_minus_plus) + " gamma_rel=" + fmt17(q.gamma_rel) +
           " gamma_deph=" + fmt17(q.gamma_deph) + " delta_omega=" + fmt17(q.delta_omega) + " rho_pp=" +
           fmt17(q.rho_pp_ss) + " omega_pm=" + fmt17(q.omega_pm) + " g1=" + fmt17(g1_at_zero(r.transitions.plus, q)) +
           '\n';
}

void write_row(std::ostream& os, const std::vector<double>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? " " : "") << fmt17(row[i]);
    os << '\n';
}

double abs_plus(const TransitionSet& t, int n) { return std::abs(t.plus(Mode::plus, Mode::minus, n)); }

// The drive reduced to its fundamental component.
DrivingSpec fundamental_only(const DrivingSpec& spec) {
    for (const auto& c : spec.components()) {
        if (c.harmonic == 1) {
            const RawComponent raw{1, c.amplitude, c.phase, Waveform::cosine};
            return DrivingSpec(spec.omega_l(), std::span(&raw, 1), spec.omega0());
        }
    }
    throw std::invalid_argument("config: harmonic overlay needs a drive with a fundamental component");
}

}  // namespace

std::vector<fs::path> cmd_spectrum(const RunConfig& c, const fs::path& dir, const std::string& stem, const Notes& notes) {
    const auto e = emission(c);
    const auto& r = e.result;
    const fs::path lines_path = dir / (stem + "_lines.txt");
    const fs::path grid_path = dir / (stem + "_grid.txt");
    {
        auto out = open_out(lines_path);
        header(out, "spectrum", c, notes, e.warnings);
        out << rates_line(r);
        write_line_catalog(out, r.lines);
    }
    {
        auto out = open_out(grid_path);
        header(out, "spectrum", c, notes, e.warnings);
        const auto grid = sample(r.lines, c.spectrum.omega_min, c.spectrum.omega_max, c.spectrum.points,
                                 c.spectrum.delta_width);
        write_grid(out, grid);
    }
    return {lines_path, grid_path};
}

std::vector<fs::path> cmd_compare(const RunConfig& c, const fs::path& dir, const std::string& stem, const Notes& notes) {
    if (c.drive.type != DriveType::harmonic) throw std::invalid_argument("config: compare needs a harmonic drive");
    const double w = c.drive.omega_l;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<std::vector<double>> rows;
    std::vector<std::string> warnings;
    for (double ratio : linspace(c.compare.ratio_min, c.compare.ratio_max, c.compare.points)) {
        DriveConfig d = c.drive;
        d.A = ratio * w;
        const auto sol = solve(d.build(), c.n_max);
        const auto s = emission_frame(make_transition_set(sol));

        double eps_chrw = nan, z0_chrw = nan, z2_chrw = nan, p1_chrw = nan;
        try {
            const auto p = chrw_params(d.A, d.omega0, w);
            const auto t = emission_frame(chrw_transitions(p));
            eps_chrw = std::abs(chrw_quasienergies(p).first);
            z0_chrw = std::abs(t.z(Mode::plus, Mode::plus, 0));
            z2_chrw = std::abs(t.z(Mode::plus, Mode::plus, 2));
            p1_chrw = abs_plus(t, 1);
        } catch (const NumericalError& err) {
            warnings.push_back("chrw at A/omega_l=" + fmt17(ratio) + ": " + err.what());
        }
        const auto rwa = rwa_solution(d.A, d.omega0, w);
        const auto rt = emission_frame(rwa.transitions);

        rows.push_back({ratio, d.A, std::abs(sol.epsilon_plus()), eps_chrw, std::abs(rwa.epsilon_plus),
                        std::abs(s.z(Mode::plus, Mode::plus, 0)), z0_chrw, std::abs(rt.z(Mode::plus, Mode::plus, 0)),
                        std::abs(s.z(Mode::plus, Mode::plus, 2)), z2_chrw, std::abs(rt.z(Mode::plus, Mode::plus, 2)),
                        abs_plus(s, 1), p1_chrw, abs_plus(rt, 1)});
    }
    const fs::path path = dir / (stem + ".txt");
    auto out = open_out(path);
    header(out, "compare", c, notes, warnings);
    out << "# ratio A abs_eps_plus_sambe abs_eps_plus_chrw abs_eps_plus_rwa xz_pp0_sambe xz_pp0_chrw xz_pp0_rwa "
           "xz_pp2_sambe xz_pp2_chrw xz_pp2_rwa xp_pm1_sambe xp_pm1_chrw xp_pm1_rwa\n";
    for (const auto& row : rows) write_row(out, row);
    return {path};
}

std::vector<fs::path> cmd_resonance_scan(const RunConfig& c, const fs::path& dir, const std::string& stem,
                                         const Notes& notes) {
    const DrivingSpec templ = c.drive.build();
    ScanOptions opt;
    opt.omega_min = c.scan.omega_min;
    opt.omega_max = c.scan.omega_max;
    opt.grid_points = c.scan.points;
    opt.refine_tol = c.scan.refine_tol;
    opt.threshold = c.scan.threshold;
    opt.coupling = c.coupling;
    opt.n_max = c.n_max;

    struct Series {
        std::string name;
        ResonanceScan scan;
    };
    std::vector<Series> series;
    series.push_back({"drive", scan_resonances(templ, opt)});
    if (c.scan.harmonic_overlay) series.push_back({"harmonic", scan_resonances(fundamental_only(templ), opt)});
    if (c.scan.rwa_overlay) {
        ScanOptions rot = opt;
        rot.coupling = Coupling::rotating;
        series.push_back({"rwa", scan_resonances(templ, rot)});
    }

    const fs::path curve_path = dir / (stem + "_curve.txt");
    const fs::path peaks_path = dir / (stem + "_peaks.txt");
    {
        auto out = open_out(curve_path);
        header(out, "resonance-scan", c, notes);
        out << "# omega_l";
        for (const auto& s : series) out << " pbar_" << s.name;
        out << '\n';
        const auto& grid = series.front().scan.omega_l_grid;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            std::vector<double> row{grid[i]};
            for (const auto& s : series) row.push_back(s.scan.pbar_values[i]);
            write_row(out, row);
        }
    }
    {
        auto out = open_out(peaks_path);
        header(out, "resonance-scan", c, notes);
        out << "# series omega_l pbar fwhm\n";
        for (const auto& s : series)
            for (const auto& p : s.scan.peaks)
                out << s.name << ' ' << fmt17(p.omega_l) << ' ' << fmt17(p.pbar) << ' ' << fmt17(p.fwhm) << '\n';
    }
    return {curve_path, peaks_path};
}

std::vector<fs::path> cmd_sweep(const RunConfig& c, const fs::path& dir, const std::string& stem, const Notes& notes) {
    if (!c.sweep) throw std::invalid_argument("config: sweep command needs a sweep section");
    std::vector<double> values = c.sweep->values;
    std::stable_sort(values.begin(), values.end());

    std::vector<std::vector<double>> rows;
    std::vector<std::string> warnings;
    std::ostringstream catalog;
    for (double v : values) {
        RunConfig point = with_parameter(c, c.sweep->parameter, v);
        point.validate();
        const auto e = emission(point);
        const auto& r = e.result;
        for (const auto& w : e.warnings) warnings.push_back(c.sweep->parameter + "=" + fmt17(v) + ": " + w);
        const auto [red, blue] = sideband_weights(r.lines, 1);
        rows.push_back({v, r.transitions.gap(), r.rates.W_minus_plus, r.rates.gamma_rel, r.rates.gamma_deph,
                        r.rates.delta_omega, r.rates.rho_pp_ss, red, blue, g1_at_zero(r.transitions.plus, r.rates),
                        abs_plus(r.transitions, 1), abs_plus(r.transitions, 2), abs_plus(r.transitions, 3),
                        abs_plus(r.transitions, 4)});

        std::ostringstream one;
        write_line_catalog(one, r.lines);
        std::istringstream in(one.str());
        std::string line;
        std::getline(in, line);  // column header
        while (std::getline(in, line)) catalog << fmt17(v) << ' ' << line << '\n';
    }

    const fs::path summary_path = dir / (stem + ".txt");
    const fs::path lines_path = dir / (stem + "_lines.txt");
    {
        auto out = open_out(summary_path);
        header(out, "sweep", c, notes, warnings);
        out << "# " << c.sweep->parameter
            << " gap W_minus_plus gamma_rel gamma_deph delta_omega rho_pp red_1 blue_1 g1 xp_pm1 xp_pm2 xp_pm3 xp_pm4\n";
        for (const auto& row : rows) write_row(out, row);
    }
    {
        auto out = open_out(lines_path);
        header(out, "sweep", c, notes, warnings);
        out << "# " << c.sweep->parameter << " kind center weight hwhm alpha beta n negative_center\n";
        out << catalog.str();
    }
    return {summary_path, lines_path};
}

std::vector<std::string> figure_presets() {
    std::vector<std::string> names;
    for (int i = 1; i <= 13; ++i) names.push_back("fig" + std::to_string(i));
    return names;
}

std::vector<fs::path> cmd_figure(const std::string& preset, const RunConfig& overrides, const fs::path& dir) {
    const auto names = figure_presets();
    if (std::find(names.begin(), names.end(), preset) == names.end())
        throw std::invalid_argument("unknown figure preset '" + preset + "' (expected fig1 ... fig13)");

    std::vector<fs::path> files;
    auto keep = [&](std::vector<fs::path> more) { files.insert(files.end(), more.begin(), more.end()); };

    auto base = [&] {
        RunConfig c;
        c.n_max = overrides.n_max;
        c.lamb_shift = overrides.lamb_shift;
        c.baths = {BathSpec::radiative(0.02)};
        return c;
    };
    auto harmonic_cfg = [&](double A, double w) {
        RunConfig c = base();
        c.drive.type = DriveType::harmonic;
        c.drive.A = A;
        c.drive.omega_l = w;
        return c;
    };
    auto biharmonic_cfg = [&](double A, double r, double phi, double w) {
        RunConfig c = base();
        c.drive.type = DriveType::biharmonic;
        c.drive.A = A;
        c.drive.r = r;
        c.drive.phi = phi;
        c.drive.omega_l = w;
        return c;
    };
    auto window = [](RunConfig c, double lo, double hi, int points) {
        c.spectrum.omega_min = lo;
        c.spectrum.omega_max = hi;
        c.spectrum.points = points;
        return c;
    };
    auto sweep = [](RunConfig c, std::string name, std::vector<double> values) {
        c.sweep = SweepConfig{std::move(name), std::move(values)};
        return c;
    };
    auto with_solver = [](RunConfig c, Solver s) {
        c.solver = s;
        return c;
    };
    auto with_dephasing = [](RunConfig c, double alpha) {
        if (alpha > 0.0) c.baths.push_back(BathSpec::ohmic(alpha, 10.0));
        return c;
    };
    const std::vector<std::pair<std::string, Solver>> single_tone = {
        {"sambe", Solver::sambe}, {"chrw", Solver::chrw}, {"rwa", Solver::rwa}};
    const Notes dephasing_notes = {omega_c_note};

    if (preset == "fig1" || preset == "fig2" || preset == "fig3") {
        // Quasienergy, |X^z_{++,0}| and |X^z_{++,2}| share one comparison table per driving frequency.
        const std::pair<const char*, double> panels[] = {{"a", 0.5}, {"b", 1.0}, {"c", 1.5}, {"d", 5.0}};
        for (const auto& [tag, w] : panels) {
            RunConfig c = harmonic_cfg(0.0, w);
            c.compare = {0.0, 3.0, 61};
            keep(cmd_compare(c, dir, preset + tag + "_compare"));
        }
    } else if (preset == "fig4") {
        for (const auto& [name, s] : single_tone) {
            keep(cmd_sweep(with_solver(sweep(harmonic_cfg(0.3, 1.0), "A", linspace(0.05, 1.0, 20)), s), dir,
                           "fig4a_" + name));
            keep(cmd_sweep(with_solver(sweep(harmonic_cfg(0.3, 1.0), "omega_l", linspace(0.8, 1.2, 41)), s), dir,
                           "fig4b_" + name));
        }
    } else if (preset == "fig5") {
        const std::pair<const char*, double> panels[] = {{"a", 1.0}, {"c", 1.1}};
        for (const auto& [tag, w] : panels) {
            for (Solver s : {Solver::sambe, Solver::rwa}) {
                const auto c = with_solver(window(with_dephasing(harmonic_cfg(0.3, w), 0.01), 0.5, 1.6, 4401), s);
                keep(cmd_spectrum(c, dir, "fig5" + std::string(tag) + "_" + std::string(to_string(s)), dephasing_notes));
            }
        }
        const std::pair<const char*, double> alpha_panels[] = {{"b", 1.0}, {"d", 1.1}};
        for (const auto& [tag, w] : alpha_panels) {
            for (double alpha : {0.0, 0.005, 0.01}) {
                const auto c = window(with_dephasing(harmonic_cfg(0.3, w), alpha), 0.5, 1.6, 4401);
                keep(cmd_spectrum(c, dir, "fig5" + std::string(tag) + "_alpha" + fmt17(alpha),
                                  alpha > 0.0 ? dephasing_notes : Notes{}));
            }
        }
    } else if (preset == "fig6") {
        for (const auto& [name, s] : single_tone)
            keep(cmd_sweep(with_solver(sweep(with_dephasing(harmonic_cfg(0.3, 1.0), 0.01), "omega_l", linspace(0.9, 1.1, 41)), s),
                           dir, "fig6a_" + name, dephasing_notes));
        for (Solver s : {Solver::sambe, Solver::rwa})
            keep(cmd_spectrum(with_solver(window(with_dephasing(harmonic_cfg(0.3, 0.97), 0.01), 0.5, 1.5, 4001), s), dir,
                              "fig6b_" + std::string(to_string(s)), dephasing_notes));
    } else if (preset == "fig7") {
        for (double alpha : {0.0, 0.01}) {
            const Notes n = alpha > 0.0 ? dephasing_notes : Notes{};
            const std::string suffix = "_alpha" + fmt17(alpha);
            for (Solver s : {Solver::sambe, Solver::rwa}) {
                const std::string name(to_string(s));
                keep(cmd_sweep(with_solver(sweep(with_dephasing(harmonic_cfg(0.3, 1.0), alpha), "omega_l", linspace(0.8, 1.2, 41)), s),
                               dir, "fig7a_" + name + suffix, n));
                keep(cmd_sweep(with_solver(sweep(with_dephasing(harmonic_cfg(0.3, 1.0), alpha), "A", linspace(0.05, 1.0, 20)), s),
                               dir, "fig7b_" + name + suffix, n));
            }
        }
    } else if (preset == "fig8") {
        for (double r : {0.0, 0.5, 1.0})
            keep(cmd_spectrum(window(biharmonic_cfg(0.5, r, 0.0, 1.0), 0.0, 5.0, 10001), dir, "fig8a_r" + fmt17(r)));
        keep(cmd_sweep(sweep(biharmonic_cfg(0.5, 0.0, 0.0, 1.0), "r", linspace(0.0, 1.0, 21)), dir, "fig8b"));
    } else if (preset == "fig9") {
        const std::pair<const char*, double> phases[] = {{"0", 0.0}, {"pi_2", pi / 2.0}, {"pi", pi}};
        for (const auto& [tag, phi] : phases)
            keep(cmd_spectrum(window(biharmonic_cfg(0.5, 1.0, phi, 1.0), 0.0, 5.0, 10001), dir,
                              "fig9a_phi_" + std::string(tag)));
        keep(cmd_sweep(sweep(biharmonic_cfg(0.5, 1.0, 0.0, 1.0), "phi", linspace(0.0, 2.0 * pi, 37)), dir, "fig9b"));
    } else if (preset == "fig10") {
        RunConfig c = biharmonic_cfg(0.5, 1.0, 0.0, 1.0);
        c.scan.harmonic_overlay = true;
        c.scan.rwa_overlay = true;
        keep(cmd_resonance_scan(c, dir, "fig10"));
    } else if (preset == "fig11") {
        const std::pair<const char*, double> panels[] = {{"a", 0.9933}, {"b", 0.5572}, {"c", 0.3844}, {"d", 0.2834}};
        for (const auto& [tag, w] : panels) {
            RunConfig c = window(biharmonic_cfg(0.5, 1.0, 0.0, w), 0.0, 4.0, 8001);
            keep(cmd_spectrum(c, dir, "fig11" + std::string(tag) + "_full"));
            c.coupling = Coupling::rotating;
            keep(cmd_spectrum(c, dir, "fig11" + std::string(tag) + "_rwa"));
        }
    } else if (preset == "fig12") {
        const std::pair<const char*, double> phases[] = {{"0", 0.0}, {"pi_2", pi / 2.0}};
        for (const auto& [tag, phi] : phases)
            keep(cmd_spectrum(window(biharmonic_cfg(0.5, 1.0, phi, 0.3844), 0.0, 2.0, 8001), dir,
                              "fig12a_phi_" + std::string(tag)));
        keep(cmd_sweep(sweep(biharmonic_cfg(0.5, 1.0, 0.0, 0.3844), "phi", linspace(0.0, 2.0 * pi, 37)), dir, "fig12b"));
    } else if (preset == "fig13") {
        const std::pair<const char*, double> panels[] = {{"a", 0.5}, {"b", 1.0}};
        for (const auto& [tag, A] : panels) {
            RunConfig sw = window(harmonic_cfg(A, 1.0), 0.0, 8.0, 16001);
            sw.drive.type = DriveType::square_wave;
            sw.drive.terms = 100;
            keep(cmd_spectrum(sw, dir, "fig13" + std::string(tag) + "_square_wave"));
            keep(cmd_spectrum(window(harmonic_cfg(A, 1.0), 0.0, 8.0, 16001), dir, "fig13" + std::string(tag) + "_harmonic"));
        }
        // Inset: one period of both driving signals at A = 0.5.
        RunConfig sw = harmonic_cfg(0.5, 1.0);
        sw.drive.type = DriveType::square_wave;
        const DrivingSpec square = sw.drive.build();
        const DrivingSpec tone = harmonic(0.5, 1.0);
        const fs::path path = dir / "fig13_signal.txt";
        auto out = open_out(path);
        header(out, "figure fig13", sw, {});
        out << "# t f_harmonic f_square_wave\n";
        for (double t : linspace(0.0, tone.period(), 1001)) write_row(out, {t, evaluate(tone, t), evaluate(square, t)});
        files.push_back(path);
    }
    return files;
}

}  // namespace mollow::cli
