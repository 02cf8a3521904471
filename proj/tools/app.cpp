#include "app.hpp"

#include <cstdlib>
#include <filesystem>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include "commands.hpp"
#include "mollow/floquet.hpp"
#include "mollow/version.hpp"

namespace mollow::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Floquet emission spectra of a periodically driven two-level system", "mollow"};
    app.set_version_flag("--version", version);
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::string solver;
    std::optional<int> n_max;
    bool lamb_shift = false;
    app.add_option("--config", config_path, "JSON config file, or an output file to rerun from its header");
    app.add_option("--out", out_dir, "output directory (default: $MOLLOW_OUTPUT_DIR, then config output_dir)");
    app.add_option("--solver", solver, "sambe, chrw or rwa");
    app.add_option("--n-max", n_max, "Sambe truncation |n| <= n_max (0 picks a default)")->check(CLI::NonNegativeNumber);
    app.add_flag("--lamb-shift", lamb_shift, "include the principal-value frequency shift");

    auto* spectrum = app.add_subcommand("spectrum", "line catalog and sampled spectrum")->fallthrough();
    auto* compare = app.add_subcommand("compare", "sambe vs chrw vs rwa over an A/omega_l grid")->fallthrough();
    auto* scan = app.add_subcommand("resonance-scan", "time-averaged transition probability over omega_l")->fallthrough();
    auto* sweep = app.add_subcommand("sweep", "rates and sideband weights along one parameter")->fallthrough();
    auto* figure = app.add_subcommand("figure", "data behind one figure preset (fig1 ... fig13)")->fallthrough();
    std::string preset;
    figure->add_option("preset", preset, "preset name")->required();

    try {
        std::vector<std::string> rest(args.rbegin(), args.rend());
        if (!rest.empty()) rest.pop_back();
        app.parse(rest);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        RunConfig c = config_path.empty() ? RunConfig{} : load_config(config_path);
        if (!solver.empty()) c.solver = parse_solver(solver);
        if (n_max) c.n_max = *n_max;
        if (lamb_shift) c.lamb_shift = true;
        c.validate();

        fs::path dir = c.output_dir;
        if (const char* env = std::getenv("MOLLOW_OUTPUT_DIR"); env && *env) dir = env;
        if (!out_dir.empty()) dir = out_dir;
        fs::create_directories(dir);

        std::vector<fs::path> files;
        if (spectrum->parsed()) files = cmd_spectrum(c, dir);
        else if (compare->parsed()) files = cmd_compare(c, dir);
        else if (scan->parsed()) files = cmd_resonance_scan(c, dir);
        else if (sweep->parsed()) files = cmd_sweep(c, dir);
        else if (figure->parsed()) files = cmd_figure(preset, c, dir);
        for (const auto& f : files) out << f.string() << '\n';
        return 0;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace mollow::cli
