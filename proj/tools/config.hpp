#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mollow/baths.hpp"
#include "mollow/driving.hpp"
#include "mollow/floquet.hpp"
#include "mollow/pipeline.hpp"

namespace mollow::cli {

using nlohmann::json;

enum class DriveType { harmonic, biharmonic, square_wave, custom };

struct DriveConfig {
    DriveType type = DriveType::harmonic;
    double omega0 = 1.0;
    double omega_l = 1.0;
    double A = 0.0;
    double r = 0.0;
    double phi = 0.0;
    int terms = 100;
    std::vector<RawComponent> components;  // custom only

    DrivingSpec build() const;
};

struct WindowConfig {
    double omega_min = 0.0;
    double omega_max = 3.0;
    int points = 3001;
    double delta_width = 0.0;
};

struct ScanConfig {
    double omega_min = 0.2;
    double omega_max = 1.2;
    int points = 2000;
    double refine_tol = 1e-4;
    double threshold = 0.05;
    bool harmonic_overlay = false;
    bool rwa_overlay = false;
};

struct CompareConfig {
    double ratio_min = 0.0;
    double ratio_max = 3.0;
    int points = 31;
};

struct SweepConfig {
    std::string parameter;
    std::vector<double> values;
};

struct RunConfig {
    DriveConfig drive;
    std::vector<BathSpec> baths = {BathSpec::radiative(0.02)};
    Solver solver = Solver::sambe;
    Coupling coupling = Coupling::full;  // sambe solver only
    int n_max = 0;
    bool lamb_shift = false;
    WindowConfig spectrum;
    ScanConfig scan;
    CompareConfig compare;
    std::optional<SweepConfig> sweep;
    std::string output_dir = ".";

    // Validates cross-field rules; throws std::invalid_argument.
    void validate() const;
};

/// Parses a config object. Unknown keys and wrong types are errors
/// (std::invalid_argument); omitted keys take their defaults.
RunConfig parse_config(const json& j);

/// Reads a JSON file, or an output file whose "# config: " header line holds one.
RunConfig load_config(const std::string& path);

/// Fully resolved parameters, without the output directory.
json to_json(const RunConfig& c);

// Returns a copy with one named parameter replaced (sweep axis).
RunConfig with_parameter(const RunConfig& c, const std::string& name, double value);

}  // namespace mollow::cli
