#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "config.hpp"

namespace mollow::cli {

namespace fs = std::filesystem;

// Extra "# note:" lines for a file header.
using Notes = std::vector<std::string>;

/// Each command writes into `dir` with file names starting with `stem` and
/// returns the paths written, in order.
std::vector<fs::path> cmd_spectrum(const RunConfig& c, const fs::path& dir, const std::string& stem = "spectrum",
                                   const Notes& notes = {});
std::vector<fs::path> cmd_compare(const RunConfig& c, const fs::path& dir, const std::string& stem = "compare",
                                  const Notes& notes = {});
std::vector<fs::path> cmd_resonance_scan(const RunConfig& c, const fs::path& dir, const std::string& stem = "resonance",
                                         const Notes& notes = {});
std::vector<fs::path> cmd_sweep(const RunConfig& c, const fs::path& dir, const std::string& stem = "sweep",
                                const Notes& notes = {});

std::vector<std::string> figure_presets();
// Throws std::invalid_argument for an unknown preset. n_max and lamb_shift are
// taken from `overrides`; everything else comes from the preset.
std::vector<fs::path> cmd_figure(const std::string& preset, const RunConfig& overrides, const fs::path& dir);

}  // namespace mollow::cli
