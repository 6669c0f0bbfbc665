#pragma once

#include <string>
#include <vector>

#include "core/solver.hpp"

namespace psr {

// A scenario plus the output destination, as described by a flat key=value
// config file.  All keys have defaults except medium.n_cm3 and
// sim.length_cm.
struct RunConfig {
    Scenario scenario;
    std::string output_dir = "out";
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parses config text ('#' comments, blank lines ignored).  Unknown keys,
// unparsable values and violated invariants are reported with the offending
// key and line number.
RunConfig parse_config(const std::string& text);
RunConfig parse_config_file(const std::string& path);

// Applies a single "key" / "value" override (same key set as config files,
// plus the sweep alias trigger.power_W_mm2 which sets both trigger powers).
void set_key(RunConfig& cfg, const std::string& key, const std::string& value);

// Canonical text form; parse(emit(cfg)) reproduces cfg exactly.
std::string emit_config(const RunConfig& cfg);

// Named presets reproducing the published run conditions.
std::vector<std::string> preset_names();
RunConfig preset(const std::string& name);

// Dimensionless total-flux amplitude used by the soliton preset (chosen so
// the mid-profile population difference lands at -0.8 for the soliton12
// medium).
inline constexpr double soliton12_e0 = 1.2515481495985125e-3;

}  // namespace psr
