#include "core/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

namespace psr {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    if (value == "inf" || value == "+inf") return std::numeric_limits<double>::infinity();
    try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + key + "': cannot parse value '" + value + "'");
    }
}

int parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: key '" + key + "': cannot parse value '" + value + "'");
    }
}

std::vector<double> parse_double_list(const std::string& key, const std::string& value) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(parse_double(key, item));
    }
    return out;
}

std::string fmt(double v) {
    if (std::isinf(v)) return "inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

void set_key(RunConfig& cfg, const std::string& key, const std::string& value) {
    Scenario& s = cfg.scenario;
    if (key == "medium.n_cm3") s.medium.n_cm3 = parse_double(key, value);
    else if (key == "medium.eps_eg_eV") s.medium.eps_eg_eV = parse_double(key, value);
    else if (key == "medium.mu_ee") s.medium.mu_ee = parse_double(key, value);
    else if (key == "medium.mu_gg") s.medium.mu_gg = parse_double(key, value);
    else if (key == "medium.mu_ge") s.medium.mu_ge = parse_double(key, value);
    else if (key == "relax.T1_ns") s.medium.T1_ns = parse_double(key, value);
    else if (key == "relax.T2_ns") s.medium.T2_ns = parse_double(key, value);
    else if (key == "sim.length_cm") s.length_cm = parse_double(key, value);
    else if (key == "sim.grid_points") s.grid_points = parse_int(key, value);
    else if (key == "sim.t_end_ns") s.t_end_ns = parse_double(key, value);
    else if (key == "sim.omega1_eV") s.omega1_eV = parse_double(key, value);
    else if (key == "sim.variant") {
        const auto v = variant_from_name(value);
        if (!v) throw ConfigError("config: key 'sim.variant': unknown variant '" + value + "'");
        s.variant = *v;
    } else if (key == "trigger.power_left_W_mm2") {
        s.trigger.power_left_W_mm2 = parse_double(key, value);
    } else if (key == "trigger.power_right_W_mm2") {
        s.trigger.power_right_W_mm2 = parse_double(key, value);
    } else if (key == "trigger.power_W_mm2") {  // alias: symmetric trigger
        s.trigger.power_left_W_mm2 = parse_double(key, value);
        s.trigger.power_right_W_mm2 = s.trigger.power_left_W_mm2;
    } else if (key == "trigger.phase_left_rad") {
        s.trigger.phase_left_rad = parse_double(key, value);
    } else if (key == "trigger.phase_right_rad") {
        s.trigger.phase_right_rad = parse_double(key, value);
    } else if (key == "init.p") {
        s.init_p = parse_double(key, value);
    } else if (key == "init.theta0_rad") {
        s.init_theta0_rad = parse_double(key, value);
    } else if (key == "output.dir") {
        cfg.output_dir = value;
    } else if (key == "output.series_stride") {
        s.series_stride = parse_int(key, value);
    } else if (key == "output.snapshot_times_ns") {
        s.snapshot_times_ns = parse_double_list(key, value);
    } else {
        throw ConfigError("config: unknown key '" + key + "'");
    }
}

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        try {
            set_key(cfg, key, value);
        } catch (const ConfigError& e) {
            throw ConfigError(std::string(e.what()) + " (line " + std::to_string(lineno) + ")");
        }
    }
    if (!(cfg.scenario.medium.n_cm3 > 0.0))
        throw ConfigError("config: required key 'medium.n_cm3' missing");
    if (!(cfg.scenario.length_cm > 0.0))
        throw ConfigError("config: required key 'sim.length_cm' missing");
    try {
        cfg.scenario.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string emit_config(const RunConfig& cfg) {
    const Scenario& s = cfg.scenario;
    std::ostringstream out;
    out << "medium.n_cm3 = " << fmt(s.medium.n_cm3) << "\n";
    out << "medium.eps_eg_eV = " << fmt(s.medium.eps_eg_eV) << "\n";
    out << "medium.mu_ee = " << fmt(s.medium.mu_ee) << "\n";
    out << "medium.mu_gg = " << fmt(s.medium.mu_gg) << "\n";
    out << "medium.mu_ge = " << fmt(s.medium.mu_ge) << "\n";
    out << "relax.T1_ns = " << fmt(s.medium.T1_ns) << "\n";
    out << "relax.T2_ns = " << fmt(s.medium.T2_ns) << "\n";
    out << "sim.length_cm = " << fmt(s.length_cm) << "\n";
    out << "sim.grid_points = " << s.grid_points << "\n";
    out << "sim.t_end_ns = " << fmt(s.t_end_ns) << "\n";
    out << "sim.variant = " << variant_name(s.variant) << "\n";
    if (s.omega1_eV != 0.0) out << "sim.omega1_eV = " << fmt(s.omega1_eV) << "\n";
    out << "trigger.power_left_W_mm2 = " << fmt(s.trigger.power_left_W_mm2) << "\n";
    out << "trigger.power_right_W_mm2 = " << fmt(s.trigger.power_right_W_mm2) << "\n";
    out << "trigger.phase_left_rad = " << fmt(s.trigger.phase_left_rad) << "\n";
    out << "trigger.phase_right_rad = " << fmt(s.trigger.phase_right_rad) << "\n";
    out << "init.p = " << fmt(s.init_p) << "\n";
    out << "init.theta0_rad = " << fmt(s.init_theta0_rad) << "\n";
    out << "output.dir = " << cfg.output_dir << "\n";
    out << "output.series_stride = " << s.series_stride << "\n";
    if (!s.snapshot_times_ns.empty()) {
        out << "output.snapshot_times_ns = ";
        for (std::size_t i = 0; i < s.snapshot_times_ns.size(); ++i) {
            if (i) out << ",";
            out << fmt(s.snapshot_times_ns[i]);
        }
        out << "\n";
    }
    return out.str();
}

namespace {

// Preset parameter sets; values follow the published run conditions for the
// para-H2 X v=1 -> 0 transition.  Grid, t_end and output settings are pinned
// for desk-scale reproduction.
const std::map<std::string, std::string>& preset_table() {
    static const std::map<std::string, std::string> table = {
        {"fig2",
         "medium.n_cm3 = 1e21\n"
         "sim.length_cm = 30\n"
         "relax.T2_ns = 10\n"
         "relax.T1_ns = 1000\n"
         "init.p = 1\n"
         "trigger.power_W_mm2 = 1e6\n"
         "sim.t_end_ns = 120\n"
         "sim.grid_points = 2176\n"},
        {"fig3",
         "medium.n_cm3 = 1e21\n"
         "sim.length_cm = 30\n"
         "relax.T2_ns = 10\n"
         "relax.T1_ns = 1000\n"
         "init.p = 0.5\n"
         "init.theta0_rad = 0\n"
         "trigger.power_W_mm2 = 1\n"
         "sim.t_end_ns = 10\n"
         "sim.grid_points = 2176\n"},
        {"fig10",
         "medium.n_cm3 = 2.6e22\n"
         "sim.length_cm = 2\n"
         "relax.T2_ns = 10\n"
         "relax.T1_ns = 1000\n"
         "init.p = 0.005\n"
         "init.theta0_rad = 0\n"
         "trigger.power_W_mm2 = 1e-6\n"
         "sim.t_end_ns = 2.5\n"
         "sim.grid_points = 4096\n"},
        {"fig11",
         "medium.n_cm3 = 1e20\n"
         "sim.length_cm = 150\n"
         "relax.T2_ns = 10\n"
         "relax.T1_ns = 1000\n"
         "init.p = 0.5\n"
         "init.theta0_rad = 0\n"
         "trigger.power_W_mm2 = 1e-3\n"
         "sim.t_end_ns = 20\n"
         "sim.grid_points = 2048\n"},
        {"soliton12",
         "medium.n_cm3 = 2.6e22\n"
         "sim.length_cm = 4\n"
         "relax.T2_ns = 20\n"
         "relax.T1_ns = 1000\n"
         "init.p = 0.005\n"
         "trigger.power_W_mm2 = 0\n"
         "sim.t_end_ns = 1\n"
         "sim.grid_points = 2048\n"},
    };
    return table;
}

}  // namespace

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (const auto& [k, v] : preset_table()) names.push_back(k);
    return names;
}

RunConfig preset(const std::string& name) {
    const auto it = preset_table().find(name);
    if (it == preset_table().end()) throw ConfigError("unknown preset '" + name + "'");
    return parse_config(it->second);
}

}  // namespace psr
