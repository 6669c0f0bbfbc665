#include "core/csv.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "core/sweep.hpp"

namespace psr {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    return out;
}

}  // namespace

std::string csv_num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_field(const std::string& raw) {
    if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
    std::string quoted = "\"";
    for (char c : raw) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

void write_series_csv(const RunRecord& record, const std::string& path) {
    auto out = open_out(path);
    out << "t_ns,flux_right_W_mm2,flux_left_W_mm2,stored_energy_fraction,"
           "chirality_integral_dimensionless,energy_integral_dimensionless,"
           "cum_out_R_dimensionless,cum_out_L_dimensionless,"
           "cum_in_R_dimensionless,cum_in_L_dimensionless,"
           "cum_t1_leak_dimensionless,bloch_norm_dev_max_dimensionless\n";
    for (const SeriesSample& s : record.series) {
        out << csv_num(s.t_ns) << ',' << csv_num(s.flux_right_W_mm2) << ','
            << csv_num(s.flux_left_W_mm2) << ',' << csv_num(s.stored_energy_fraction) << ','
            << csv_num(s.chirality_integral) << ',' << csv_num(s.energy_integral) << ','
            << csv_num(s.cum_out_R) << ',' << csv_num(s.cum_out_L) << ',' << csv_num(s.cum_in_R)
            << ',' << csv_num(s.cum_in_L) << ',' << csv_num(s.cum_t1_leak) << ','
            << csv_num(s.bloch_norm_dev_max) << '\n';
    }
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

void write_snapshot_csv(const RunRecord& record, const Snapshot& snap, const std::string& path) {
    auto out = open_out(path);
    out << "x_cm,e_R_re_dimensionless,e_R_im_dimensionless,"
           "e_L_re_dimensionless,e_L_im_dimensionless,"
           "flux_R_W_mm2,flux_L_W_mm2,r1,r2,r3\n";
    const double fu = record.derived.flux_unit_W_mm2;
    for (std::size_t j = 0; j < snap.x_cm.size(); ++j) {
        out << csv_num(snap.x_cm[j]) << ',' << csv_num(snap.eR[j].real()) << ','
            << csv_num(snap.eR[j].imag()) << ',' << csv_num(snap.eL[j].real()) << ','
            << csv_num(snap.eL[j].imag()) << ',' << csv_num(std::norm(snap.eR[j]) * fu) << ','
            << csv_num(std::norm(snap.eL[j]) * fu) << ',' << csv_num(snap.r1[j]) << ','
            << csv_num(snap.r2[j]) << ',' << csv_num(snap.r3[j]) << '\n';
    }
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

void write_run_outputs(const RunRecord& record, const std::string& config_echo,
                       const std::string& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create directory '" + dir + "': " + ec.message());
    {
        auto out = open_out(dir + "/config.txt");
        out << config_echo;
    }
    write_series_csv(record, dir + "/series.csv");
    for (const Snapshot& snap : record.snapshots) {
        char name[64];
        std::snprintf(name, sizeof name, "/snapshot_t%.6g_ns.csv", snap.t_ns);
        write_snapshot_csv(record, snap, dir + name);
    }
}

void write_sweep_summary_csv(const std::string& axis, const std::vector<SweepRow>& rows,
                             const std::string& path) {
    auto out = open_out(path);
    out << csv_field(axis)
        << ",status,peak_flux_W_mm2,delay_ns,released_fraction,enhancement,error\n";
    for (const SweepRow& r : rows) {
        out << csv_num(r.value) << ',' << (r.ok ? "ok" : "failed") << ','
            << csv_num(r.peak_flux_W_mm2) << ','
            << (std::isnan(r.delay_ns) ? std::string("") : csv_num(r.delay_ns)) << ','
            << csv_num(r.released_fraction) << ',' << csv_num(r.enhancement) << ','
            << csv_field(r.error) << '\n';
    }
    if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace psr
