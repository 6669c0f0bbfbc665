#pragma once

#include <string>
#include <vector>

#include "core/solver.hpp"

namespace psr {

struct SweepRow;
struct SolitonProfile;

// All writers throw std::runtime_error naming the path on failure.
// Headers are mandatory; fields containing commas or quotes are quoted.

void write_series_csv(const RunRecord& record, const std::string& path);
void write_snapshot_csv(const RunRecord& record, const Snapshot& snap, const std::string& path);

// series.csv, one snapshot_t*.csv per snapshot, and config.txt (the resolved
// configuration echo) under dir.
void write_run_outputs(const RunRecord& record, const std::string& config_echo,
                       const std::string& dir);

void write_sweep_summary_csv(const std::string& axis, const std::vector<SweepRow>& rows,
                             const std::string& path);

std::string csv_field(const std::string& raw);
std::string csv_num(double v);

}  // namespace psr
