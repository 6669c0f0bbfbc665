#pragma once

#include <string>
#include <vector>

#include "core/config.hpp"
#include "core/solver.hpp"

namespace psr {

struct SweepRow {
    double value = 0.0;
    bool ok = false;
    std::string error;
    double peak_flux_W_mm2 = 0.0;
    double delay_ns = 0.0;  // NaN when no explosive event
    double released_fraction = 0.0;
    double enhancement = 0.0;  // peak output / trigger flux
};

struct SweepResult {
    std::vector<SweepRow> rows;
    std::vector<RunRecord> records;  // empty record for failed runs
};

// One run per axis value, fanned out over worker threads.  Runs are
// independent and the result is identical for any worker count; per-run
// failures are recorded and the sweep continues.
SweepResult sweep(const RunConfig& base, const std::string& axis,
                  const std::vector<double>& values, int workers = 0);

// Peak right-end output flux over the series.
double peak_output_flux(const RunRecord& record);
// Fraction of the initially stored energy released by the end of the run.
double released_fraction(const RunRecord& record);

}  // namespace psr
