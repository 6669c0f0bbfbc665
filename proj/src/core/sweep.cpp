#include "core/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <thread>

namespace psr {

double peak_output_flux(const RunRecord& record) {
    double peak = 0.0;
    for (const SeriesSample& s : record.series) peak = std::max(peak, s.flux_right_W_mm2);
    return peak;
}

double released_fraction(const RunRecord& record) {
    if (record.series.empty()) return 0.0;
    const double f0 = record.series.front().stored_energy_fraction;
    if (f0 <= 0.0) return 0.0;
    return (f0 - record.series.back().stored_energy_fraction) / f0;
}

SweepResult sweep(const RunConfig& base, const std::string& axis,
                  const std::vector<double>& values, int workers) {
    {   // reject unknown / non-numeric axes up front
        RunConfig probe = base;
        set_key(probe, axis, "1");
    }
    SweepResult out;
    out.rows.resize(values.size());
    out.records.resize(values.size());

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= values.size()) return;
            SweepRow& row = out.rows[i];
            row.value = values[i];
            row.delay_ns = std::numeric_limits<double>::quiet_NaN();
            try {
                RunConfig cfg = base;
                char buf[40];
                std::snprintf(buf, sizeof buf, "%.17g", values[i]);
                set_key(cfg, axis, buf);
                cfg.scenario.validate();
                RunRecord rec = run(cfg.scenario);
                row.peak_flux_W_mm2 = peak_output_flux(rec);
                if (auto d = delay_time_ns(rec)) row.delay_ns = *d;
                row.released_fraction = released_fraction(rec);
                const double trig = std::max(rec.scenario.trigger.power_left_W_mm2,
                                             rec.scenario.trigger.power_right_W_mm2);
                row.enhancement = trig > 0.0 ? row.peak_flux_W_mm2 / trig : 0.0;
                row.ok = true;
                out.records[i] = std::move(rec);
            } catch (const std::exception& e) {
                row.ok = false;
                row.error = e.what();
            }
        }
    };

    int n_workers = workers > 0 ? workers
                                : static_cast<int>(std::min<std::size_t>(
                                      values.size(), std::thread::hardware_concurrency()));
    n_workers = std::max(1, n_workers);
    std::vector<std::thread> pool;
    for (int i = 1; i < n_workers; ++i) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace psr
