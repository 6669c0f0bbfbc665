#include "core/conservation.hpp"

#include <cmath>
#include <stdexcept>

namespace psr {

namespace {

void require_samples(const RunRecord& record) {
    if (record.series.size() < 2)
        throw std::invalid_argument("conservation: need at least two series samples");
}

double elapsed_tau(const RunRecord& record) {
    return record.series.back().tau - record.series.front().tau;
}

}  // namespace

double chirality_residual(const RunRecord& record) {
    require_samples(record);
    const SeriesSample& a = record.series.front();
    const SeriesSample& b = record.series.back();
    // Q(tau) - Q(0) = (in_R - out_R) - (in_L - out_L) integrated over tau.
    const double balance_a = a.chirality_integral - (a.cum_in_R - a.cum_out_R) +
                             (a.cum_in_L - a.cum_out_L);
    const double balance_b = b.chirality_integral - (b.cum_in_R - b.cum_out_R) +
                             (b.cum_in_L - b.cum_out_L);
    return std::abs(balance_b - balance_a) / elapsed_tau(record);
}

double energy_residual(const RunRecord& record, bool tau1_infinite, double* leak_rate) {
    require_samples(record);
    const SeriesSample& a = record.series.front();
    const SeriesSample& b = record.series.back();
    const double dt = elapsed_tau(record);
    // d/dtau Q_en = -4 (out_R + out_L - in_R - in_L) - leak.
    const double boundary = 4.0 * ((b.cum_out_R + b.cum_out_L - b.cum_in_R - b.cum_in_L) -
                                   (a.cum_out_R + a.cum_out_L - a.cum_in_R - a.cum_in_L));
    const double leak = b.cum_t1_leak - a.cum_t1_leak;
    double residual = (b.energy_integral - a.energy_integral) + boundary;
    if (!tau1_infinite) residual += leak;
    if (leak_rate) *leak_rate = leak / dt;
    return std::abs(residual) / dt;
}

double bloch_norm_residual(const RunRecord& record, int* worst_cell) {
    require_samples(record);
    const SeriesSample& b = record.series.back();
    if (worst_cell) *worst_cell = b.bloch_norm_dev_cell;
    return b.bloch_norm_dev_max / elapsed_tau(record);
}

ConservationReport conservation_report(const RunRecord& record) {
    ConservationReport rep;
    const bool t1_inf = std::isinf(record.scenario.medium.T1_ns);
    rep.chirality_drift = chirality_residual(record);
    rep.energy_drift = energy_residual(record, t1_inf, &rep.t1_leak_rate);
    rep.bloch_norm_drift = bloch_norm_residual(record, &rep.worst_cell);
    double scale = 0.0;
    for (const SeriesSample& s : record.series)
        scale = std::max({scale, std::abs(s.energy_integral), s.cum_out_R + s.cum_out_L,
                          s.cum_in_R + s.cum_in_L});
    rep.scale = scale;
    return rep;
}

}  // namespace psr
