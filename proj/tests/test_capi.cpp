#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "psr/psr.h"

namespace {

std::string tmp_dir(const char* leaf) {
    const auto dir = std::filesystem::temp_directory_path() / "psr_capi_tests" / leaf;
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir.string();
}

}  // namespace

TEST_CASE("psr_derive fills the unit table") {
    psr_derived d{};
    REQUIRE(psr_derive(1e20, 0.52, 0.87, 0.80, 0.055, 1e3, 10.0, &d) == PSR_OK);
    CHECK(d.length_unit_cm == doctest::Approx(13.799).epsilon(1e-4));
    CHECK(d.time_unit_ns == doctest::Approx(0.46029).epsilon(1e-4));
    CHECK(d.gamma_plus == doctest::Approx(15.1818).epsilon(1e-4));
    CHECK(d.flux_unit_W_mm2 == doctest::Approx(4.9953e9).epsilon(1e-4));

    CHECK(psr_derive(-1.0, 0.52, 0.87, 0.80, 0.055, 1e3, 10.0, &d) == PSR_EINVAL);
    CHECK(std::strlen(psr_last_error()) > 0);
}

TEST_CASE("scenario lifecycle: parse, set, echo, run, write") {
    psr_scenario* s = nullptr;
    const char* text =
        "medium.n_cm3 = 1e21\n"
        "sim.length_cm = 4\n"
        "sim.grid_points = 64\n"
        "sim.t_end_ns = 0.2\n"
        "trigger.power_W_mm2 = 10\n";
    REQUIRE(psr_scenario_parse(text, &s) == PSR_OK);
    REQUIRE(psr_scenario_set(s, "sim.t_end_ns", "0.25") == PSR_OK);
    CHECK(psr_scenario_set(s, "sim.bogus", "1") == PSR_EPARSE);

    size_t needed = 0;
    REQUIRE(psr_scenario_echo(s, nullptr, 0, &needed) == PSR_OK);
    std::vector<char> buf(needed + 1);
    REQUIRE(psr_scenario_echo(s, buf.data(), buf.size(), nullptr) == PSR_OK);
    CHECK(std::string(buf.data()).find("sim.t_end_ns = 0.25") != std::string::npos);

    psr_run* run = nullptr;
    REQUIRE(psr_run_scenario(s, &run) == PSR_OK);
    REQUIRE(psr_run_series_count(run) > 2);
    psr_sample first{}, last{};
    REQUIRE(psr_run_series_get(run, 0, &first) == PSR_OK);
    REQUIRE(psr_run_series_get(run, psr_run_series_count(run) - 1, &last) == PSR_OK);
    CHECK(first.t_ns == 0.0);
    CHECK(last.t_ns > 0.24);
    CHECK(psr_run_series_get(run, 999999, &last) == PSR_ERANGE);

    double peak = 0.0;
    REQUIRE(psr_run_peak_flux(run, &peak) == PSR_OK);
    CHECK(peak > 0.0);

    const std::string dir = tmp_dir("run");
    REQUIRE(psr_run_write_csv(run, dir.c_str()) == PSR_OK);
    CHECK(std::filesystem::exists(dir + "/series.csv"));
    CHECK(std::filesystem::exists(dir + "/config.txt"));

    psr_run_destroy(run);
    psr_scenario_destroy(s);
}

TEST_CASE("parse failures carry messages") {
    psr_scenario* s = nullptr;
    CHECK(psr_scenario_parse("nonsense\n", &s) == PSR_EPARSE);
    CHECK(std::string(psr_last_error()).find("key = value") != std::string::npos);
    CHECK(psr_scenario_preset("fig99", &s) == PSR_EPARSE);
}

TEST_CASE("delay marker: quiet run reports no event") {
    psr_scenario* s = nullptr;
    const char* text =
        "medium.n_cm3 = 1e21\n"
        "sim.length_cm = 4\n"
        "sim.grid_points = 64\n"
        "sim.t_end_ns = 0.1\n"
        "init.p = 0\n";  // ground state, no trigger
    REQUIRE(psr_scenario_parse(text, &s) == PSR_OK);
    psr_run* run = nullptr;
    REQUIRE(psr_run_scenario(s, &run) == PSR_OK);
    double delay = 0.0;
    CHECK(psr_run_delay_ns(run, &delay) == PSR_ENOEVENT);
    psr_run_destroy(run);
    psr_scenario_destroy(s);
}

TEST_CASE("sweep through the C API writes a summary") {
    psr_scenario* s = nullptr;
    const char* text =
        "medium.n_cm3 = 1e21\n"
        "sim.length_cm = 4\n"
        "sim.grid_points = 64\n"
        "sim.t_end_ns = 0.1\n";
    REQUIRE(psr_scenario_parse(text, &s) == PSR_OK);
    const double values[2] = {1.0, 100.0};
    const std::string dir = tmp_dir("sweep");
    REQUIRE(psr_sweep(s, "trigger.power_W_mm2", values, 2, dir.c_str(), 2) == PSR_OK);
    CHECK(std::filesystem::exists(dir + "/summary.csv"));
    CHECK(std::filesystem::exists(dir + "/value_0/series.csv"));
    CHECK(std::filesystem::exists(dir + "/value_1/series.csv"));
    psr_scenario_destroy(s);
}

TEST_CASE("soliton solve through the C API") {
    psr_soliton_request req{};
    req.n_cm3 = 2.6e22;
    req.T1_ns = 1e3;
    req.T2_ns = 20.0;
    req.e0 = 1.2515481495985125e-3;
    req.length_cm = 4.0;
    req.kind = PSR_SOLITON_ABSORBER;
    req.samples = 801;
    psr_soliton* p = nullptr;
    REQUIRE(psr_soliton_solve(&req, &p) == PSR_OK);
    const size_t n = psr_soliton_sample_count(p);
    REQUIRE(n == 801);
    std::vector<double> x(n), fR(n), fL(n), r3(n);
    REQUIRE(psr_soliton_samples(p, x.data(), fR.data(), fL.data(), r3.data()) == PSR_OK);
    CHECK(r3[n / 2] == doctest::Approx(-0.8).epsilon(1e-3));
    CHECK(r3.front() == doctest::Approx(-1.0).epsilon(0.01));
    CHECK(x.back() == doctest::Approx(4.0).epsilon(1e-3));

    double size = 0, turns = 0, rp = 0, rr = 0, dres = 0;
    int spinor = 0;
    REQUIRE(psr_soliton_info(p, &size, &turns, &spinor, &rp, &rr, &dres) == PSR_OK);
    CHECK(spinor == 1);
    CHECK(dres < 1e-6);
    CHECK(rr < rp);

    const std::string dir = tmp_dir("soliton");
    REQUIRE(psr_soliton_write_csv(p, (dir + "/profile.csv").c_str()) == PSR_OK);
    std::ifstream in(dir + "/profile.csv");
    std::string header;
    std::getline(in, header);
    CHECK(header == "x_cm,flux_R_W_mm2,flux_L_W_mm2,r3");
    psr_soliton_destroy(p);
}

TEST_CASE("pulse helpers through the C API") {
    double theta = 0.0;
    REQUIRE(psr_pulse_area_rect(2e9, 1.0, 0.87, 0.80, 0.055, &theta) == PSR_OK);
    CHECK(theta > 0.0);
    long n = 0;
    double rem = 0.0;
    REQUIRE(psr_pulse_split_count(theta, &n, &rem) == PSR_OK);
    CHECK(n >= 0);
    double E = 0.0;
    REQUIRE(psr_pulse_compression(0.0, 3.0, 1, &E) == PSR_OK);
    CHECK(E == doctest::Approx(1.0));
}
