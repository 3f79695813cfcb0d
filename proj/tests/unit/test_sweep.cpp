#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "exlat/emission.hpp"
#include "exlat/sweep.hpp"

using namespace exlat;

namespace {
constexpr double kPi = std::numbers::pi;
const PhysicalConstants kConsts;
const LatticeConfig kCfg{1000.0, 100, 100, 1.0, 0.0};
const DipoleOrientation kDip{1.0, 0.0, 0.0};
} // namespace

TEST_CASE("built-in figure ids expand to the caption parameters") {
    struct Expected {
        const char* id;
        SweptVariable var;
        double theta, phi, e_0;
    };
    const Expected table[] = {
        {"2", SweptVariable::photon_energy, 0.0, 0.0, 0.0},
        {"3a", SweptVariable::photon_energy, kPi / 4.0, 0.0, 0.0},
        {"3b", SweptVariable::photon_energy, kPi / 4.0, kPi / 2.0, 0.0},
        {"4", SweptVariable::photon_energy, kPi / 2.0, 0.0, 0.0},
        {"5a", SweptVariable::phi, kPi / 4.0, 0.0, 0.1},
        {"5b", SweptVariable::phi, kPi / 4.0, 0.0, 0.9},
        {"6a", SweptVariable::phi, kPi / 2.0, 0.0, 0.1},
        {"6b", SweptVariable::phi, kPi / 2.0, 0.0, 0.9},
        {"7a", SweptVariable::theta, 0.0, kPi / 2.0, 0.1},
        {"7b", SweptVariable::theta, 0.0, kPi / 2.0, 0.9},
    };
    for (const auto& e : table) {
        auto spec = figure_spec(e.id);
        CHECK(spec.variable == e.var);
        if (e.var != SweptVariable::theta) CHECK(spec.theta == e.theta);
        if (e.var != SweptVariable::phi) CHECK(spec.phi == e.phi);
        if (e.var != SweptVariable::photon_energy) CHECK(spec.e_0 == e.e_0);
        CHECK(spec.n_samples >= 2);
        CHECK(spec.start < spec.stop);
    }
    CHECK_THROWS_AS(figure_spec("8"), std::invalid_argument);
}

TEST_CASE("fig 3a ratio curve crosses zero at E_0 = E_ex/sqrt(2)") {
    auto spec = figure_spec("3a");
    spec.start = 0.01;
    spec.stop = 0.99;
    spec.n_samples = 200;
    auto rows = run_sweep(kConsts, spec, kCfg, kDip);
    double best_value = 0.0, best_gamma = 1.0;
    for (const auto& r : rows) {
        if (!r.decay.divergent && r.decay.gamma < best_gamma) {
            best_gamma = r.decay.gamma;
            best_value = r.value;
        }
    }
    const double step = (spec.stop - spec.start) / (spec.n_samples - 1);
    CHECK(std::abs(best_value - 1.0 / std::sqrt(2.0)) <= step);
}

TEST_CASE("fig 2 samples beyond E_0 = E_A are metastable with gamma = 0") {
    auto spec = figure_spec("2");
    auto rows = run_sweep(kConsts, spec, kCfg, kDip);
    int beyond = 0;
    for (const auto& r : rows) {
        if (r.value > 1.0 && !r.decay.divergent) {
            CHECK(r.decay.gamma == 0.0);
            CHECK(r.decay.regime == Regime::metastable);
            ++beyond;
        }
    }
    CHECK(beyond > 10);
}

TEST_CASE("fig 2 grid lands one divergence-flagged sample at the light cone") {
    auto rows = run_sweep(kConsts, figure_spec("2"), kCfg, kDip);
    int divergent = 0;
    for (const auto& r : rows)
        if (r.decay.divergent) ++divergent;
    CHECK(divergent == 1);
}

TEST_CASE("fig 7b peaks at theta = pi/2") {
    auto spec = figure_spec("7b");
    auto rows = run_sweep(kConsts, spec, kCfg, kDip);
    double best_value = 0.0, best = -1.0;
    for (const auto& r : rows)
        if (r.decay.ratio > best) { best = r.decay.ratio; best_value = r.value; }
    const double step = (spec.stop - spec.start) / (spec.n_samples - 1);
    CHECK(std::abs(best_value - kPi / 2.0) <= step);
}

TEST_CASE("run_sweep validates its range") {
    SweepSpec bad;
    bad.start = 1.0;
    bad.stop = 0.5;
    CHECK_THROWS_AS(run_sweep(kConsts, bad, kCfg, kDip), std::invalid_argument);
    bad.stop = 2.0;
    bad.n_samples = 1;
    CHECK_THROWS_AS(run_sweep(kConsts, bad, kCfg, kDip), std::invalid_argument);
}

TEST_CASE("parallel and serial sweeps produce identical rows") {
    auto spec = figure_spec("3b");
    auto serial = run_sweep(kConsts, spec, kCfg, kDip, false, {}, 1);
    auto parallel = run_sweep(kConsts, spec, kCfg, kDip, false, {}, 4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].value == parallel[i].value);
        CHECK(serial[i].decay.gamma == parallel[i].decay.gamma);
    }
}

TEST_CASE("write_table: header plus one line per row, byte count, LF endings") {
    auto spec = figure_spec("4");
    spec.n_samples = 3;
    spec.stop = 0.5;
    auto rows = run_sweep(kConsts, spec, kCfg, kDip);
    std::ostringstream os;
    const auto bytes = write_table(rows, spec.variable, os);
    const std::string text = os.str();
    CHECK(bytes == text.size());
    CHECK(std::count(text.begin(), text.end(), '\n') == 4);
    CHECK(text.find("swept_var,value,gamma_ev,ratio,regime") == 0);
    CHECK(text.find("\r") == std::string::npos);
    CHECK(text.find("E_0,") != std::string::npos);
}

TEST_CASE("write_table emits the DIVERGENT sentinel, never a capped float") {
    auto rows = run_sweep(kConsts, figure_spec("2"), kCfg, kDip);
    std::ostringstream os;
    write_table(rows, SweptVariable::photon_energy, os);
    const std::string text = os.str();
    CHECK(text.find("DIVERGENT") != std::string::npos);
    CHECK(text.find("inf") == std::string::npos);
    CHECK(text.find("nan") == std::string::npos);
}

TEST_CASE("identical reruns are byte-identical") {
    auto spec = figure_spec("5a");
    auto r1 = run_sweep(kConsts, spec, kCfg, kDip);
    auto r2 = run_sweep(kConsts, spec, kCfg, kDip);
    std::ostringstream o1, o2;
    write_table(r1, spec.variable, o1);
    write_table(r2, spec.variable, o2);
    CHECK(o1.str() == o2.str());
}

TEST_CASE("oracle columns appear only when requested") {
    SweepSpec spec;
    spec.variable = SweptVariable::photon_energy;
    spec.start = 0.2;
    spec.stop = 0.6;
    spec.n_samples = 3;
    spec.theta = 0.5;
    auto settings = OracleSettings::defaults(kConsts, 1.0);
    settings.n_points = 40000;
    settings.eta_sequence = {2e-3, 1e-3, 5e-4};
    auto rows = run_sweep(kConsts, spec, kCfg, kDip, true, settings);
    std::ostringstream os;
    write_table(rows, spec.variable, os);
    CHECK(os.str().find("oracle_ev,rel_err") != std::string::npos);
    for (const auto& r : rows) {
        CHECK(r.has_oracle);
        CHECK_FALSE(r.oracle_flagged);
        CHECK(r.rel_err <= 0.01);
    }
}

TEST_CASE("sweep rows crossing the singular band with oracle enabled are flagged") {
    SweepSpec spec;
    spec.variable = SweptVariable::photon_energy;
    spec.start = 0.9;
    spec.stop = 1.1;
    spec.n_samples = 3; // middle sample at E_0 = 1.0
    spec.theta = 0.5;
    auto settings = OracleSettings::defaults(kConsts, 1.0);
    settings.n_points = 40000;
    settings.eta_sequence = {2e-3, 1e-3, 5e-4};
    auto rows = run_sweep(kConsts, spec, kCfg, kDip, true, settings);
    CHECK(rows[1].oracle_flagged);
    CHECK_FALSE(rows[0].oracle_flagged);
    std::ostringstream os;
    write_table(rows, spec.variable, os);
    CHECK(os.str().find("FLAGGED") != std::string::npos);
}

TEST_CASE("emission report: constant columns for a metastable exciton") {
    DipoleOrientation dip{1.0, 0.0, 0.0};
    std::ostringstream os;
    // E_0 beyond the light cone: gamma = 0
    emission_report(kConsts, kCfg, dip, 1.0, 1.2, 100, {0.0, 1e-8, 2e-8}, 0.0, os);
    std::istringstream in(os.str());
    std::string header, l1, l2, l3;
    std::getline(in, header);
    std::getline(in, l1);
    std::getline(in, l2);
    std::getline(in, l3);
    CHECK(header == "t_s,population,intensity");
    auto tail = [](const std::string& s) { return s.substr(s.find(',')); };
    CHECK(tail(l1) == tail(l2));
    CHECK(tail(l2) == tail(l3));
}

TEST_CASE("emission report: pre-retardation rows keep the initial population") {
    DipoleOrientation dip{1.0, kPi / 2.0, 0.0};
    const double z = 1e10;
    const double t_onset = z / kConsts.speed_of_light();
    std::ostringstream os;
    emission_report(kConsts, kCfg, dip, 1.0, 0.1, 100, {0.0, t_onset / 2.0}, z, os);
    std::istringstream in(os.str());
    std::string header, l1, l2;
    std::getline(in, header);
    std::getline(in, l1);
    std::getline(in, l2);
    CHECK(l1.find(",1,") != std::string::npos);
    CHECK(l2.find(",1,") != std::string::npos);
    // before the field arrives there is no intensity
    CHECK(l1.substr(l1.rfind(',') + 1) == "0");
}

TEST_CASE("emission report: half-life of the population column") {
    DipoleOrientation dip{1.0, kPi / 2.0, 0.0};
    const auto decay = gamma_exciton(kConsts, kCfg, dip, 1.0, 0.1);
    const double t_half = kConsts.hbar_ev_s * std::log(2.0) / decay.gamma;
    const double pop = exciton_population(kConsts, 1.0, decay.gamma, t_half, 0.0);
    CHECK(pop == doctest::Approx(0.5).epsilon(1e-12));
    std::ostringstream os;
    emission_report(kConsts, kCfg, dip, 1.0, 0.1, 100, {t_half}, 0.0, os);
    std::istringstream in(os.str());
    std::string header, line;
    std::getline(in, header);
    std::getline(in, line);
    const auto c1 = line.find(','), c2 = line.rfind(',');
    CHECK(std::stod(line.substr(c1 + 1, c2 - c1 - 1)) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("intensity/population ratio is constant over the report") {
    DipoleOrientation dip{1.0, 0.7, 0.3};
    const auto decay = gamma_exciton(kConsts, kCfg, dip, 1.0, 0.1);
    const double lt = kConsts.hbar_ev_s / decay.gamma;
    std::ostringstream os;
    emission_report(kConsts, kCfg, dip, 1.0, 0.1, 100, {0.1 * lt, lt, 3.0 * lt}, 0.0, os);
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line); // header
    double ratio0 = -1.0;
    while (std::getline(in, line)) {
        const auto c1 = line.find(','), c2 = line.rfind(',');
        const double pop = std::stod(line.substr(c1 + 1, c2 - c1 - 1));
        const double inten = std::stod(line.substr(c2 + 1));
        const double ratio = inten / pop;
        if (ratio0 < 0.0) ratio0 = ratio;
        CHECK(ratio == doctest::Approx(ratio0).epsilon(1e-12));
    }
}
