#include <doctest.h>

#include <numbers>
#include <sstream>

#include "exlat/config.hpp"

using namespace exlat;

TEST_CASE("paper defaults validate") {
    LatticeConfig cfg{1000.0, 100, 100, 1.0, 0.0};
    DipoleOrientation dip{1.0, 0.0, 0.0};
    CHECK(validate_config(cfg, dip).ok());
}

TEST_CASE("a = 0 is rejected with the field named") {
    LatticeConfig cfg{0.0, 100, 100, 1.0, 0.0};
    DipoleOrientation dip{1.0, 0.0, 0.0};
    auto rep = validate_config(cfg, dip);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.violations.front().find("a_angstrom") != std::string::npos);
}

TEST_CASE("band touching zero is rejected: E_A - 4|J| <= 0") {
    LatticeConfig cfg{1000.0, 100, 100, 1.0, 0.3};
    DipoleOrientation dip{1.0, 0.0, 0.0};
    auto rep = validate_config(cfg, dip);
    REQUIRE_FALSE(rep.ok());
    CHECK(rep.violations.front().find("band") != std::string::npos);
}

TEST_CASE("every violated invariant is reported, not just the first") {
    LatticeConfig cfg{-1.0, 0, 100, -2.0, 0.0};
    DipoleOrientation dip{0.0, 5.0, 7.0};
    auto rep = validate_config(cfg, dip);
    CHECK(rep.violations.size() >= 6);
}

TEST_CASE("empty config file yields the paper defaults") {
    std::istringstream in("");
    auto [cfg, dip] = parse_config(in);
    CHECK(cfg.a == 1000.0);
    CHECK(cfg.e_a == 1.0);
    CHECK(cfg.j == 0.0);
    CHECK(dip.mu == 1.0);
}

TEST_CASE("config parser handles comments, whitespace and all keys") {
    std::istringstream in(
        "# lattice\n"
        "a_angstrom = 500\n"
        "n_x = 10\n"
        "n_y=20\n"
        "e_a_ev = 2.0  # transition energy\n"
        "j_ev = 0.01\n"
        "mu_e_angstrom = 0.5\n"
        "theta_rad = 0.7853981634\n"
        "phi_rad = 1.5\n");
    auto [cfg, dip] = parse_config(in);
    CHECK(cfg.a == 500.0);
    CHECK(cfg.n_x == 10);
    CHECK(cfg.n_y == 20);
    CHECK(cfg.e_a == 2.0);
    CHECK(cfg.j == 0.01);
    CHECK(dip.mu == 0.5);
    CHECK(dip.theta == doctest::Approx(std::numbers::pi / 4.0).epsilon(1e-9));
    CHECK(dip.phi == 1.5);
}

TEST_CASE("unknown key errors carry the line number") {
    std::istringstream in("a_angstrom = 1000\nbogus_key = 1\n");
    try {
        parse_config(in);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
        CHECK(std::string(e.what()).find("bogus_key") != std::string::npos);
    }
}

TEST_CASE("unparsable value errors carry the line number") {
    std::istringstream in("\n\na_angstrom = fast\n");
    try {
        parse_config(in);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("invariant violations from file values are rejected") {
    std::istringstream in("a_angstrom = -5\n");
    CHECK_THROWS_AS(parse_config(in), ConfigError);
}

TEST_CASE("mu decomposition follows theta") {
    DipoleOrientation dip{2.0, std::numbers::pi / 3.0, 0.0};
    CHECK(dip.mu_parallel() == doctest::Approx(2.0 * std::sin(std::numbers::pi / 3.0)));
    CHECK(dip.mu_z() == doctest::Approx(1.0));
}
