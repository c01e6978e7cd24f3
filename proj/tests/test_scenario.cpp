#include <doctest.h>

#include <sstream>

#include "scangame/scenario.hpp"

using namespace scangame;

TEST_CASE("default scenario encodes the shipped configuration") {
  const ScenarioConfig cfg = default_scenario();
  CHECK(cfg.params.U == 1.0);
  CHECK(cfg.params.C_S == 0.4);
  CHECK(cfg.params.a == 0.01);
  CHECK(cfg.params.b == 0.3);
  CHECK(cfg.params.q0 == 0.9);
  REQUIRE(cfg.prior.has_value());
  CHECK(cfg.prior->support_lo() == 0.039);
  CHECK(cfg.prior->support_hi() == 0.3);
  CHECK(cfg.report_types == std::vector<double>{0.039, 0.3});
  CHECK(cfg.sweep.empty());
  CHECK_NOTHROW(cfg.ensure_valid());

  const ScenarioConfig sweep = default_sweep_scenario();
  REQUIRE(sweep.sweep.size() == 2);
  CHECK(sweep.sweep[0].parameter == "F");
  CHECK(sweep.sweep[0].steps == 30);
  CHECK(sweep.sweep[1].parameter == "q0");
  CHECK_NOTHROW(sweep.ensure_valid());
}

TEST_CASE("config parsing: full round trip") {
  std::istringstream in(R"(# scenario
params.U = 1.0
params.V = 1.0
params.C_S = 0.4
params.C_I = 0.1
params.F = 0.25          # inline comment
params.a = 0.01
params.b = 0.3
params.c = 0.3
params.q0 = 0.75
prior.uniform = 0.05 0.25
sweep.F = 0.1 0.4 15
report_types = 0.05 0.25
verify = false
seed = 99
)");
  const ScenarioConfig cfg = parse_scenario(in);
  CHECK(cfg.params.F == 0.25);
  CHECK(cfg.params.q0 == 0.75);
  CHECK(cfg.prior->support_hi() == 0.25);
  REQUIRE(cfg.sweep.size() == 1);
  CHECK(cfg.sweep[0].lo == 0.1);
  CHECK(cfg.sweep[0].steps == 15);
  CHECK(cfg.seed == 99);
}

TEST_CASE("config parsing: prior variants") {
  SUBCASE("point prior selects the known-characteristics path") {
    std::istringstream in("prior.point = 0.2\n");
    const ScenarioConfig cfg = parse_scenario(in);
    CHECK(!cfg.bayesian());
    CHECK(*cfg.point_prior == 0.2);
    CHECK(cfg.report_types == std::vector<double>{0.2});
  }
  SUBCASE("atoms") {
    std::istringstream in("prior.atoms = 0.1 0.25 0.2 0.75\n");
    const ScenarioConfig cfg = parse_scenario(in);
    CHECK(cfg.bayesian());
    CHECK(cfg.prior->is_discrete());
    CHECK(cfg.prior->mean() == doctest::Approx(0.1 * 0.25 + 0.2 * 0.75));
  }
  SUBCASE("pieces") {
    std::istringstream in("prior.pieces = 0.05 0.15 5 0.15 0.2 5\n");
    const ScenarioConfig cfg = parse_scenario(in);
    CHECK(!cfg.prior->is_discrete());
    CHECK(cfg.prior->mass() == doctest::Approx(1.0));
  }
}

TEST_CASE("config parsing: field-level errors") {
  auto expect_error = [](const std::string& text, const std::string& needle) {
    std::istringstream in(text);
    try {
      parse_scenario(in);
      FAIL("expected ConfigError for: " << text);
    } catch (const ConfigError& e) {
      INFO("message: ", e.what());
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_error("params.U = banana\n", "params.U");
  expect_error("params.q0 = 1.5\n", "params");
  expect_error("sweep.F = 0.1 0.4\n", "sweep.F");
  expect_error("sweep.V = 0.5 2 10\n", "unknown config key");
  expect_error("prior.uniform = 0.3 0.1\n", "prior.uniform");
  expect_error("prior.uniform = 0.05 0.6\n", "prior");        // support outside [a,b]
  expect_error("report_types = 0.5\n", "report_types");
  expect_error("sweep.q0 = 0 1 10\n", "sweep.q0");
  expect_error("no equals sign here\n", "line 1");
}

TEST_CASE("config parsing: duplicate sweep axes rejected") {
  std::istringstream in("sweep.F = 0.1 0.2 5\nsweep.F = 0.2 0.3 5\n");
  CHECK_THROWS_AS(parse_scenario(in), ConfigError);
}
