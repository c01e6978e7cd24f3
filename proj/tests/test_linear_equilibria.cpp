#include <doctest.h>

#include <cmath>

#include "scangame/linear_equilibria.hpp"
#include "scangame/oracle.hpp"
#include "scangame/rng.hpp"

using namespace scangame;

namespace {

NetworkParams section_v(double F, double q0) {
  NetworkParams p;
  p.U = 1.0;
  p.V = 1.0;
  p.C_S = 0.4;
  p.C_I = 0.1;
  p.F = F;
  p.a = 0.01;
  p.b = 0.3;
  p.c = 0.3;
  p.q0 = q0;
  return p;
}

NetworkParams random_params(SplitMix64& rng) {
  NetworkParams p;
  p.U = 0.5 + 1.5 * rng.uniform01();
  p.V = 0.5 + 1.5 * rng.uniform01();
  p.C_S = 0.05 + 1.2 * rng.uniform01();
  p.C_I = 0.05 + 0.8 * rng.uniform01();
  p.F = rng.uniform01();
  p.a = 0.005 + 0.1 * rng.uniform01();
  p.b = p.a + 0.05 + (0.48 - p.a - 0.05) * rng.uniform01();
  p.c = p.a + (p.b - p.a) * rng.uniform01();
  p.q0 = 0.05 + 0.95 * rng.uniform01();
  return p;
}

}  // namespace

TEST_CASE("scanner best response switches at R_q0") {
  const NetworkParams p = section_v(0.3, 0.9);  // R_q0 = (0.1 - 0.01*0.1)/0.9 = 0.11
  CHECK(require_r_q0(p) == doctest::Approx(0.11).epsilon(1e-12));
  CHECK(best_response_scanner(p, 0.2) == ScannerResponse::play_maximum);
  CHECK(best_response_scanner(p, 0.05) == ScannerResponse::play_minimum);
  CHECK(best_response_scanner(p, require_r_q0(p)) == ScannerResponse::indifferent);
}

TEST_CASE("scanner best response is always b when the fine covers scanning costs") {
  // F >= C_S makes R <= 0 < a <= y_bar for any feasible aggregate
  SplitMix64 rng(7);
  for (int i = 0; i < 50; ++i) {
    NetworkParams p = random_params(rng);
    p.F = p.C_S + rng.uniform01();
    const double y_bar = p.a + (p.c - p.a) * rng.uniform01();
    CHECK(best_response_scanner(p, y_bar) == ScannerResponse::play_maximum);
  }
}

TEST_CASE("invader best response clamps the response line") {
  NetworkParams p = section_v(0.2, 0.9);  // T = 0.7
  CHECK(best_response_invader(p, 0.3, 0.3) == doctest::Approx(0.2).epsilon(1e-15));
  SUBCASE("floor at a when the line drops below it") {
    NetworkParams q = p;
    q.F = 0.85;
    q.C_I = 0.2;  // T < 0, L(x) < 0 < a
    CHECK(best_response_invader(q, 0.1, 0.3) == q.a);
  }
  SUBCASE("degenerate capability pins the response at a") {
    CHECK(best_response_invader(p, 0.1, p.a) == p.a);
  }
  SUBCASE("verified against a dense scan of the concave payoff") {
    const double cap = 0.3;
    for (double x : {0.01, 0.12, 0.3}) {
      const double br = best_response_invader(p, x, cap);
      double best_y = p.a, best_v = payoff_invader(p, x, p.a);
      for (int i = 0; i <= 4000; ++i) {
        const double y = p.a + (cap - p.a) * i / 4000.0;
        const double v = payoff_invader(p, x, y);
        if (v > best_v) {
          best_v = v;
          best_y = y;
        }
      }
      CHECK(std::fabs(br - best_y) <= (cap - p.a) / 4000.0 + 1e-12);
    }
  }
}

TEST_CASE("known-characteristics equilibrium: worked case i7") {
  const NetworkParams p = section_v(0.2, 1.0);
  // R_q0 = R = 0.2, T = 0.7, L(b) = 0.2 <= R_q0 <= L(a) = 0.345
  const EquilibriumReport report = solve_known_characteristics(p);
  CHECK(report.case_label == "i7");
  CHECK(report.x == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(report.y == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(report.P_R == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(report.P_U == doctest::Approx(0.31).epsilon(1e-12));

  // oracle confirmation on the default 400x400 grid
  const GridSearchResult search = grid_equilibrium_search(p);
  CHECK(grid_confirms(search, report.x, report.y));
}

TEST_CASE("known-characteristics equilibrium: corner cases i1 and i6") {
  SUBCASE("large fine pushes to (b, a)") {
    NetworkParams p = section_v(0.6, 0.9);
    p.a = 0.05;
    p.c = 0.2;
    // R < 0 so R_q0 < a; T = 0.3 gives L(b) = 0 < a
    const EquilibriumReport report = solve_known_characteristics(p);
    CHECK(report.case_label == "i1");
    CHECK(report.x == p.b);
    CHECK(report.y == p.a);
  }
  SUBCASE("expensive scanning with capable invader gives (a, c)") {
    NetworkParams p = section_v(0.0, 1.0);
    p.C_S = 0.45;
    p.c = 0.1;
    // R_q0 = 0.45 > c, T = 0.9, L(a) = 0.445 > c
    const EquilibriumReport report = solve_known_characteristics(p);
    CHECK(report.case_label == "i6");
    CHECK(report.x == p.a);
    CHECK(report.y == p.c);
  }
}

TEST_CASE("equilibrium is a best-response fixed point on random parameters") {
  SplitMix64 rng(20240918);
  for (int i = 0; i < 300; ++i) {
    const NetworkParams p = random_params(rng);
    const EquilibriumReport report = solve_known_characteristics(p);
    CHECK(report.x >= p.a);
    CHECK(report.x <= p.b);
    CHECK(report.y >= p.a);
    CHECK(report.y <= p.c);
    // invader side: y is the clamped response line
    CHECK(std::fabs(report.y - best_response_invader(p, report.x, p.c)) <= 1e-9);
    // scanner side: payoff is affine in x, so checking the endpoints and the
    // indifference point covers all deviations
    const double at_x = p.q0 * payoff_scanner(p, report.x, report.y) +
                        (1.0 - p.q0) * payoff_scanner(p, report.x, p.a);
    for (double alt : {p.a, p.b, derive(p).T - 2.0 * require_r_q0(p)}) {
      if (alt < p.a || alt > p.b) continue;
      const double at_alt = p.q0 * payoff_scanner(p, alt, report.y) +
                            (1.0 - p.q0) * payoff_scanner(p, alt, p.a);
      CHECK(at_alt <= at_x + 1e-9);
    }
    CHECK(report.P_U == doctest::Approx(report.x + p.a).epsilon(0));
  }
}

TEST_CASE("case classification: random draws land in exactly one strict row") {
  // The strict table rows overlap only on measure-zero boundaries, so random
  // draws must match exactly one of them.
  SplitMix64 rng(99);
  for (int i = 0; i < 100000; ++i) {
    const NetworkParams p = random_params(rng);
    const double r = require_r_q0(p);
    const double la = response_line(p, p.a);
    const double lb = response_line(p, p.b);
    int hits = 0;
    if (r < p.a && lb < p.a) ++hits;
    if (r < p.a && p.a <= lb && lb <= p.c) ++hits;
    if (r < p.a && p.c < lb) ++hits;
    if (p.c < r && la < p.a) ++hits;
    if (p.c < r && p.a <= la && la <= p.c) ++hits;
    if (p.c < r && p.c < la) ++hits;
    if (p.a <= r && r <= p.c && lb <= r && r <= la) ++hits;
    if (p.a <= r && r <= p.c && la <= p.a) ++hits;
    if (p.a <= r && r <= p.c && p.a < la && la < r) ++hits;
    if (p.a <= r && r <= p.c && p.c < lb) ++hits;
    if (p.a <= r && r <= p.c && r < lb && lb < p.c) ++hits;
    CHECK(hits == 1);
  }
}

TEST_CASE("jump detection on the fine sweep") {
  const NetworkParams p = section_v(0.3, 0.9);

  SUBCASE("at least one jump in x over F in [0.1, 0.4]") {
    const std::vector<JumpRecord> jumps = detect_jumps(p, "F", 0.1, 0.4, 120);
    REQUIRE(!jumps.empty());
    for (const JumpRecord& jump : jumps) {
      // jumps must coincide with case-label changes
      CHECK(jump.case_before != jump.case_after);
    }
    // the known i6 -> i7 transition near F = 0.129
    CHECK(jumps.front().case_before == "i6");
    CHECK(jumps.front().case_after == "i7");
    CHECK(jumps.front().x_after - jumps.front().x_before > 0.1);
  }

  SUBCASE("constant-case region reports no jumps") {
    // F in [0.35, 0.4]: R_q0 < a and L(b) in (a, c), case i2 throughout
    const std::vector<JumpRecord> jumps = detect_jumps(p, "F", 0.395, 0.4, 30);
    CHECK(jumps.empty());
  }

  SUBCASE("equilibrium x is non-decreasing in F and q0") {
    double prev = -1.0;
    for (int i = 0; i < 200; ++i) {
      NetworkParams q = p;
      q.F = 0.1 + 0.3 * i / 199.0;
      const double x = solve_known_characteristics(q).x;
      CHECK(x >= prev - 1e-12);
      prev = x;
    }
    prev = -1.0;
    for (int i = 0; i < 200; ++i) {
      NetworkParams q = p;
      q.q0 = 0.01 + 0.98 * i / 199.0;
      const double x = solve_known_characteristics(q).x;
      CHECK(x >= prev - 1e-12);
      prev = x;
    }
  }
}
