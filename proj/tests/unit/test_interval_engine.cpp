#include "doctest.h"

#include "../support/gen.hpp"
#include "rpgeo/error.hpp"
#include "rpgeo/index_iteration.hpp"
#include "rpgeo/interval_engine.hpp"
#include "rpgeo/loop_homology.hpp"

using namespace rpgeo;
using rpgeo::testing::Rng;

namespace {
ExactReal X(const char* s) { return ExactReal::parse(s); }
Rational R(const char* s) { return Rational::parse(s); }

Rank1Model rp3_model() {
  Rank1Model m;
  m.n = 1;
  m.theta = X("sqrt(2) - 1");
  m.p = {1, -1};
  m.xi = {R("0"), R("1/4")};
  return m;
}
}  // namespace

TEST_CASE("interval pattern for n = 1, k = 2") {
  IntervalPattern p = interval_pattern(1, 2, 0);
  CHECK(p.Q == R("5/4"));
  CHECK(p.frac_Q == R("1/4"));
  REQUIRE(p.points.size() == 3);
  CHECK(p.locate(X("1/8")) == 0);
  CHECK(p.locate(X("1/2")) == 1);
  CHECK_THROWS_AS(p.locate(X("1/4")), PreconditionError);
  CHECK_FALSE(p.find(X("0")).has_value());
  CHECK_FALSE(p.find(X("3/2")).has_value());

  // Q_L walks by n/(n+1) per step of L
  for (std::int64_t L = -5; L <= 5; ++L) {
    CHECK(interval_pattern(3, 4, L + 1).Q - interval_pattern(3, 4, L).Q == R("3/4"));
  }
}

TEST_CASE("interval pattern has k intervals partitioning (0, k-1)") {
  for (std::int64_t n = 1; n <= 4; ++n) {
    for (std::int64_t k = 2; k <= 2 * n + 2; ++k) {
      for (std::int64_t L = -7; L <= 7; ++L) {
        auto p = interval_pattern(n, k, L);
        REQUIRE(p.points.size() == static_cast<std::size_t>(k + 1));
        CHECK(p.points.front() == Rational(0));
        CHECK(p.points.back() == Rational(k - 1));
        for (std::size_t i = 1; i + 1 < p.points.size(); ++i) CHECK(p.points[i] - p.points[i - 1] <= Rational(1));
      }
    }
  }
}

TEST_CASE("rank-1 model validation") {
  CHECK(validate(rp3_model()).ok());
  CHECK(rp3_model().manifold_dim() == 3);

  Rank1Model bad = rp3_model();
  bad.xi[1] = R("1/3");
  auto rep = validate(bad);
  CHECK_FALSE(rep.ok());
  CHECK(rep.summary().find("mean condition") != std::string::npos);

  bad = rp3_model();
  bad.p = {1, -2};
  CHECK_FALSE(validate(bad).ok());
  bad = rp3_model();
  bad.theta = X("1/3");
  CHECK_FALSE(validate(bad).ok());
  bad = rp3_model();
  bad.odd_iterates_only = true;  // needs odd n and even k; n = 1, k = 2 passes structurally
  CHECK(validate(bad).ok());
  bad.n = 2;
  CHECK_FALSE(validate(bad).ok());
}

TEST_CASE("closed form matches the orientable iteration formula") {
  Rng rng(101);
  for (int trial = 0; trial < 30; ++trial) {
    std::int64_t n = rpgeo::testing::uniform(rng, 1, 3);
    auto pm = rpgeo::testing::random_odd_pair(rng, n);
    REQUIRE(validate(pm.geodesic).ok());
    REQUIRE(validate(pm.rank1).ok());
    CHECK(mean_index(pm.geodesic) == ExactReal(Rational(n, n + 1)));
    auto hats = closed_form_thetas(pm.geodesic);
    for (std::int64_t m = 1; m <= 60; ++m) {
      std::int64_t ref = index_orientable(pm.geodesic.nf, 0, m);
      CHECK(index_closed_form(n, hats, m) == ref);
      CHECK(index_direct(pm.rank1, m) == ref);
    }
  }
}

TEST_CASE("closed form matches the non-orientable formula at odd iterates") {
  Rng rng(202);
  for (int trial = 0; trial < 30; ++trial) {
    std::int64_t n = rpgeo::testing::uniform(rng, 2, 3);
    auto pm = rpgeo::testing::random_even_pair(rng, n);
    REQUIRE(validate(pm.geodesic).ok());
    REQUIRE(validate(pm.rank1).ok());
    CHECK(mean_index(pm.geodesic) == ExactReal(Rational(2 * n - 1, 2 * n)));
    auto hats = closed_form_thetas(pm.geodesic);
    CHECK(fractional_sum(hats) ==
          ExactReal((Rational(static_cast<std::int64_t>(hats.size())) + Rational(2 * n - 1, 2 * n)) / Rational(2)));
    for (std::int64_t m = 1; m <= 61; m += 2) {
      std::int64_t ref = index_nonorientable(pm.geodesic, m);
      CHECK(index_closed_form(2 * n - 1, hats, m) == ref);
      CHECK(index_direct(pm.rank1, m) == ref);
    }
    CHECK_THROWS_AS(index_direct(pm.rank1, 2), PreconditionError);
  }
}

TEST_CASE("closed_form_thetas rejects what the closed form does not cover") {
  Rng rng(5);
  auto pm = rpgeo::testing::random_odd_pair(rng, 1);
  GeodesicModel g = pm.geodesic;
  g.ind1 = 2;
  CHECK_THROWS_AS(closed_form_thetas(g), PreconditionError);
  g = pm.geodesic;
  g.nf.thetas[0] = X("1/3");
  g.nf.r_prime = 0;
  for (const auto& t : g.nf.thetas) g.nf.r_prime += t > X("1/2") ? 1 : 0;
  std::sort(g.nf.thetas.begin(), g.nf.thetas.end(), [](auto& a, auto& b) { return a > b; });
  CHECK_THROWS_AS(closed_form_thetas(g), PreconditionError);
}

TEST_CASE("index_closed_form rejects a broken mean condition") {
  CHECK_THROWS_AS(index_closed_form(1, {X("sqrt(2) - 1"), X("1/3")}, 1), PreconditionError);
}

TEST_CASE("interval route agrees with the direct formula") {
  Rng rng(303);
  for (int parity = 0; parity < 2; ++parity) {
    for (int trial = 0; trial < 10; ++trial) {
      Rank1Model model = parity == 0
                             ? rpgeo::testing::random_odd_pair(rng, rpgeo::testing::uniform(rng, 1, 3)).rank1
                             : rpgeo::testing::random_even_pair(rng, rpgeo::testing::uniform(rng, 2, 3)).rank1;
      for (std::int64_t l = 0; l <= 20; ++l) {
        for (std::int64_t L = -12; L <= 12; ++L) {
          std::int64_t m = 2 * (model.n + 1) * l + 2 * L + 1;
          if (m < 1) continue;
          std::int64_t ref = index_direct(model, m);
          CHECK(index_via_interval(model, l, L) == ref);
          // any equation may play the excluded role
          CHECK(index_via_interval(model, l, L, static_cast<std::size_t>(model.k() - 1)) == ref);
        }
      }
    }
  }
}

TEST_CASE("index grows away from 2nl outside the window") {
  Rng rng(404);
  for (int trial = 0; trial < 10; ++trial) {
    auto odd = rpgeo::testing::random_odd_pair(rng, rpgeo::testing::uniform(rng, 1, 3)).rank1;
    REQUIRE(odd.k() <= 2 * odd.n);
    auto even = rpgeo::testing::random_even_pair(rng, rpgeo::testing::uniform(rng, 2, 3)).rank1;
    for (std::int64_t l = 0; l <= 15; ++l) {
      for (std::int64_t m = 1; m <= 2 * (odd.n + 1) * 20; ++m) CHECK(bound_check_odd(odd, l, m));
      for (std::int64_t m = 1; m <= 2 * (even.n + 1) * 20; ++m) CHECK(bound_check_even(even, l, m));
    }
    CHECK_THROWS_AS(bound_check_odd(even, 0, 1), PreconditionError);
    CHECK_THROWS_AS(bound_check_even(odd, 0, 1), PreconditionError);
  }
}

TEST_CASE("aux f agrees with the iterate sums it models") {
  Rank1Model m = rp3_model();
  // m = 16l + 1 makes {m theta_hat_j} depend on x = {m theta} only
  for (std::int64_t l = 1; l <= 30; ++l) {
    std::int64_t it = 16 * l + 1;
    ExactReal x = rpgeo::testing::oracle_frac(ExactReal(it) * m.theta);
    for (std::int64_t L = -3; L <= 3; ++L) {
      ExactReal direct = rpgeo::testing::oracle_frac(ExactReal(it + 2 * L) * m.theta_hat(0));
      CHECK(aux_function_f(m, L, x, 1) == direct);
    }
  }
}

TEST_CASE("boundary values of f near 0 and 1") {
  // K1 = {0, 1}, K0+ = {2, 4}, K0- = {3}
  Rank1Model m;
  m.n = 2;
  m.theta = X("sqrt(3) - 1");
  m.p = {-3, 2, 1, -1, 1};
  m.xi = {R("1/4"), R("1/3"), R("0"), R("0"), R("0")};
  Rational a(BigInt(1), BigInt(1) << 20), b = Rational(1) - a;
  std::int64_t k0_plus = 2, k0_minus = 1;
  Rational sum_p(0), sum_xi = R("1/3");
  for (std::size_t j = 1; j < m.p.size(); ++j) sum_p += Rational(m.p[j]);
  ExactReal fa = aux_function_f(m, 0, ExactReal(a), 0);
  ExactReal fb = aux_function_f(m, 0, ExactReal(b), 0);
  CHECK(fa == ExactReal(Rational(k0_minus) + sum_p * a + sum_xi));
  CHECK(fb == ExactReal(Rational(k0_plus) + sum_p * (b - Rational(1)) + sum_xi));
  Rational gap = Rational(k0_plus - k0_minus) + Rational(m.p[0]) * (Rational(1) + a - b);
  CHECK(abs((fb - fa).rational_part()) == abs(gap));
}

TEST_CASE("aux g on a rank-2 system") {
  IrrationalSystem sys = make_system({{1, 2}, {-1, 0}, {0, -2}, {1, 1}, {-1, -1}}, {R("1/3"), R("1/6"), R("0"), R("0"), R("1/2")});
  auto [a, b] = anisotropic_probes(2, 6);
  CHECK(a[0] == R("1/64"));
  CHECK(a[1] == R("1/4096"));
  CHECK(b[0] == R("63/64"));
  CHECK(b[1] == R("1/4096"));
  auto manual = [&](const std::vector<Rational>& x) {
    Rational s(0);
    for (std::size_t j = 1; j < sys.size(); ++j) {
      Rational lin = sys.xi(j);
      for (std::size_t l = 0; l < 2; ++l) lin += Rational(sys.equations[j].coeffs[l]) * x[l];
      s += lin - Rational(floor(lin));
    }
    return ExactReal(s);
  };
  CHECK(aux_function_g(sys, {}, a) == manual(a));
  CHECK(aux_function_g(sys, {}, b) == manual(b));
  CHECK_THROWS_AS(aux_function_g(sys, {}, {R("1/2")}), PreconditionError);

  // shifts from a basis in two different fields cannot be summed
  std::vector<ExactReal> shifts(sys.size(), X("sqrt(2)"));
  shifts[2] = X("sqrt(3)");
  CHECK_THROWS_AS(aux_function_g(sys, shifts, a), UnsupportedFieldError);
}

TEST_CASE("kronecker scan") {
  auto r = kronecker_scan({X("sqrt(2) - 1")}, {R("40/100")}, {R("43/100")}, 100);
  CHECK(r.found);
  CHECK(r.m == 1);

  std::vector<ExactReal> th = {X("sqrt(2)"), X("sqrt(2)*2/3")};
  std::vector<Rational> lo = {R("1/10"), R("7/10")}, hi = {R("1/8"), R("3/4")};
  r = kronecker_scan(th, lo, hi, 100000);
  REQUIRE(r.found);
  auto inside = [&](std::int64_t m) {
    for (std::size_t i = 0; i < th.size(); ++i) {
      ExactReal x = rpgeo::testing::oracle_frac(ExactReal(m) * th[i]);
      if (!(ExactReal(lo[i]) < x && x < ExactReal(hi[i]))) return false;
    }
    return true;
  };
  CHECK(inside(r.m));
  for (std::int64_t m = 1; m < r.m; ++m) CHECK_FALSE(inside(m));

  auto miss = kronecker_scan(th, lo, hi, r.m - 1);
  CHECK_FALSE(miss.found);
  CHECK(miss.scanned == r.m - 1);
  CHECK_THROWS_AS(kronecker_scan(th, lo, {R("1")}, 10), PreconditionError);
}

TEST_CASE("orbit scan starts at the requested index") {
  ExactReal w = X("sqrt(5)");
  auto r = orbit_scan(w, X("1/7"), X("0"), X("1/100"), 10, 100000);
  REQUIRE(r.found);
  CHECK(r.m >= 10);
  ExactReal x = rpgeo::testing::oracle_frac(ExactReal(r.m) * w + X("1/7"));
  CHECK(x < X("1/100"));
}

TEST_CASE("obstruction scenario on the RP^3 model") {
  ObstructionReport rep = obstruction_scenario(rp3_model(), 100000);
  CHECK(rep.edn == 1);
  CHECK(rep.witness_eta == Rational(0));
  CHECK(rep.q_bar == 4);
  CHECK(rep.N_bar == 9);
  CHECK(rep.order == std::vector<std::size_t>{1, 0});
  CHECK(rep.shifted.xi[0] == R("1/4"));
  CHECK(rep.i1 != rep.i2);
  CHECK(rep.routes_agree);
  CHECK(rep.rows1.size() == 19);
  CHECK(rep.x1 < ExactReal(rep.a));
  CHECK(rep.x2 > ExactReal(rep.b));
  CHECK(rep.clearance1.sign() > 0);
  CHECK(rep.clearance2.sign() > 0);
  CHECK(rep.betti_h1 == rep.betti_h2);
  CHECK(rep.count2 == rep.count1 + 1);
  CHECK(rep.conflict());
  CHECK(rep.h2 == index_direct(rep.shifted, rep.m2));
}

TEST_CASE("obstruction scenario on random models of both parities") {
  Rng rng(505);
  int played = 0;
  for (int trial = 0; trial < 12; ++trial) {
    Rank1Model model = trial % 2 == 0 ? rpgeo::testing::random_odd_pair(rng, rpgeo::testing::uniform(rng, 1, 2)).rank1
                                      : rpgeo::testing::random_even_pair(rng, 2).rank1;
    if (!check_rank1(model.system()).ok()) continue;
    if (effective_difference_number(model.system()).value < 1) continue;
    ObstructionReport rep;
    try {
      rep = obstruction_scenario(model, 200000);
    } catch (const BudgetExhausted&) {
      continue;
    }
    ++played;
    CHECK(rep.routes_agree);
    CHECK(rep.conflict());
  }
  CHECK(played >= 3);
}

TEST_CASE("obstruction scenario failure modes") {
  Rank1Model m = rp3_model();
  m.p = {2, -1, -1};
  m.xi = {R("0"), R("0"), R("1/2")};
  CHECK_THROWS_AS(obstruction_scenario(m, 1000), EdnError);

  m = rp3_model();
  m.xi[1] = R("1/2");
  CHECK_THROWS_AS(obstruction_scenario(m, 1000), PreconditionError);

  m = rp3_model();
  m.xi[1] = R("1/3");  // mean condition broken
  CHECK_THROWS_AS(obstruction_scenario(m, 1000), PreconditionError);

  CHECK_THROWS_AS(obstruction_scenario(rp3_model(), 1), BudgetExhausted);
}
