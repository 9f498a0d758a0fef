#include "rpgeo/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

#include "gen.hpp"
#include "rpgeo/error.hpp"
#include "rpgeo/index_iteration.hpp"
#include "rpgeo/interval_engine.hpp"
#include "rpgeo/irrational_systems.hpp"
#include "rpgeo/loop_homology.hpp"

namespace rpgeo {

namespace {

using testing::Rng;
using testing::uniform;

Rational Q(std::int64_t a, std::int64_t b) { return Rational(BigInt(a), BigInt(b)); }

// Running tally: first failure wins the detail line.
struct Tally {
  std::int64_t checks = 0;
  std::int64_t failures = 0;
  std::string first;
  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first = what();
  }
  std::string detail(const std::string& summary) const {
    std::ostringstream os;
    if (failures == 0) {
      os << summary << " (" << checks << " checks)";
    } else {
      os << failures << " of " << checks << " checks failed; first: " << first;
    }
    return os.str();
  }
};

using Multiset = std::vector<std::pair<std::int64_t, Rational>>;

Multiset as_multiset(const IrrationalSystem& s) {
  Multiset out;
  for (const auto& e : s.equations) out.emplace_back(e.coeffs[0], e.offset);
  std::sort(out.begin(), out.end());
  return out;
}

CriterionResult worked_example() {
  CriterionResult r;
  auto t0 = std::chrono::steady_clock::now();
  IrrationalSystem sys = make_rank1({-1, -2, 3}, {Q(5, 6), Q(1, 3), Q(1, 2)});
  const std::vector<IrrationalSystem> expected = {
      make_rank1({-1, -2, 3}, {0, Q(2, 3), 0}),
      make_rank1({-1, -2, 1, 1, 1}, {0, Q(2, 3), 0, Q(1, 3), Q(2, 3)}),
      make_rank1({-1, -2, 1, 1, 1}, {Q(2, 3), 0, Q(1, 3), Q(2, 3), 0}),
      make_rank1({-1, -1, -1, 1, 1, 1}, {Q(2, 3), 0, Q(1, 2), Q(1, 3), Q(2, 3), 0}),
      make_rank1({-1, 1}, {Q(1, 2), Q(2, 3)}),
  };
  Tally t;
  Reduction red = reduce(sys);
  t.expect(red.trace.size() == expected.size(), [&] { return "trace has " + std::to_string(red.trace.size()) + " steps"; });
  for (std::size_t i = 0; i < std::min(red.trace.size(), expected.size()); ++i) {
    t.expect(as_multiset(red.trace[i].system) == as_multiset(expected[i]),
             [&] { return "step " + std::to_string(i + 1) + " differs"; });
  }
  EffectiveDifference edn = effective_difference_number(sys);
  t.expect(edn.value == 1, [&] { return "EDN " + std::to_string(edn.value); });
  t.expect(classify(sys, edn.witness).absolute_difference() == 1,
           [&] { return "witness " + edn.witness.str() + " does not attain 1"; });
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  t.expect(r.seconds < 1.0, [&] { return "took " + std::to_string(r.seconds) + " s"; });
  r.passed = t.failures == 0;
  r.detail = t.detail("EDN 1 at eta = " + edn.witness.str() + ", 5 trace steps match");
  return r;
}

CriterionResult counterexample() {
  CriterionResult r;
  IrrationalSystem sys = make_rank1({-1, -1, 2}, {Q(1, 2), 0, 0});
  Tally t;
  auto edn = effective_difference_number(sys);
  t.expect(edn.value == 0, [&] { return "EDN " + std::to_string(edn.value); });
  t.expect(testing::oracle_grid_max(sys) == 0, [] { return "grid oracle finds a non-zero difference"; });
  Rank1Conditions c = check_rank1(sys);
  t.expect(c.nonzero_coefficients && c.zero_sum, [] { return "coefficient conditions should hold"; });
  t.expect(!c.offset_sum_ok, [] { return "offset sum condition not reported"; });
  r.passed = t.failures == 0;
  r.detail = t.detail("EDN 0, offset sum " + c.offset_sum.str() + " rejected");
  return r;
}

CriterionResult edn_property() {
  CriterionResult r;
  auto t0 = std::chrono::steady_clock::now();
  Rng rng(3003);
  Tally t;
  for (int i = 0; i < 200; ++i) {
    IrrationalSystem s = testing::random_rank1_system(rng, 6);
    auto edn = effective_difference_number(s);
    t.expect(edn.value >= 1, [&] { return "system " + std::to_string(i) + " has EDN 0"; });
    if (i < 20) {
      std::int64_t grid = testing::oracle_grid_max(s);
      t.expect(grid == edn.value,
               [&] { return "system " + std::to_string(i) + ": grid " + std::to_string(grid) + " vs " + std::to_string(edn.value); });
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  t.expect(r.seconds < 30.0, [&] { return "took " + std::to_string(r.seconds) + " s"; });
  r.passed = t.failures == 0;
  r.detail = t.detail("200 systems, 20 grid-checked");
  return r;
}

// i(gamma^m) for the orientable formula, evaluated with the oracle ceiling.
std::int64_t oracle_index(const NormalForm& nf, std::int64_t i1, std::int64_t m) {
  std::int64_t v = m * (i1 + nf.p_minus + nf.p_zero - nf.r()) - (nf.p_minus + nf.p_zero + nf.r()) -
                   (m % 2 == 0 ? nf.q_zero + nf.q_plus : 0) - 2 * nf.r_star();
  for (const auto& th : nf.thetas) v += 2 * static_cast<std::int64_t>(testing::oracle_ceil(ExactReal(m) * th));
  for (const auto& a : nf.alphas) {
    ExactReal x = ExactReal(m) * a;
    v += 2 * static_cast<std::int64_t>(testing::oracle_ceil(x) - testing::oracle_floor(x));
  }
  return v;
}

CriterionResult bott_halving() {
  CriterionResult r;
  Rng rng(4004);
  Tally t;
  for (int i = 0; i < 100; ++i) {
    NormalForm nf = testing::random_normal_form(rng, uniform(rng, 1, 6), testing::random_radicand(rng));
    std::int64_t i1 = uniform(rng, -3, 8);
    std::int64_t nu1 = nf.eigen_one_nullity();
    t.expect(splitting_consistency(nf, i1, index_minus1(nf, i1, 1)), [&] { return "splitting fails on model " + std::to_string(i); });
    for (std::int64_t m = 1; m <= 50; ++m) {
      std::int64_t lhs = index_minus1(nf, i1, m);
      t.expect(lhs == oracle_index(nf, i1, 2 * m) - oracle_index(nf, i1, m),
               [&] { return "index, model " + std::to_string(i) + ", m = " + std::to_string(m); });
      t.expect(lhs == index_minus1_closed_form(nf, i1, m),
               [&] { return "closed-form index, model " + std::to_string(i) + ", m = " + std::to_string(m); });
      t.expect(nullity_minus1(nf, nu1, m) == nullity_minus1_closed_form(nf, m),
               [&] { return "nullity, model " + std::to_string(i) + ", m = " + std::to_string(m); });
    }
  }
  r.passed = t.failures == 0;
  r.detail = t.detail("100 normal forms, m <= 50");
  return r;
}

CriterionResult betti_tables() {
  CriterionResult r;
  Tally t;
  for (std::int64_t n : {2, 3, 4, 5, 7, 8}) {
    auto series = betti_series_oracle(n, 200);
    for (std::int64_t q = 0; q <= 200; ++q) {
      t.expect(series.at(static_cast<std::size_t>(q)) == betti(n, q),
               [&] { return "n = " + std::to_string(n) + ", q = " + std::to_string(q); });
    }
  }
  const std::pair<std::int64_t, Rational> averages[] = {{3, 1}, {2, 1}, {4, Q(2, 3)}, {5, Q(3, 4)}};
  for (const auto& [n, expect] : averages) {
    t.expect(average_betti(n) == expect, [&] { return "average for n = " + std::to_string(n) + " is " + average_betti(n).str(); });
    Rational partial = partial_alternating_average(n, 200);
    t.expect(abs(partial - expect) <= Q(5, 200),
             [&] { return "partial average for n = " + std::to_string(n) + " is " + partial.str(); });
  }
  r.passed = t.failures == 0;
  r.detail = t.detail("series to degree 200, averages 1, 1, 2/3, 3/4");
  return r;
}

Rank1Model random_model(Rng& rng, int parity) {
  return parity == 0 ? testing::random_odd_pair(rng, uniform(rng, 1, 3)).rank1
                     : testing::random_even_pair(rng, uniform(rng, 2, 3)).rank1;
}

CriterionResult interval_equivalence() {
  CriterionResult r;
  Rng rng(6006);
  Tally t;
  for (int parity = 0; parity < 2; ++parity) {
    for (int i = 0; i < 20; ++i) {
      Rank1Model model = random_model(rng, parity);
      for (std::int64_t l = 0; l <= 50; ++l) {
        for (std::int64_t L = -20; L <= 20; ++L) {
          std::int64_t m = 2 * (model.n + 1) * l + 2 * L + 1;
          if (m < 1) continue;
          std::int64_t direct = index_direct(model, m);
          std::int64_t via = index_via_interval(model, l, L);
          t.expect(direct == via, [&] {
            return std::string(parity ? "even" : "odd") + " model " + std::to_string(i) + ", l = " + std::to_string(l) +
                   ", L = " + std::to_string(L);
          });
        }
      }
    }
  }
  r.passed = t.failures == 0;
  r.detail = t.detail("20 models per parity, l <= 50, |L| <= 20");
  return r;
}

CriterionResult bound_checks() {
  CriterionResult r;
  Rng rng(7007);
  Tally t;
  for (int parity = 0; parity < 2; ++parity) {
    for (int i = 0; i < 20; ++i) {
      Rank1Model model = random_model(rng, parity);
      for (std::int64_t l = 0; l <= 30; ++l) {
        for (std::int64_t m = 1; m <= 500; ++m) {
          bool ok = parity == 0 ? bound_check_odd(model, l, m) : bound_check_even(model, l, m);
          t.expect(ok, [&] {
            return std::string(parity ? "even" : "odd") + " model " + std::to_string(i) + ", l = " + std::to_string(l) +
                   ", m = " + std::to_string(m);
          });
        }
      }
    }
  }
  r.passed = t.failures == 0;
  r.detail = t.detail("20 models each, l <= 30, m <= 500");
  return r;
}

// Moves the first angle a little towards 1/2 so the model stays valid.
GeodesicModel perturbed(GeodesicModel g) {
  ExactReal& th = g.nf.thetas.front();
  ExactReal eps(Q(1, 1000));
  th = th > ExactReal(Q(1, 2)) ? th - eps : th + eps;
  return g;
}

CriterionResult resonance() {
  CriterionResult r;
  Rng rng(8008);
  Tally t;
  auto check = [&](const GeodesicModel& g, const std::string& label) {
    std::int64_t d = g.dim;
    GeodesicModel full = with_default_type_numbers(g);
    t.expect(full.type_number(1, 0) == 1 && analytical_period(full) == 2, [&] { return label + ": not concentrated"; });
    auto bumpy = resonance_check_bumpy({g}, d);
    auto general = resonance_check({full}, d);
    t.expect(bumpy.holds(), [&] { return label + ": bumpy residual " + bumpy.residual.str(); });
    t.expect(general.holds(), [&] { return label + ": full residual " + general.residual.str(); });
    GeodesicModel bad = perturbed(g);
    t.expect(!resonance_check_bumpy({bad}, d).holds() && !resonance_check({with_default_type_numbers(bad)}, d).holds(),
             [&] { return label + ": perturbed model still balances"; });
  };
  for (std::int64_t n : {1, 2, 3}) {
    auto pm = testing::random_odd_pair(rng, n);
    t.expect(mean_index(pm.geodesic) == ExactReal(Q(2 * n, 2 * n + 2)), [&] { return "mean index off for d = " + std::to_string(2 * n + 1); });
    check(pm.geodesic, "d = " + std::to_string(2 * n + 1));
  }
  // even d: the balancing mean index is (d-1)/d
  for (std::int64_t n : {2, 3}) {
    auto pm = testing::random_even_pair(rng, n);
    check(pm.geodesic, "d = " + std::to_string(2 * n));
  }
  r.passed = t.failures == 0;
  r.detail = t.detail("d = 3, 5, 7 with mean (d-1)/(d+1); d = 4, 6 with (d-1)/d");
  return r;
}

CriterionResult obstruction() {
  CriterionResult r;
  Rank1Model m;
  m.n = 1;
  m.theta = ExactReal::parse("sqrt(2) - 1");
  m.p = {1, -1};
  m.xi = {0, Q(1, 4)};
  ObstructionReport rep = obstruction_scenario(m, 100000);
  Tally t;
  t.expect(rep.routes_agree, [] { return "index routes disagree"; });
  t.expect(rep.conflict(), [&] {
    return "no conflict: counts " + std::to_string(rep.count1) + ", " + std::to_string(rep.count2);
  });
  r.passed = t.failures == 0;
  std::ostringstream os;
  os << "(l1, l2) = (" << rep.l1 << ", " << rep.l2 << "), degrees " << rep.h1 << " / " << rep.h2 << " carry "
     << rep.count1 << " / " << rep.count2 << " iterates against Betti " << rep.betti_h1;
  r.detail = t.detail(os.str());
  return r;
}

CriterionResult exact_core() {
  CriterionResult r;
  Rng rng(10010);
  Tally t;
  for (int i = 0; i < 2000; ++i) {
    ExactReal x = i < 1000 ? ExactReal(testing::random_rational(rng, 500, 40))
                           : testing::random_quadratic(rng, testing::random_radicand(rng));
    auto [c, p] = half_identities_check(x);
    t.expect(c && p, [&] { return "half identities fail at " + x.str(); });
    BigInt f = floor(x), e = ceil(x);
    t.expect(f == testing::oracle_floor(x), [&] { return "floor at " + x.str(); });
    t.expect(e == testing::oracle_ceil(x), [&] { return "ceiling at " + x.str(); });
    t.expect(phi(x) == static_cast<int>(e - f), [&] { return "phi at " + x.str(); });
    ExactReal fr = frac(x);
    t.expect(fr.sign() >= 0 && fr < ExactReal(1) && fr + ExactReal(Rational(f)) == x, [&] { return "frac at " + x.str(); });
    t.expect(ExactReal(Rational(e)) >= x && ExactReal(Rational(e - 1)) < x, [&] { return "E bracket at " + x.str(); });
  }
  r.passed = t.failures == 0;
  r.detail = t.detail("1000 rationals, 1000 quadratic irrationals");
  return r;
}

}  // namespace

CriterionResult run_criterion(int id) {
  static const char* names[kCriteria] = {"worked example: reduction trace and EDN",
                                         "counterexample: EDN 0 and offset-sum violation",
                                         "EDN >= 1 on random valid systems",
                                         "Bott halving for the -1 index and nullity",
                                         "Betti tables and average Betti numbers",
                                         "interval route equals the direct index formula",
                                         "index bound away from the window",
                                         "resonance identity for a single bumpy geodesic",
                                         "obstruction scenario on RP^3",
                                         "exact floor, ceiling and half identities"};
  static const std::function<CriterionResult()> table[kCriteria] = {
      worked_example, counterexample, edn_property, bott_halving, betti_tables,
      interval_equivalence, bound_checks, resonance, obstruction, exact_core};
  if (id < 1 || id > kCriteria) throw PreconditionError("no criterion " + std::to_string(id));
  auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = table[id - 1]();
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.id = id;
  r.name = names[id - 1];
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<CriterionResult> run_acceptance() {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriteria; ++id) out.push_back(run_criterion(id));
  return out;
}

}  // namespace rpgeo
