#include "doctest.h"

#include <map>
#include <random>

#include "../support/gen.hpp"
#include "rpgeo/error.hpp"
#include "rpgeo/irrational_systems.hpp"

using namespace rpgeo;

namespace {
Rational Q(std::int64_t a, std::int64_t b) { return Rational(BigInt(a), BigInt(b)); }

IrrationalSystem example() { return make_rank1({-1, -2, 3}, {Q(5, 6), Q(1, 3), Q(1, 2)}); }

std::vector<Rational> offsets(const IrrationalSystem& s) {
  std::vector<Rational> out;
  for (const auto& e : s.equations) out.push_back(e.offset);
  return out;
}

using rpgeo::testing::oracle_grid_max;

IrrationalSystem random_valid(std::mt19937_64& rng, std::int64_t max_k = 6) {
  return rpgeo::testing::random_rank1_system(rng, max_k);
}
}  // namespace

TEST_CASE("rank") {
  CHECK(rank(example()) == 1);
  IrrationalSystem empty;
  CHECK(rank(empty) == 0);
  CHECK(rank(make_system({{1, 0}, {0, 1}, {-1, -1}}, {Q(0, 1), Q(0, 1), Q(0, 1)})) == 2);
  CHECK(rank(make_system({{2, 4}, {1, 2}, {-3, -6}}, {Q(0, 1), Q(0, 1), Q(0, 1)})) == 1);
  CHECK(rank(make_system({{0, 0}, {0, 0}}, {Q(0, 1), Q(0, 1)})) == 0);
}

TEST_CASE("normalize representation") {
  auto same = normalize_representation({{Rational(1)}, {Rational(-1)}}, {Q(1, 3), Q(1, 3)});
  CHECK(same.system == make_rank1({1, -1}, {Q(1, 3), Q(1, 3)}));
  auto halves = normalize_representation({{Q(1, 2)}, {Q(-1, 2)}, {Rational(0)}}, {Rational(0), Rational(0), Q(5, 4)});
  CHECK(halves.system.equations[0].coeffs[0] == 1);
  CHECK(halves.system.equations[1].coeffs[0] == -1);
  CHECK(halves.system.equations[2].coeffs[0] == 0);
  CHECK(halves.column_scale[0] == 2);
  CHECK(halves.system.xi(2) == Q(1, 4));
  CHECK(halves.offset_shift[2] == 1);
}

TEST_CASE("rank-1 conditions") {
  CHECK(check_rank1(example()).ok());
  auto balanced = make_rank1({-1, -1, 2}, {Q(1, 2), Rational(0), Rational(0)});
  auto c = check_rank1(balanced);
  CHECK(c.zero_sum);
  CHECK_FALSE(c.offset_sum_ok);
  CHECK(c.offset_sum == Q(1, 2));
  CHECK_FALSE(check_rank1(make_rank1({1, 0, -1}, {Q(1, 3), Q(0, 1), Q(0, 1)})).ok());
  CHECK_FALSE(check_rank1(make_rank1({1, 1}, {Q(1, 3), Q(0, 1)})).ok());
}

TEST_CASE("eta action") {
  auto s = example();
  CHECK(eta_action(s, Rational(0)) == s);
  CHECK(offsets(eta_action(s, Q(1, 6))) == std::vector<Rational>{Rational(0), Q(2, 3), Rational(0)});
  CHECK(offsets(eta_action(s, Q(-1, 6))) == std::vector<Rational>{Q(2, 3), Rational(0), Rational(0)});

  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; ++i) {
    auto sys = random_valid(rng);
    Rational a = Q(std::uniform_int_distribution<int>(-30, 30)(rng), 7);
    Rational b = Q(std::uniform_int_distribution<int>(-30, 30)(rng), 11);
    CHECK(eta_action(eta_action(sys, a), b) == eta_action(sys, a + b));
    CHECK(check_rank1(eta_action(sys, a)).offset_sum == check_rank1(sys).offset_sum);
  }
}

TEST_CASE("classify") {
  auto s = example();
  auto c0 = classify(s, Rational(0));
  CHECK(c0.k0_plus.empty());
  CHECK(c0.k0_minus.empty());
  CHECK(c0.k1.size() == 3);

  auto c = classify(s, Q(1, 6));
  CHECK(c.k0_minus == std::vector<std::size_t>{0});
  CHECK(c.k0_plus == std::vector<std::size_t>{2});
  CHECK(c.absolute_difference() == 0);

  auto t = make_rank1({1, -1}, {Q(1, 3), Q(1, 3)});
  auto ct = classify(t, Q(1, 3));
  CHECK(ct.k0_plus == std::vector<std::size_t>{0});
  CHECK(ct.k0_minus.empty());
}

TEST_CASE("candidate etas") {
  auto t = make_rank1({1, -1}, {Q(1, 3), Q(1, 3)});
  CHECK(candidate_etas(t) == std::vector<Rational>{Q(1, 3), Q(2, 3)});
  auto c = candidate_etas(example());
  // 5/6 from the first equation; 1/3, 5/6 from the second; 1/6, 1/2, 5/6 from the third.
  CHECK(c == std::vector<Rational>{Q(1, 6), Q(1, 3), Q(1, 2), Q(5, 6)});
  IrrationalSystem empty;
  CHECK(candidate_etas(empty).empty());
}

TEST_CASE("effective difference number") {
  auto e = effective_difference_number(example());
  CHECK(e.value == 1);
  CHECK(classify(example(), e.witness).absolute_difference() == 1);

  auto balanced = make_rank1({-1, -1, 2}, {Q(1, 2), Rational(0), Rational(0)});
  CHECK(effective_difference_number(balanced).value == 0);
  CHECK(oracle_grid_max(balanced) == 0);

  auto t = make_rank1({1, -1}, {Q(1, 3), Q(1, 3)});
  CHECK(effective_difference_number(t).value == 1);
  CHECK(oracle_grid_max(t) == 1);
}

TEST_CASE("expand equation") {
  auto three = make_rank1({3}, {Rational(0)});
  CHECK(expand_equation(three, 0) == make_rank1({1, 1, 1}, {Rational(0), Q(1, 3), Q(2, 3)}));
  auto two = make_rank1({-2}, {Rational(0)});
  CHECK(expand_equation(two, 0) == make_rank1({-1, -1}, {Rational(0), Q(1, 2)}));
  auto one = make_rank1({1}, {Rational(0)});
  CHECK(expand_equation(one, 0) == one);
  CHECK_THROWS_AS(expand_equation(make_rank1({2}, {Q(1, 3)}), 0), PreconditionError);
}

TEST_CASE("cutoff pairs") {
  auto d = make_rank1({-1, -1, -1, 1, 1, 1}, {Q(2, 3), Rational(0), Q(1, 2), Q(1, 3), Q(2, 3), Rational(0)});
  CHECK(cutoff_pairs(d) == make_rank1({-1, 1}, {Q(1, 2), Q(2, 3)}));
  auto none = make_rank1({1, -1}, {Q(1, 3), Q(1, 3)});
  CHECK(cutoff_pairs(none) == none);
  auto all = make_rank1({1, -1}, {Q(1, 3), Q(2, 3)});
  CHECK_THROWS_AS(cutoff_pairs(all), PreconditionError);
}

TEST_CASE("reduction trace of the worked example") {
  auto red = reduce(example());
  REQUIRE(red.trace.size() == 5);
  CHECK(red.trace[0].system == make_rank1({-1, -2, 3}, {Rational(0), Q(2, 3), Rational(0)}));
  CHECK(red.trace[1].system == make_rank1({-1, -2, 1, 1, 1}, {Rational(0), Q(2, 3), Rational(0), Q(1, 3), Q(2, 3)}));
  CHECK(red.trace[2].system == make_rank1({-1, -2, 1, 1, 1}, {Q(2, 3), Rational(0), Q(1, 3), Q(2, 3), Rational(0)}));
  CHECK(red.trace[3].system ==
        make_rank1({-1, -1, -1, 1, 1, 1}, {Q(2, 3), Rational(0), Q(1, 2), Q(1, 3), Q(2, 3), Rational(0)}));
  CHECK(red.trace[4].system == make_rank1({-1, 1}, {Q(1, 2), Q(2, 3)}));
  CHECK(red.result.equation_str(0, "beta") == "-beta + 1/2");
  CHECK(red.result.equation_str(1, "beta") == "beta + 2/3");
  CHECK(red.total_eta == Q(5, 6));

  auto final_edn = effective_difference_number(red.result);
  CHECK(final_edn.value == 1);
  Rational back = frac(red.total_eta + final_edn.witness);
  CHECK(classify(example(), back).absolute_difference() == 1);
  // gamma = beta + 2/3 puts the result in the form {-gamma + 1/6, gamma}.
  auto f = eta_action(red.result, Q(2, 3));
  CHECK(f == make_rank1({-1, 1}, {Q(1, 6), Rational(0)}));
}

TEST_CASE("reduction fixed point and preconditions") {
  auto unit = make_rank1({1, -1}, {Q(1, 3), Q(1, 3)});
  auto red = reduce(unit);
  CHECK(red.trace.empty());
  CHECK(red.result == unit);
  CHECK_THROWS_AS(reduce(make_rank1({-1, -1, 2}, {Q(1, 2), Rational(0), Rational(0)})), PreconditionError);

  auto two = make_rank1({2, -2}, {Q(1, 4), Q(1, 2)});
  auto r2 = reduce(two);
  for (std::size_t j = 0; j < r2.result.size(); ++j) CHECK(std::llabs(r2.result.p(j)) == 1);
  CHECK(effective_difference_number(r2.result).value == effective_difference_number(two).value);
}

TEST_CASE("equivalence transformations keep the effective difference number") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    auto s = random_valid(rng);
    std::int64_t edn = effective_difference_number(s).value;
    CHECK(edn >= 1);
    Rational eta = Q(std::uniform_int_distribution<int>(0, 59)(rng), 60);
    CHECK(effective_difference_number(eta_action(s, eta)).value == edn);
    auto red = reduce(s);
    CHECK(effective_difference_number(red.result).value == edn);
    CHECK(check_rank1(red.result).ok());
    for (const auto& step : red.trace) CHECK(effective_difference_number(step.system).value == edn);
    auto w = effective_difference_number(red.result).witness;
    CHECK(classify(s, frac(red.total_eta + w)).absolute_difference() == edn);
  }
}

TEST_CASE("candidate set is complete against a dense grid") {
  std::mt19937_64 rng(43);
  int checked = 0;
  while (checked < 50) {
    auto s = random_valid(rng, 5);
    BigInt D = 1;
    for (const auto& e : s.equations) D = lcm(D, BigInt(std::llabs(e.coeffs[0])) * e.offset.den());
    if (D > 20000) continue;
    CHECK(oracle_grid_max(s) == effective_difference_number(s).value);
    ++checked;
  }
}

TEST_CASE("collapse rank") {
  auto simple = make_system({{1, 2}, {-1, -2}}, {Q(1, 3), Q(1, 3)});
  auto c0 = collapse_rank(simple);
  CHECK(c0.s == std::vector<std::int64_t>{0});
  CHECK(c0.p_tilde == std::vector<std::int64_t>{1, -1});

  auto zeros = make_system({{0, 1}, {1, -1}, {-1, 0}}, {Q(1, 5), Q(1, 5), Q(1, 5)});
  auto c = collapse_rank(zeros);
  CHECK(c.s == std::vector<std::int64_t>{2});
  CHECK(c.p_tilde == std::vector<std::int64_t>{2, -1, -1});
  CHECK(c.system.xi(0) == Q(1, 5));

  auto single = make_rank1({1, -1}, {Q(1, 3), Q(1, 3)});
  auto c1 = collapse_rank(single);
  CHECK(c1.s.empty());
  CHECK(c1.system == single);

  CHECK_THROWS_AS(collapse_rank(make_system({{0, 0}, {1, 1}, {-1, -1}}, {Q(1, 5), Q(1, 5), Q(1, 5)})),
                  PreconditionError);

  std::mt19937_64 rng(44);
  for (int i = 0; i < 100; ++i) {
    std::size_t r = std::uniform_int_distribution<std::size_t>(2, 4)(rng);
    std::size_t k = std::uniform_int_distribution<std::size_t>(2, 6)(rng);
    std::vector<std::vector<std::int64_t>> P(k, std::vector<std::int64_t>(r));
    for (std::size_t l = 0; l < r; ++l) {
      std::int64_t sum = 0;
      for (std::size_t j = 0; j + 1 < k; ++j) {
        P[j][l] = std::uniform_int_distribution<std::int64_t>(-3, 3)(rng);
        sum += P[j][l];
      }
      P[k - 1][l] = -sum;
    }
    bool zero_row = false;
    for (const auto& row : P) zero_row = zero_row || std::all_of(row.begin(), row.end(), [](auto v) { return v == 0; });
    if (zero_row) continue;
    auto out = collapse_rank(make_system(P, std::vector<Rational>(k, Q(1, 7))));
    std::int64_t total = 0;
    for (auto v : out.p_tilde) {
      CHECK(v != 0);
      total += v;
    }
    CHECK(total == 0);
  }
}
