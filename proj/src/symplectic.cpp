#include "rpgeo/symplectic.hpp"

#include <numeric>
#include <set>
#include <sstream>

#include "rpgeo/error.hpp"

namespace rpgeo {

namespace {

const Rational kHalf(1, 2);

std::string angle_name(const char* list, std::size_t j) {
  return std::string(list) + "[" + std::to_string(j) + "]";
}

// Checks a single angle lies in (0,1) \ {1/2}. Returns false (and records the
// reason) when it does not or when it lives in a different field.
bool check_angle(const ExactReal& a, const std::string& name, std::int64_t& field,
                 ValidationReport& report) {
  if (!a.is_rational()) {
    if (field == 0) {
      field = a.radicand();
    } else if (field != a.radicand()) {
      report.violations.push_back(name + " uses sqrt(" + std::to_string(a.radicand()) +
                                  ") but another angle uses sqrt(" + std::to_string(field) + ")");
      return false;
    }
  }
  if (a.sign() <= 0 || a >= ExactReal(1)) {
    report.violations.push_back(name + " = " + a.str() + " is outside (0,1)");
    return false;
  }
  if (a == ExactReal(kHalf)) {
    report.violations.push_back(name + " equals 1/2");
    return false;
  }
  return true;
}

void for_each_angle(const NormalForm& nf, const auto& fn) {
  for (const auto& a : nf.thetas) fn(a);
  for (const auto& a : nf.alphas) fn(a);
  for (const auto& a : nf.betas) fn(a);
}

}  // namespace

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i];
  }
  return os.str();
}

ValidationReport validate(const NormalForm& nf) {
  ValidationReport report;
  const std::pair<const char*, std::int64_t> counts[] = {
      {"p_minus", nf.p_minus}, {"p_zero", nf.p_zero}, {"p_plus", nf.p_plus},
      {"q_minus", nf.q_minus}, {"q_zero", nf.q_zero}, {"q_plus", nf.q_plus},
      {"h", nf.h},             {"r_prime", nf.r_prime}, {"half_dim", nf.half_dim}};
  for (const auto& [name, value] : counts) {
    if (value < 0) report.violations.push_back(std::string(name) + " is negative");
  }

  std::int64_t used = nf.p_minus + nf.p_zero + nf.p_plus + nf.q_minus + nf.q_zero + nf.q_plus +
                      nf.r() + nf.h + 2 * (nf.r_star() + nf.r_zero());
  if (used != nf.half_dim) {
    report.violations.push_back("dimension bookkeeping: blocks use " + std::to_string(used) +
                                " but half_dim is " + std::to_string(nf.half_dim));
  }

  std::int64_t field = 0;
  for (std::size_t j = 0; j < nf.thetas.size(); ++j) {
    const ExactReal& t = nf.thetas[j];
    if (!check_angle(t, angle_name("thetas", j), field, report)) continue;
    bool upper = t > ExactReal(kHalf);
    bool expected_upper = static_cast<std::int64_t>(j) < nf.r_prime;
    if (upper != expected_upper) {
      report.violations.push_back(angle_name("thetas", j) + " = " + t.str() +
                                  (expected_upper ? " should exceed 1/2" : " should be below 1/2") +
                                  " (r_prime = " + std::to_string(nf.r_prime) + ")");
    }
  }
  if (nf.r_prime > nf.r()) {
    report.violations.push_back("r_prime exceeds the number of thetas");
  }
  for (std::size_t j = 0; j < nf.alphas.size(); ++j) {
    check_angle(nf.alphas[j], angle_name("alphas", j), field, report);
  }
  for (std::size_t j = 0; j < nf.betas.size(); ++j) {
    check_angle(nf.betas[j], angle_name("betas", j), field, report);
  }
  return report;
}

void require_valid(const NormalForm& nf) {
  ValidationReport report = validate(nf);
  if (!report.ok()) throw PreconditionError("invalid normal form: " + report.summary());
}

bool splitting_consistency(const NormalForm& nf, std::int64_t i1, std::int64_t i_minus1) {
  return i1 == index_from_minus1(nf, i_minus1);
}

std::int64_t index_from_minus1(const NormalForm& nf, std::int64_t i_minus1) {
  return i_minus1 + (nf.q_zero + nf.q_plus) + (nf.r() - 2 * nf.r_prime) - (nf.p_zero + nf.p_minus);
}

std::int64_t GeodesicModel::type_number(std::int64_t iterate, std::int64_t degree) const {
  auto it = type_numbers.find({iterate, degree});
  return it == type_numbers.end() ? 0 : it->second;
}

std::int64_t analytical_period(const GeodesicModel& g) {
  BigInt denominators = 1;
  for_each_angle(g.nf, [&](const ExactReal& a) {
    if (a.is_rational()) denominators = lcm(denominators, a.rational_part().den());
  });
  return to_int64(lcm(denominators, BigInt(2)));
}

bool is_bumpy(const GeodesicModel& g) {
  const NormalForm& nf = g.nf;
  if (nf.eigen_one_nullity() != 0 || nf.eigen_minus_one_nullity() != 0) return false;
  bool all_irrational = true;
  for_each_angle(nf, [&](const ExactReal& a) { all_irrational = all_irrational && !a.is_rational(); });
  return all_irrational && g.null1 == 0;
}

ValidationReport validate(const GeodesicModel& g) {
  ValidationReport report = validate(g.nf);
  if (g.dim < 2) report.violations.push_back("dim must be at least 2");
  if (g.nf.half_dim != g.dim - 1) {
    report.violations.push_back("half_dim " + std::to_string(g.nf.half_dim) +
                                " does not match dim - 1 = " + std::to_string(g.dim - 1));
  }

  std::int64_t expected_null = 0;
  if (g.orientable) {
    expected_null = g.nf.eigen_one_nullity();
  } else {
    expected_null = g.nf.eigen_minus_one_nullity() - (g.dim % 2 != 0 ? 1 : 0);
  }
  if (g.null1 != expected_null) {
    report.violations.push_back("null1 = " + std::to_string(g.null1) +
                                " is inconsistent with the eigenvalue block count " +
                                std::to_string(expected_null));
  }
  if (g.null1 < 0) report.violations.push_back("null1 is negative");

  if (!report.ok()) return report;

  std::int64_t period = analytical_period(g);
  if (g.period && *g.period != period) {
    report.violations.push_back("supplied period " + std::to_string(*g.period) +
                                " differs from the analytical period " + std::to_string(period));
  }
  for (const auto& [key, value] : g.type_numbers) {
    auto [m, l] = key;
    if (m < 1 || m % 2 == 0 || m > period - 1) {
      report.violations.push_back("type number iterate " + std::to_string(m) +
                                  " is not an odd iterate below the period " + std::to_string(period));
    }
    if (l < 0 || l > 2 * g.dim - 2) {
      report.violations.push_back("type number degree " + std::to_string(l) + " outside [0, " +
                                  std::to_string(2 * g.dim - 2) + "]");
    }
    if (value < 0) report.violations.push_back("negative type number");
  }
  if (is_bumpy(g) && !g.type_numbers.empty()) {
    bool concentrated = g.type_numbers.size() == 1 && g.type_number(1, 0) == 1;
    if (!concentrated) {
      report.violations.push_back("bumpy model must have k_0(c) = 1 and no other type numbers");
    }
  }
  return report;
}

void require_valid(const GeodesicModel& g) {
  ValidationReport report = validate(g);
  if (!report.ok()) throw PreconditionError("invalid geodesic model: " + report.summary());
}

}  // namespace rpgeo
