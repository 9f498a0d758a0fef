#include "rpgeo/interval_engine.hpp"

#include <algorithm>

#include "rpgeo/error.hpp"
#include "rpgeo/loop_homology.hpp"

namespace rpgeo {

namespace {

ExactReal times(std::int64_t m, const ExactReal& a) { return ExactReal(m) * a; }

std::int64_t iabs(std::int64_t v) { return v < 0 ? -v : v; }

void require_iterate(const Rank1Model& model, std::int64_t m) {
  if (m < 1) throw PreconditionError("iterate must be positive, got " + std::to_string(m));
  if (model.odd_iterates_only && m % 2 == 0) {
    throw PreconditionError("even-dimensional model only covers odd iterates, got " + std::to_string(m));
  }
}

Rational mean_target(std::int64_t n, std::int64_t k) {
  return (Rational(k) + Rational(n, n + 1)) / Rational(2);
}

// Everything except the mean condition.
ValidationReport structural(const Rank1Model& model) {
  ValidationReport report;
  if (model.n < 1) report.violations.push_back("n must be at least 1");
  if (model.p.size() != model.xi.size()) {
    report.violations.push_back("p and xi have different lengths");
    return report;
  }
  if (model.k() < 2) report.violations.push_back("need at least two equations");
  if (model.theta.is_rational()) report.violations.push_back("theta must be irrational");
  std::int64_t sum = 0;
  for (std::size_t j = 0; j < model.p.size(); ++j) {
    if (model.p[j] == 0) report.violations.push_back("p[" + std::to_string(j) + "] is zero");
    sum += model.p[j];
  }
  if (sum != 0) report.violations.push_back("coefficients sum to " + std::to_string(sum) + ", not 0");
  if (model.odd_iterates_only) {
    if (model.n % 2 == 0) report.violations.push_back("even-dimensional parameterisation needs odd n");
    if (model.k() % 2 != 0) report.violations.push_back("even-dimensional parameterisation needs even k");
  }
  return report;
}

void check_mean(const Rank1Model& model, ValidationReport& report) {
  std::vector<ExactReal> hats;
  for (std::size_t j = 0; j < model.p.size(); ++j) hats.push_back(model.theta_hat(j));
  ExactReal lhs = fractional_sum(hats);
  Rational rhs = mean_target(model.n, model.k());
  if (!(lhs == ExactReal(rhs))) {
    report.violations.push_back("mean condition: sum of fractional parts is " + lhs.str() + ", expected " +
                                rhs.str());
  }
}

Rational pow2_inv(std::int64_t t) { return Rational(BigInt(1), BigInt(1) << static_cast<unsigned>(t)); }

// Distance (in x) from x to the nearest jump of any {p_j x + xi_j}.
ExactReal clearance(const Rank1Model& model, const ExactReal& x) {
  ExactReal best(1);
  for (std::size_t j = 0; j < model.p.size(); ++j) {
    ExactReal f = frac(times(model.p[j], x) + ExactReal(model.xi[j]));
    ExactReal d = std::min(f, ExactReal(1) - f) / ExactReal(iabs(model.p[j]));
    best = std::min(best, d);
  }
  return best;
}

ExactReal partial_sum(const Rank1Model& model, std::int64_t m, std::size_t excluded) {
  ExactReal s(0);
  for (std::size_t j = 0; j < model.p.size(); ++j) {
    if (j != excluded) s += frac(times(m, model.theta_hat(j)));
  }
  return s;
}

}  // namespace

std::optional<std::int64_t> IntervalPattern::find(const ExactReal& x) const {
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (ExactReal(points[i]) < x && x < ExactReal(points[i + 1])) return static_cast<std::int64_t>(i);
  }
  return std::nullopt;
}

std::int64_t IntervalPattern::locate(const ExactReal& x) const {
  auto i = find(x);
  if (!i) {
    throw PreconditionError(x.str() + " is not inside any open interval for L = " + std::to_string(L));
  }
  return *i;
}

IntervalPattern interval_pattern(std::int64_t n, std::int64_t k, std::int64_t L) {
  if (n < 1 || k < 2) throw PreconditionError("interval pattern needs n >= 1 and k >= 2");
  IntervalPattern pat;
  pat.n = n;
  pat.k = k;
  pat.L = L;
  pat.Q = Rational(k, 2) + Rational(BigInt((2 * L + 1) * n), BigInt(2 * (n + 1)));
  pat.floor_Q = floor(pat.Q);
  pat.frac_Q = frac(pat.Q);
  pat.points.push_back(Rational(0));
  for (std::int64_t i = 0; i <= k - 2; ++i) pat.points.push_back(Rational(i) + pat.frac_Q);
  pat.points.push_back(Rational(k - 1));
  return pat;
}

ExactReal Rank1Model::theta_hat(std::size_t j) const { return times(p.at(j), theta) + ExactReal(xi.at(j)); }

IrrationalSystem Rank1Model::system() const { return make_rank1(p, xi); }

ValidationReport validate(const Rank1Model& model) {
  ValidationReport report = structural(model);
  if (report.ok()) check_mean(model, report);
  return report;
}

void require_valid(const Rank1Model& model) {
  ValidationReport report = validate(model);
  if (!report.ok()) throw PreconditionError("invalid rank-1 model: " + report.summary());
}

ExactReal fractional_sum(const std::vector<ExactReal>& xs) {
  ExactReal s(0);
  for (const auto& x : xs) s += frac(x);
  return s;
}

std::int64_t index_closed_form(std::int64_t n, const std::vector<ExactReal>& thetas_hat, std::int64_t m) {
  if (m < 1) throw PreconditionError("iterate must be positive, got " + std::to_string(m));
  ExactReal v = ExactReal(Rational(m * n, n + 1)) + ExactReal(static_cast<std::int64_t>(thetas_hat.size()));
  for (const auto& t : thetas_hat) v -= ExactReal(2) * frac(times(m, t));
  if (!v.is_integer()) {
    throw PreconditionError("closed form gives the non-integer " + v.str() + " at m = " + std::to_string(m) +
                            "; the mean condition fails");
  }
  return to_int64(v.rational_part().num());
}

std::vector<ExactReal> closed_form_thetas(const GeodesicModel& g) {
  require_valid(g);
  if (!is_bumpy(g)) throw PreconditionError("closed form needs a bumpy geodesic");
  if (g.ind1 != 0) throw PreconditionError("closed form needs ind(c) = 0");
  if (g.orientable) return g.nf.thetas;
  if (g.dim % 2 != 0) throw PreconditionError("non-orientable closed form needs even dimension");
  std::vector<ExactReal> out;
  for (const auto& t : g.nf.thetas) {
    ExactReal two = ExactReal(2) * t;
    out.push_back(two - ExactReal(Rational(floor(two))) + ExactReal(1));
  }
  for (const auto& t : g.nf.thetas) out.push_back(-t);
  return out;
}

std::int64_t index_direct(const Rank1Model& model, std::int64_t m) {
  require_iterate(model, m);
  std::vector<ExactReal> hats;
  for (std::size_t j = 0; j < model.p.size(); ++j) hats.push_back(model.theta_hat(j));
  return index_closed_form(model.n, hats, m);
}

std::int64_t index_via_interval(const Rank1Model& model, std::int64_t l, std::int64_t L, std::size_t excluded) {
  std::int64_t m = 2 * (model.n + 1) * l + 2 * L + 1;
  require_iterate(model, m);
  if (excluded >= model.p.size()) throw PreconditionError("excluded equation out of range");
  IntervalPattern pat = interval_pattern(model.n, model.k(), L);
  std::int64_t i = pat.locate(partial_sum(model, m, excluded));
  return 2 * model.n * l + 2 * to_int64(pat.floor_Q) - 2 * i;
}

ExactReal aux_function_f(const Rank1Model& model, std::int64_t L, const ExactReal& x, std::size_t excluded) {
  ExactReal s(0);
  for (std::size_t j = 0; j < model.p.size(); ++j) {
    if (j == excluded) continue;
    ExactReal inner = frac(times(model.p[j], x) + ExactReal(model.xi[j]));
    s += frac(inner + times(2 * L, model.theta_hat(j)));
  }
  return s;
}

ExactReal aux_function_g(const IrrationalSystem& sys, const std::vector<ExactReal>& shifts,
                         const std::vector<Rational>& x, std::size_t excluded) {
  if (static_cast<std::int64_t>(x.size()) != sys.basis_size) {
    throw PreconditionError("point has " + std::to_string(x.size()) + " coordinates, basis has " +
                            std::to_string(sys.basis_size));
  }
  if (!shifts.empty() && shifts.size() != sys.size()) throw PreconditionError("one shift per equation");
  ExactReal s(0);
  for (std::size_t j = 0; j < sys.size(); ++j) {
    if (j == excluded) continue;
    Rational lin = sys.xi(j);
    for (std::size_t l = 0; l < x.size(); ++l) lin += Rational(sys.equations[j].coeffs[l]) * x[l];
    // the inner {.} is what the iterate actually sees; with a shift the outer one matters too
    ExactReal v(frac(lin));
    if (!shifts.empty()) v = frac(v + shifts[j]);
    s += v;
  }
  return s;
}

std::pair<std::vector<Rational>, std::vector<Rational>> anisotropic_probes(std::size_t r, std::int64_t t) {
  if (r < 1 || t < 1) throw PreconditionError("probes need r >= 1 and t >= 1");
  Rational a1 = pow2_inv(t);
  std::vector<Rational> a(r, a1 * a1), b(r, a1 * a1);
  a[0] = a1;
  b[0] = Rational(1) - a1;
  return {a, b};
}

ScanResult kronecker_scan(const std::vector<ExactReal>& thetas, const std::vector<Rational>& lo,
                          const std::vector<Rational>& hi, std::int64_t budget) {
  if (thetas.size() != lo.size() || thetas.size() != hi.size()) {
    throw PreconditionError("box and angle list have different sizes");
  }
  if (budget < 0) throw PreconditionError("negative budget");
  std::vector<ExactReal> step, x;
  for (const auto& t : thetas) {
    step.push_back(frac(t));
    x.push_back(ExactReal(0));
  }
  ScanResult res;
  const ExactReal one(1);
  for (std::int64_t m = 1; m <= budget; ++m) {
    bool inside = true;
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] += step[i];
      if (x[i] >= one) x[i] -= one;
      inside = inside && ExactReal(lo[i]) < x[i] && x[i] < ExactReal(hi[i]);
    }
    res.scanned = m;
    if (inside) {
      res.found = true;
      res.m = m;
      return res;
    }
  }
  return res;
}

ScanResult orbit_scan(const ExactReal& omega, const ExactReal& start, const ExactReal& lo, const ExactReal& hi,
                      std::int64_t first, std::int64_t budget) {
  if (budget < 0) throw PreconditionError("negative budget");
  ExactReal step = frac(omega);
  ExactReal x = frac(times(first, omega) + start);
  const ExactReal one(1);
  ScanResult res;
  for (std::int64_t i = 0; i < budget; ++i) {
    res.scanned = i + 1;
    if (lo < x && x < hi) {
      res.found = true;
      res.m = first + i;
      return res;
    }
    x += step;
    if (x >= one) x -= one;
  }
  return res;
}

bool bound_check_odd(const Rank1Model& model, std::int64_t l, std::int64_t m) {
  if (model.odd_iterates_only) throw PreconditionError("bound_check_odd on an even-dimensional model");
  std::int64_t n = model.n;
  if (iabs(m - 2 * (n + 1) * l) <= 4 * (n + 1)) return true;
  return iabs(index_direct(model, m) - 2 * n * l) > 2 * n;
}

bool bound_check_even(const Rank1Model& model, std::int64_t l, std::int64_t m) {
  if (!model.odd_iterates_only) throw PreconditionError("bound_check_even on an odd-dimensional model");
  if (m % 2 == 0) return true;
  std::int64_t n = model.n;  // already 2n-1 of the manifold
  if (iabs(m - 2 * (n + 1) * l) <= 4 * (n + 1)) return true;
  return iabs(index_direct(model, m) - 2 * n * l) > 2 * n;
}

ObstructionReport obstruction_scenario(const Rank1Model& model, std::int64_t budget) {
  ValidationReport rep = structural(model);
  if (!rep.ok()) throw PreconditionError("invalid rank-1 model: " + rep.summary());

  IrrationalSystem sys = model.system();
  EffectiveDifference edn = effective_difference_number(sys);
  if (edn.value < 1) throw EdnError("effective difference number is 0; no eta separates the equations");
  Rank1Conditions cond = check_rank1(sys);
  if (!cond.ok()) throw PreconditionError("rank-1 conditions fail: " + cond.summary());
  check_mean(model, rep);
  if (!rep.ok()) throw PreconditionError(rep.summary());

  ObstructionReport out;
  out.edn = edn.value;
  out.witness_eta = edn.witness;

  // theta -> theta + eta moves every theta_hat by an integer.
  Rank1Model moved = model;
  moved.theta = frac(model.theta + ExactReal(edn.witness));
  for (std::size_t j = 0; j < model.p.size(); ++j) moved.xi[j] = frac(model.xi[j] - Rational(model.p[j]) * edn.witness);

  EtaClassification cls = classify(moved.system(), Rational(0));
  out.order = cls.k1;
  out.order.insert(out.order.end(), cls.k0_plus.begin(), cls.k0_plus.end());
  out.order.insert(out.order.end(), cls.k0_minus.begin(), cls.k0_minus.end());
  Rank1Model& sh = out.shifted;
  sh.n = moved.n;
  sh.theta = moved.theta;
  sh.odd_iterates_only = moved.odd_iterates_only;
  for (std::size_t j : out.order) {
    sh.p.push_back(moved.p[j]);
    sh.xi.push_back(moved.xi[j]);
  }

  BigInt qbar = 1;
  for (std::size_t j = 0; j < cls.k1.size(); ++j) qbar *= sh.xi[j].den();
  out.q_bar = to_int64(qbar);
  const std::int64_t n = sh.n, k = sh.k();
  out.N_bar = 4 * (n + 1) + 1;
  // q_bar l >= 5 keeps every m_l + 2L with |L| <= N_bar positive
  const std::int64_t l_min = (5 + out.q_bar - 1) / out.q_bar;
  const ExactReal omega = times(2 * (n + 1) * out.q_bar, sh.theta);

  std::vector<IntervalPattern> pats;
  for (std::int64_t L = -out.N_bar; L <= out.N_bar; ++L) pats.push_back(interval_pattern(n, k, L));
  auto pat = [&](std::int64_t L) -> const IntervalPattern& { return pats[static_cast<std::size_t>(L + out.N_bar)]; };

  std::int64_t remaining = budget;
  for (std::int64_t t = 1; t <= 60 && remaining > 0; ++t) {
    Rational a = pow2_inv(t), b = Rational(1) - a;
    // interval of f_L at both probes, per L
    std::vector<std::optional<std::int64_t>> ia, ib;
    bool ok = true;
    for (std::int64_t L = -out.N_bar; L <= out.N_bar && ok; ++L) {
      auto fa = pat(L).find(aux_function_f(sh, L, ExactReal(a)));
      auto fb = pat(L).find(aux_function_f(sh, L, ExactReal(b)));
      ok = fa && fb && (L == 0 ? *fa != *fb : *fa == *fb);
      ia.push_back(fa);
      ib.push_back(fb);
    }
    if (!ok) continue;

    ScanResult s1 = orbit_scan(omega, sh.theta, ExactReal(0), ExactReal(a), l_min, remaining);
    remaining -= s1.scanned;
    out.scanned += s1.scanned;
    if (!s1.found) break;
    ScanResult s2 = orbit_scan(omega, sh.theta, ExactReal(b), ExactReal(1), l_min, remaining);
    remaining -= s2.scanned;
    out.scanned += s2.scanned;
    if (!s2.found) break;

    auto m_of = [&](std::int64_t l) { return 2 * (n + 1) * out.q_bar * l + 1; };
    // the probes only predict; the iterates themselves must land where f says
    bool verified = true;
    for (std::int64_t L = -out.N_bar; L <= out.N_bar && verified; ++L) {
      std::size_t idx = static_cast<std::size_t>(L + out.N_bar);
      verified = pat(L).find(partial_sum(sh, m_of(s1.m) + 2 * L, 0)) == ia[idx] &&
                 pat(L).find(partial_sum(sh, m_of(s2.m) + 2 * L, 0)) == ib[idx];
    }
    if (!verified) continue;

    out.t = t;
    out.a = a;
    out.b = b;
    out.l1 = s1.m;
    out.l2 = s2.m;
    out.m1 = m_of(out.l1);
    out.m2 = m_of(out.l2);
    out.x1 = frac(times(out.m1, sh.theta));
    out.x2 = frac(times(out.m2, sh.theta));
    out.clearance1 = clearance(sh, out.x1);
    out.clearance2 = clearance(sh, out.x2);
    out.i1 = *ia[static_cast<std::size_t>(out.N_bar)];
    out.i2 = *ib[static_cast<std::size_t>(out.N_bar)];

    auto rows = [&](std::int64_t l, std::int64_t m) {
      std::vector<IterateRow> v;
      for (std::int64_t L = -out.N_bar; L <= out.N_bar; ++L) {
        IterateRow row{L, m + 2 * L, index_direct(sh, m + 2 * L), index_via_interval(sh, out.q_bar * l, L, 0)};
        out.routes_agree = out.routes_agree && row.direct == row.via_interval;
        v.push_back(row);
      }
      return v;
    };
    out.rows1 = rows(out.l1, out.m1);
    out.rows2 = rows(out.l2, out.m2);

    const std::int64_t base = 2 * to_int64(pat(0).floor_Q) - 2 * out.i2;
    out.h1 = 2 * n * out.q_bar * out.l1 + base;
    out.h2 = 2 * n * out.q_bar * out.l2 + base;
    for (const auto& r : out.rows1) out.count1 += r.direct == out.h1;
    for (const auto& r : out.rows2) out.count2 += r.direct == out.h2;
    const std::int64_t d = sh.manifold_dim();
    out.betti_h1 = betti(d, out.h1);
    out.betti_h2 = betti(d, out.h2);
    return out;
  }
  throw BudgetExhausted("orbit scan used " + std::to_string(out.scanned) + " of " + std::to_string(budget) +
                        " steps without a verified pair of iterates");
}

}  // namespace rpgeo
