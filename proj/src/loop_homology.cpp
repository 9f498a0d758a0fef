#include "rpgeo/loop_homology.hpp"

#include <numeric>

#include "rpgeo/error.hpp"
#include "rpgeo/index_iteration.hpp"

namespace rpgeo {

namespace {

void require_n(std::int64_t n) {
  if (n < 2) throw PreconditionError("projective space dimension must be at least 2");
}

std::int64_t period_of(const GeodesicModel& g) { return g.period ? *g.period : analytical_period(g); }

void require_positive_mean(const GeodesicModel& g, const ExactReal& mean) {
  if (mean.sign() <= 0) {
    throw PreconditionError("mean index " + mean.str() + " is not positive; Morse series diverges");
  }
}

// coefficients of p/q as a power series up to degree Q; q[0] must be 1.
std::vector<std::int64_t> series_divide(std::vector<std::int64_t> p, const std::vector<std::int64_t>& q,
                                        std::int64_t Q) {
  p.resize(Q + 1, 0);
  std::vector<std::int64_t> out(Q + 1, 0);
  for (std::int64_t i = 0; i <= Q; ++i) {
    out[i] = p[i];
    for (std::size_t j = 1; j < q.size() && i + static_cast<std::int64_t>(j) <= Q; ++j) {
      p[i + j] -= out[i] * q[j];
    }
  }
  return out;
}

std::vector<std::int64_t> poly_mul(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// 1 - t^e
std::vector<std::int64_t> one_minus(std::int64_t e) {
  std::vector<std::int64_t> v(e + 1, 0);
  v[0] = 1;
  v[e] -= 1;
  return v;
}

}  // namespace

std::int64_t betti(std::int64_t n, std::int64_t q) {
  require_n(n);
  if (q < 0 || q % 2 != 0) return 0;
  std::int64_t step = n % 2 != 0 ? n - 1 : 2 * (n - 1);
  if (q > 0 && q % step == 0) return 2;
  return 1;
}

std::vector<std::int64_t> betti_series_oracle(std::int64_t n, std::int64_t Q) {
  require_n(n);
  if (Q < 0) return {};
  std::int64_t k = n / 2;
  std::vector<std::int64_t> num, den;
  if (n % 2 != 0) {
    num = one_minus(2 * k + 2);
    den = poly_mul(one_minus(2), one_minus(2 * k));
  } else {
    num = one_minus(4 * k);
    den = poly_mul(one_minus(2), one_minus(4 * k - 2));
  }
  return series_divide(num, den, Q);
}

Rational average_betti(std::int64_t n) {
  require_n(n);
  if (n % 2 != 0) return Rational(BigInt(n + 1), BigInt(2 * (n - 1)));
  return Rational(BigInt(n), BigInt(2 * (n - 1)));
}

Rational partial_alternating_average(std::int64_t n, std::int64_t q) {
  if (q < 1) throw PreconditionError("degree must be positive");
  std::int64_t sum = 0;
  for (std::int64_t k = 0; k <= q; ++k) sum += (k % 2 == 0 ? 1 : -1) * betti(n, k);
  return Rational(BigInt(sum), BigInt(q));
}

GeodesicModel with_default_type_numbers(const GeodesicModel& g) {
  if (!g.type_numbers.empty()) return g;
  GeodesicModel out = g;
  std::int64_t period = period_of(g);
  for (std::int64_t m = 1; m < period; m += 2) {
    if (nullity(g, m) != 0) {
      throw PreconditionError("iterate " + std::to_string(m) +
                              " is degenerate; its type numbers must be supplied");
    }
    out.type_numbers[{m, 0}] = 1;
  }
  return out;
}

std::vector<std::int64_t> morse_type_numbers(const std::vector<GeodesicModel>& models, std::int64_t H) {
  std::vector<std::int64_t> m(H + 1, 0);
  for (const auto& raw : models) {
    require_valid(raw);
    GeodesicModel g = with_default_type_numbers(raw);
    ExactReal mean = mean_index(g);
    require_positive_mean(g, mean);
    std::int64_t period = period_of(g);
    ExactReal slack(2 * g.dim - 2 + H);
    for (const auto& [key, k] : g.type_numbers) {
      auto [base, l] = key;
      if (k == 0) continue;
      // index(c^it) >= it*mean - (2 dim - 2), so once that exceeds H nothing
      // further lands in range.
      for (std::int64_t it = base; ExactReal(it) * mean <= slack; it += period) {
        std::int64_t h = index(g, it) + l;
        if (h >= 0 && h <= H) m[h] += k;
      }
    }
  }
  return m;
}

ExactReal morse_bound(const std::vector<GeodesicModel>& models) {
  ExactReal total;
  for (const auto& raw : models) {
    GeodesicModel g = with_default_type_numbers(raw);
    ExactReal mean = mean_index(g);
    require_positive_mean(g, mean);
    std::int64_t k = 0;
    for (const auto& [key, v] : g.type_numbers) k += v;
    ExactReal per = ExactReal(4 * g.dim - 4) / (ExactReal(period_of(g)) * mean) + ExactReal(1);
    total += ExactReal(k) * per;
  }
  return total;
}

Rational alternating_morse_average(const std::vector<std::int64_t>& morse, std::int64_t q) {
  if (q < 1 || q >= static_cast<std::int64_t>(morse.size())) {
    throw PreconditionError("degree outside the computed Morse range");
  }
  std::int64_t sum = 0;
  for (std::int64_t h = 0; h <= q; ++h) sum += (h % 2 == 0 ? 1 : -1) * morse[h];
  return Rational(BigInt(sum), BigInt(q));
}

std::vector<DegreeMismatch> bumpy_morse_equals_betti(const GeodesicModel& g, std::int64_t n, std::int64_t H) {
  if (!is_bumpy(g)) throw PreconditionError("model is not bumpy");
  if (g.dim != n) throw PreconditionError("model dimension differs from n");
  std::vector<std::int64_t> morse = morse_type_numbers({g}, H);
  std::vector<DegreeMismatch> out;
  for (std::int64_t h = 0; h <= H; ++h) {
    std::int64_t b = betti(n, h);
    if (morse[h] != b) out.push_back({h, morse[h], b});
  }
  return out;
}

namespace {

ResonanceReport finish(ResonanceReport r) {
  r.residual = r.lhs - ExactReal(r.rhs);
  return r;
}

void require_model(const GeodesicModel& g, std::int64_t n) {
  require_valid(g);
  if (g.dim != n) {
    throw PreconditionError("model of dimension " + std::to_string(g.dim) + " in a resonance check for n = " +
                            std::to_string(n));
  }
}

}  // namespace

ResonanceReport resonance_check(const std::vector<GeodesicModel>& models, std::int64_t n) {
  ResonanceReport r;
  r.rhs = average_betti(n);
  for (const auto& raw : models) {
    require_model(raw, n);
    GeodesicModel g = with_default_type_numbers(raw);
    ResonanceTerm t;
    t.mean_index = mean_index(g);
    if (t.mean_index.sign() == 0) throw PreconditionError("zero mean index");
    t.period = period_of(g);
    t.index1 = g.ind1;
    std::int64_t sum = 0;
    for (const auto& [key, k] : g.type_numbers) {
      auto [iterate, l] = key;
      if (iterate >= t.period) continue;
      sum += ((l + g.ind1) % 2 == 0 ? 1 : -1) * k;
    }
    t.mean_euler = Rational(BigInt(sum), BigInt(t.period));
    r.lhs += ExactReal(t.mean_euler) / t.mean_index;
    r.terms.push_back(std::move(t));
  }
  return finish(std::move(r));
}

ResonanceReport resonance_check_bumpy(const std::vector<GeodesicModel>& models, std::int64_t n) {
  ResonanceReport r;
  r.rhs = average_betti(n) * Rational(2);
  for (const auto& g : models) {
    require_model(g, n);
    if (!is_bumpy(g)) throw PreconditionError("bumpy resonance form applied to a degenerate model");
    ResonanceTerm t;
    t.mean_index = mean_index(g);
    if (t.mean_index.sign() == 0) throw PreconditionError("zero mean index");
    t.period = 2;
    t.index1 = g.ind1;
    t.mean_euler = Rational(BigInt(g.ind1 % 2 == 0 ? 1 : -1), BigInt(2));
    r.lhs += ExactReal(g.ind1 % 2 == 0 ? 1 : -1) / t.mean_index;
    r.terms.push_back(std::move(t));
  }
  return finish(std::move(r));
}

}  // namespace rpgeo
