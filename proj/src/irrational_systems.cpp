#include "rpgeo/irrational_systems.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "rpgeo/error.hpp"

namespace rpgeo {

namespace {

void require_rank1_shape(const IrrationalSystem& sys) {
  if (sys.basis_size != 1) throw PreconditionError("operation needs a rank-1 system");
}

std::string term(std::int64_t c, const std::string& var, bool first) {
  std::string out;
  if (c < 0) {
    out = first ? "-" : " - ";
  } else if (!first) {
    out = " + ";
  }
  std::int64_t a = std::llabs(c);
  if (a != 1) out += std::to_string(a);
  return out + var;
}

}  // namespace

std::string IrrationalSystem::equation_str(std::size_t j, const std::string& var) const {
  const Equation& e = equations.at(j);
  std::string out;
  bool first = true;
  for (std::size_t l = 0; l < e.coeffs.size(); ++l) {
    if (e.coeffs[l] == 0) continue;
    std::string name = basis_size == 1 ? var : var + std::to_string(l + 1);
    out += term(e.coeffs[l], name, first);
    first = false;
  }
  if (!e.offset.is_zero()) out += (first ? "" : " + ") + e.offset.str();
  if (out.empty()) out = "0";
  return out;
}

IrrationalSystem make_system(const std::vector<std::vector<std::int64_t>>& P, const std::vector<Rational>& xi) {
  if (P.size() != xi.size()) throw ParseError("coefficient rows and offsets differ in length");
  IrrationalSystem sys;
  sys.basis_size = P.empty() ? 1 : static_cast<std::int64_t>(P[0].size());
  if (sys.basis_size < 1) throw ParseError("coefficient rows must be non-empty");
  for (std::size_t j = 0; j < P.size(); ++j) {
    if (static_cast<std::int64_t>(P[j].size()) != sys.basis_size) throw ParseError("ragged coefficient matrix");
    sys.equations.push_back({P[j], frac(xi[j])});
  }
  return sys;
}

IrrationalSystem make_rank1(const std::vector<std::int64_t>& p, const std::vector<Rational>& xi) {
  std::vector<std::vector<std::int64_t>> P;
  for (auto v : p) P.push_back({v});
  return make_system(P, xi);
}

NormalizedSystem normalize_representation(const std::vector<std::vector<Rational>>& coeffs,
                                          const std::vector<Rational>& offsets) {
  if (coeffs.size() != offsets.size()) throw ParseError("coefficient rows and offsets differ in length");
  NormalizedSystem out;
  std::size_t r = coeffs.empty() ? 1 : coeffs[0].size();
  out.column_scale.assign(r, BigInt(1));
  for (const auto& row : coeffs) {
    if (row.size() != r) throw ParseError("ragged coefficient matrix");
    for (std::size_t l = 0; l < r; ++l) out.column_scale[l] = lcm(out.column_scale[l], row[l].den());
  }
  out.system.basis_size = static_cast<std::int64_t>(r);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    Equation e;
    for (std::size_t l = 0; l < r; ++l) {
      Rational scaled = coeffs[j][l] * Rational(out.column_scale[l]);
      e.coeffs.push_back(to_int64(scaled.num()));
    }
    BigInt shift = floor(offsets[j]);
    e.offset = offsets[j] - Rational(shift);
    out.offset_shift.push_back(shift);
    out.system.equations.push_back(std::move(e));
  }
  return out;
}

std::int64_t rank(const IrrationalSystem& sys) {
  std::size_t rows = sys.size();
  std::size_t cols = static_cast<std::size_t>(sys.basis_size);
  std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = sys.equations[i].coeffs[j];

  // Bareiss: every division below is exact.
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return static_cast<std::int64_t>(r);
}

std::string Rank1Conditions::summary() const {
  std::vector<std::string> parts;
  if (!nonzero_coefficients) parts.push_back("a coefficient is zero");
  if (!zero_sum) parts.push_back("coefficients do not sum to zero");
  if (!offset_sum_ok) parts.push_back("fractional offset sum " + offset_sum.str() + " is not in (0,1) \\ {1/2}");
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "; " : "") + parts[i];
  return out;
}

Rank1Conditions check_rank1(const IrrationalSystem& sys) {
  require_rank1_shape(sys);
  Rank1Conditions c;
  std::int64_t sum = 0;
  Rational xs;
  for (std::size_t j = 0; j < sys.size(); ++j) {
    if (sys.p(j) == 0) c.nonzero_coefficients = false;
    sum += sys.p(j);
    xs += sys.xi(j);
  }
  c.zero_sum = sum == 0;
  c.offset_sum = frac(xs);
  c.offset_sum_ok = !c.offset_sum.is_zero() && c.offset_sum != Rational(BigInt(1), BigInt(2));
  return c;
}

IrrationalSystem eta_action(const IrrationalSystem& sys, const Rational& eta) {
  require_rank1_shape(sys);
  IrrationalSystem out = sys;
  for (auto& e : out.equations) e.offset = frac(e.offset - Rational(e.coeffs[0]) * eta);
  return out;
}

EtaClassification classify(const IrrationalSystem& sys, const Rational& eta) {
  require_rank1_shape(sys);
  EtaClassification c;
  c.eta = eta;
  for (std::size_t j = 0; j < sys.size(); ++j) {
    Rational off = frac(sys.xi(j) - Rational(sys.p(j)) * eta);
    if (!off.is_zero()) {
      c.k1.push_back(j);
    } else if (sys.p(j) > 0) {
      c.k0_plus.push_back(j);
    } else if (sys.p(j) < 0) {
      c.k0_minus.push_back(j);
    } else {
      // p_j = 0 with a zero offset: theta_hat_j would be rational. Counted
      // with K1 so it never affects the difference.
      c.k1.push_back(j);
    }
  }
  return c;
}

std::vector<Rational> candidate_etas(const IrrationalSystem& sys) {
  require_rank1_shape(sys);
  std::vector<Rational> out;
  for (std::size_t j = 0; j < sys.size(); ++j) {
    std::int64_t p = sys.p(j);
    if (p == 0) continue;
    for (std::int64_t t = 0; t < std::llabs(p); ++t) {
      out.push_back(frac((sys.xi(j) + Rational(t)) / Rational(p)));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

EffectiveDifference effective_difference_number(const IrrationalSystem& sys) {
  std::vector<Rational> cands = candidate_etas(sys);
  if (cands.empty() || !cands.front().is_zero()) cands.insert(cands.begin(), Rational(0));
  EffectiveDifference best;
  best.value = -1;
  for (const auto& eta : cands) {
    std::int64_t d = classify(sys, eta).absolute_difference();
    if (d > best.value) {
      best.value = d;
      best.witness = eta;
    }
  }
  return best;
}

IrrationalSystem expand_equation(const IrrationalSystem& sys, std::size_t j) {
  require_rank1_shape(sys);
  if (j >= sys.size()) throw PreconditionError("equation index out of range");
  if (!sys.xi(j).is_zero()) throw PreconditionError("only an equation with zero offset can be expanded");
  std::int64_t p = sys.p(j);
  if (p == 0) throw PreconditionError("cannot expand a zero coefficient");
  std::int64_t a = std::llabs(p);
  std::int64_t sign = p > 0 ? 1 : -1;
  IrrationalSystem out;
  out.basis_size = 1;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    if (i != j) {
      out.equations.push_back(sys.equations[i]);
      continue;
    }
    for (std::int64_t l = 0; l < a; ++l) {
      out.equations.push_back({{sign}, Rational(BigInt(l), BigInt(a))});
    }
  }
  return out;
}

IrrationalSystem cutoff_pairs(const IrrationalSystem& sys) {
  require_rank1_shape(sys);
  std::vector<bool> gone(sys.size(), false);
  for (std::size_t i = 0; i < sys.size(); ++i) {
    if (gone[i]) continue;
    for (std::size_t j = i + 1; j < sys.size(); ++j) {
      if (gone[j]) continue;
      if (sys.p(i) * sys.p(j) == -1 && frac(sys.xi(i) + sys.xi(j)).is_zero()) {
        gone[i] = gone[j] = true;
        break;
      }
    }
  }
  IrrationalSystem out;
  out.basis_size = 1;
  for (std::size_t i = 0; i < sys.size(); ++i)
    if (!gone[i]) out.equations.push_back(sys.equations[i]);
  if (out.equations.empty() && !sys.equations.empty()) {
    throw PreconditionError("cutting off pairs would leave an empty system");
  }
  return out;
}

Reduction reduce(const IrrationalSystem& sys) {
  Rank1Conditions cond = check_rank1(sys);
  if (!cond.ok()) throw PreconditionError("reduction needs a valid rank-1 system: " + cond.summary());
  Reduction red;
  IrrationalSystem cur = sys;
  for (std::size_t j = cur.size(); j-- > 0;) {
    std::int64_t p = cur.p(j);
    if (std::llabs(p) < 2) continue;
    if (!cur.xi(j).is_zero()) {
      Rational eta = cur.xi(j) / Rational(p);
      cur = eta_action(cur, eta);
      red.total_eta += eta;
      red.trace.push_back({"eta " + eta.str() + " zeroes equation " + std::to_string(j + 1), cur});
    }
    cur = expand_equation(cur, j);
    red.trace.push_back({"expand equation " + std::to_string(j + 1), cur});
  }
  IrrationalSystem cut = cutoff_pairs(cur);
  if (cut.size() != cur.size()) {
    red.trace.push_back({"cut off " + std::to_string((cur.size() - cut.size()) / 2) + " pairs", cut});
  }
  red.result = std::move(cut);
  red.total_eta = frac(red.total_eta);
  return red;
}

namespace {

// 0, 1, -1, 2, -2, ...
std::int64_t nth_value(std::int64_t i) { return i == 0 ? 0 : (i % 2 ? (i + 1) / 2 : -(i / 2)); }

}  // namespace

RankCollapse collapse_rank(const IrrationalSystem& sys) {
  std::size_t r = static_cast<std::size_t>(sys.basis_size);
  for (std::size_t j = 0; j < sys.size(); ++j) {
    const auto& c = sys.equations[j].coeffs;
    if (std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v == 0; })) {
      throw PreconditionError("equation " + std::to_string(j + 1) + " has no irrational part");
    }
  }
  for (std::size_t l = 0; l < r; ++l) {
    std::int64_t sum = 0;
    for (const auto& e : sys.equations) sum += e.coeffs[l];
    if (sum != 0) throw PreconditionError("column " + std::to_string(l + 1) + " does not sum to zero");
  }

  auto combine = [&](std::size_t j, const std::vector<std::int64_t>& s) {
    std::int64_t v = 0;
    for (std::size_t l = 1; l < r; ++l) v += s[l - 1] * sys.equations[j].coeffs[l];
    return v;
  };

  RankCollapse out;
  out.s.assign(r > 0 ? r - 1 : 0, 0);
  bool column_ok = std::all_of(sys.equations.begin(), sys.equations.end(),
                               [](const Equation& e) { return e.coeffs[0] != 0; });
  if (!column_ok) {
    // Direction s_bar off the hyperplane of every row with p_j1 = 0, then the
    // smallest multiple that keeps every other row non-zero too.
    std::size_t dims = r - 1;
    std::vector<std::int64_t> best;
    for (std::int64_t norm = 1; best.empty(); ++norm) {
      std::int64_t base = 2 * norm + 1;
      std::int64_t total = 1;
      for (std::size_t d = 0; d < dims; ++d) total *= base;
      for (std::int64_t code = 0; code < total && best.empty(); ++code) {
        std::vector<std::int64_t> s(dims);
        std::int64_t rest = code;
        std::int64_t mx = 0;
        for (std::size_t d = dims; d-- > 0;) {
          s[d] = nth_value(rest % base);
          rest /= base;
          mx = std::max<std::int64_t>(mx, std::llabs(s[d]));
        }
        if (mx != norm) continue;
        bool off = true;
        for (std::size_t j = 0; j < sys.size() && off; ++j) {
          if (sys.equations[j].coeffs[0] == 0 && combine(j, s) == 0) off = false;
        }
        if (off) best = s;
      }
    }
    for (std::int64_t scale = 1;; ++scale) {
      bool all = true;
      for (std::size_t j = 0; j < sys.size() && all; ++j) {
        if (sys.equations[j].coeffs[0] + scale * combine(j, best) == 0) all = false;
      }
      if (all) {
        for (std::size_t d = 0; d < best.size(); ++d) out.s[d] = scale * best[d];
        break;
      }
    }
  }
  std::vector<Rational> xi;
  for (std::size_t j = 0; j < sys.size(); ++j) {
    out.p_tilde.push_back(sys.equations[j].coeffs[0] + combine(j, out.s));
    xi.push_back(sys.xi(j));
  }
  out.system = make_rank1(out.p_tilde, xi);
  return out;
}

}  // namespace rpgeo
