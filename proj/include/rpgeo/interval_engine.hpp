#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rpgeo/exact_real.hpp"
#include "rpgeo/irrational_systems.hpp"
#include "rpgeo/symplectic.hpp"

namespace rpgeo {

/// Dividing points 0, {Q_L}, 1 + {Q_L}, ..., k-2 + {Q_L}, k-1 of the k open
/// intervals I_0(L) .. I_{k-1}(L), with Q_L = k/2 + (2L+1)n/(2(n+1)).
struct IntervalPattern {
  std::int64_t n = 1;
  std::int64_t k = 2;
  std::int64_t L = 0;
  Rational Q;
  BigInt floor_Q;
  Rational frac_Q;
  std::vector<Rational> points;  // k + 1 entries

  /// Index i of the open interval containing x; nullopt when x is a dividing
  /// point or outside (0, k-1).
  std::optional<std::int64_t> find(const ExactReal& x) const;
  /// Same, but throws PreconditionError on a boundary hit.
  std::int64_t locate(const ExactReal& x) const;
};

IntervalPattern interval_pattern(std::int64_t n, std::int64_t k, std::int64_t L);

/// theta_hat_j = p_j theta + xi_j with sum_j {theta_hat_j} = (k + n/(n+1))/2.
/// odd_iterates_only marks the even-dimensional parameterisation (n here is
/// 2n-1 of RP^{2n}, k = 2r), where the index formula only holds for odd m.
struct Rank1Model {
  std::int64_t n = 1;
  ExactReal theta;
  std::vector<std::int64_t> p;
  std::vector<Rational> xi;
  bool odd_iterates_only = false;

  std::int64_t k() const { return static_cast<std::int64_t>(p.size()); }
  ExactReal theta_hat(std::size_t j) const;
  IrrationalSystem system() const;
  /// Dimension of the projective space the model lives on.
  std::int64_t manifold_dim() const { return odd_iterates_only ? n + 1 : 2 * n + 1; }
};

ValidationReport validate(const Rank1Model& model);
void require_valid(const Rank1Model& model);

/// Left-hand side of the mean condition, sum_j {x_j}.
ExactReal fractional_sum(const std::vector<ExactReal>& xs);

/// m n/(n+1) + k - 2 sum_j {m theta_hat_j}; throws if the value is not an integer.
std::int64_t index_closed_form(std::int64_t n, const std::vector<ExactReal>& thetas_hat, std::int64_t m);

/// The theta_hat list behind the closed form for a bumpy geodesic with
/// ind(c) = 0: its thetas (orientable), or 2t - [2t] + 1 and -t for each
/// theta t (non-orientable, even dimension).
std::vector<ExactReal> closed_form_thetas(const GeodesicModel& g);

std::int64_t index_direct(const Rank1Model& model, std::int64_t m);

/// Index of c^m for m = 2(n+1)l + 2L + 1 read off from the interval holding
/// sum_{j != excluded} {m theta_hat_j}.
std::int64_t index_via_interval(const Rank1Model& model, std::int64_t l, std::int64_t L, std::size_t excluded = 0);

/// f_L(x) = sum_{j != excluded} {{p_j x + xi_j} + 2L theta_hat_j}.
ExactReal aux_function_f(const Rank1Model& model, std::int64_t L, const ExactReal& x, std::size_t excluded = 0);

/// g(x_1..x_r) = sum_{j != excluded} {sum_l p_jl x_l + xi_j + shift_j}. The
/// shifts are the 2L theta_hat_j terms (empty for L = 0).
ExactReal aux_function_g(const IrrationalSystem& sys, const std::vector<ExactReal>& shifts,
                         const std::vector<Rational>& x, std::size_t excluded = 0);

/// Probe points for g: a = (a1, a1^2, ..., a1^2), b = (1 - a1, a1^2, ..., a1^2)
/// with a1 = 2^-t, so the first coordinate dominates.
std::pair<std::vector<Rational>, std::vector<Rational>> anisotropic_probes(std::size_t r, std::int64_t t);

struct ScanResult {
  bool found = false;
  std::int64_t m = 0;
  std::int64_t scanned = 0;
};

/// Smallest m in [1, budget] with ({m theta_1}, ..., {m theta_r}) in the open
/// box prod (lo_i, hi_i).
ScanResult kronecker_scan(const std::vector<ExactReal>& thetas, const std::vector<Rational>& lo,
                          const std::vector<Rational>& hi, std::int64_t budget);

/// Smallest l in [first, first + budget) with {l omega + start} in (lo, hi).
ScanResult orbit_scan(const ExactReal& omega, const ExactReal& start, const ExactReal& lo, const ExactReal& hi,
                      std::int64_t first, std::int64_t budget);

/// |ind(c^m) - 2nl| > 2n whenever |m - 2(n+1)l| > 4(n+1). Even m is vacuous
/// for odd_iterates_only models.
bool bound_check_odd(const Rank1Model& model, std::int64_t l, std::int64_t m);
bool bound_check_even(const Rank1Model& model, std::int64_t l, std::int64_t m);

struct IterateRow {
  std::int64_t L = 0;
  std::int64_t m = 0;
  std::int64_t direct = 0;
  std::int64_t via_interval = 0;
};

struct ObstructionReport {
  Rational witness_eta;
  std::int64_t edn = 0;
  Rank1Model shifted;        // after the eta-action, K1 first
  std::vector<std::size_t> order;  // original equation index of each shifted equation
  std::int64_t q_bar = 0;
  std::int64_t N_bar = 0;
  std::int64_t t = 0;        // probes a = 2^-t, b = 1 - 2^-t
  Rational a, b;
  std::int64_t l1 = 0, l2 = 0;
  std::int64_t m1 = 0, m2 = 0;
  ExactReal x1, x2;          // {m_l theta}
  ExactReal clearance1, clearance2;
  std::int64_t i1 = 0, i2 = 0;  // intervals of the two sums at L = 0
  std::vector<IterateRow> rows1, rows2;
  bool routes_agree = true;
  std::int64_t h1 = 0, h2 = 0;
  std::int64_t count1 = 0, count2 = 0;  // odd iterates in the windows with index h1 / h2
  std::int64_t betti_h1 = 0, betti_h2 = 0;
  std::int64_t scanned = 0;
  bool conflict() const { return betti_h1 == betti_h2 && count2 == count1 + 1; }
};

/// The single-geodesic contradiction played out on a concrete rank-1 model.
/// Throws EdnError when no eta gives a non-zero difference, PreconditionError
/// on the sum conditions, BudgetExhausted when the orbit scan runs out.
ObstructionReport obstruction_scenario(const Rank1Model& model, std::int64_t budget);

}  // namespace rpgeo
