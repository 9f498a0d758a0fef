#pragma once

#include <cstdint>
#include <vector>

#include "rpgeo/exact_real.hpp"
#include "rpgeo/symplectic.hpp"

namespace rpgeo {

/// Rational S^1-equivariant Betti number of the non-contractible loop space
/// of RP^n in degree q.
std::int64_t betti(std::int64_t n, std::int64_t q);

/// Coefficients 0..Q of the equivariant Poincare series, obtained by long
/// division of the rational function rather than the closed form.
std::vector<std::int64_t> betti_series_oracle(std::int64_t n, std::int64_t Q);

/// Average equivariant Betti number: (n+1)/(2(n-1)) for odd n, n/(2(n-1)) for even n.
Rational average_betti(std::int64_t n);

/// (1/q) sum_{k=0}^{q} (-1)^k betti(n, k).
Rational partial_alternating_average(std::int64_t n, std::int64_t q);

/// Fills k_0 = 1 for every odd iterate below the period. Every such iterate
/// must be non-degenerate; otherwise the type numbers cannot be inferred and
/// PreconditionError is thrown. Models that already carry type numbers are
/// returned unchanged.
GeodesicModel with_default_type_numbers(const GeodesicModel& g);

/// m_0..m_H: sum over models, odd iterates 2m-1 <= period, degrees l of
/// k_l(c^{2m-1}) * #{s >= 0 : h - index(c^{2m-1+s*period}) = l}.
/// Throws PreconditionError when a mean index is not positive.
std::vector<std::int64_t> morse_type_numbers(const std::vector<GeodesicModel>& models, std::int64_t H);

/// sum_j sum_{m,l} k_l(c_j^{2m-1}) * ((4 dim - 4)/(n_j mean_j) + 1), an upper
/// bound for every m_h.
ExactReal morse_bound(const std::vector<GeodesicModel>& models);

/// (1/q) sum_{h<=q} (-1)^h m_h, the alternating diagnostic.
Rational alternating_morse_average(const std::vector<std::int64_t>& morse, std::int64_t q);

struct DegreeMismatch {
  std::int64_t degree = 0;
  std::int64_t morse = 0;
  std::int64_t betti = 0;
};

/// Degrees h <= H where the single-geodesic Morse numbers differ from the
/// Betti numbers of RP^n. Empty when the hypothesis is consistent.
std::vector<DegreeMismatch> bumpy_morse_equals_betti(const GeodesicModel& g, std::int64_t n, std::int64_t H);

struct ResonanceTerm {
  ExactReal mean_index;
  Rational mean_euler;  // always (-1)^{i(c)}/2 on the bumpy path
  std::int64_t period = 0;
  std::int64_t index1 = 0;
};

struct ResonanceReport {
  std::vector<ResonanceTerm> terms;
  ExactReal lhs;
  Rational rhs;
  ExactReal residual;  // lhs - rhs
  bool holds() const { return residual.sign() == 0; }
};

/// sum_j mean_euler(c_j)/mean_index(c_j) against the average Betti number.
/// Every model must have dimension n and positive mean index.
ResonanceReport resonance_check(const std::vector<GeodesicModel>& models, std::int64_t n);

/// Bumpy form: sum_j (-1)^{i(c_j)}/mean_index(c_j) against 2 * average Betti.
ResonanceReport resonance_check_bumpy(const std::vector<GeodesicModel>& models, std::int64_t n);

}  // namespace rpgeo
