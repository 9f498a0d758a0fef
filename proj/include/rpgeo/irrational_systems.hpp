#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rpgeo/rational.hpp"

namespace rpgeo {

/// theta_hat_j = sum_l coeffs[l] * theta_l + offset, offset kept in [0, 1).
struct Equation {
  std::vector<std::int64_t> coeffs;
  Rational offset;

  friend bool operator==(const Equation&, const Equation&) = default;
};

struct IrrationalSystem {
  std::int64_t basis_size = 1;
  std::vector<Equation> equations;

  std::size_t size() const { return equations.size(); }
  /// Coefficient of a rank-1 system.
  std::int64_t p(std::size_t j) const { return equations[j].coeffs.at(0); }
  const Rational& xi(std::size_t j) const { return equations[j].offset; }

  /// "-2theta + 1/3" style rendering of one equation; rank 1 uses the given
  /// variable name.
  std::string equation_str(std::size_t j, const std::string& var = "theta") const;

  friend bool operator==(const IrrationalSystem&, const IrrationalSystem&) = default;
};

/// Builds a system from an integer matrix and offsets; offsets are reduced
/// mod 1. Every row must have the same width.
IrrationalSystem make_system(const std::vector<std::vector<std::int64_t>>& P, const std::vector<Rational>& xi);
IrrationalSystem make_rank1(const std::vector<std::int64_t>& p, const std::vector<Rational>& xi);

struct NormalizedSystem {
  IrrationalSystem system;
  /// beta_l = alpha_l / column_scale[l]
  std::vector<BigInt> column_scale;
  /// Integer parts removed from the offsets (theta_hat bookkeeping only).
  std::vector<BigInt> offset_shift;
};

/// Clears denominators column by column (new basis element alpha_l / q_l with
/// q_l the lcm of the column's denominators) and reduces offsets mod 1.
NormalizedSystem normalize_representation(const std::vector<std::vector<Rational>>& coeffs,
                                          const std::vector<Rational>& offsets);

/// Rank of the coefficient matrix over Q (fraction-free elimination).
std::int64_t rank(const IrrationalSystem& sys);

struct Rank1Conditions {
  bool nonzero_coefficients = true;
  bool zero_sum = true;      // sum p_j = 0
  bool offset_sum_ok = true;  // {sum xi_j} in (0,1) \ {1/2}
  Rational offset_sum;        // {sum xi_j}
  bool ok() const { return nonzero_coefficients && zero_sum && offset_sum_ok; }
  std::string summary() const;
};

Rank1Conditions check_rank1(const IrrationalSystem& sys);

/// xi_j -> {xi_j - p_j eta}.
IrrationalSystem eta_action(const IrrationalSystem& sys, const Rational& eta);

struct EtaClassification {
  Rational eta;
  std::vector<std::size_t> k0_plus;   // zero offset, p_j > 0
  std::vector<std::size_t> k0_minus;  // zero offset, p_j < 0
  std::vector<std::size_t> k1;        // non-zero offset
  std::int64_t absolute_difference() const {
    auto d = static_cast<std::int64_t>(k0_plus.size()) - static_cast<std::int64_t>(k0_minus.size());
    return d < 0 ? -d : d;
  }
};

EtaClassification classify(const IrrationalSystem& sys, const Rational& eta);

/// Every eta in [0, 1) that zeroes some offset: (xi_j + t)/p_j mod 1.
/// Sorted ascending, duplicates removed.
std::vector<Rational> candidate_etas(const IrrationalSystem& sys);

struct EffectiveDifference {
  std::int64_t value = 0;
  Rational witness;  // smallest eta in [0,1) attaining value
};

EffectiveDifference effective_difference_number(const IrrationalSystem& sys);

/// Replaces equation j (offset 0) by |p_j| equations sgn(p_j) theta + l/|p_j|.
IrrationalSystem expand_equation(const IrrationalSystem& sys, std::size_t j);

/// Greedily removes pairs with p' p'' = -1 and {xi' + xi''} = 0, scanning in
/// index order. Throws PreconditionError if the system would become empty.
IrrationalSystem cutoff_pairs(const IrrationalSystem& sys);

struct ReductionStep {
  std::string action;
  IrrationalSystem system;
};

struct Reduction {
  IrrationalSystem result;
  std::vector<ReductionStep> trace;
  /// Composite eta applied along the way; an eta-witness w of the result is
  /// the witness total_eta + w of the input.
  Rational total_eta;
};

/// Alternating eta-zeroing and expansion from the last equation to the first
/// (only |p_j| >= 2 needs it), then the pair cutoff. Requires the rank-1
/// conditions.
Reduction reduce(const IrrationalSystem& sys);

struct RankCollapse {
  std::vector<std::int64_t> s;        // s_2..s_r
  std::vector<std::int64_t> p_tilde;  // p_j1 + sum s_l p_jl, all non-zero
  IrrationalSystem system;            // rank-1 system with coefficients p_tilde
};

/// Integer combination turning a rank r >= 2 system into a rank-1 system
/// with no zero coefficient. Rejects zero rows.
RankCollapse collapse_rank(const IrrationalSystem& sys);

}  // namespace rpgeo
