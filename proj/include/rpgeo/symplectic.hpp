#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rpgeo/exact_real.hpp"

namespace rpgeo {

/// Block counts and rotation angles of a basic normal form in Sp(2N-2):
///
///   N1(1,1)^p_- , I_2p_0 , N1(1,-1)^p_+ , N1(-1,1)^q_- , -I_2q_0 ,
///   N1(-1,-1)^q_+ , R(theta_1..theta_r) , N2(alpha_1..alpha_r*) ,
///   N2(beta_1..beta_r0) , H(+-2)^h
///
/// Angles are stored divided by 2*pi, so they live in (0,1) \ {1/2}.
/// thetas[j] > 1/2 exactly for j < r_prime. The hyperbolic count h only
/// takes part in dimension bookkeeping.
struct NormalForm {
  std::int64_t p_minus = 0;
  std::int64_t p_zero = 0;
  std::int64_t p_plus = 0;
  std::int64_t q_minus = 0;
  std::int64_t q_zero = 0;
  std::int64_t q_plus = 0;
  std::int64_t h = 0;
  std::vector<ExactReal> thetas;
  std::int64_t r_prime = 0;
  std::vector<ExactReal> alphas;  // non-trivial N2 blocks
  std::vector<ExactReal> betas;   // trivial N2 blocks
  std::int64_t half_dim = 0;      // N - 1

  std::int64_t r() const { return static_cast<std::int64_t>(thetas.size()); }
  std::int64_t r_star() const { return static_cast<std::int64_t>(alphas.size()); }
  std::int64_t r_zero() const { return static_cast<std::int64_t>(betas.size()); }

  /// Geometric multiplicity of the eigenvalue 1 (nu(gamma)).
  std::int64_t eigen_one_nullity() const { return p_minus + 2 * p_zero + p_plus; }
  /// Geometric multiplicity of the eigenvalue -1 (nu_{-1}(gamma)).
  std::int64_t eigen_minus_one_nullity() const { return q_minus + 2 * q_zero + q_plus; }
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  /// Violations joined with "; ".
  std::string summary() const;
};

ValidationReport validate(const NormalForm& nf);

/// Throws PreconditionError listing the violations when nf is invalid.
void require_valid(const NormalForm& nf);

/// True iff i(gamma) = i_{-1}(gamma) + (q_0 + q_+) + (r - 2r') - (p_0 + p_-).
bool splitting_consistency(const NormalForm& nf, std::int64_t i1, std::int64_t i_minus1);

/// i(gamma) recovered from i_{-1}(gamma) through the splitting relation.
std::int64_t index_from_minus1(const NormalForm& nf, std::int64_t i_minus1);

/// Index and nullity data of a hypothetical closed geodesic.
struct GeodesicModel {
  NormalForm nf;
  std::int64_t ind1 = 0;   // ind(c)
  std::int64_t null1 = 0;  // null(c)
  std::int64_t dim = 2;    // manifold dimension
  bool orientable = true;
  /// k_l(c^m) keyed by (odd iterate m, degree l); absent entries are 0.
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> type_numbers;
  /// Analytical period when supplied by the input; cross-checked.
  std::optional<std::int64_t> period;

  std::int64_t type_number(std::int64_t iterate, std::int64_t degree) const;
};

/// Checks the normal form, the dimension bookkeeping (half_dim = dim - 1),
/// null1 against the eigenvalue counts, type-number ranges, and a supplied
/// period against the computed one.
ValidationReport validate(const GeodesicModel& g);
void require_valid(const GeodesicModel& g);

/// Smallest even n with nu(c^n) = max_m nu(c^m): lcm(2, denominators of the
/// rational angles). Irrational angles never add nullity.
std::int64_t analytical_period(const GeodesicModel& g);

/// No eigenvalue +-1 blocks and every angle irrational, so every iterate is
/// non-degenerate.
bool is_bumpy(const GeodesicModel& g);

}  // namespace rpgeo
