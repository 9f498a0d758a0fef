#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <utility>

#include "rpgeo/exact_real.hpp"
#include "rpgeo/symplectic.hpp"

namespace rpgeo {

// Orientable iteration: i(gamma^m) and nu(gamma^m) from the normal form and
// the values at m = 1.
std::int64_t index_orientable(const NormalForm& nf, std::int64_t i1, std::int64_t m);
std::int64_t nullity_orientable(const NormalForm& nf, std::int64_t nu1, std::int64_t m);

/// i_{-1}(gamma^m) = i(gamma^{2m}) - i(gamma^m), and likewise for nullity.
std::int64_t index_minus1(const NormalForm& nf, std::int64_t i1, std::int64_t m);
std::int64_t nullity_minus1(const NormalForm& nf, std::int64_t nu1, std::int64_t m);

/// The same two quantities through the half-shifted closed form
/// m(i1+p_-+p_0-r) - [m odd](q_0+q_+) + 2 sum E(m theta - 1/2) + ...
/// Kept separate so the two derivations can be checked against each other.
std::int64_t index_minus1_closed_form(const NormalForm& nf, std::int64_t i1, std::int64_t m);
std::int64_t nullity_minus1_closed_form(const NormalForm& nf, std::int64_t m);

/// ind(c^m), null(c^m) for a non-orientable geodesic on a d-manifold.
/// Throws PreconditionError on an orientable model.
std::int64_t index_nonorientable(const GeodesicModel& g, std::int64_t m);
std::int64_t nullity_nonorientable(const GeodesicModel& g, std::int64_t m);

/// Non-orientable ind/null recomputed through the orientable path gamma in
/// Sp(2d-2) (d even) or N1(1,1) + P_c in Sp(2d) (d odd): odd m uses the -1
/// index, even m the ordinary one.
std::pair<std::int64_t, std::int64_t> nonorientable_via_reduction(const GeodesicModel& g,
                                                                  std::int64_t m);

/// Dispatch on g.orientable.
std::int64_t index(const GeodesicModel& g, std::int64_t m);
std::int64_t nullity(const GeodesicModel& g, std::int64_t m);

/// Linear growth rate of the index.
ExactReal mean_index(const GeodesicModel& g);

/// |index(c^m) - m*mean| <= 2 dim - 2 for all 1 <= m <= M.
bool mean_index_bound_check(const GeodesicModel& g, std::int64_t M);
bool mean_index_bound_check(const GeodesicModel& g, std::int64_t M, const ExactReal& mean);

struct IndexNullity {
  std::int64_t index = 0;
  std::int64_t nullity = 0;
};

/// Memoized (index, nullity) per iterate. Thread-safe.
class IndexSequence {
 public:
  explicit IndexSequence(GeodesicModel g);

  IndexNullity at(std::int64_t m) const;
  const GeodesicModel& model() const { return model_; }

 private:
  GeodesicModel model_;
  mutable std::mutex mu_;
  mutable std::map<std::int64_t, IndexNullity> values_;
};

}  // namespace rpgeo
