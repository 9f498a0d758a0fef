#include "rpgeo/index_iteration.hpp"

#include <stdexcept>

#include "rpgeo/error.hpp"

namespace rpgeo {

namespace {

void require_iterate(std::int64_t m) {
  if (m < 1) throw PreconditionError("iterate must be positive, got " + std::to_string(m));
}

std::int64_t even(std::int64_t m) { return m % 2 == 0 ? 1 : 0; }

ExactReal times(std::int64_t m, const ExactReal& a) { return ExactReal(m) * a; }

const ExactReal& half() {
  static const ExactReal h(Rational(1, 2));
  return h;
}

// r - sum phi(m x - shift) over every angle list.
std::int64_t varsigma(const NormalForm& nf, std::int64_t m, const ExactReal& shift) {
  std::int64_t s = 0;
  auto add = [&](const std::vector<ExactReal>& list) {
    for (const auto& a : list) s += 1 - phi(times(m, a) - shift);
  };
  add(nf.thetas);
  add(nf.alphas);
  add(nf.betas);
  return s;
}

std::int64_t varsigma_m(const NormalForm& nf, std::int64_t m) {
  std::int64_t s = 0;
  auto add = [&](const std::vector<ExactReal>& list) {
    for (const auto& a : list) s += 1 - shifted_phi(times(m, a), m);
  };
  add(nf.thetas);
  add(nf.alphas);
  add(nf.betas);
  return s;
}

void require_nonorientable(const GeodesicModel& g) {
  if (g.orientable) {
    throw PreconditionError("non-orientable iteration formula applied to an orientable model");
  }
}

}  // namespace

std::int64_t index_orientable(const NormalForm& nf, std::int64_t i1, std::int64_t m) {
  require_valid(nf);
  require_iterate(m);
  std::int64_t v = m * (i1 + nf.p_minus + nf.p_zero - nf.r()) - (nf.p_minus + nf.p_zero + nf.r()) -
                   even(m) * (nf.q_zero + nf.q_plus) - 2 * nf.r_star();
  for (const auto& t : nf.thetas) v += 2 * to_int64(ceil(times(m, t)));
  for (const auto& a : nf.alphas) v += 2 * phi(times(m, a));
  return v;
}

std::int64_t nullity_orientable(const NormalForm& nf, std::int64_t nu1, std::int64_t m) {
  require_valid(nf);
  require_iterate(m);
  return nu1 + even(m) * nf.eigen_minus_one_nullity() + 2 * varsigma(nf, m, ExactReal(0));
}

std::int64_t index_minus1(const NormalForm& nf, std::int64_t i1, std::int64_t m) {
  return index_orientable(nf, i1, 2 * m) - index_orientable(nf, i1, m);
}

std::int64_t nullity_minus1(const NormalForm& nf, std::int64_t nu1, std::int64_t m) {
  return nullity_orientable(nf, nu1, 2 * m) - nullity_orientable(nf, nu1, m);
}

std::int64_t index_minus1_closed_form(const NormalForm& nf, std::int64_t i1, std::int64_t m) {
  require_valid(nf);
  require_iterate(m);
  std::int64_t v = m * (i1 + nf.p_minus + nf.p_zero - nf.r()) - (1 - even(m)) * (nf.q_zero + nf.q_plus) -
                   2 * nf.r_star();
  for (const auto& t : nf.thetas) v += 2 * to_int64(ceil(times(m, t) - half()));
  for (const auto& a : nf.alphas) v += 2 * phi(times(m, a) - half());
  return v;
}

std::int64_t nullity_minus1_closed_form(const NormalForm& nf, std::int64_t m) {
  require_valid(nf);
  require_iterate(m);
  return (1 - even(m)) * nf.eigen_minus_one_nullity() + 2 * varsigma(nf, m, half());
}

std::int64_t index_nonorientable(const GeodesicModel& g, std::int64_t m) {
  require_nonorientable(g);
  require_valid(g.nf);
  require_iterate(m);
  const NormalForm& nf = g.nf;
  std::int64_t d_odd = g.dim % 2 != 0 ? 1 : 0;
  std::int64_t v = m * (g.ind1 + nf.q_zero + nf.q_plus - 2 * nf.r_prime) - (nf.q_zero + nf.q_plus) -
                   even(m) * (nf.r() + nf.p_minus + nf.p_zero + d_odd) - 2 * nf.r_star();
  for (const auto& t : nf.thetas) v += 2 * to_int64(shifted_ceil(times(m, t), m));
  for (const auto& a : nf.alphas) v += 2 * shifted_phi(times(m, a), m);
  return v;
}

std::int64_t nullity_nonorientable(const GeodesicModel& g, std::int64_t m) {
  require_nonorientable(g);
  require_valid(g.nf);
  require_iterate(m);
  std::int64_t d_odd = g.dim % 2 != 0 ? 1 : 0;
  return g.null1 + even(m) * (g.nf.eigen_one_nullity() + d_odd) + 2 * varsigma_m(g.nf, m);
}

std::pair<std::int64_t, std::int64_t> nonorientable_via_reduction(const GeodesicModel& g,
                                                                  std::int64_t m) {
  require_nonorientable(g);
  NormalForm nf = g.nf;
  std::int64_t correction = 0;
  if (g.dim % 2 != 0) {
    // Prepend N1(1,1): one more p_- block in a space two dimensions larger.
    nf.p_minus += 1;
    nf.half_dim += 1;
    correction = 1;
  }
  // ind(c) = i_{-1}(gamma), so i(gamma) follows from the splitting relation.
  std::int64_t i1 = index_from_minus1(nf, g.ind1);
  std::int64_t nu1 = nf.eigen_one_nullity();
  if (m % 2 != 0) {
    return {index_minus1(nf, i1, m), nullity_minus1(nf, nu1, m) - correction};
  }
  return {index_orientable(nf, i1, m), nullity_orientable(nf, nu1, m) - correction};
}

std::int64_t index(const GeodesicModel& g, std::int64_t m) {
  return g.orientable ? index_orientable(g.nf, g.ind1, m) : index_nonorientable(g, m);
}

std::int64_t nullity(const GeodesicModel& g, std::int64_t m) {
  return g.orientable ? nullity_orientable(g.nf, g.null1, m) : nullity_nonorientable(g, m);
}

ExactReal mean_index(const GeodesicModel& g) {
  const NormalForm& nf = g.nf;
  ExactReal v = g.orientable ? ExactReal(g.ind1 + nf.p_minus + nf.p_zero - nf.r())
                             : ExactReal(g.ind1 + nf.q_zero + nf.q_plus - 2 * nf.r_prime);
  for (const auto& t : nf.thetas) v += ExactReal(2) * t;
  return v;
}

bool mean_index_bound_check(const GeodesicModel& g, std::int64_t M) {
  return mean_index_bound_check(g, M, mean_index(g));
}

bool mean_index_bound_check(const GeodesicModel& g, std::int64_t M, const ExactReal& mean) {
  ExactReal bound(2 * g.dim - 2);
  for (std::int64_t m = 1; m <= M; ++m) {
    ExactReal diff = ExactReal(index(g, m)) - times(m, mean);
    if (diff.sign() < 0) diff = -diff;
    if (diff > bound) return false;
  }
  return true;
}

IndexSequence::IndexSequence(GeodesicModel g) : model_(std::move(g)) { require_valid(model_); }

IndexNullity IndexSequence::at(std::int64_t m) const {
  {
    std::lock_guard lock(mu_);
    auto it = values_.find(m);
    if (it != values_.end()) return it->second;
  }
  IndexNullity v{index(model_, m), nullity(model_, m)};
  std::lock_guard lock(mu_);
  values_.emplace(m, v);
  return v;
}

}  // namespace rpgeo
