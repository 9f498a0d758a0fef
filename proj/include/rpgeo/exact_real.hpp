#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include "rpgeo/rational.hpp"

namespace rpgeo {

/// A number a + b*sqrt(d) with rational a, b and square-free d >= 2, or a
/// plain rational (d == 0, b == 0).
///
/// Every value lives in a single quadratic field Q(sqrt(d)). Arithmetic and
/// comparison between two irrational values with different radicands throw
/// UnsupportedFieldError; a rational operand combines with anything.
class ExactReal {
 public:
  ExactReal() = default;
  ExactReal(Rational r) : rat_(std::move(r)) {}  // NOLINT
  ExactReal(std::int64_t n) : rat_(n) {}         // NOLINT

  /// a + b*sqrt(d). Square factors of d are pulled into b; d in {0, 1} or
  /// b == 0 folds to a rational.
  static ExactReal quadratic(Rational a, Rational b, std::int64_t d);
  static ExactReal sqrt(std::int64_t d) { return quadratic(0, 1, d); }

  /// Parses sums of terms such as "a/b + c/e*sqrt(d)", "sqrt(2) - 1",
  /// "-3/4*sqrt(5)". The inverse of str() on canonical values.
  static ExactReal parse(std::string_view text);

  const Rational& rational_part() const { return rat_; }
  const Rational& radical_coeff() const { return coeff_; }
  std::int64_t radicand() const { return radicand_; }

  bool is_rational() const { return radicand_ == 0; }
  bool is_integer() const { return is_rational() && rat_.is_integer(); }
  int sign() const;

  ExactReal operator-() const;
  ExactReal& operator+=(const ExactReal& o);
  ExactReal& operator-=(const ExactReal& o);
  ExactReal& operator*=(const ExactReal& o);
  ExactReal& operator/=(const ExactReal& o);

  friend ExactReal operator+(ExactReal a, const ExactReal& b) { return a += b; }
  friend ExactReal operator-(ExactReal a, const ExactReal& b) { return a -= b; }
  friend ExactReal operator*(ExactReal a, const ExactReal& b) { return a *= b; }
  friend ExactReal operator/(ExactReal a, const ExactReal& b) { return a /= b; }

  friend bool operator==(const ExactReal& a, const ExactReal& b) {
    return a.radicand_ == b.radicand_ && a.rat_ == b.rat_ && a.coeff_ == b.coeff_;
  }
  /// Exact total order; throws UnsupportedFieldError across distinct fields.
  friend std::strong_ordering operator<=>(const ExactReal& a, const ExactReal& b);

  std::string str() const;
  double to_double() const;

 private:
  ExactReal(Rational a, Rational b, std::int64_t d)
      : rat_(std::move(a)), coeff_(std::move(b)), radicand_(d) {}
  void fold();
  // Radicand shared by the two operands (0 when both are rational).
  static std::int64_t common_field(const ExactReal& a, const ExactReal& b);

  Rational rat_;
  Rational coeff_;
  std::int64_t radicand_ = 0;
};

std::ostream& operator<<(std::ostream& os, const ExactReal& x);

/// Ordering of x against y. Same as x <=> y.
std::strong_ordering compare(const ExactReal& x, const ExactReal& y);

/// [x], the greatest integer <= x.
BigInt floor(const ExactReal& x);
/// E(x) = min{k in Z | k >= x}.
BigInt ceil(const ExactReal& x);
/// phi(x) = E(x) - [x]; 0 exactly when x is an integer.
int phi(const ExactReal& x);
/// {x} = x - [x], in [0, 1).
ExactReal frac(const ExactReal& x);

/// E_m(x) = E(x - (1 - (-1)^m)/4): E(x) for even m, E(x - 1/2) for odd m.
BigInt shifted_ceil(const ExactReal& x, std::int64_t m);
/// phi_m(x) = phi(x - (1 - (-1)^m)/4).
int shifted_phi(const ExactReal& x, std::int64_t m);

/// Truth of E(2a) - E(a) = E(a - 1/2) and phi(2a) - phi(a) = phi(a - 1/2) - 1.
std::pair<bool, bool> half_identities_check(const ExactReal& a);

/// Integer square root floor(sqrt(n)) for n >= 0.
BigInt isqrt(const BigInt& n);

}  // namespace rpgeo
