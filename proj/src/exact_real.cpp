#include "rpgeo/exact_real.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "rpgeo/error.hpp"

namespace rpgeo {

namespace {

// Splits d = s^2 * f with f square-free.
std::pair<std::int64_t, std::int64_t> square_free_split(std::int64_t d) {
  std::int64_t square_root = 1;
  std::int64_t rest = d;
  for (std::int64_t p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      square_root *= p;
    }
  }
  return {square_root, rest};
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExactReal parse() {
    skip_ws();
    ExactReal acc;
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
      } else if (!first) {
        break;
      }
      ExactReal t = term();
      acc += sign < 0 ? -t : t;
      first = false;
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("unexpected character");
    }
    skip_ws();
    if (!at_end()) fail("trailing characters");
    return acc;
  }

 private:
  ExactReal term() {
    ExactReal acc = factor();
    while (true) {
      skip_ws();
      if (peek() == '*') {
        get();
        acc *= factor();
      } else if (peek() == '/') {
        get();
        ExactReal d = factor();
        if (d.sign() == 0) fail("division by zero");
        acc /= d;
      } else {
        return acc;
      }
    }
  }

  ExactReal factor() {
    skip_ws();
    if (text_.substr(pos_, 4) == "sqrt") {
      pos_ += 4;
      skip_ws();
      expect('(');
      BigInt d = integer();
      skip_ws();
      expect(')');
      if (d.sign() < 0) fail("negative radicand");
      return ExactReal::sqrt(to_int64(d));
    }
    return ExactReal(Rational(integer()));
  }

  BigInt integer() {
    skip_ws();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char get() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse number '" + std::string(text_) + "': " + what + " at offset " +
                     std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ExactReal ExactReal::quadratic(Rational a, Rational b, std::int64_t d) {
  if (d < 0) throw std::domain_error("negative radicand");
  if (d == 0 || b.is_zero()) return ExactReal(std::move(a));
  auto [s, f] = square_free_split(d);
  b *= Rational(s);
  if (f == 1) return ExactReal(a + b);
  return ExactReal(std::move(a), std::move(b), f);
}

ExactReal ExactReal::parse(std::string_view text) { return Parser(text).parse(); }

void ExactReal::fold() {
  if (radicand_ != 0 && coeff_.is_zero()) radicand_ = 0;
}

std::int64_t ExactReal::common_field(const ExactReal& a, const ExactReal& b) {
  if (a.radicand_ == 0) return b.radicand_;
  if (b.radicand_ == 0 || b.radicand_ == a.radicand_) return a.radicand_;
  throw UnsupportedFieldError("mixed radicands sqrt(" + std::to_string(a.radicand_) + ") and sqrt(" +
                              std::to_string(b.radicand_) + ")");
}

int ExactReal::sign() const {
  int sa = rat_.sign();
  int sb = coeff_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with b^2 d.
  Rational a2 = rat_ * rat_;
  Rational b2d = coeff_ * coeff_ * Rational(radicand_);
  auto c = a2 <=> b2d;
  // a^2 == b^2 d is impossible for square-free d >= 2.
  if (c == std::strong_ordering::greater) return sa;
  return sb;
}

ExactReal ExactReal::operator-() const {
  ExactReal r = *this;
  r.rat_ = -r.rat_;
  r.coeff_ = -r.coeff_;
  return r;
}

ExactReal& ExactReal::operator+=(const ExactReal& o) {
  radicand_ = common_field(*this, o);
  rat_ += o.rat_;
  coeff_ += o.coeff_;
  fold();
  return *this;
}

ExactReal& ExactReal::operator-=(const ExactReal& o) {
  radicand_ = common_field(*this, o);
  rat_ -= o.rat_;
  coeff_ -= o.coeff_;
  fold();
  return *this;
}

ExactReal& ExactReal::operator*=(const ExactReal& o) {
  std::int64_t d = common_field(*this, o);
  Rational a = rat_ * o.rat_;
  if (d != 0) a += coeff_ * o.coeff_ * Rational(d);
  Rational b = rat_ * o.coeff_ + coeff_ * o.rat_;
  rat_ = std::move(a);
  coeff_ = std::move(b);
  radicand_ = d;
  fold();
  return *this;
}

ExactReal& ExactReal::operator/=(const ExactReal& o) {
  std::int64_t d = common_field(*this, o);
  if (o.sign() == 0) throw std::domain_error("division by zero");
  if (o.is_rational()) {
    rat_ /= o.rat_;
    coeff_ /= o.rat_;
    fold();
    return *this;
  }
  // Multiply by the conjugate: 1/(c + e sqrt d) = (c - e sqrt d)/(c^2 - e^2 d).
  Rational norm = o.rat_ * o.rat_ - o.coeff_ * o.coeff_ * Rational(d);
  ExactReal conj(o.rat_ / norm, -o.coeff_ / norm, d);
  return *this *= conj;
}

std::strong_ordering operator<=>(const ExactReal& a, const ExactReal& b) {
  int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering compare(const ExactReal& x, const ExactReal& y) { return x <=> y; }

std::string ExactReal::str() const {
  if (is_rational()) return rat_.str();
  Rational mag = abs(coeff_);
  std::string radical = "sqrt(" + std::to_string(radicand_) + ")";
  std::string body = mag == Rational(1) ? radical : mag.str() + "*" + radical;
  if (rat_.is_zero()) return coeff_.sign() < 0 ? "-" + body : body;
  return rat_.str() + (coeff_.sign() < 0 ? " - " : " + ") + body;
}

double ExactReal::to_double() const {
  double v = rat_.to_double();
  if (!is_rational()) v += coeff_.to_double() * std::sqrt(static_cast<double>(radicand_));
  return v;
}

std::ostream& operator<<(std::ostream& os, const ExactReal& x) { return os << x.str(); }

BigInt isqrt(const BigInt& n) {
  if (n.sign() < 0) throw std::domain_error("isqrt of negative");
  return boost::multiprecision::sqrt(n);
}

BigInt floor(const ExactReal& x) {
  if (x.is_rational()) return floor(x.rational_part());
  const Rational& a = x.rational_part();
  const Rational& b = x.radical_coeff();
  // x = (A + B sqrt d)/C with integers A, B and C > 0.
  BigInt c = lcm(a.den(), b.den());
  BigInt big_a = a.num() * (c / a.den());
  BigInt big_b = b.num() * (c / b.den());
  // B sqrt d is irrational, so it lies strictly between consecutive integers
  // and the floor of (A + B sqrt d)/C equals floor(N/C) for the integer N just below.
  BigInt s = isqrt(big_b * big_b * x.radicand());
  BigInt below = big_b.sign() > 0 ? BigInt(big_a + s) : BigInt(big_a - s - 1);
  return floor(Rational(below, c));
}

BigInt ceil(const ExactReal& x) {
  if (x.is_rational()) return ceil(x.rational_part());
  return floor(x) + 1;
}

int phi(const ExactReal& x) { return x.is_integer() ? 0 : 1; }

ExactReal frac(const ExactReal& x) { return x - ExactReal(Rational(floor(x))); }

namespace {
ExactReal parity_shift(const ExactReal& x, std::int64_t m) {
  if (m % 2 == 0) return x;
  return x - ExactReal(Rational(1, 2));
}
}  // namespace

BigInt shifted_ceil(const ExactReal& x, std::int64_t m) { return ceil(parity_shift(x, m)); }

int shifted_phi(const ExactReal& x, std::int64_t m) { return phi(parity_shift(x, m)); }

std::pair<bool, bool> half_identities_check(const ExactReal& a) {
  ExactReal two_a = ExactReal(2) * a;
  ExactReal shifted = a - ExactReal(Rational(1, 2));
  bool ceil_ok = ceil(two_a) - ceil(a) == ceil(shifted);
  bool phi_ok = phi(two_a) - phi(a) == phi(shifted) - 1;
  return {ceil_ok, phi_ok};
}

}  // namespace rpgeo
