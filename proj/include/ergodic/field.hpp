#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace ergodic {

/// Arbitrary-precision rational, always canonical (lowest terms, positive
/// denominator).  Backed by GMP; mpq_class arithmetic keeps the invariant.
using Rational = mpq_class;

Rational rational_of(long num, long den = 1);

/// Parses "n" or "n/d" (optional sign). Throws std::invalid_argument on
/// anything else, including decimal notation.
Rational parse_rational(const std::string& text);

/// Canonical rational rendering ("3", "-1/8").
std::string rational_string(const Rational& q);

/// Valid field tags are square-free integers >= 2.
bool valid_field_tag(long d);

/// Element a + b*sqrt(d) of the real quadratic field Q(sqrt(d)).
///
/// The representation (a, b, d) is unique, so equality of values is
/// structural equality.  All arithmetic is exact; comparison is decided by
/// rational sign analysis, never by floating point.  Two values interoperate
/// only if their field tags agree — mixing tags throws.
class QuadNumber {
 public:
  static constexpr long kDefaultFieldTag = 5;

  QuadNumber() : QuadNumber(Rational(0), Rational(0), kDefaultFieldTag) {}
  QuadNumber(Rational a, Rational b, long d);

  static QuadNumber rational(Rational a, long d = kDefaultFieldTag) {
    return QuadNumber(std::move(a), Rational(0), d);
  }
  static QuadNumber integer(long n, long d = kDefaultFieldTag) {
    return rational(Rational(n), d);
  }
  static QuadNumber zero(long d = kDefaultFieldTag) { return integer(0, d); }
  static QuadNumber one(long d = kDefaultFieldTag) { return integer(1, d); }

  /// (sqrt(5) - 1) / 2, the default rotation angle.
  static QuadNumber golden();

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  long field_tag() const { return d_; }
  bool is_rational() const { return sgn(b_) == 0; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

  /// Sign of the real value a + b*sqrt(d) in {-1, 0, +1}.
  int sign() const;

  QuadNumber operator-() const;
  friend QuadNumber operator+(const QuadNumber& x, const QuadNumber& y);
  friend QuadNumber operator-(const QuadNumber& x, const QuadNumber& y);
  friend QuadNumber operator*(const QuadNumber& x, const QuadNumber& y);
  friend QuadNumber operator/(const QuadNumber& x, const QuadNumber& y);

  QuadNumber& operator+=(const QuadNumber& y) { return *this = *this + y; }
  QuadNumber& operator-=(const QuadNumber& y) { return *this = *this - y; }
  QuadNumber& operator*=(const QuadNumber& y) { return *this = *this * y; }
  QuadNumber& operator/=(const QuadNumber& y) { return *this = *this / y; }

  bool operator==(const QuadNumber& y) const;
  bool operator<(const QuadNumber& y) const { return compare(*this, y) < 0; }
  bool operator<=(const QuadNumber& y) const { return compare(*this, y) <= 0; }
  bool operator>(const QuadNumber& y) const { return compare(*this, y) > 0; }
  bool operator>=(const QuadNumber& y) const { return compare(*this, y) >= 0; }

  /// Exact total-order comparison; returns -1, 0, or +1.
  friend int compare(const QuadNumber& x, const QuadNumber& y);

 private:
  Rational a_;
  Rational b_;
  long d_;
};

/// floor(x) as an exact integer; terminates because b != 0 makes x irrational.
mpz_class quad_floor(const QuadNumber& x);

/// (floor, frac) with floor <= x < floor + 1 and frac = x - floor in [0, 1).
std::pair<mpz_class, QuadNumber> floor_mod1(const QuadNumber& x);

/// Certified enclosure lo <= sqrt(d) < hi with hi - lo = 2^-prec_bits.
std::pair<Rational, Rational> sqrt_enclosure(long d, unsigned prec_bits);

/// Certified enclosure [lo, hi] of the real value of x; width |b| * 2^-prec.
std::pair<Rational, Rational> rational_enclosure(const QuadNumber& x,
                                                 unsigned prec_bits);

/// Serialization grammar: "a_num/a_den+b_num/b_den*sqrt(D)", denominators
/// always explicit, e.g. "-1/2+1/2*sqrt(5)".
std::string quad_string(const QuadNumber& x);

/// Fixed-point decimal rendering (round half up), deterministic.
std::string quad_decimal(const QuadNumber& x, int digits = 12);

/// Accepts the quad_string grammar, bare rationals ("1/8", "-3"), and the
/// alias "golden".
QuadNumber parse_quad(const std::string& text,
                      long default_d = QuadNumber::kDefaultFieldTag);

}  // namespace ergodic
