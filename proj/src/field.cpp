#include "ergodic/field.hpp"

#include <regex>
#include <sstream>

namespace ergodic {

namespace {

void require_same_tag(const QuadNumber& x, const QuadNumber& y) {
  if (x.field_tag() != y.field_tag()) {
    throw std::invalid_argument(
        "mismatched field tags: sqrt(" + std::to_string(x.field_tag()) +
        ") vs sqrt(" + std::to_string(y.field_tag()) + ")");
  }
}

mpz_class rational_floor(const Rational& q) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return fl;
}

}  // namespace

Rational rational_of(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  static const std::regex grammar(R"(^\s*([+-]?\d+)(?:/(\d+))?\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, grammar)) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  mpz_class num(m[1].str());
  mpz_class den = m[2].matched ? mpz_class(m[2].str()) : mpz_class(1);
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string rational_string(const Rational& q) { return q.get_str(); }

bool valid_field_tag(long d) {
  if (d < 2) return false;
  for (long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

QuadNumber::QuadNumber(Rational a, Rational b, long d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (!valid_field_tag(d_)) {
    throw std::invalid_argument("field tag must be square-free and >= 2, got " +
                                std::to_string(d_));
  }
  a_.canonicalize();
  b_.canonicalize();
}

QuadNumber QuadNumber::golden() {
  return QuadNumber(rational_of(-1, 2), rational_of(1, 2), 5);
}

int QuadNumber::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: |a| vs |b|*sqrt(d) decided by a^2 vs b^2*d.
  Rational lhs = a_ * a_;
  Rational rhs = b_ * b_ * d_;
  const int c = cmp(lhs, rhs);
  if (c == 0) return 0;  // impossible for a valid tag unless a = b = 0
  return c > 0 ? sa : sb;
}

QuadNumber QuadNumber::operator-() const { return QuadNumber(-a_, -b_, d_); }

QuadNumber operator+(const QuadNumber& x, const QuadNumber& y) {
  require_same_tag(x, y);
  return QuadNumber(x.a_ + y.a_, x.b_ + y.b_, x.d_);
}

QuadNumber operator-(const QuadNumber& x, const QuadNumber& y) {
  require_same_tag(x, y);
  return QuadNumber(x.a_ - y.a_, x.b_ - y.b_, x.d_);
}

QuadNumber operator*(const QuadNumber& x, const QuadNumber& y) {
  require_same_tag(x, y);
  Rational a = x.a_ * y.a_ + x.b_ * y.b_ * x.d_;
  Rational b = x.a_ * y.b_ + x.b_ * y.a_;
  return QuadNumber(std::move(a), std::move(b), x.d_);
}

QuadNumber operator/(const QuadNumber& x, const QuadNumber& y) {
  require_same_tag(x, y);
  if (y.is_zero()) throw std::invalid_argument("division by zero");
  // 1/(a + b sqrt d) = (a - b sqrt d) / (a^2 - b^2 d); the norm is nonzero
  // because sqrt(d) is irrational.
  Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * y.d_;
  QuadNumber conj(y.a_ / norm, -y.b_ / norm, y.d_);
  return x * conj;
}

bool QuadNumber::operator==(const QuadNumber& y) const {
  require_same_tag(*this, y);
  return a_ == y.a_ && b_ == y.b_;
}

int compare(const QuadNumber& x, const QuadNumber& y) {
  require_same_tag(x, y);
  return (x - y).sign();
}

std::pair<Rational, Rational> sqrt_enclosure(long d, unsigned prec_bits) {
  mpz_class scaled = d;
  scaled <<= 2 * prec_bits;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  mpz_class den(1);
  den <<= prec_bits;
  Rational lo(root, den);
  Rational hi(root + 1, den);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

std::pair<Rational, Rational> rational_enclosure(const QuadNumber& x,
                                                 unsigned prec_bits) {
  if (x.is_rational()) return {x.rational_part(), x.rational_part()};
  auto [slo, shi] = sqrt_enclosure(x.field_tag(), prec_bits);
  Rational lo, hi;
  if (sgn(x.surd_part()) > 0) {
    lo = x.rational_part() + x.surd_part() * slo;
    hi = x.rational_part() + x.surd_part() * shi;
  } else {
    lo = x.rational_part() + x.surd_part() * shi;
    hi = x.rational_part() + x.surd_part() * slo;
  }
  return {lo, hi};
}

mpz_class quad_floor(const QuadNumber& x) {
  if (x.is_rational()) return rational_floor(x.rational_part());
  for (unsigned prec = 16;; prec *= 2) {
    auto [lo, hi] = rational_enclosure(x, prec);
    mpz_class flo = rational_floor(lo);
    mpz_class fhi = rational_floor(hi);
    if (flo == fhi) return flo;
    if (prec > (1u << 24)) {
      throw std::logic_error("floor enclosure failed to converge");
    }
  }
}

std::pair<mpz_class, QuadNumber> floor_mod1(const QuadNumber& x) {
  mpz_class fl = quad_floor(x);
  QuadNumber frac = x - QuadNumber::rational(Rational(fl), x.field_tag());
  return {std::move(fl), std::move(frac)};
}

std::string quad_string(const QuadNumber& x) {
  std::ostringstream out;
  out << x.rational_part().get_num() << "/" << x.rational_part().get_den()
      << "+" << x.surd_part().get_num() << "/" << x.surd_part().get_den()
      << "*sqrt(" << x.field_tag() << ")";
  return out.str();
}

std::string quad_decimal(const QuadNumber& x, int digits) {
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned>(digits));
  QuadNumber scaled =
      x * QuadNumber::rational(Rational(pow10), x.field_tag()) +
      QuadNumber::rational(rational_of(1, 2), x.field_tag());
  mpz_class n = quad_floor(scaled);
  const bool neg = n < 0;
  mpz_class mag = neg ? mpz_class(-n) : n;
  mpz_class int_part = mag / pow10;
  mpz_class frac_part = mag % pow10;
  std::string frac = frac_part.get_str();
  frac.insert(frac.begin(), static_cast<size_t>(digits) - frac.size(), '0');
  return (neg ? "-" : "") + int_part.get_str() + "." + frac;
}

QuadNumber parse_quad(const std::string& text, long default_d) {
  static const std::regex full(
      R"(^\s*([+-]?\d+(?:/\d+)?)\+([+-]?\d+(?:/\d+)?)\*sqrt\((\d+)\)\s*$)");
  static const std::regex bare(R"(^\s*golden\s*$)");
  std::smatch m;
  if (std::regex_match(text, m, bare)) return QuadNumber::golden();
  if (std::regex_match(text, m, full)) {
    long d = std::stol(m[3].str());
    return QuadNumber(parse_rational(m[1].str()), parse_rational(m[2].str()),
                      d);
  }
  return QuadNumber::rational(parse_rational(text), default_d);
}

}  // namespace ergodic
