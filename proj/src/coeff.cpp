#include "xyk/coeff.hpp"

#include <ostream>

namespace xyk {

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero();
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(mpz_class(text), mpz_class(1));
  return Rational(mpz_class(text.substr(0, slash)), mpz_class(text.substr(slash + 1)));
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }
Rational Rational::operator+(const Rational& b) const { return Rational(mpq_class(v_ + b.v_)); }
Rational Rational::operator-(const Rational& b) const { return Rational(mpq_class(v_ - b.v_)); }
Rational Rational::operator*(const Rational& b) const { return Rational(mpq_class(v_ * b.v_)); }

Rational Rational::operator/(const Rational& b) const {
  if (b.is_zero()) throw DivisionByZero();
  return Rational(mpq_class(v_ / b.v_));
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(mpq_class(1 / v_));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

GFp::GFp(std::uint64_t value, std::uint64_t p) : r_(value % p), p_(p) {
  if (p < 2) throw std::invalid_argument("prime-field modulus must be >= 2");
}

GFp GFp::from_signed(std::int64_t value, std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("prime-field modulus must be >= 2");
  std::int64_t m = value % static_cast<std::int64_t>(p);
  if (m < 0) m += static_cast<std::int64_t>(p);
  return GFp(static_cast<std::uint64_t>(m), p);
}

std::uint64_t GFp::join(const GFp& a, const GFp& b) {
  if (a.p_ == b.p_) return a.p_;
  if (a.p_ == 0) return b.p_;
  if (b.p_ == 0) return a.p_;
  throw ModulusMismatch(a.p_, b.p_);
}

GFp GFp::operator-() const {
  if (p_ == 0) return *this;
  return GFp(r_ == 0 ? 0 : p_ - r_, p_);
}

GFp GFp::operator+(const GFp& b) const {
  std::uint64_t p = join(*this, b);
  if (p == 0) return GFp();
  std::uint64_t s = r_ + b.r_;
  if (s >= p) s -= p;
  GFp out;
  out.r_ = s;
  out.p_ = p;
  return out;
}

GFp GFp::operator-(const GFp& b) const { return *this + (-b); }

GFp GFp::operator*(const GFp& b) const {
  std::uint64_t p = join(*this, b);
  if (p == 0) return GFp();
  // p < 2^31 so the product of two residues fits in 64 bits
  GFp out;
  out.r_ = (r_ * b.r_) % p;
  out.p_ = p;
  return out;
}

GFp GFp::operator/(const GFp& b) const {
  if (b.is_zero()) throw DivisionByZero();
  return *this * b.inverse();
}

GFp GFp::inverse() const {
  if (is_zero()) throw DivisionByZero();
  // Fermat: r^(p-2) mod p
  std::uint64_t base = r_, acc = 1, e = p_ - 2;
  while (e > 0) {
    if (e & 1) acc = (acc * base) % p_;
    base = (base * base) % p_;
    e >>= 1;
  }
  GFp out;
  out.r_ = acc;
  out.p_ = p_;
  return out;
}

bool operator==(const GFp& a, const GFp& b) {
  if (a.p_ == b.p_) return a.r_ == b.r_;
  if (a.p_ == 0 || b.p_ == 0) return a.r_ == 0 && b.r_ == 0;
  return false;
}

std::string GFp::str() const {
  return std::to_string(r_) + " mod " + std::to_string(p_);
}

std::ostream& operator<<(std::ostream& os, const GFp& a) { return os << a.str(); }

RationalField::Element RationalField::from_literal(const std::string& num,
                                                   const std::string& den) const {
  if (den.empty()) return Rational(mpz_class(num), mpz_class(1));
  return Rational(mpz_class(num), mpz_class(den));
}

PrimeField::PrimeField(std::uint64_t p_) : p(p_) {
  if (p < 2 || p > (1ull << 31)) throw std::invalid_argument("prime-field modulus out of range");
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

PrimeField::Element PrimeField::from_literal(const std::string& num,
                                             const std::string& den) const {
  mpz_class n(num);
  mpz_class r = n % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  GFp value(r.get_ui(), p);
  if (den.empty()) return value;
  mpz_class d(den);
  mpz_class rd = d % static_cast<unsigned long>(p);
  if (rd < 0) rd += static_cast<unsigned long>(p);
  return value / GFp(rd.get_ui(), p);
}

bool PrimeField::is_prime(std::uint64_t n) {
  mpz_class z(static_cast<unsigned long>(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

}  // namespace xyk
