#ifndef XYK_COEFF_HPP
#define XYK_COEFF_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "xyk/errors.hpp"

namespace xyk {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator; zero is 0/1. Immutable value semantics: every operation
/// returns a new canonical value.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit so integer literals work
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);
  static Rational parse(const std::string& text);  // "p" or "p/q"

  Rational operator-() const;
  Rational operator+(const Rational& b) const;
  Rational operator-(const Rational& b) const;
  Rational operator*(const Rational& b) const;
  Rational operator/(const Rational& b) const;  // throws DivisionByZero
  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  Rational inverse() const;
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool negative() const { return sgn(v_) < 0; }
  Rational abs() const;

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;  // kept canonical
};

/// Element of GF(p), p prime, p < 2^31. Residue reduced into [0, p).
/// A default-constructed element is a detached zero that combines with any
/// modulus; elements with two different concrete moduli never mix.
class GFp {
 public:
  GFp() : r_(0), p_(0) {}
  GFp(std::uint64_t value, std::uint64_t p);
  static GFp from_signed(std::int64_t value, std::uint64_t p);

  GFp operator-() const;
  GFp operator+(const GFp& b) const;
  GFp operator-(const GFp& b) const;
  GFp operator*(const GFp& b) const;
  GFp operator/(const GFp& b) const;  // throws DivisionByZero
  GFp& operator+=(const GFp& b) { return *this = *this + b; }
  GFp& operator-=(const GFp& b) { return *this = *this - b; }
  GFp& operator*=(const GFp& b) { return *this = *this * b; }
  GFp& operator/=(const GFp& b) { return *this = *this / b; }

  GFp inverse() const;
  bool is_zero() const { return r_ == 0; }
  bool is_one() const { return r_ == 1; }
  bool negative() const { return false; }
  GFp abs() const { return *this; }

  std::uint64_t residue() const { return r_; }
  std::uint64_t modulus() const { return p_; }

  friend bool operator==(const GFp& a, const GFp& b);
  friend bool operator!=(const GFp& a, const GFp& b) { return !(a == b); }

  std::string str() const;  // "3 mod 7"
  friend std::ostream& operator<<(std::ostream& os, const GFp& a);

 private:
  static std::uint64_t join(const GFp& a, const GFp& b);  // modulus reconciliation
  std::uint64_t r_;
  std::uint64_t p_;  // 0 = detached zero
};

/// Coefficient field contexts. They carry whatever state is needed to build
/// elements from parsed literals; the polynomial layer is generic over the
/// element type.
struct RationalField {
  using Element = Rational;
  Element zero() const { return Rational(); }
  Element one() const { return Rational(1); }
  Element from_literal(const std::string& num, const std::string& den) const;
  std::string name() const { return "rationals"; }
};

struct PrimeField {
  std::uint64_t p;
  using Element = GFp;
  explicit PrimeField(std::uint64_t p_);
  Element zero() const { return GFp(0, p); }
  Element one() const { return GFp(1, p); }
  Element from_literal(const std::string& num, const std::string& den) const;
  std::string name() const { return "gf(" + std::to_string(p) + ")"; }
  static bool is_prime(std::uint64_t n);
  static constexpr std::uint64_t kDefaultPrime = 2147483647;  // 2^31 - 1
};

// Display hooks used by the polynomial printer. Rational coefficients print
// signed ("-7/3"); prime-field coefficients print as bare residues so that
// polynomial text stays within the grammar (the element form "3 mod 7" is
// used when a single field element is printed on its own).
inline bool coeff_negative(const Rational& c) { return c.negative(); }
inline bool coeff_negative(const GFp&) { return false; }
inline Rational coeff_abs(const Rational& c) { return c.abs(); }
inline GFp coeff_abs(const GFp& c) { return c; }
inline std::string coeff_text(const Rational& c) { return c.str(); }
inline std::string coeff_text(const GFp& c) { return std::to_string(c.residue()); }

}  // namespace xyk

#endif
