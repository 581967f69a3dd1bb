#ifndef XYK_POLYNOMIAL_HPP
#define XYK_POLYNOMIAL_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "xyk/coeff.hpp"
#include "xyk/monomial.hpp"
#include "xyk/order.hpp"
#include "xyk/ring.hpp"

namespace xyk {

template <class K>
struct Term {
  K c;
  Monomial m;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse multivariate polynomial over an exact field: a canonical sorted sum
/// of nonzero terms. Storage is sorted descending under the ring's
/// declaration order, which makes equality structural and order-independent;
/// any monomial order can be applied on top for leading terms and printing.
/// Immutable value semantics.
template <class K>
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }

  static Polynomial from_terms(RingPtr ring, std::vector<Term<K>> ts) {
    for (const auto& t : ts)
      if (t.m.max_var() >= ring->var_count())
        throw RingMismatch();
    std::sort(ts.begin(), ts.end(), [](const Term<K>& a, const Term<K>& b) {
      return Monomial::cmp_declaration(a.m, b.m) == std::strong_ordering::greater;
    });
    Polynomial p(std::move(ring));
    for (auto& t : ts) {
      if (t.c.is_zero()) continue;
      if (!p.terms_.empty() && p.terms_.back().m == t.m) {
        p.terms_.back().c += t.c;
        if (p.terms_.back().c.is_zero()) p.terms_.pop_back();
      } else {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  static Polynomial constant(RingPtr ring, K c) {
    Polynomial p(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({std::move(c), Monomial()});
    return p;
  }

  static Polynomial variable(RingPtr ring, int var_index, K one) {
    Monomial m = Monomial::var(var_index);
    Polynomial p(std::move(ring));
    p.terms_.push_back({std::move(one), std::move(m)});
    return p;
  }

  static Polynomial term(RingPtr ring, K c, Monomial m) {
    Polynomial p(std::move(ring));
    if (!c.is_zero()) p.terms_.push_back({std::move(c), std::move(m)});
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term<K>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one());
  }

  int total_degree() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.m.degree());
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_[0].m.degree();
    for (const auto& t : terms_)
      if (t.m.degree() != d) return false;
    return true;
  }

  Polynomial operator-() const {
    Polynomial p(ring_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({-t.c, t.m});
    return p;
  }

  Polynomial operator+(const Polynomial& b) const {
    check_ring(b);
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size() + b.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size()) {
        out.terms_.push_back(terms_[i++]);
      } else if (i == terms_.size()) {
        out.terms_.push_back(b.terms_[j++]);
      } else {
        auto c = Monomial::cmp_declaration(terms_[i].m, b.terms_[j].m);
        if (c == std::strong_ordering::greater) {
          out.terms_.push_back(terms_[i++]);
        } else if (c == std::strong_ordering::less) {
          out.terms_.push_back(b.terms_[j++]);
        } else {
          K s = terms_[i].c + b.terms_[j].c;
          if (!s.is_zero()) out.terms_.push_back({std::move(s), terms_[i].m});
          ++i;
          ++j;
        }
      }
    }
    return out;
  }

  Polynomial operator-(const Polynomial& b) const { return *this + (-b); }

  Polynomial mul_term(const K& c, const Monomial& m) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.c * c, t.m * m});
    return out;  // multiplicativity keeps the declaration sort intact
  }

  Polynomial operator*(const K& c) const { return mul_term(c, Monomial()); }

  Polynomial operator*(const Polynomial& b) const {
    check_ring(b);
    std::vector<Term<K>> acc;
    acc.reserve(terms_.size() * b.terms_.size());
    for (const auto& s : terms_)
      for (const auto& t : b.terms_) acc.push_back({s.c * t.c, s.m * t.m});
    return from_terms(ring_, std::move(acc));
  }

  Polynomial pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative polynomial power");
    if (terms_.empty()) {
      if (k == 0) throw std::invalid_argument("0^0 polynomial");
      return *this;
    }
    Polynomial out = constant(ring_, unit_coeff());
    Polynomial base = *this;
    while (k > 0) {
      if (k & 1) out = out * base;
      base = k > 1 ? base * base : base;
      k >>= 1;
    }
    return out;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_->same_universe(*b.ring_) && a.terms_ == b.terms_;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// The order-maximal term. Errors on the zero polynomial.
  const Term<K>& leading_term(const MonomialOrder& order) const {
    if (terms_.empty())
      throw std::invalid_argument("leading term of the zero polynomial");
    size_t best = 0;
    for (size_t i = 1; i < terms_.size(); ++i)
      if (order.greater(terms_[i].m, terms_[best].m)) best = i;
    return terms_[best];
  }

  std::vector<Term<K>> sorted_terms(const MonomialOrder& order) const {
    std::vector<Term<K>> ts = terms_;
    std::sort(ts.begin(), ts.end(), [&order](const Term<K>& a, const Term<K>& b) {
      return order.greater(a.m, b.m);
    });
    return ts;
  }

  Polynomial monic(const MonomialOrder& order) const {
    if (terms_.empty()) return *this;
    K lc = leading_term(order).c;
    if (lc.is_one()) return *this;
    Polynomial out(ring_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.c / lc, t.m});
    return out;
  }

  /// Reinterpret in an extended ring (same variables plus auxiliaries).
  Polynomial in_ring(RingPtr ext) const {
    if (!ext->extends(*ring_)) throw RingMismatch();
    Polynomial out(std::move(ext));
    out.terms_ = terms_;
    return out;
  }

  /// Map back into a base ring; every monomial must avoid the extra
  /// variables.
  Polynomial restrict_to(RingPtr base) const {
    if (!ring_->extends(*base)) throw RingMismatch();
    for (const auto& t : terms_)
      if (t.m.max_var() >= base->var_count()) throw RingMismatch();
    Polynomial out(std::move(base));
    out.terms_ = terms_;
    return out;
  }

  bool touches_var_at_least(int first_idx) const {
    for (const auto& t : terms_)
      if (t.m.uses_var_at_least(first_idx)) return true;
    return false;
  }

  std::string str() const { return str_sorted(terms_); }

  std::string str(const MonomialOrder& order) const {
    return str_sorted(sorted_terms(order));
  }

 private:
  K unit_coeff() const { return terms_[0].c / terms_[0].c; }

  std::string str_sorted(const std::vector<Term<K>>& ts) const {
    if (ts.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < ts.size(); ++i) {
      const auto& t = ts[i];
      bool neg = coeff_negative(t.c);
      K a = coeff_abs(t.c);
      if (i == 0) {
        if (neg) s += "-";
      } else {
        s += neg ? " - " : " + ";
      }
      if (t.m.is_one()) {
        s += coeff_text(a);
      } else if (a.is_one()) {
        s += t.m.str(*ring_);
      } else {
        s += coeff_text(a) + "*" + t.m.str(*ring_);
      }
    }
    return s;
  }

  void check_ring(const Polynomial& b) const {
    if (ring_ != b.ring_ && !ring_->same_universe(*b.ring_)) throw RingMismatch();
  }

  RingPtr ring_;
  std::vector<Term<K>> terms_;
};

}  // namespace xyk

#endif
