#ifndef XYK_MONOMIAL_HPP
#define XYK_MONOMIAL_HPP

#include <algorithm>
#include <compare>
#include <limits>
#include <string>
#include <vector>

#include "xyk/errors.hpp"
#include "xyk/ring.hpp"

namespace xyk {

/// Sparse exponent vector over a ring's dense variable indices. Entries are
/// (variable index, exponent) with exponent > 0, sorted by variable index.
class Monomial {
 public:
  using Entry = std::pair<int, int>;

  Monomial() = default;

  static Monomial var(int idx, int exp = 1) {
    Monomial m;
    if (exp < 0) throw ExponentOverflow();
    if (exp > 0) m.e_.push_back({idx, exp});
    return m;
  }

  static Monomial from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end());
    Monomial m;
    for (const auto& [v, e] : entries) {
      if (e == 0) continue;
      if (e < 0) throw ExponentOverflow();
      if (!m.e_.empty() && m.e_.back().first == v) {
        long s = static_cast<long>(m.e_.back().second) + e;
        if (s > std::numeric_limits<int>::max()) throw ExponentOverflow();
        m.e_.back().second = static_cast<int>(s);
      } else {
        m.e_.push_back({v, e});
      }
    }
    return m;
  }

  const std::vector<Entry>& entries() const { return e_; }
  bool is_one() const { return e_.empty(); }

  int degree() const {
    long d = 0;
    for (const auto& [v, e] : e_) d += e;
    if (d > std::numeric_limits<int>::max()) throw ExponentOverflow();
    return static_cast<int>(d);
  }

  int exponent(int var) const {
    for (const auto& [v, e] : e_)
      if (v == var) return e;
    return 0;
  }

  bool squarefree() const {
    for (const auto& [v, e] : e_)
      if (e > 1) return false;
    return true;
  }

  int max_var() const { return e_.empty() ? -1 : e_.back().first; }

  bool uses_var_at_least(int first_idx) const {
    return !e_.empty() && e_.back().first >= first_idx;
  }

  Monomial operator*(const Monomial& b) const {
    Monomial out;
    out.e_.reserve(e_.size() + b.e_.size());
    size_t i = 0, j = 0;
    while (i < e_.size() || j < b.e_.size()) {
      if (j == b.e_.size() || (i < e_.size() && e_[i].first < b.e_[j].first)) {
        out.e_.push_back(e_[i++]);
      } else if (i == e_.size() || b.e_[j].first < e_[i].first) {
        out.e_.push_back(b.e_[j++]);
      } else {
        long s = static_cast<long>(e_[i].second) + b.e_[j].second;
        if (s > std::numeric_limits<int>::max()) throw ExponentOverflow();
        out.e_.push_back({e_[i].first, static_cast<int>(s)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  Monomial pow(int k) const {
    if (k < 0) throw ExponentOverflow();
    Monomial out;
    for (const auto& [v, e] : e_) {
      long s = static_cast<long>(e) * k;
      if (s > std::numeric_limits<int>::max()) throw ExponentOverflow();
      if (s > 0) out.e_.push_back({v, static_cast<int>(s)});
    }
    return out;
  }

  /// Does this divide m?
  bool divides(const Monomial& m) const {
    size_t j = 0;
    for (const auto& [v, e] : e_) {
      while (j < m.e_.size() && m.e_[j].first < v) ++j;
      if (j == m.e_.size() || m.e_[j].first != v || m.e_[j].second < e) return false;
    }
    return true;
  }

  /// a / b, assuming b | a.
  static Monomial div(const Monomial& a, const Monomial& b) {
    Monomial out;
    size_t j = 0;
    for (const auto& [v, e] : a.e_) {
      int sub = 0;
      while (j < b.e_.size() && b.e_[j].first < v) ++j;
      if (j < b.e_.size() && b.e_[j].first == v) sub = b.e_[j].second;
      if (sub > e) throw std::invalid_argument("monomial division is not exact");
      if (e - sub > 0) out.e_.push_back({v, e - sub});
    }
    return out;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial out;
    size_t i = 0, j = 0;
    while (i < a.e_.size() || j < b.e_.size()) {
      if (j == b.e_.size() || (i < a.e_.size() && a.e_[i].first < b.e_[j].first))
        out.e_.push_back(a.e_[i++]);
      else if (i == a.e_.size() || b.e_[j].first < a.e_[i].first)
        out.e_.push_back(b.e_[j++]);
      else {
        out.e_.push_back({a.e_[i].first, std::max(a.e_[i].second, b.e_[j].second)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  static Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial out;
    size_t i = 0, j = 0;
    while (i < a.e_.size() && j < b.e_.size()) {
      if (a.e_[i].first < b.e_[j].first)
        ++i;
      else if (b.e_[j].first < a.e_[i].first)
        ++j;
      else {
        out.e_.push_back({a.e_[i].first, std::min(a.e_[i].second, b.e_[j].second)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  static bool coprime(const Monomial& a, const Monomial& b) {
    size_t i = 0, j = 0;
    while (i < a.e_.size() && j < b.e_.size()) {
      if (a.e_[i].first < b.e_[j].first)
        ++i;
      else if (b.e_[j].first < a.e_[i].first)
        ++j;
      else
        return false;
    }
    return true;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  /// Lexicographic comparison where variable index 0 has highest priority
  /// (the ring's declaration order). Used as the canonical storage order and
  /// as the comparison in rank-translated Groebner kernels.
  static std::strong_ordering cmp_declaration(const Monomial& u, const Monomial& v) {
    size_t i = 0, j = 0;
    while (i < u.e_.size() || j < v.e_.size()) {
      int vu = i < u.e_.size() ? u.e_[i].first : std::numeric_limits<int>::max();
      int vv = j < v.e_.size() ? v.e_[j].first : std::numeric_limits<int>::max();
      if (vu < vv) return std::strong_ordering::greater;
      if (vv < vu) return std::strong_ordering::less;
      if (u.e_[i].second != v.e_[j].second)
        return u.e_[i].second > v.e_[j].second ? std::strong_ordering::greater
                                               : std::strong_ordering::less;
      ++i;
      ++j;
    }
    return std::strong_ordering::equal;
  }

  std::string str(const Ring& ring) const;  // "x[1][1]^2*y[2]", "1" for the unit

 private:
  std::vector<Entry> e_;
};

inline std::string Monomial::str(const Ring& ring) const {
  if (e_.empty()) return "1";
  std::string s;
  for (const auto& [v, e] : e_) {
    if (!s.empty()) s += "*";
    s += ring.var(v).str();
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace xyk

#endif
