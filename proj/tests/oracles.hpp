#ifndef XYK_TESTS_ORACLES_HPP
#define XYK_TESTS_ORACLES_HPP

// Test-only oracles, deliberately independent of the library's computation
// paths: a permutation-sum determinant and a Macaulay-matrix membership
// decision by exact linear algebra.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "xyk/detlab.hpp"

namespace oracles {

using xyk::Monomial;
using xyk::Polynomial;
using xyk::RingPtr;

/// det(X) as the signed sum over all permutations.
template <class F>
xyk::Polynomial<typename F::Element> perm_determinant(const xyk::SymbolicMatrix<F>& M) {
  using K = typename F::Element;
  int n = M.cols();
  std::vector<int> perm(static_cast<size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  Polynomial<K> acc = Polynomial<K>::zero(M.ring());
  do {
    // sign by counting inversions
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) ++inv;
    Polynomial<K> prod = Polynomial<K>::constant(M.ring(), M.field().one());
    for (int i = 1; i <= n; ++i) prod = prod * M.entry(i, perm[static_cast<size_t>(i - 1)]);
    acc = (inv % 2 == 0) ? acc + prod : acc - prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

/// All monomials of total degree d over the ring's variables.
inline void monomials_of_degree(int nvars, int d, std::vector<Monomial>& out) {
  std::vector<Monomial::Entry> cur;
  std::function<void(int, int)> rec = [&](int var, int left) {
    if (var == nvars) {
      if (left == 0) out.push_back(Monomial::from_entries(cur));
      return;
    }
    for (int e = 0; e <= left; ++e) {
      if (e > 0) cur.push_back({var, e});
      rec(var + 1, left - e);
      if (e > 0) cur.pop_back();
    }
  };
  rec(0, d);
}

/// Membership in the span of the degree-d slice of a homogeneous ideal,
/// decided by exact Gaussian elimination. The row space for degree d is
/// {m * g_i : deg(m) + deg(g_i) = d}; for a homogeneous ideal, a polynomial
/// lies in the ideal iff each of its homogeneous components lies in the
/// corresponding slice.
template <class K>
class MacaulayOracle {
 public:
  MacaulayOracle(RingPtr ring, std::vector<Polynomial<K>> gens)
      : ring_(std::move(ring)), gens_(std::move(gens)) {
    for (const auto& g : gens_)
      if (!g.is_homogeneous())
        throw std::invalid_argument("Macaulay oracle needs homogeneous generators");
  }

  bool member(const Polynomial<K>& p) {
    if (p.is_zero()) return true;
    std::map<int, std::vector<xyk::Term<K>>> comps;
    for (const auto& t : p.terms()) comps[t.m.degree()].push_back(t);
    for (auto& [d, ts] : comps) {
      Polynomial<K> comp = Polynomial<K>::from_terms(ring_, ts);
      if (!component_member(comp, d)) return false;
    }
    return true;
  }

 private:
  struct MonoLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
      return Monomial::cmp_declaration(a, b) == std::strong_ordering::less;
    }
  };

  struct Slice {
    std::vector<Monomial> basis;               // column labels
    std::map<Monomial, int, MonoLess> col;     // monomial -> column
    std::vector<std::vector<K>> rref;          // reduced rows
    std::vector<int> pivot;                    // pivot column per row
  };

  bool component_member(const Polynomial<K>& comp, int d) {
    Slice& s = slice(d);
    std::vector<K> vec = to_vector(comp, s);
    reduce_against(vec, s);
    for (const auto& c : vec)
      if (!c.is_zero()) return false;
    return true;
  }

  std::vector<K> to_vector(const Polynomial<K>& p, const Slice& s) {
    std::vector<K> v(s.basis.size());
    for (const auto& t : p.terms()) {
      auto it = s.col.find(t.m);
      if (it == s.col.end()) throw std::invalid_argument("monomial outside slice basis");
      v[static_cast<size_t>(it->second)] = t.c;
    }
    return v;
  }

  void reduce_against(std::vector<K>& v, const Slice& s) {
    for (size_t r = 0; r < s.rref.size(); ++r) {
      const K& lead = v[static_cast<size_t>(s.pivot[r])];
      if (lead.is_zero()) continue;
      K factor = lead;  // rows are normalized to pivot 1
      for (size_t c = 0; c < v.size(); ++c) {
        K delta = s.rref[r][c] * factor;
        if (!delta.is_zero()) v[c] = v[c] - delta;
      }
    }
  }

  Slice& slice(int d) {
    auto it = slices_.find(d);
    if (it != slices_.end()) return it->second;
    Slice s;
    monomials_of_degree(ring_->var_count(), d, s.basis);
    for (size_t i = 0; i < s.basis.size(); ++i) s.col[s.basis[i]] = static_cast<int>(i);
    // rows: multiples of generators landing in degree d
    for (const auto& g : gens_) {
      if (g.is_zero()) continue;
      int dg = g.total_degree();
      if (dg > d) continue;
      std::vector<Monomial> mults;
      monomials_of_degree(ring_->var_count(), d - dg, mults);
      for (const auto& m : mults) {
        Polynomial<K> row_poly = g.mul_term(unit(), m);
        std::vector<K> row = to_vector(row_poly, s);
        insert_row(std::move(row), s);
      }
    }
    return slices_.emplace(d, std::move(s)).first->second;
  }

  void insert_row(std::vector<K> row, Slice& s) {
    // eliminate by existing rows, then normalize and record
    for (size_t r = 0; r < s.rref.size(); ++r) {
      const K& lead = row[static_cast<size_t>(s.pivot[r])];
      if (lead.is_zero()) continue;
      K factor = lead;
      for (size_t c = 0; c < row.size(); ++c) {
        K delta = s.rref[r][c] * factor;
        if (!delta.is_zero()) row[c] = row[c] - delta;
      }
    }
    int p = -1;
    for (size_t c = 0; c < row.size(); ++c)
      if (!row[c].is_zero()) {
        p = static_cast<int>(c);
        break;
      }
    if (p < 0) return;  // dependent row
    K lead = row[static_cast<size_t>(p)];
    for (auto& c : row) c = c / lead;
    // back-substitute into earlier rows
    for (size_t r = 0; r < s.rref.size(); ++r) {
      K f = s.rref[r][static_cast<size_t>(p)];
      if (f.is_zero()) continue;
      for (size_t c = 0; c < row.size(); ++c) {
        K delta = row[c] * f;
        if (!delta.is_zero()) s.rref[r][c] = s.rref[r][c] - delta;
      }
    }
    s.rref.push_back(std::move(row));
    s.pivot.push_back(p);
  }

  K unit() const {
    for (const auto& g : gens_)
      if (!g.is_zero()) return g.terms()[0].c / g.terms()[0].c;
    throw std::invalid_argument("no nonzero generator");
  }

  RingPtr ring_;
  std::vector<Polynomial<K>> gens_;
  std::map<int, Slice> slices_;
};

}  // namespace oracles

#endif
