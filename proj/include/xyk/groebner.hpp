#ifndef XYK_GROEBNER_HPP
#define XYK_GROEBNER_HPP

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "xyk/order.hpp"
#include "xyk/polynomial.hpp"

namespace xyk {

struct GBStats {
  std::uint64_t pairs_considered = 0;
  std::uint64_t pairs_skipped_coprime = 0;
  std::uint64_t pairs_reduced = 0;
  std::uint64_t reduction_steps = 0;
  std::size_t max_poly_terms = 0;
  std::size_t basis_size = 0;
  double elapsed_ms = 0;

  void absorb(const GBStats& o) {
    pairs_considered += o.pairs_considered;
    pairs_skipped_coprime += o.pairs_skipped_coprime;
    pairs_reduced += o.pairs_reduced;
    reduction_steps += o.reduction_steps;
    max_poly_terms = std::max(max_poly_terms, o.max_poly_terms);
    basis_size = std::max(basis_size, o.basis_size);
    elapsed_ms += o.elapsed_ms;
  }
};

/// Resource cap for a single computation. Lex bases can explode; fail loudly
/// instead of hanging.
struct Budget {
  std::uint64_t max_pair_reductions = 1'000'000;
  std::size_t max_poly_terms = 0;  // 0 = unlimited
  std::optional<std::chrono::steady_clock::time_point> deadline;

  static Budget unlimited() {
    Budget b;
    b.max_pair_reductions = std::numeric_limits<std::uint64_t>::max();
    return b;
  }

  Budget with_deadline_ms(double ms) const {
    Budget b = *this;
    if (ms > 0)
      b.deadline = std::chrono::steady_clock::now() +
                   std::chrono::milliseconds(static_cast<long>(ms));
    return b;
  }
};

struct BudgetExceeded : std::runtime_error {
  GBStats stats;
  BudgetExceeded(const std::string& what_, GBStats s)
      : std::runtime_error("budget exceeded: " + what_), stats(s) {}
};

namespace gbdetail {

inline Monomial to_rank(const Monomial& m, const std::vector<int>& rank) {
  std::vector<Monomial::Entry> es;
  es.reserve(m.entries().size());
  for (const auto& [v, e] : m.entries()) {
    if (v < 0 || v >= static_cast<int>(rank.size())) throw OrderDomainError();
    es.push_back({rank[static_cast<size_t>(v)], e});
  }
  return Monomial::from_entries(std::move(es));
}

inline Monomial from_rank(const Monomial& m, const std::vector<int>& priority) {
  std::vector<Monomial::Entry> es;
  es.reserve(m.entries().size());
  for (const auto& [r, e] : m.entries())
    es.push_back({priority[static_cast<size_t>(r)], e});
  return Monomial::from_entries(std::move(es));
}

// Inside the kernel every monomial lives in "rank space": variable indices
// are replaced by their priority ranks so the active lexicographic order
// coincides with Monomial::cmp_declaration. Term vectors are kept sorted
// strictly descending.
template <class K>
using TermVec = std::vector<Term<K>>;

template <class K>
TermVec<K> to_rank_terms(const Polynomial<K>& p, const MonomialOrder& order) {
  TermVec<K> out;
  out.reserve(p.term_count());
  for (const auto& t : p.terms()) out.push_back({t.c, to_rank(t.m, order.rank())});
  std::sort(out.begin(), out.end(), [](const Term<K>& a, const Term<K>& b) {
    return Monomial::cmp_declaration(a.m, b.m) == std::strong_ordering::greater;
  });
  return out;
}

template <class K>
Polynomial<K> from_rank_terms(const TermVec<K>& ts, const MonomialOrder& order) {
  std::vector<Term<K>> out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.push_back({t.c, from_rank(t.m, order.priority())});
  return Polynomial<K>::from_terms(order.ring(), std::move(out));
}

/// a[start:] - c * m * g, all vectors descending.
template <class K>
TermVec<K> subtract_scaled(const TermVec<K>& a, size_t start, const TermVec<K>& g,
                           const K& c, const Monomial& m) {
  TermVec<K> out;
  out.reserve(a.size() - start + g.size());
  size_t i = start, j = 0;
  while (i < a.size() || j < g.size()) {
    if (i == a.size()) {
      out.push_back({-(g[j].c * c), g[j].m * m});
      ++j;
      continue;
    }
    if (j == g.size()) {
      out.push_back(a[i]);
      ++i;
      continue;
    }
    Monomial gm = g[j].m * m;
    auto cmp = Monomial::cmp_declaration(a[i].m, gm);
    if (cmp == std::strong_ordering::greater) {
      out.push_back(a[i]);
      ++i;
    } else if (cmp == std::strong_ordering::less) {
      out.push_back({-(g[j].c * c), std::move(gm)});
      ++j;
    } else {
      K d = a[i].c - g[j].c * c;
      if (!d.is_zero()) out.push_back({std::move(d), a[i].m});
      ++i;
      ++j;
    }
  }
  return out;
}

struct BudgetGuard {
  const Budget& budget;
  GBStats& stats;
  std::uint64_t tick = 0;

  void observe(std::size_t live_terms) {
    stats.max_poly_terms = std::max(stats.max_poly_terms, live_terms);
    if (budget.max_poly_terms && live_terms > budget.max_poly_terms)
      throw BudgetExceeded("intermediate polynomial exceeded " +
                               std::to_string(budget.max_poly_terms) + " terms",
                           stats);
  }

  void step(std::size_t live_terms) {
    ++stats.reduction_steps;
    observe(live_terms);
    if ((++tick & 1023) == 0) check_deadline();
  }

  void pair_reduction() {
    if (++stats.pairs_reduced > budget.max_pair_reductions)
      throw BudgetExceeded("pair-reduction cap " +
                               std::to_string(budget.max_pair_reductions) + " hit",
                           stats);
    check_deadline();
  }

  void check_deadline() const {
    if (budget.deadline && std::chrono::steady_clock::now() > *budget.deadline)
      throw BudgetExceeded("deadline passed", stats);
  }
};

/// Multivariate division in rank space. Returns the remainder; quotient term
/// lists (per divisor) are appended to *quot when given.
template <class K>
TermVec<K> reduce_core(TermVec<K> h, const std::vector<TermVec<K>>& G, BudgetGuard& guard,
                       std::vector<TermVec<K>>* quot = nullptr) {
  TermVec<K> r;
  size_t head = 0;
  guard.observe(h.size());
  while (head < h.size()) {
    const Term<K>& lt = h[head];
    bool hit = false;
    for (size_t gi = 0; gi < G.size(); ++gi) {
      const TermVec<K>& g = G[gi];
      if (g.empty() || !g[0].m.divides(lt.m)) continue;
      K c = lt.c / g[0].c;
      Monomial m = Monomial::div(lt.m, g[0].m);
      if (quot) (*quot)[gi].push_back({c, m});
      h = subtract_scaled(h, head, g, c, m);
      head = 0;
      guard.step(h.size() + r.size());
      hit = true;
      break;
    }
    if (!hit) {
      r.push_back(lt);
      ++head;
    }
  }
  return r;
}

template <class K>
TermVec<K> spoly_core(const TermVec<K>& f, const TermVec<K>& g) {
  const Monomial lcm = Monomial::lcm(f[0].m, g[0].m);
  const K one = f[0].c / f[0].c;
  TermVec<K> left;  // (lcm / LT(f)) * f
  left.reserve(f.size());
  {
    K c = one / f[0].c;
    Monomial m = Monomial::div(lcm, f[0].m);
    for (const auto& t : f) left.push_back({t.c * c, t.m * m});
  }
  return subtract_scaled(left, 0, g, one / g[0].c, Monomial::div(lcm, g[0].m));
}

template <class K>
void make_monic(TermVec<K>& f) {
  if (f.empty() || f[0].c.is_one()) return;
  K lc = f[0].c;
  for (auto& t : f) t.c = t.c / lc;
}

template <class K>
std::vector<TermVec<K>> buchberger_core(std::vector<TermVec<K>> G, BudgetGuard& guard) {
  struct PairEntry {
    Monomial lcm;
    size_t i, j;
  };
  struct PairLess {
    bool operator()(const PairEntry& a, const PairEntry& b) const {
      auto c = Monomial::cmp_declaration(a.lcm, b.lcm);
      if (c == std::strong_ordering::less) return true;    // smallest lcm first
      if (c == std::strong_ordering::greater) return false;
      return std::tie(a.i, a.j) < std::tie(b.i, b.j);
    }
  };
  std::set<PairEntry, PairLess> pairs;

  for (auto& g : G) make_monic(g);
  for (size_t i = 0; i < G.size(); ++i)
    for (size_t j = i + 1; j < G.size(); ++j)
      pairs.insert({Monomial::lcm(G[i][0].m, G[j][0].m), i, j});

  while (!pairs.empty()) {
    PairEntry p = *pairs.begin();
    pairs.erase(pairs.begin());
    ++guard.stats.pairs_considered;
    // Buchberger's coprime-leading-term criterion
    if (Monomial::coprime(G[p.i][0].m, G[p.j][0].m)) {
      ++guard.stats.pairs_skipped_coprime;
      continue;
    }
    guard.pair_reduction();
    TermVec<K> s = spoly_core(G[p.i], G[p.j]);
    TermVec<K> r = reduce_core(std::move(s), G, guard);
    if (!r.empty()) {
      make_monic(r);
      size_t k = G.size();
      G.push_back(std::move(r));
      for (size_t i = 0; i < k; ++i)
        pairs.insert({Monomial::lcm(G[i][0].m, G[k][0].m), i, k});
    }
  }

  // minimalize: drop any element whose leading monomial is divisible by
  // another kept element's leading monomial
  std::vector<size_t> idx(G.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&G](size_t a, size_t b) {
    auto c = Monomial::cmp_declaration(G[a][0].m, G[b][0].m);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    return a < b;
  });
  std::vector<TermVec<K>> min;
  for (size_t id : idx) {
    bool dominated = false;
    for (const auto& kept : min)
      if (kept[0].m.divides(G[id][0].m)) {
        dominated = true;
        break;
      }
    if (!dominated) min.push_back(std::move(G[id]));
  }

  // interreduce to the unique reduced basis
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t i = 0; i < min.size(); ++i) {
      std::vector<TermVec<K>> others;
      others.reserve(min.size() - 1);
      for (size_t j = 0; j < min.size(); ++j)
        if (j != i) others.push_back(min[j]);
      TermVec<K> r = reduce_core(min[i], others, guard);
      make_monic(r);
      if (r != min[i]) {
        min[i] = std::move(r);
        changed = true;
      }
    }
  }

  std::sort(min.begin(), min.end(), [](const TermVec<K>& a, const TermVec<K>& b) {
    return Monomial::cmp_declaration(a[0].m, b[0].m) == std::strong_ordering::greater;
  });
  guard.stats.basis_size = min.size();
  return min;
}

}  // namespace gbdetail

template <class K>
struct ReduceResult {
  std::vector<Polynomial<K>> quotients;
  Polynomial<K> remainder;
};

/// Division with remainder: p = sum(quotients[i] * G[i]) + remainder, no term
/// of the remainder divisible by any leading term of G, and
/// LT(quotients[i] * G[i]) <= LT(p).
template <class K>
ReduceResult<K> reduce(const Polynomial<K>& p, const std::vector<Polynomial<K>>& G,
                       const MonomialOrder& order, const Budget& budget = {},
                       GBStats* stats_out = nullptr) {
  if (G.empty()) throw std::invalid_argument("reduce needs a nonempty divisor list");
  std::vector<gbdetail::TermVec<K>> Gr;
  Gr.reserve(G.size());
  for (const auto& g : G) {
    if (g.is_zero()) throw std::invalid_argument("reduce divisors must be nonzero");
    Gr.push_back(gbdetail::to_rank_terms(g, order));
  }
  GBStats stats;
  gbdetail::BudgetGuard guard{budget, stats};
  std::vector<gbdetail::TermVec<K>> quot(G.size());
  auto r = gbdetail::reduce_core(gbdetail::to_rank_terms(p, order), Gr, guard, &quot);
  ReduceResult<K> out{{}, gbdetail::from_rank_terms(r, order)};
  out.quotients.reserve(G.size());
  for (const auto& q : quot) out.quotients.push_back(gbdetail::from_rank_terms(q, order));
  if (stats_out) stats_out->absorb(stats);
  return out;
}

template <class K>
Polynomial<K> normal_form(const Polynomial<K>& p, const std::vector<Polynomial<K>>& G,
                          const MonomialOrder& order, const Budget& budget = {}) {
  if (G.empty()) return p;
  std::vector<gbdetail::TermVec<K>> Gr;
  Gr.reserve(G.size());
  for (const auto& g : G)
    if (!g.is_zero()) Gr.push_back(gbdetail::to_rank_terms(g, order));
  if (Gr.empty()) return p;
  GBStats stats;
  gbdetail::BudgetGuard guard{budget, stats};
  auto r = gbdetail::reduce_core(gbdetail::to_rank_terms(p, order), Gr, guard);
  return gbdetail::from_rank_terms(r, order);
}

/// S(f, g) = (lcm/LT(f)) f - (lcm/LT(g)) g.
template <class K>
Polynomial<K> s_polynomial(const Polynomial<K>& f, const Polynomial<K>& g,
                           const MonomialOrder& order) {
  if (f.is_zero() || g.is_zero())
    throw std::invalid_argument("s_polynomial of the zero polynomial");
  auto fr = gbdetail::to_rank_terms(f, order);
  auto gr = gbdetail::to_rank_terms(g, order);
  return gbdetail::from_rank_terms(gbdetail::spoly_core(fr, gr), order);
}

/// The hypothesis of the coprime-leading-term criterion: gcd(LT(f), LT(g)) = 1.
template <class K>
bool coprime_leading_terms(const Polynomial<K>& f, const Polynomial<K>& g,
                           const MonomialOrder& order) {
  return Monomial::coprime(f.leading_term(order).m, g.leading_term(order).m);
}

template <class K>
struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Polynomial<K>> basis;  // monic, interreduced, sorted by descending LT
  bool reduced = true;
  GBStats stats;

  bool is_zero_ideal() const { return basis.empty(); }
  bool is_unit_ideal() const { return basis.size() == 1 && basis[0].is_constant(); }
};

/// Buchberger's algorithm with normal (smallest-lcm-first) pair selection and
/// the coprime criterion; returns the unique reduced basis. Zero generators
/// are dropped.
template <class K>
GroebnerBasis<K> buchberger(const std::vector<Polynomial<K>>& gens,
                            const MonomialOrder& order, const Budget& budget = {}) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<gbdetail::TermVec<K>> G;
  for (const auto& g : gens)
    if (!g.is_zero()) G.push_back(gbdetail::to_rank_terms(g, order));
  GroebnerBasis<K> out{order, {}, true, {}};
  gbdetail::BudgetGuard guard{budget, out.stats};
  auto basis = gbdetail::buchberger_core(std::move(G), guard);
  out.basis.reserve(basis.size());
  for (const auto& b : basis) out.basis.push_back(gbdetail::from_rank_terms(b, order));
  out.stats.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  return out;
}

template <class K>
struct GroebnerCheck {
  bool ok = true;
  std::optional<std::pair<size_t, size_t>> failing_pair;
  Polynomial<K> witness_remainder;
};

/// Buchberger criterion, checked exhaustively: every S-polynomial of basis
/// pairs must reduce to zero. No pair is skipped.
template <class K>
GroebnerCheck<K> is_groebner(const std::vector<Polynomial<K>>& G, const MonomialOrder& order,
                             const Budget& budget = {}) {
  std::vector<gbdetail::TermVec<K>> Gr;
  Gr.reserve(G.size());
  for (const auto& g : G) {
    if (g.is_zero()) throw std::invalid_argument("is_groebner needs nonzero polynomials");
    Gr.push_back(gbdetail::to_rank_terms(g, order));
  }
  GBStats stats;
  gbdetail::BudgetGuard guard{budget, stats};
  for (size_t i = 0; i < Gr.size(); ++i)
    for (size_t j = i + 1; j < Gr.size(); ++j) {
      auto r = gbdetail::reduce_core(gbdetail::spoly_core(Gr[i], Gr[j]), Gr, guard);
      if (!r.empty())
        return {false, std::make_pair(i, j), gbdetail::from_rank_terms(r, order)};
    }
  return {true, std::nullopt, Polynomial<K>::zero(order.ring())};
}

}  // namespace xyk

#endif
