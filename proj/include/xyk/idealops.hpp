#ifndef XYK_IDEALOPS_HPP
#define XYK_IDEALOPS_HPP

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "xyk/groebner.hpp"

namespace xyk {

/// An ideal given by generators, with a cache of reduced Groebner bases keyed
/// by monomial order. The cache is the only mutable state: single writer per
/// key, any number of readers; identical keys always cache the same value
/// because reduced bases are unique.
template <class K>
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial<K>> gens)
      : ring_(std::move(ring)), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
    for (const auto& g : gens_)
      if (!g.ring()->same_universe(*ring_)) throw RingMismatch();
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial<K>>& generators() const { return gens_; }

  std::shared_ptr<const GroebnerBasis<K>> groebner(const MonomialOrder& order,
                                                   const Budget& budget = {}) const {
    const std::vector<int>& key = order.priority();
    {
      std::shared_lock lock(cache_->mu);
      auto it = cache_->bases.find(key);
      if (it != cache_->bases.end()) return it->second;
    }
    auto gb = std::make_shared<const GroebnerBasis<K>>(buchberger(gens_, order, budget));
    std::unique_lock lock(cache_->mu);
    auto [it, inserted] = cache_->bases.emplace(key, gb);
    return it->second;
  }

  std::size_t cached_basis_count() const {
    std::shared_lock lock(cache_->mu);
    return cache_->bases.size();
  }

 private:
  struct Cache {
    mutable std::shared_mutex mu;
    std::map<std::vector<int>, std::shared_ptr<const GroebnerBasis<K>>> bases;
  };

  RingPtr ring_;
  std::vector<Polynomial<K>> gens_;
  std::shared_ptr<Cache> cache_;
};

/// The canonical order used for ideal identity: reduced bases under it are
/// compared structurally.
inline MonomialOrder canonical_order(const RingPtr& ring) { return MonomialOrder::grob(ring); }

template <class K>
bool member(const Polynomial<K>& p, const Ideal<K>& I, const Budget& budget = {}) {
  if (!p.ring()->same_universe(*I.ring())) throw RingMismatch();
  auto gb = I.groebner(canonical_order(I.ring()), budget);
  if (gb->is_zero_ideal()) return p.is_zero();
  return normal_form(p, gb->basis, gb->order, budget).is_zero();
}

template <class K>
bool equal(const Ideal<K>& I, const Ideal<K>& J, const Budget& budget = {}) {
  if (!I.ring()->same_universe(*J.ring())) throw RingMismatch();
  auto a = I.groebner(canonical_order(I.ring()), budget);
  auto b = J.groebner(canonical_order(J.ring()), budget);
  return a->basis == b->basis;
}

template <class K>
bool contains(const Ideal<K>& I, const Ideal<K>& J, const Budget& budget = {}) {
  for (const auto& g : J.generators())
    if (!member(g, I, budget)) return false;
  return true;
}

namespace idetail {

/// Generators of the elimination ideal: compute a Groebner basis under a
/// block order with the auxiliary variable on top, keep what avoids it, and
/// map back to the base ring.
template <class K>
std::vector<Polynomial<K>> eliminate_last_aux(const std::vector<Polynomial<K>>& gens,
                                              const RingPtr& ext, const RingPtr& base,
                                              const Budget& budget, GBStats* stats) {
  MonomialOrder block = MonomialOrder::eliminate_aux(ext, canonical_order(base));
  GroebnerBasis<K> gb = buchberger(gens, block, budget);
  if (stats) stats->absorb(gb.stats);
  const int first_aux = base->var_count();
  std::vector<Polynomial<K>> out;
  for (const auto& b : gb.basis)
    if (!b.touches_var_at_least(first_aux)) out.push_back(b.restrict_to(base));
  return out;
}

}  // namespace idetail

namespace idetail {

/// A multiplicative unit scavenged from any nonzero generator; empty when the
/// ideal is zero.
template <class K>
std::optional<K> find_unit(const Ideal<K>& I) {
  for (const auto& g : I.generators())
    if (!g.is_zero()) return g.terms()[0].c / g.terms()[0].c;
  return std::nullopt;
}

}  // namespace idetail

/// I cap J via the auxiliary-variable method: eliminate t from t*I + (1-t)*J.
template <class K>
Ideal<K> intersect(const Ideal<K>& I, const Ideal<K>& J, const Budget& budget = {},
                   GBStats* stats = nullptr) {
  if (!I.ring()->same_universe(*J.ring())) throw RingMismatch();
  const RingPtr& base = I.ring();
  auto u1 = idetail::find_unit(I);
  auto u2 = idetail::find_unit(J);
  if (!u1 || !u2) return Ideal<K>(base, {});  // intersection with the zero ideal
  RingPtr ext = base->extended(1);
  const int t_idx = ext->aux_index(ext->aux_count());
  const K& one = *u1;
  Polynomial<K> t = Polynomial<K>::variable(ext, t_idx, one);
  Polynomial<K> one_minus_t = Polynomial<K>::constant(ext, one) - t;
  std::vector<Polynomial<K>> gens;
  for (const auto& f : I.generators())
    if (!f.is_zero()) gens.push_back(t * f.in_ring(ext));
  for (const auto& g : J.generators())
    if (!g.is_zero()) gens.push_back(one_minus_t * g.in_ring(ext));
  return Ideal<K>(base, idetail::eliminate_last_aux(gens, ext, base, budget, stats));
}

/// Exact polynomial division helper; q with p = q*f, error if f does not
/// divide p.
template <class K>
Polynomial<K> exact_divide(const Polynomial<K>& p, const Polynomial<K>& f) {
  if (f.is_zero()) throw DivisionByZero();
  if (p.is_zero()) return p;
  MonomialOrder ord = MonomialOrder::declaration(p.ring());
  ReduceResult<K> rr = reduce(p, std::vector<Polynomial<K>>{f}, ord, Budget::unlimited());
  if (!rr.remainder.is_zero())
    throw std::invalid_argument("polynomial division is not exact");
  return rr.quotients[0];
}

/// Colon ideal I : f, computed as (I cap <f>) / f.
template <class K>
Ideal<K> quotient(const Ideal<K>& I, const Polynomial<K>& f, const Budget& budget = {},
                  GBStats* stats = nullptr) {
  if (f.is_zero()) throw std::invalid_argument("colon ideal by the zero polynomial");
  Ideal<K> cap = intersect(I, Ideal<K>(I.ring(), {f}), budget, stats);
  std::vector<Polynomial<K>> gens;
  gens.reserve(cap.generators().size());
  for (const auto& g : cap.generators()) gens.push_back(exact_divide(g, f));
  return Ideal<K>(I.ring(), std::move(gens));
}

/// Saturation I : f^inf via the auxiliary-variable method: adjoin z, add
/// z*f - 1, eliminate z.
template <class K>
Ideal<K> saturate(const Ideal<K>& I, const Polynomial<K>& f, const Budget& budget = {},
                  GBStats* stats = nullptr) {
  if (f.is_zero()) throw std::invalid_argument("saturation by the zero polynomial");
  const RingPtr& base = I.ring();
  if (!idetail::find_unit(I)) return Ideal<K>(base, {});
  RingPtr ext = base->extended(1);
  const int z_idx = ext->aux_index(ext->aux_count());
  K one = f.terms()[0].c / f.terms()[0].c;
  Polynomial<K> z = Polynomial<K>::variable(ext, z_idx, one);
  std::vector<Polynomial<K>> gens;
  for (const auto& g : I.generators())
    if (!g.is_zero()) gens.push_back(g.in_ring(ext));
  gens.push_back(z * f.in_ring(ext) - Polynomial<K>::constant(ext, one));
  return Ideal<K>(base, idetail::eliminate_last_aux(gens, ext, base, budget, stats));
}

/// Saturation by iterated colon ideals until the chain stabilizes. Kept as an
/// independent route for cross-checking the auxiliary-variable method.
template <class K>
Ideal<K> saturate_iterated(const Ideal<K>& I, const Polynomial<K>& f,
                           const Budget& budget = {}, GBStats* stats = nullptr) {
  if (f.is_zero()) throw std::invalid_argument("saturation by the zero polynomial");
  Ideal<K> cur = I;
  for (;;) {
    Ideal<K> next = quotient(cur, f, budget, stats);
    if (equal(next, cur, budget)) return cur;
    cur = std::move(next);
  }
}

/// Bracket ideal of a polynomial tower, realized as the saturation of the
/// ideal by the product of the distinct leading coefficients. In every tower
/// used here each leading coefficient is y_n, so this is saturation by y_n.
template <class K>
Ideal<K> bracket(const RingPtr& ring, const std::vector<Polynomial<K>>& gens,
                 const std::vector<Polynomial<K>>& lead_coeffs, const Budget& budget = {},
                 GBStats* stats = nullptr) {
  if (gens.size() != lead_coeffs.size())
    throw std::invalid_argument("bracket needs one leading coefficient per generator");
  std::vector<Polynomial<K>> distinct;
  for (const auto& a : lead_coeffs) {
    if (a.is_zero()) throw std::invalid_argument("bracket with a zero leading coefficient");
    bool seen = false;
    for (const auto& d : distinct)
      if (d == a) {
        seen = true;
        break;
      }
    if (!seen) distinct.push_back(a);
  }
  Ideal<K> I(ring, gens);
  if (distinct.empty()) return I;
  Polynomial<K> product = distinct[0];
  for (size_t i = 1; i < distinct.size(); ++i) product = product * distinct[i];
  return saturate(I, product, budget, stats);
}

/// Radicality certificate: true iff every leading monomial of the reduced
/// basis is squarefree. Sufficient, not necessary.
template <class K>
std::pair<bool, std::string> squarefree_lt_radical_witness(const Ideal<K>& I,
                                                           const MonomialOrder& order,
                                                           const Budget& budget = {}) {
  auto gb = I.groebner(order, budget);
  for (const auto& b : gb->basis) {
    const Monomial& lm = b.leading_term(order).m;
    if (!lm.squarefree()) return {false, lm.str(*I.ring())};
  }
  return {true, ""};
}

}  // namespace xyk

#endif
