#ifndef XYK_VERIFY_HPP
#define XYK_VERIFY_HPP

#include <atomic>
#include <functional>
#include <set>
#include <thread>

#include "xyk/detlab.hpp"
#include "xyk/idealops.hpp"
#include "xyk/report.hpp"

namespace xyk {

struct VerifyOptions {
  Budget budget{};
  double wall_ms = 120000;  // per-check deadline; <= 0 disables

  Budget check_budget() const { return budget.with_deadline_ms(wall_ms); }
};

namespace vdetail {

inline std::chrono::steady_clock::time_point tick() { return std::chrono::steady_clock::now(); }

inline double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(tick() - t0).count();
}

template <class Body>
Report run_check(Report base, Body&& body) {
  auto t0 = tick();
  try {
    body(base);
  } catch (const BudgetExceeded& e) {
    base.status = Status::BudgetExceeded;
    base.notes.push_back(e.what());
    base.gb.absorb(e.stats);
  }
  base.elapsed_ms = ms_since(t0);
  return base;
}

template <class F>
std::vector<Polynomial<typename F::Element>> y_generators(const SymbolicMatrix<F>& M) {
  std::vector<Polynomial<typename F::Element>> ys;
  for (int j = 1; j <= M.cols(); ++j) ys.push_back(M.y(j));
  return ys;
}

template <class K>
void absorb_cached(Report& r, const std::shared_ptr<const GroebnerBasis<K>>& gb) {
  r.gb.absorb(gb->stats);
}

/// All k-fold products of the generators (combinations with repetition).
template <class K>
std::vector<Polynomial<K>> power_products(const std::vector<Polynomial<K>>& gens, int k) {
  std::vector<Polynomial<K>> out;
  std::vector<int> choice;
  std::function<void(size_t, int)> rec = [&](size_t start, int left) {
    if (left == 0) {
      Polynomial<K> p = gens[static_cast<size_t>(choice[0])];
      for (size_t i = 1; i < choice.size(); ++i)
        p = p * gens[static_cast<size_t>(choice[i])];
      out.push_back(std::move(p));
      return;
    }
    for (size_t i = start; i < gens.size(); ++i) {
      choice.push_back(static_cast<int>(i));
      rec(i, left - 1);
      choice.pop_back();
    }
  };
  if (k < 1) throw std::invalid_argument("power ideal exponent must be >= 1");
  rec(0, k);
  return out;
}

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::cmp_declaration(a, b) == std::strong_ordering::less;
  }
};

/// Leading monomials x[i1][1]...x[ik][k]*y[k] over strictly increasing row
/// chains: the empirical pattern of the reduced basis of <g_1..g_n> under
/// the y-first order, verified at n <= 3 against independent computation.
inline std::set<Monomial, MonomialLess> chain_pattern(const Ring& ring, int n) {
  std::set<Monomial, MonomialLess> out;
  std::vector<int> chain;
  std::function<void(int, int)> rec = [&](int next_row, int col) {
    int k = col - 1;
    if (k >= 1) {
      std::vector<Monomial::Entry> es;
      for (int j = 1; j <= k; ++j) es.push_back({ring.x_index(chain[static_cast<size_t>(j - 1)], j), 1});
      es.push_back({ring.y_index(k), 1});
      out.insert(Monomial::from_entries(es));
    }
    if (k == n) return;
    for (int r = next_row; r <= n; ++r) {
      chain.push_back(r);
      rec(r + 1, col + 1);
      chain.pop_back();
    }
  };
  rec(1, 1);
  return out;
}

/// The diagonal-prefix chains x[1][1]..x[k-1][k-1]*x[k+i][k]*y[k], i>=0, the
/// subfamily stated with the quotient-stability lemma.
inline std::set<Monomial, MonomialLess> stated_pattern(const Ring& ring, int n) {
  std::set<Monomial, MonomialLess> out;
  for (int k = 1; k <= n; ++k)
    for (int i = 0; i <= n - k; ++i) {
      std::vector<Monomial::Entry> es;
      for (int d = 1; d < k; ++d) es.push_back({ring.x_index(d, d), 1});
      es.push_back({ring.x_index(k + i, k), 1});
      es.push_back({ring.y_index(k), 1});
      out.insert(Monomial::from_entries(es));
    }
  return out;
}

inline std::string join_monomials(const std::set<Monomial, MonomialLess>& ms, const Ring& ring) {
  std::string s;
  for (const auto& m : ms) {
    if (!s.empty()) s += ", ";
    s += m.str(ring);
  }
  return s;
}

}  // namespace vdetail

/// Regular-sequence certificate: under the completed order the leading terms
/// of the sequence are pairwise coprime, which makes the generators a
/// Groebner basis and the sequence regular.
template <class F>
Report check_regular_sequence(const F& field, MatrixKind kind, int m, int n) {
  Report base;
  base.claim = "regular-sequence";
  base.kind = kind_str(kind);
  base.params = {{"m", m}, {"n", n}};
  return vdetail::run_check(base, [&](Report& r) {
    if (kind != MatrixKind::Generic && m != n)
      throw ShapeError("symmetric/skew instances must be square");
    if (kind == MatrixKind::Generic && m > n)
      throw ShapeError("regular-sequence certificate needs m <= n");
    SymbolicMatrix<F> M(field, kind, m, n);
    auto g = M.xy_entries();
    size_t len = kind == MatrixKind::Skew ? static_cast<size_t>(n - 1) : g.size();
    MonomialOrder order = MonomialOrder::regseq(M.ring());
    r.order_desc = order.str();
    if (len == 0) {
      r.checks.push_back({"pairwise-coprime-leading-terms", true, "empty sequence"});
      r.status = Status::Verified;
      return;
    }
    std::vector<Monomial> lts;
    for (size_t i = 0; i < len; ++i) {
      if (g[i].is_zero()) {
        r.checks.push_back({"nonzero-generators", false, "g" + std::to_string(i + 1) + " = 0"});
        r.status = Status::Refuted;
        return;
      }
      lts.push_back(g[i].leading_term(order).m);
      r.witnesses.push_back("LT(g" + std::to_string(i + 1) + ") = " + lts.back().str(*M.ring()));
    }
    r.checks.push_back({"nonzero-generators", true, ""});
    bool ok = true;
    for (size_t i = 0; i < len && ok; ++i)
      for (size_t j = i + 1; j < len && ok; ++j)
        if (!Monomial::coprime(lts[i], lts[j])) {
          ok = false;
          r.witnesses.push_back("gcd(LT(g" + std::to_string(i + 1) + "), LT(g" +
                                std::to_string(j + 1) + ")) != 1");
        }
    r.checks.push_back({"pairwise-coprime-leading-terms", ok, ""});
    r.status = ok ? Status::Verified : Status::Refuted;
  });
}

/// Saturation identity: <g_1..g_t> : y_n^inf against the ideal itself.
/// Holds for t <= n-1 (generic, symmetric) and t <= n-2 (skew); at the
/// boundary the saturation strictly grows and the determinant (resp. the next
/// entry polynomial) appears in it.
template <class F>
Report check_saturated(const F& field, MatrixKind kind, int n, int t,
                       const VerifyOptions& opt = {}) {
  Report base;
  base.claim = "saturated";
  base.kind = kind_str(kind);
  base.params = {{"n", n}, {"t", t}};
  return vdetail::run_check(base, [&](Report& r) {
    int tmax = kind == MatrixKind::Skew ? n - 1 : n;
    if (t < 1 || t > tmax) throw ShapeError("t out of range for this kind");
    SymbolicMatrix<F> M(field, kind, n, n);
    auto g = M.xy_entries();
    Budget budget = opt.check_budget();
    MonomialOrder order = canonical_order(M.ring());
    r.order_desc = order.str();
    std::vector<Polynomial<typename F::Element>> gens(g.begin(), g.begin() + t);
    Ideal<typename F::Element> It(M.ring(), gens);
    Ideal<typename F::Element> sat = saturate(It, M.y(n), budget, &r.gb);
    bool eq = equal(sat, It, budget);
    r.checks.push_back({"saturation-equality", eq, ""});
    vdetail::absorb_cached(r, It.groebner(order, budget));
    vdetail::absorb_cached(r, sat.groebner(order, budget));
    r.notes.push_back(
        "primality of the bracket ideal is a cited result, not machine-checked; this check "
        "certifies the saturation identity only (see bracket-primality)");
    if (eq) {
      r.status = Status::Verified;
      return;
    }
    r.status = Status::Refuted;
    // witness the strict growth
    if (kind == MatrixKind::Skew) {
      bool in_sat = member(g[static_cast<size_t>(n - 1)], sat, budget);
      bool in_ideal = member(g[static_cast<size_t>(n - 1)], It, budget);
      r.checks.push_back({"witness-next-entry", in_sat && !in_ideal, ""});
      if (in_sat && !in_ideal)
        r.witnesses.push_back("g" + std::to_string(n) + " lies in the saturation but not in the ideal");
    } else {
      Polynomial<typename F::Element> det = M.determinant();
      bool in_sat = member(det, sat, budget);
      bool in_ideal = member(det, It, budget);
      r.checks.push_back({"witness-determinant", in_sat && !in_ideal, ""});
      if (in_sat && !in_ideal)
        r.witnesses.push_back("det(X) lies in the saturation but not in the ideal");
    }
  });
}

/// Structure of the y-first lexicographic basis: the only basis element of
/// <g_1..g_n> whose leading term involves y_n is det(X)*y_n, and replacing it
/// by det(X) gives the reduced basis of <g_1..g_n, det(X)>. Leading terms
/// follow the increasing-row-chain pattern.
template <class F>
Report check_gb_structure(const F& field, int n, const VerifyOptions& opt = {}) {
  Report base;
  base.claim = "gb-structure";
  base.kind = kind_str(MatrixKind::Generic);
  base.params = {{"n", n}};
  return vdetail::run_check(base, [&](Report& r) {
    using K = typename F::Element;
    SymbolicMatrix<F> M(field, MatrixKind::Generic, n, n);
    auto g = M.xy_entries();
    Polynomial<K> det = M.determinant();
    Polynomial<K> yn = M.y(n);
    Budget budget = opt.check_budget();
    MonomialOrder order = MonomialOrder::grob(M.ring());
    r.order_desc = order.str();

    GroebnerBasis<K> Gcal = buchberger(g, order, budget);
    r.gb.absorb(Gcal.stats);

    // G_n = elements whose leading term involves y_n; must be exactly det*y_n
    const int yn_idx = M.ring()->y_index(n);
    std::vector<Polynomial<K>> frakG;
    std::vector<Polynomial<K>> Gn;
    for (const auto& b : Gcal.basis) {
      if (b.leading_term(order).m.exponent(yn_idx) > 0)
        Gn.push_back(b);
      else
        frakG.push_back(b);
    }
    bool gn_ok = Gn.size() == 1 && Gn[0] == det * yn;
    r.checks.push_back({"gn-is-det-times-yn", gn_ok,
                        "elements with y" + std::to_string(n) + " in the leading term: " +
                            std::to_string(Gn.size())});

    bool lt_mult = false;
    if (!Gn.empty())
      lt_mult = Gn[0].leading_term(order).m == det.leading_term(order).m * Monomial::var(yn_idx);
    r.checks.push_back({"lt-det-yn-multiplicative", lt_mult, ""});

    // leading-term pattern of the basis of <g_1..g_n>
    auto expected = vdetail::chain_pattern(*M.ring(), n);
    std::set<Monomial, vdetail::MonomialLess> actual;
    for (const auto& b : Gcal.basis) actual.insert(b.leading_term(order).m);
    bool pattern_ok = actual == expected;
    r.checks.push_back({"chain-pattern", pattern_ok,
                        "basis size " + std::to_string(Gcal.basis.size()) + ", expected " +
                            std::to_string(expected.size())});
    auto stated = vdetail::stated_pattern(*M.ring(), n);
    bool stated_ok = true;
    for (const auto& m : stated)
      if (!actual.count(m)) stated_ok = false;
    r.checks.push_back({"stated-chains-present", stated_ok, ""});
    r.notes.push_back(
        "the diagonal-prefix chains are a strict subfamily of the basis leading terms for n >= 3; "
        "the full increasing-row-chain pattern is checked empirically");

    // frakG = (basis \ {det*y_n}) + {det}
    frakG.push_back(det.monic(order));
    GroebnerCheck<K> chk = is_groebner(frakG, order, budget);
    r.checks.push_back({"replacement-is-groebner", chk.ok, ""});
    Ideal<K> from_frakG(M.ring(), frakG);
    std::vector<Polynomial<K>> with_det = g;
    with_det.push_back(det);
    Ideal<K> I_det(M.ring(), with_det);
    bool generates = equal(from_frakG, I_det, budget);
    r.checks.push_back({"replacement-generates", generates, ""});
    vdetail::absorb_cached(r, from_frakG.groebner(canonical_order(M.ring()), budget));
    vdetail::absorb_cached(r, I_det.groebner(canonical_order(M.ring()), budget));

    // pattern for frakG: drop the full diagonal chain times y_n, add LT(det)
    std::set<Monomial, vdetail::MonomialLess> expected_frak = expected;
    {
      std::vector<Monomial::Entry> es;
      for (int d = 1; d <= n; ++d) es.push_back({M.ring()->x_index(d, d), 1});
      es.push_back({yn_idx, 1});
      expected_frak.erase(Monomial::from_entries(es));
      expected_frak.insert(det.leading_term(order).m);
    }
    std::set<Monomial, vdetail::MonomialLess> actual_frak;
    for (const auto& b : frakG) actual_frak.insert(b.leading_term(order).m);
    r.checks.push_back({"replacement-pattern", actual_frak == expected_frak, ""});

    r.witnesses.push_back("leading terms: " + vdetail::join_monomials(actual, *M.ring()));
    r.status = r.all_checks_passed() ? Status::Verified : Status::Refuted;
  });
}

/// Quotient stability: (<g_1..g_n, det> : y_i) = <g_1..g_n, det>.
template <class F>
Report check_quotient_stability(const F& field, int n, int i, const VerifyOptions& opt = {}) {
  Report base;
  base.claim = "quotient-stability";
  base.kind = kind_str(MatrixKind::Generic);
  base.params = {{"n", n}, {"i", i}};
  return vdetail::run_check(base, [&](Report& r) {
    using K = typename F::Element;
    if (i < 1 || i > n) throw ShapeError("i out of range");
    SymbolicMatrix<F> M(field, MatrixKind::Generic, n, n);
    auto gens = M.xy_entries();
    gens.push_back(M.determinant());
    Budget budget = opt.check_budget();
    Ideal<K> J(M.ring(), gens);
    Ideal<K> q = quotient(J, M.y(i), budget, &r.gb);
    bool eq = equal(q, J, budget);
    r.order_desc = canonical_order(M.ring()).str();
    r.checks.push_back({"colon-ideal-stable", eq, ""});
    if (!eq)
      for (const auto& extra : q.generators())
        if (!member(extra, J, budget)) {
          r.witnesses.push_back("new element: " + extra.str());
          break;
        }
    r.status = eq ? Status::Verified : Status::Refuted;
    vdetail::absorb_cached(r, J.groebner(canonical_order(M.ring()), budget));
  });
}

/// Square primary decomposition: I_1(XY) = <y_1..y_n> cap <g_1..g_n, det>,
/// with irredundancy witnesses and the squarefree-leading-term radicality
/// certificate.
template <class F>
Report check_decomposition_square(const F& field, MatrixKind kind, int n,
                                  const VerifyOptions& opt = {}) {
  Report base;
  base.claim = "decomposition-square";
  base.kind = kind_str(kind);
  base.params = {{"n", n}};
  return vdetail::run_check(base, [&](Report& r) {
    using K = typename F::Element;
    if (kind == MatrixKind::Skew) throw ShapeError("square decomposition needs generic or symmetric");
    SymbolicMatrix<F> M(field, kind, n, n);
    auto g = M.xy_entries();
    Polynomial<K> det = M.determinant();
    Budget budget = opt.check_budget();
    MonomialOrder order = canonical_order(M.ring());
    r.order_desc = order.str();

    Ideal<K> I(M.ring(), g);
    Ideal<K> Y(M.ring(), vdetail::y_generators(M));
    std::vector<Polynomial<K>> cg = g;
    cg.push_back(det);
    Ideal<K> C(M.ring(), cg);

    Ideal<K> inter = intersect(Y, C, budget, &r.gb);
    bool eq = equal(inter, I, budget);
    r.checks.push_back({"intersection-equals-ideal", eq, ""});
    bool mutual = contains(I, inter, budget) && contains(inter, I, budget);
    r.checks.push_back({"mutual-membership", mutual, ""});
    vdetail::absorb_cached(r, I.groebner(order, budget));
    vdetail::absorb_cached(r, inter.groebner(order, budget));

    bool det_outside_y = !member(det, Y, budget);
    bool some_y_outside = false;
    int wi = 0;
    for (int j = 1; j <= n && !some_y_outside; ++j)
      if (!member(M.y(j), C, budget)) {
        some_y_outside = true;
        wi = j;
      }
    r.checks.push_back({"irredundancy", det_outside_y && some_y_outside, ""});
    if (det_outside_y) r.witnesses.push_back("det(X) not in the linear component");
    if (some_y_outside)
      r.witnesses.push_back("y[" + std::to_string(wi) + "] not in the determinantal component");
    vdetail::absorb_cached(r, C.groebner(order, budget));

    auto [sq, offender] = squarefree_lt_radical_witness(I, order, budget);
    r.checks.push_back({"radical-witness-squarefree", sq, sq ? "" : "non-squarefree LT: " + offender});

    if (eq && mutual && det_outside_y && some_y_outside && sq)
      r.status = Status::Verified;
    else if (!eq || !mutual || !det_outside_y || !some_y_outside)
      r.status = Status::Refuted;
    else {
      r.status = Status::Inconclusive;
      r.notes.push_back("equalities hold but the squarefree certificate failed; radicality not certified");
    }
  });
}

/// Rectangular primary decomposition for an (n+1) x n generic matrix:
/// I_1(XY) = <y_1..y_n> cap <g_1..g_{n+1}, D_1..D_{n+1}> where D_i deletes
/// row i. The component must contain every entry polynomial; the generator
/// list that stops at g_n fails containment for n >= 2 and is reported.
template <class F>
Report check_decomposition_rect(const F& field, int n, const VerifyOptions& opt = {}) {
  Report base;
  base.claim = "decomposition-rect";
  base.kind = kind_str(MatrixKind::Generic);
  base.params = {{"m", n + 1}, {"n", n}};
  return vdetail::run_check(base, [&](Report& r) {
    using K = typename F::Element;
    SymbolicMatrix<F> M(field, MatrixKind::Generic, n + 1, n);
    auto g = M.xy_entries();
    std::vector<Polynomial<K>> minors;
    for (int i = 1; i <= n + 1; ++i) minors.push_back(M.row_deleted_minor(i));
    Budget budget = opt.check_budget();
    MonomialOrder order = canonical_order(M.ring());
    r.order_desc = order.str();

    Ideal<K> I(M.ring(), g);
    Ideal<K> Y(M.ring(), vdetail::y_generators(M));
    std::vector<Polynomial<K>> cg = g;
    cg.insert(cg.end(), minors.begin(), minors.end());
    Ideal<K> C(M.ring(), cg);

    // the generator list with only g_1..g_n
    std::vector<Polynomial<K>> short_list(g.begin(), g.end() - 1);
    short_list.insert(short_list.end(), minors.begin(), minors.end());
    Ideal<K> C_short(M.ring(), short_list);
    bool short_contains = member(g.back(), C_short, budget);
    r.notes.push_back(std::string("component generator list stopping at g") + std::to_string(n) +
                      (short_contains ? " already contains g" : " does NOT contain g") +
                      std::to_string(n + 1) +
                      "; the component used here includes every entry polynomial");
    vdetail::absorb_cached(r, C_short.groebner(order, budget));

    Ideal<K> inter = intersect(Y, C, budget, &r.gb);
    bool eq = equal(inter, I, budget);
    r.checks.push_back({"intersection-equals-ideal", eq, ""});
    bool mutual = contains(I, inter, budget) && contains(inter, I, budget);
    r.checks.push_back({"mutual-membership", mutual, ""});
    vdetail::absorb_cached(r, I.groebner(order, budget));
    vdetail::absorb_cached(r, inter.groebner(order, budget));

    bool minor_outside_y = !member(minors[0], Y, budget);
    bool some_y_outside = false;
    int wi = 0;
    for (int j = 1; j <= n && !some_y_outside; ++j)
      if (!member(M.y(j), C, budget)) {
        some_y_outside = true;
        wi = j;
      }
    r.checks.push_back({"irredundancy", minor_outside_y && some_y_outside, ""});
    if (minor_outside_y) r.witnesses.push_back("D_1 not in the linear component");
    if (some_y_outside)
      r.witnesses.push_back("y[" + std::to_string(wi) + "] not in the determinantal component");
    vdetail::absorb_cached(r, C.groebner(order, budget));

    auto [sq, offender] = squarefree_lt_radical_witness(I, order, budget);
    r.checks.push_back({"radical-witness-squarefree", sq, sq ? "" : "non-squarefree LT: " + offender});

    if (eq && mutual && minor_outside_y && some_y_outside && sq)
      r.status = Status::Verified;
    else if (!eq || !mutual || !minor_outside_y || !some_y_outside)
      r.status = Status::Refuted;
    else {
      r.status = Status::Inconclusive;
      r.notes.push_back("equalities hold but the squarefree certificate failed; radicality not certified");
    }
  });
}

/// Non-primality witness triples: det*y_n in I but det, y_n outside (square
/// generic/symmetric); y_n g_n in <g_1..g_{n-1}> but y_n, g_n outside (skew).
template <class F>
Report check_nonprime_witness(const F& field, MatrixKind kind, int n,
                              const VerifyOptions& opt = {}) {
  Report base;
  base.claim = "nonprime-witness";
  base.kind = kind_str(kind);
  base.params = {{"n", n}};
  return vdetail::run_check(base, [&](Report& r) {
    using K = typename F::Element;
    SymbolicMatrix<F> M(field, kind, n, n);
    auto g = M.xy_entries();
    Budget budget = opt.check_budget();
    r.order_desc = canonical_order(M.ring()).str();
    if (kind == MatrixKind::Skew) {
      if (n < 2) throw ShapeError("skew witness needs n >= 2");
      std::vector<Polynomial<K>> gens(g.begin(), g.end() - 1);
      Ideal<K> J(M.ring(), gens);
      Polynomial<K> gn = g.back();
      bool prod_in = member(M.y(n) * gn, J, budget);
      bool yn_out = !member(M.y(n), J, budget);
      bool gn_out = !member(gn, J, budget);
      r.checks.push_back({"product-in-ideal", prod_in, "y_n * g_n"});
      r.checks.push_back({"first-factor-outside", yn_out, "y_n"});
      r.checks.push_back({"second-factor-outside", gn_out, "g_n"});
      vdetail::absorb_cached(r, J.groebner(canonical_order(M.ring()), budget));
    } else {
      Ideal<K> I(M.ring(), g);
      Polynomial<K> det = M.determinant();
      bool prod_in = member(det * M.y(n), I, budget);
      bool det_out = !member(det, I, budget);
      bool yn_out = !member(M.y(n), I, budget);
      r.checks.push_back({"product-in-ideal", prod_in, "det * y_n"});
      r.checks.push_back({"first-factor-outside", det_out, "det"});
      r.checks.push_back({"second-factor-outside", yn_out, "y_n"});
      vdetail::absorb_cached(r, I.groebner(canonical_order(M.ring()), budget));
    }
    r.status = r.all_checks_passed() ? Status::Verified : Status::Refuted;
  });
}

/// Necessary conditions for normal torsionfreeness on small powers: the
/// radical of I^k collapses to I (via the squarefree certificate for I and
/// explicit g_i^k memberships), and colon ideals by witnesses avoiding both
/// minimal components leave I^k unchanged. Deliberately never reports plain
/// "verified".
template <class F>
Report check_torsionfree_necessary(const F& field, MatrixKind kind, int n, int k,
                                   const VerifyOptions& opt = {}) {
  Report base;
  base.claim = "torsionfree-necessary";
  base.kind = kind_str(kind);
  base.params = {{"n", n}, {"k", k}};
  return vdetail::run_check(base, [&](Report& r) {
    using K = typename F::Element;
    if (kind == MatrixKind::Skew) throw ShapeError("torsionfree checks cover generic/symmetric");
    if (k < 1 || k > 3) throw ShapeError("power exponent k must be in 1..3");
    SymbolicMatrix<F> M(field, kind, n, n);
    auto g = M.xy_entries();
    Budget budget = opt.check_budget();
    MonomialOrder order = canonical_order(M.ring());
    r.order_desc = order.str();

    Ideal<K> I(M.ring(), g);
    Ideal<K> Ik(M.ring(), vdetail::power_products(g, k));

    auto [sq, offender] = squarefree_lt_radical_witness(I, order, budget);
    r.checks.push_back({"radical-witness-squarefree", sq, sq ? "" : "non-squarefree LT: " + offender});
    vdetail::absorb_cached(r, I.groebner(order, budget));

    bool powers_in = true;
    for (size_t i = 0; i < g.size() && powers_in; ++i)
      powers_in = member(g[i].pow(k), Ik, budget);
    r.checks.push_back({"generator-powers-in-power-ideal", powers_in, ""});
    vdetail::absorb_cached(r, Ik.groebner(order, budget));

    // witnesses avoiding both minimal components <y> and <g, det>
    Polynomial<K> mixed = M.determinant();
    for (int j = 1; j <= n; ++j) mixed = mixed + M.y(j);
    Polynomial<K> xvar = M.entry(1, 1);
    bool colon_mixed = equal(quotient(Ik, mixed, budget, &r.gb), Ik, budget);
    r.checks.push_back({"colon-by-mixed-witness", colon_mixed, "y_1+...+y_n+det"});
    bool colon_var = equal(quotient(Ik, xvar, budget, &r.gb), Ik, budget);
    r.checks.push_back({"colon-by-variable-witness", colon_var, "x[1][1]"});
    r.witnesses.push_back("colon witnesses: " + mixed.str(order) + "; " + xvar.str(order));
    r.notes.push_back(
        "necessary conditions only: associated primes of the powers are not computed; the "
        "witnesses avoid both minimal components, so torsion at the irrelevant ideal would "
        "make one of the colon checks fail");

    if (!sq) {
      r.status = Status::Inconclusive;
      r.notes.push_back("squarefree certificate failed; radicality of I not certified");
    } else if (powers_in && colon_mixed && colon_var) {
      r.status = Status::VerifiedNecessary;
    } else {
      r.status = Status::Refuted;
    }
  });
}

/// Primality of the bracket ideals [g_1..g_t]. The primality itself relies on
/// complete irreducibility from the literature and is reported as
/// "paper-cited"; the saturation identity behind it is machine-checked and
/// attached as evidence.
template <class F>
Report check_bracket_primality(const F& field, MatrixKind kind, int n, int t,
                               const VerifyOptions& opt = {}) {
  Report base;
  base.claim = "bracket-primality";
  base.kind = kind_str(kind);
  base.params = {{"n", n}, {"t", t}};
  return vdetail::run_check(base, [&](Report& r) {
    using K = typename F::Element;
    int tmax = kind == MatrixKind::Skew ? n - 1 : n;
    if (t < 1 || t > tmax) throw ShapeError("t out of range for this kind");
    SymbolicMatrix<F> M(field, kind, n, n);
    auto g = M.xy_entries();
    Budget budget = opt.check_budget();
    r.order_desc = canonical_order(M.ring()).str();

    std::vector<Polynomial<K>> gens(g.begin(), g.begin() + t);
    std::vector<Polynomial<K>> lcs(static_cast<size_t>(t), M.y(n));
    Ideal<K> B = bracket(M.ring(), gens, lcs, budget, &r.gb);
    r.notes.push_back("every tower leading coefficient is y_n, so the bracket is the y_n-saturation");

    bool evidence = false;
    if (kind != MatrixKind::Skew && t == n) {
      std::vector<Polynomial<K>> cg = g;
      cg.push_back(M.determinant());
      evidence = equal(B, Ideal<K>(M.ring(), cg), budget);
      r.checks.push_back({"bracket-equals-ideal-plus-det", evidence, ""});
    } else if (kind == MatrixKind::Skew && t == n - 1) {
      evidence = member(g.back(), B, budget);
      r.checks.push_back({"next-entry-in-bracket", evidence, ""});
    } else {
      evidence = equal(B, Ideal<K>(M.ring(), gens), budget);
      r.checks.push_back({"bracket-equals-ideal", evidence, ""});
    }
    r.notes.push_back(
        "primality follows from complete irreducibility of the tower, a cited result; it is "
        "not machine-checked here");
    r.status = evidence ? Status::PaperCited : Status::Inconclusive;
  });
}

struct SuiteItem {
  std::string description;
  std::vector<Status> acceptable;
  std::function<Report()> run;
};

/// The default instance grid. Deterministic order; each item knows which
/// statuses count as expected.
template <class F>
std::vector<SuiteItem> default_suite(const F& field, int max_n, const VerifyOptions& opt = {}) {
  std::vector<SuiteItem> items;
  auto add = [&items](std::string desc, std::vector<Status> ok, std::function<Report()> fn) {
    items.push_back({std::move(desc), std::move(ok), std::move(fn)});
  };
  const std::vector<MatrixKind> square_kinds{MatrixKind::Generic, MatrixKind::Symmetric};

  for (MatrixKind kind : square_kinds)
    for (int n = 1; n <= max_n; ++n)
      add("regular-sequence " + kind_str(kind) + " n=" + std::to_string(n), {Status::Verified},
          [=, &field] { return check_regular_sequence(field, kind, n, n); });
  for (int n = 2; n <= max_n; ++n)
    add("regular-sequence generic m<n (" + std::to_string(n - 1) + "," + std::to_string(n) + ")",
        {Status::Verified},
        [=, &field] { return check_regular_sequence(field, MatrixKind::Generic, n - 1, n); });
  for (int n = 2; n <= max_n + 1; ++n)
    add("regular-sequence skew n=" + std::to_string(n), {Status::Verified},
        [=, &field] { return check_regular_sequence(field, MatrixKind::Skew, n, n); });

  for (MatrixKind kind : square_kinds)
    for (int n = 2; n <= max_n; ++n)
      add("nonprime-witness " + kind_str(kind) + " n=" + std::to_string(n), {Status::Verified},
          [=, &field] { return check_nonprime_witness(field, kind, n, opt); });
  for (int n = 3; n <= max_n + 1; ++n)
    add("nonprime-witness skew n=" + std::to_string(n), {Status::Verified},
        [=, &field] { return check_nonprime_witness(field, MatrixKind::Skew, n, opt); });

  for (MatrixKind kind : square_kinds)
    for (int n = 2; n <= max_n; ++n)
      for (int t = 1; t <= n; ++t)
        add("saturated " + kind_str(kind) + " n=" + std::to_string(n) + " t=" + std::to_string(t),
            {t < n ? Status::Verified : Status::Refuted},
            [=, &field] { return check_saturated(field, kind, n, t, opt); });
  for (int n = 2; n <= max_n + 1; ++n)
    for (int t = 1; t <= n - 1; ++t)
      add("saturated skew n=" + std::to_string(n) + " t=" + std::to_string(t),
          {t <= n - 2 ? Status::Verified : Status::Refuted},
          [=, &field] { return check_saturated(field, MatrixKind::Skew, n, t, opt); });

  for (int n = 1; n <= max_n; ++n)
    add("gb-structure n=" + std::to_string(n), {Status::Verified},
        [=, &field] { return check_gb_structure(field, n, opt); });

  for (int n = 1; n <= max_n; ++n)
    for (int i = 1; i <= n; ++i)
      add("quotient-stability n=" + std::to_string(n) + " i=" + std::to_string(i),
          {Status::Verified},
          [=, &field] { return check_quotient_stability(field, n, i, opt); });

  for (MatrixKind kind : square_kinds)
    for (int n = 1; n <= max_n; ++n) {
      std::vector<Status> ok{Status::Verified};
      if (n >= 3) ok.push_back(Status::BudgetExceeded);  // stretch instances
      add("decomposition-square " + kind_str(kind) + " n=" + std::to_string(n), ok,
          [=, &field] { return check_decomposition_square(field, kind, n, opt); });
    }
  for (int n = 1; n <= std::min(max_n, 3); ++n) {
    std::vector<Status> ok{Status::Verified};
    if (n >= 3) ok.push_back(Status::BudgetExceeded);
    add("decomposition-rect n=" + std::to_string(n), ok,
        [=, &field] { return check_decomposition_rect(field, n, opt); });
  }

  if (max_n >= 2) {
    for (MatrixKind kind : square_kinds)
      for (int k = 1; k <= 3; ++k)
        add("torsionfree-necessary " + kind_str(kind) + " n=2 k=" + std::to_string(k),
            {Status::VerifiedNecessary},
            [=, &field] { return check_torsionfree_necessary(field, kind, 2, k, opt); });
    for (MatrixKind kind : square_kinds)
      for (int t = 1; t <= 2; ++t)
        add("bracket-primality " + kind_str(kind) + " n=2 t=" + std::to_string(t),
            {Status::PaperCited},
            [=, &field] { return check_bracket_primality(field, kind, 2, t, opt); });
    for (int t = 1; t <= 2; ++t)
      add("bracket-primality skew n=3 t=" + std::to_string(t), {Status::PaperCited},
          [=, &field] { return check_bracket_primality(field, MatrixKind::Skew, 3, t, opt); });
  }
  return items;
}

/// Run suite items, optionally fanning out over a fixed number of worker
/// threads; reports come back in item order regardless of scheduling.
inline std::vector<Report> run_suite(const std::vector<SuiteItem>& items, int jobs = 1) {
  std::vector<Report> reports(items.size());
  if (jobs <= 1) {
    for (size_t i = 0; i < items.size(); ++i) reports[i] = items[i].run();
    return reports;
  }
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= items.size()) return;
      reports[i] = items[i].run();
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return reports;
}

inline bool status_acceptable(const SuiteItem& item, const Report& r) {
  for (Status s : item.acceptable)
    if (s == r.status) return true;
  return false;
}

}  // namespace xyk

#endif
