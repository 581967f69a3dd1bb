#include <doctest.h>

#include <random>

#include "xyk/parse.hpp"

using namespace xyk;

namespace {

const RationalField QQ;

Polynomial<Rational> pp(const RingPtr& ring, const std::string& text) {
  return parse_polynomial(ring, text, QQ);
}

Monomial mono(const RingPtr& ring, std::initializer_list<std::pair<Variable, int>> vs) {
  std::vector<Monomial::Entry> es;
  for (const auto& [v, e] : vs) es.push_back({*ring->find(v), e});
  return Monomial::from_entries(es);
}

std::vector<Monomial> random_monomials(const RingPtr& ring, int count, unsigned seed,
                                       int max_deg = 5) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> var(0, ring->var_count() - 1);
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::vector<Monomial> out;
  for (int i = 0; i < count; ++i) {
    std::vector<Monomial::Entry> es;
    int d = deg(rng);
    for (int k = 0; k < d; ++k) es.push_back({var(rng), 1});
    out.push_back(Monomial::from_entries(es));
  }
  return out;
}

Polynomial<Rational> random_poly(const RingPtr& ring, std::mt19937_64& rng, int terms,
                                 int max_deg = 4) {
  std::uniform_int_distribution<int> var(0, ring->var_count() - 1);
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  std::vector<Term<Rational>> ts;
  for (int i = 0; i < terms; ++i) {
    std::vector<Monomial::Entry> es;
    int d = deg(rng);
    for (int k = 0; k < d; ++k) es.push_back({var(rng), 1});
    ts.push_back({Rational(num(rng), den(rng)), Monomial::from_entries(es)});
  }
  return Polynomial<Rational>::from_terms(ring, std::move(ts));
}

}  // namespace

TEST_CASE("ring construction and variable lookup") {
  auto g32 = Ring::make(MatrixKind::Generic, 3, 2);
  CHECK(g32->var_count() == 8);  // 6 x + 2 y
  CHECK(g32->var(0) == Variable::x(1, 1));
  CHECK(g32->var(6) == Variable::y(1));

  auto s2 = Ring::make(MatrixKind::Symmetric, 2, 2);
  CHECK(s2->var_count() == 5);  // x11 x12 x22 y1 y2
  CHECK(s2->x_index(2, 1) == s2->x_index(1, 2));  // alias

  auto k3 = Ring::make(MatrixKind::Skew, 3, 3);
  CHECK(k3->var_count() == 6);  // x12 x13 x23 y1 y2 y3
  CHECK(!k3->find(Variable::x(2, 1)));
  CHECK_THROWS_AS(k3->x_index(2, 1), ShapeError);

  CHECK_THROWS_AS(Ring::make(MatrixKind::Symmetric, 2, 3), ShapeError);
  CHECK_THROWS_AS(Ring::make(MatrixKind::Generic, 0, 2), ShapeError);

  auto ext = g32->extended(1);
  CHECK(ext->var_count() == 9);
  CHECK(ext->extends(*g32));
  CHECK(ext->var(8) == Variable::aux(1));
}

TEST_CASE("regseq order dominance") {
  auto ring = Ring::make(MatrixKind::Generic, 2, 2);
  MonomialOrder ord = MonomialOrder::regseq(ring);
  // x11*y1 vs x12*y2: the diagonal chain dominates
  Monomial u = mono(ring, {{Variable::x(1, 1), 1}, {Variable::y(1), 1}});
  Monomial v = mono(ring, {{Variable::x(1, 2), 1}, {Variable::y(2), 1}});
  CHECK(ord.compare(u, v) == Cmp::GT);
  CHECK(ord.compare(u, u) == Cmp::EQ);
}

TEST_CASE("grob order puts y above x") {
  auto ring = Ring::make(MatrixKind::Generic, 2, 2);
  MonomialOrder ord = MonomialOrder::grob(ring);
  Monomial u = mono(ring, {{Variable::y(2), 1}, {Variable::x(1, 1), 1}});
  Monomial v = mono(ring, {{Variable::x(1, 1), 2}});
  CHECK(ord.compare(u, v) == Cmp::GT);
}

TEST_CASE("order rejects foreign variables") {
  auto ring = Ring::make(MatrixKind::Generic, 2, 2);
  auto ext = ring->extended(1);
  MonomialOrder ord = MonomialOrder::grob(ring);
  Monomial aux = Monomial::var(ext->aux_index(1));
  CHECK_THROWS_AS(ord.compare(aux, aux), OrderDomainError);
}

TEST_CASE("leading terms under the stated orders") {
  auto ring = Ring::make(MatrixKind::Generic, 2, 2);
  MonomialOrder ord = MonomialOrder::regseq(ring);
  auto g1 = pp(ring, "x[1][1]*y[1] + x[1][2]*y[2]");
  auto lt = g1.leading_term(ord);
  CHECK(lt.c == Rational(1));
  CHECK(lt.m == mono(ring, {{Variable::x(1, 1), 1}, {Variable::y(1), 1}}));

  auto c5 = pp(ring, "5");
  CHECK(c5.leading_term(ord).c == Rational(5));
  CHECK(c5.leading_term(ord).m.is_one());

  CHECK_THROWS_AS(Polynomial<Rational>::zero(ring).leading_term(ord), std::invalid_argument);
}

TEST_CASE("skew regseq leading term") {
  // g2 = -x12 y1 + x23 y3; under the superdiagonal chain x23 > x12 > rest
  // the x23 monomial wins with coefficient +1
  auto ring = Ring::make(MatrixKind::Skew, 3, 3);
  MonomialOrder ord = MonomialOrder::regseq(ring);
  auto g2 = pp(ring, "-x[1][2]*y[1] + x[2][3]*y[3]");
  auto lt = g2.leading_term(ord);
  CHECK(lt.c == Rational(1));
  CHECK(lt.m == mono(ring, {{Variable::x(2, 3), 1}, {Variable::y(3), 1}}));
}

TEST_CASE("polynomial arithmetic") {
  auto ring = Ring::make(MatrixKind::Generic, 2, 2);
  auto g1 = pp(ring, "x[1][1]*y[1] + x[1][2]*y[2]");
  auto g2 = pp(ring, "x[2][1]*y[1] + x[2][2]*y[2]");
  CHECK((g1 + (-g1)).is_zero());
  CHECK(g1 * pp(ring, "1") == g1);
  // the 2x2 cofactor combination: x22 g1 - x12 g2 = det * y1
  auto lhs = pp(ring, "x[2][2]") * g1 - pp(ring, "x[1][2]") * g2;
  auto det_y1 = pp(ring, "(x[1][1]*x[2][2] - x[1][2]*x[2][1]) * y[1]");
  CHECK(lhs == det_y1);
}

TEST_CASE("field mismatch between rings") {
  auto r22 = Ring::make(MatrixKind::Generic, 2, 2);
  auto r33 = Ring::make(MatrixKind::Generic, 3, 3);
  auto p = pp(r22, "x[1][1]");
  auto q = pp(r33, "x[1][1]");
  CHECK_THROWS_AS(p + q, RingMismatch);
}

TEST_CASE("prime field coefficient mismatch surfaces in arithmetic") {
  auto ring = Ring::make(MatrixKind::Generic, 2, 2);
  PrimeField F7(7), F11(11);
  auto p = parse_polynomial(ring, "3*x[1][1]", F7);
  auto q = parse_polynomial(ring, "3*x[1][1]", F11);
  CHECK_THROWS_AS(p + q, ModulusMismatch);
}

TEST_CASE("order axioms on random monomials") {
  auto ring = Ring::make(MatrixKind::Generic, 3, 3);
  std::vector<MonomialOrder> orders{MonomialOrder::regseq(ring), MonomialOrder::grob(ring),
                                    MonomialOrder::declaration(ring)};
  auto ms = random_monomials(ring, 60, 4242);
  for (const auto& ord : orders) {
    for (const auto& u : ms)
      for (const auto& v : ms) {
        Cmp ab = ord.compare(u, v);
        Cmp ba = ord.compare(v, u);
        // totality / antisymmetry
        if (ab == Cmp::EQ) {
          CHECK(u == v);
          CHECK(ba == Cmp::EQ);
        } else {
          CHECK(ab != ba);
        }
        // compatibility with multiplication
        for (const auto& w : {ms[0], ms[1], ms[2]}) {
          if (ab == Cmp::LT) CHECK(ord.compare(u * w, v * w) == Cmp::LT);
        }
        // 1 is minimal
        CHECK(ord.compare(u, Monomial()) != Cmp::LT);
      }
  }
}

TEST_CASE("leading term is multiplicative") {
  auto ring = Ring::make(MatrixKind::Generic, 2, 3);
  MonomialOrder ord = MonomialOrder::grob(ring);
  std::mt19937_64 rng(77);
  for (int it = 0; it < 100; ++it) {
    auto p = random_poly(ring, rng, 4);
    auto q = random_poly(ring, rng, 4);
    if (p.is_zero() || q.is_zero()) continue;
    auto lp = p.leading_term(ord);
    auto lq = q.leading_term(ord);
    auto lpq = (p * q).leading_term(ord);
    CHECK(lpq.m == lp.m * lq.m);
    CHECK(lpq.c == lp.c * lq.c);
  }
}

TEST_CASE("parser examples") {
  auto ring = Ring::make(MatrixKind::Generic, 2, 2);
  auto g1 = pp(ring, "x[1][1]*y[1] + x[1][2]*y[2]");
  CHECK(g1.term_count() == 2);
  auto sq = pp(ring, "x[1][1]^2 - 1/2");
  CHECK(sq.term_count() == 2);
  CHECK(sq.terms()[1].c == Rational(-1, 2));
  CHECK(pp(ring, "0").is_zero());
  CHECK(pp(ring, "x[1][1] - x[1][1]").is_zero());
}

TEST_CASE("parser error reporting") {
  auto ring = Ring::make(MatrixKind::Generic, 2, 2);
  CHECK_THROWS_AS(pp(ring, "x[3][1]"), ParseError);
  CHECK_THROWS_AS(pp(ring, "x[1][1] +"), ParseError);
  CHECK_THROWS_AS(pp(ring, "x[1][1] x[1][2]"), ParseError);  // implicit product
  CHECK_THROWS_AS(pp(ring, "x[1][1]^99999999999"), ParseError);
  CHECK_THROWS_AS(pp(ring, "z[1]"), ParseError);
  try {
    pp(ring, "x[1][1] +\n @");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("order text grammar") {
  auto ring = Ring::make(MatrixKind::Generic, 2, 2);
  auto full = parse_order(
      ring, "order lex: y[1] > y[2] > x[1][1] > x[1][2] > x[2][1] > x[2][2]");
  CHECK(full.same_as(MonomialOrder::grob(ring)));

  auto completed = parse_order(ring, "order lex: x[1][1] > x[2][2] > ...rest");
  CHECK(completed.same_as(MonomialOrder::regseq(ring)));

  CHECK_THROWS_AS(parse_order(ring, "order lex: y[1] > y[2]"), ParseError);
  CHECK_THROWS_AS(parse_order(ring, "order lex: y[1] > y[1] > ...rest"), ParseError);
  CHECK(MonomialOrder::grob(ring).str() ==
        "order lex: y[1] > y[2] > x[1][1] > x[1][2] > x[2][1] > x[2][2]");
}

TEST_CASE("print/parse round trip is the identity") {
  auto ring = Ring::make(MatrixKind::Generic, 2, 3);
  std::mt19937_64 rng(31337);
  for (int it = 0; it < 120; ++it) {
    auto p = random_poly(ring, rng, 5);
    CHECK(pp(ring, p.str()) == p);
    auto q = pp(ring, p.str(MonomialOrder::grob(ring)));
    CHECK(q == p);
  }
}

TEST_CASE("prime field round trip and modular literals") {
  auto ring = Ring::make(MatrixKind::Generic, 2, 2);
  PrimeField F(7);
  auto p = parse_polynomial(ring, "3*x[1][1] + 5/2", F);
  CHECK(parse_polynomial(ring, p.str(), F) == p);
  auto q = parse_polynomial(ring, "(3 mod 7)*x[1][1]", F);
  CHECK(q.terms()[0].c == GFp(3, 7));
  CHECK_THROWS_AS(parse_polynomial(ring, "3 mod 11", F), ParseError);
  CHECK_THROWS_AS(parse_polynomial(ring, "3 mod 7", RationalField{}), ParseError);
}

TEST_CASE("symmetric alias accepted, skew lower triangle rejected") {
  auto s2 = Ring::make(MatrixKind::Symmetric, 2, 2);
  CHECK(pp(s2, "x[2][1]") == pp(s2, "x[1][2]"));
  auto k3 = Ring::make(MatrixKind::Skew, 3, 3);
  CHECK_THROWS_AS(pp(k3, "x[2][1]"), ParseError);
}

TEST_CASE("monomial helpers") {
  auto ring = Ring::make(MatrixKind::Generic, 2, 2);
  Monomial a = mono(ring, {{Variable::x(1, 1), 2}, {Variable::y(1), 1}});
  Monomial b = mono(ring, {{Variable::x(1, 1), 1}, {Variable::y(2), 1}});
  CHECK(Monomial::lcm(a, b).degree() == 4);
  CHECK(Monomial::gcd(a, b) == Monomial::var(*ring->find(Variable::x(1, 1))));
  CHECK(!Monomial::coprime(a, b));
  CHECK(Monomial::coprime(Monomial::var(0), Monomial::var(1)));
  CHECK(!a.squarefree());
  CHECK(b.squarefree());
  CHECK(Monomial::var(0).divides(a));
  CHECK(Monomial::div(a, Monomial::var(0)) ==
        mono(ring, {{Variable::x(1, 1), 1}, {Variable::y(1), 1}}));

  Monomial big = Monomial::var(0, 2000000000);
  CHECK_THROWS_AS(big * big, ExponentOverflow);
  CHECK_THROWS_AS(big.pow(2), ExponentOverflow);
}
