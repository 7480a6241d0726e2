#include <algorithm>
#include <random>

#include "doctest.h"
#include "pfg/polynomial.hpp"
#include "pfg/text.hpp"

using namespace pfg;

namespace {

using QRing = PolyRing<Rationals>;
using PRing = PolyRing<PrimeField>;
using QPoly = Polynomial<Rationals>;
using PPoly = Polynomial<PrimeField>;

std::vector<Monomial> all_monomials(int nvars, int maxdeg) {
  std::vector<Monomial> out;
  std::vector<int> e(nvars, 0);
  std::function<void(int, int)> rec = [&](int v, int left) {
    if (v == nvars) {
      out.emplace_back(nvars, std::span<const int>(e));
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[v] = k;
      rec(v + 1, left - k);
    }
    e[v] = 0;
  };
  rec(0, maxdeg);
  return out;
}

// textbook definition: higher degree wins; on ties the last nonzero entry of
// a - b is negative for the larger monomial
int grevlex_reference(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (int i = a.nvars() - 1; i >= 0; --i) {
    int d = a.exponent(i) - b.exponent(i);
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

int lex_reference(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < a.nvars(); ++i)
    if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i) ? 1 : -1;
  return 0;
}

template <class K>
typename K::Elem eval_term_by_term(const Polynomial<K>& f, const std::map<int, typename K::Elem>& pt) {
  const K& k = f.field();
  auto acc = k.zero();
  for (const auto& t : f.terms()) {
    auto v = t.c;
    for (int i = 0; i < t.m.nvars(); ++i)
      for (int p = 0; p < t.m.exponent(i); ++p) v = k.mul(v, pt.at(i));
    acc = k.add(acc, v);
  }
  return acc;
}

template <class K>
Polynomial<K> random_poly(const typename PolyRing<K>::Ptr& r, std::mt19937_64& rng, int maxdeg, int nterms) {
  std::uniform_int_distribution<int> var(0, r->nvars() - 1), deg(0, maxdeg);
  std::vector<Term<K>> terms;
  for (int i = 0; i < nterms; ++i) {
    Monomial m(r->nvars());
    int d = deg(rng);
    for (int k = 0; k < d; ++k) {
      int v = var(rng);
      m.set_exponent(v, m.exponent(v) + 1);
    }
    terms.push_back({m, r->field().random(rng)});
  }
  return Polynomial<K>::from_terms(r, terms);
}

}  // namespace

TEST_CASE("grevlex agrees with the textbook definition on degree-3 monomials") {
  auto mons = all_monomials(3, 3);
  auto ord = MonomialOrder::grevlex();
  for (const auto& a : mons)
    for (const auto& b : mons) {
      int c = ord.compare(a, b) > 0 ? 1 : (ord.compare(a, b) < 0 ? -1 : 0);
      CHECK(c == grevlex_reference(a, b));
    }
  auto lex = MonomialOrder::lex();
  for (const auto& a : mons)
    for (const auto& b : mons) {
      int c = lex.compare(a, b) > 0 ? 1 : (lex.compare(a, b) < 0 ? -1 : 0);
      CHECK(c == lex_reference(a, b));
    }
}

TEST_CASE("monomial comparisons on small examples") {
  auto r = QRing::make(Rationals{}, 3, true);
  auto x12 = r->var_monomial(r->x(1, 2));
  auto x13 = r->var_monomial(r->x(1, 3));
  auto ord = r->order();
  CHECK(ord.compare(x12 * x12, x12 * x13) > 0);
  CHECK(ord.compare(x12, x12) == 0);
  Monomial other(2);
  CHECK_THROWS_AS(ord.compare(x12, other), StructuralError);
}

TEST_CASE("every order is a total order refining divisibility up to degree 4 in 6 variables") {
  auto mons = all_monomials(6, 4);
  for (auto ord : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::elim(2)}) {
    auto sorted = mons;
    std::sort(sorted.begin(), sorted.end(), [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) < 0; });
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) REQUIRE(ord.compare(sorted[i], sorted[i + 1]) < 0);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
    for (int trial = 0; trial < 2000; ++trial) {
      const auto& a = mons[pick(rng)];
      const auto& b = mons[pick(rng)];
      if (a.divides(b) && !(a == b)) CHECK(ord.compare(a, b) < 0);
    }
  }
}

TEST_CASE("polynomial arithmetic") {
  auto r = QRing::make(Rationals{}, 2, true);
  auto x = QPoly::variable(r, r->x(1, 2));
  auto t = QPoly::variable(r, r->t(1));
  CHECK((x + t) * (x - t) == x * x - t * t);
  CHECK(((x + t) * QPoly(r)).is_zero());

  auto r2 = PRing::make(PrimeField(2), 2, true);
  auto x2 = PPoly::variable(r2, r2->x(1, 2));
  auto t2 = PPoly::variable(r2, r2->t(1));
  CHECK((x2 + t2) * (x2 + t2) == x2 * x2 + t2 * t2);
}

TEST_CASE("random canonical-form properties over F_32003") {
  auto r = PRing::make(PrimeField(32003), 3, true);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    auto f = random_poly<PrimeField>(r, rng, 3, 5);
    auto g = random_poly<PrimeField>(r, rng, 3, 5);
    auto h = random_poly<PrimeField>(r, rng, 2, 4);
    CHECK(f + g == g + f);
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
  }
}

TEST_CASE("specialization is a ring homomorphism") {
  auto r = PRing::make(PrimeField(32003), 3, true);
  const auto& k = r->field();
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = random_poly<PrimeField>(r, rng, 3, 6);
    auto g = random_poly<PrimeField>(r, rng, 3, 6);
    for (int pt = 0; pt < 2; ++pt) {
      std::map<int, PrimeField::Elem> a;
      for (int i = 0; i < r->nvars(); ++i) a[i] = k.random(rng);
      CHECK(f.specialize(a) == eval_term_by_term(f, a));
      CHECK((f * g).specialize(a) == k.mul(f.specialize(a), g.specialize(a)));
    }
  }
  auto q = QRing::make(Rationals{}, 4, false);
  auto pf = parse_polynomial<Rationals>(q, "x_(1,2)*x_(3,4) - x_(1,3)*x_(2,4) + x_(1,4)*x_(2,3)");
  std::map<int, mpq_class> ones;
  for (int i = 0; i < q->nvars(); ++i) ones[i] = 1;
  CHECK(pf.specialize(ones) == 1);
  CHECK(QPoly(q).specialize(ones) == 0);
  std::map<int, mpq_class> partial{{0, 1}};
  CHECK_THROWS_AS(pf.specialize(partial), StructuralError);
}

TEST_CASE("bidegrees") {
  auto r = QRing::make(Rationals{}, 4, true);
  auto x12 = QPoly::variable(r, r->x(1, 2));
  auto t1 = QPoly::variable(r, r->t(1));
  auto t2 = QPoly::variable(r, r->t(2));
  auto x13 = QPoly::variable(r, r->x(1, 3));
  CHECK(*(t2 * x12).bidegree() == Bidegree{1, 1});
  CHECK(!(x12 + t1).bidegree().has_value());
  auto pf = parse_polynomial<Rationals>(r, "x_(1,2)*x_(3,4) - x_(1,3)*x_(2,4) + x_(1,4)*x_(2,3)");
  CHECK(*pf.bidegree() == Bidegree{2, 0});
  auto f = t1 * x12 - t2 * x13;
  auto g = x12 * x13 * t2;
  CHECK(*(f * g).bidegree() == *f.bidegree() + *g.bidegree());
}

TEST_CASE("render and parse") {
  auto r = QRing::make(Rationals{}, 4, true);
  const char* pf = "x_(1,2)*x_(3,4) - x_(1,3)*x_(2,4) + x_(1,4)*x_(2,3)";
  CHECK(render(parse_polynomial<Rationals>(r, pf)) == pf);
  CHECK(parse_polynomial<Rationals>(r, "0").is_zero());
  CHECK(render(parse_polynomial<Rationals>(r, "x_(1,2)*t_1")) == "t_1*x_(1,2)");
  CHECK(render(parse_polynomial<Rationals>(r, "-1/2*t_3^2 + 3")) == "-1/2*t_3^2 + 3");
  CHECK_THROWS_AS(parse_polynomial<Rationals>(r, "x_(1,5)"), ParseError);
  CHECK_THROWS_AS(parse_polynomial<Rationals>(r, "x_(1,2) +* t_1"), ParseError);
  try {
    parse_polynomial<Rationals>(r, "t_1 + ?");
  } catch (const ParseError& e) {
    CHECK(e.position() == 6);
  }

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    auto f = random_poly<Rationals>(r, rng, 3, 6);
    CHECK(parse_polynomial<Rationals>(r, render(f)) == f);
  }
  auto p = PRing::make(PrimeField(32003), 4, true);
  for (int trial = 0; trial < 100; ++trial) {
    auto f = random_poly<PrimeField>(p, rng, 3, 6);
    CHECK(parse_polynomial<PrimeField>(p, render(f)) == f);
  }
}
