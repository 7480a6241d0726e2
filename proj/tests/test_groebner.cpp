#include <random>

#include "doctest.h"
#include "pfg/constructions.hpp"
#include "pfg/groebner.hpp"
#include "pfg/text.hpp"

using namespace pfg;

namespace {

using QRing = PolyRing<Rationals>;
using PRing = PolyRing<PrimeField>;

template <class K>
Polynomial<K> var(const RingOf<K>& r, int i, int j) {
  return Polynomial<K>::variable(r, r->x(i, j));
}

template <class K>
std::vector<Polynomial<K>> plus(std::vector<Polynomial<K>> a, const Polynomial<K>& g) {
  a.push_back(g);
  return a;
}

template <class K>
bool equal_ideals(const std::vector<Polynomial<K>>& a, const GroebnerBasis<K>& b) {
  return same_ideal(groebner_basis(a), b);
}

template <class K>
Polynomial<K> random_linear(const RingOf<K>& r, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> v(0, r->nvars() - 1);
  std::uniform_int_distribution<long> c(-5, 5);
  auto p = Polynomial<K>::constant(r, c(rng));
  for (int k = 0; k < 3; ++k) p += Polynomial<K>::variable(r, v(rng)).scaled(c(rng));
  return p;
}

}  // namespace

TEST_CASE("groebner bases of small ideals") {
  auto r4 = QRing::make(Rationals{}, 4, true);
  auto x12 = var<Rationals>(r4, 1, 2);
  auto gb = groebner_basis<Rationals>({x12});
  REQUIRE(gb.gens.size() == 1);
  CHECK(gb.gens[0] == x12);

  auto i4 = build_ideal<Rationals>(r4, IdealKind::I).gens;
  auto gi = groebner_basis(i4);
  REQUIRE(gi.gens.size() == 1);
  CHECK(gi.gens[0] == i4[0].monic());

  auto j4 = build_ideal<Rationals>(r4, IdealKind::J).gens;
  auto gj = groebner_basis(j4);
  for (const auto& g : j4) CHECK(ideal_member(g, gj));
  for (const auto& g : gj.gens) CHECK(ideal_member(g, groebner_basis(j4)));
  CHECK(!ideal_member(Polynomial<Rationals>::constant(r4, 1), gj));
  CHECK(!gj.is_unit_ideal());
  CHECK(normal_form(x12, groebner_basis<Rationals>({x12})).is_zero());

  // idempotence
  auto again = groebner_basis(gj.gens);
  CHECK(again.gens == gj.gens);

  auto unit = groebner_basis<Rationals>({x12, x12 + Polynomial<Rationals>::constant(r4, 1)});
  CHECK(unit.is_unit_ideal());

  auto zero = groebner_basis<Rationals>({Polynomial<Rationals>(r4)});
  CHECK(zero.gens.empty());
}

TEST_CASE("lex and elimination orders give the same ideal") {
  auto r = PRing::make(PrimeField(32003), 4, true);
  auto j = build_ideal<PrimeField>(r, IdealKind::J).gens;
  auto a = groebner_basis(j, MonomialOrder::grevlex());
  auto b = groebner_basis(j, MonomialOrder::lex());
  auto c = groebner_basis(j, MonomialOrder::elim(6));
  for (const auto& g : j) {
    CHECK(ideal_member(g, b));
    CHECK(ideal_member(g, c));
  }
  for (const auto& g : b.gens) CHECK(ideal_member(g.map_to(r), a));
  for (const auto& g : c.gens) CHECK(ideal_member(g.map_to(r), a));
}

TEST_CASE("membership soundness on random ideal elements") {
  std::mt19937_64 rng(7);
  for (int f : {4, 5}) {
    auto r = PRing::make(PrimeField(32003), f, true);
    auto j = build_ideal<PrimeField>(r, IdealKind::J).gens;
    auto gb = groebner_basis(j);
    for (int trial = 0; trial < 50; ++trial) {
      Polynomial<PrimeField> h(r);
      for (const auto& g : j) h += random_linear<PrimeField>(r, rng) * g;
      CHECK(ideal_member(h, gb));
      auto outside = h + Polynomial<PrimeField>::variable(r, r->t(1));
      CHECK(!ideal_member(outside, gb));
    }
  }
  auto rq = QRing::make(Rationals{}, 4, true);
  auto jq = build_ideal<Rationals>(rq, IdealKind::J).gens;
  auto gq = groebner_basis(jq);
  for (int trial = 0; trial < 10; ++trial) {
    Polynomial<Rationals> h(rq);
    for (const auto& g : jq) h += random_linear<Rationals>(rq, rng) * g;
    CHECK(ideal_member(h, gq));
  }
}

TEST_CASE("pivot polynomials lie in J") {
  for (int f : {4, 5}) {
    auto r = QRing::make(Rationals{}, f, true);
    auto gb = groebner_basis(build_ideal<Rationals>(r, IdealKind::J).gens);
    for (const auto& s : s1_s2_sets<Rationals>(r).s2) CHECK(ideal_member(s, gb));
    for (const auto& s : s1_s2_sets<Rationals>(r, {2, 4}).s2) CHECK(ideal_member(s, gb));
  }
}

TEST_CASE("ideal quotients and regular sequences") {
  auto r1 = QRing::make(Rationals{}, 2, false);
  auto x = var<Rationals>(r1, 1, 2);
  auto q = ideal_quotient<Rationals>({x * x}, x);
  REQUIRE(q.gens.size() == 1);
  CHECK(q.gens[0] == x);
  CHECK_THROWS_AS(ideal_quotient<Rationals>({x}, Polynomial<Rationals>(r1)), StructuralError);

  auto check = [](auto field) {
    using K = decltype(field);
    for (int f : {4, 5}) {
      auto r = PolyRing<K>::make(field, f, true);
      auto x12 = var<K>(r, 1, 2), x13 = var<K>(r, 1, 3);
      auto i = build_ideal<K>(r, IdealKind::I).gens;
      auto j = build_ideal<K>(r, IdealKind::J).gens;
      CHECK(equal_ideals(i, ideal_quotient(i, x12)));
      CHECK(equal_ideals(plus(i, x12), ideal_quotient(plus(i, x12), x13)));
      CHECK(equal_ideals(j, ideal_quotient(j, x12)));
      CHECK(equal_ideals(plus(j, x12), ideal_quotient(plus(j, x12), x13)));
    }
  };
  check(Rationals{});
  check(PrimeField(32003));

  auto r2 = QRing::make(Rationals{}, 2, true);
  auto j2 = build_ideal<Rationals>(r2, IdealKind::J).gens;
  auto x12 = var<Rationals>(r2, 1, 2);
  auto quot = ideal_quotient(j2, x12);
  auto t = groebner_basis<Rationals>({Polynomial<Rationals>::variable(r2, r2->t(1)),
                                      Polynomial<Rationals>::variable(r2, r2->t(2))});
  CHECK(same_ideal(quot, t));
}

TEST_CASE("saturation membership") {
  for (int f : {4, 5}) {
    auto r = QRing::make(Rationals{}, f, true);
    auto x12 = var<Rationals>(r, 1, 2);
    auto s2 = s1_s2_sets<Rationals>(r).s2;
    for (const auto& g : build_ideal<Rationals>(r, IdealKind::J).gens) {
      auto res = saturation_member(s2, x12, g, 4);
      CHECK(res.member);
      CHECK(res.exponent <= 2);
    }
  }
  auto r = QRing::make(Rationals{}, 4, true);
  auto x12 = var<Rationals>(r, 1, 2);
  auto i = build_ideal<Rationals>(r, IdealKind::I).gens;
  auto k = build_ideal<Rationals>(r, IdealKind::K).gens;
  auto base = i;
  base.push_back(k[0]);
  base.push_back(k[1]);
  for (const auto& g : build_ideal<Rationals>(r, IdealKind::J).gens) {
    auto res = saturation_member(base, x12, g, 4);
    CHECK(res.member);
    CHECK(res.exponent <= 4);
  }
  auto zero_n = saturation_member(i, x12, i[0], 3);
  CHECK(zero_n.member);
  CHECK(zero_n.exponent == 0);
  auto never = saturation_member(i, x12, Polynomial<Rationals>::constant(r, 1), 3);
  CHECK(!never.member);
  CHECK(never.exponent == -1);
}

TEST_CASE("monomial dimension and Hilbert numerators") {
  Monomial x(3), y(3);
  x.set_exponent(0, 1);
  y.set_exponent(1, 1);
  CHECK(monomial_ideal_dimension(3, {}) == 3);
  CHECK(monomial_ideal_dimension(3, {x}) == 2);
  CHECK(monomial_ideal_dimension(3, {x * y}) == 2);
  CHECK(monomial_ideal_dimension(3, {x, y}) == 1);
  CHECK(hilbert_numerator(3, {x}) == std::vector<long long>{1, -1});
  CHECK(hilbert_numerator(3, {x * y}) == std::vector<long long>{1, 0, -1});
  CHECK(hilbert_numerator(3, {x, y}) == std::vector<long long>{1, -2, 1});
  CHECK(order_at_one({1, -2, 1}) == 2);
  CHECK(order_at_one({1, 0, -1}) == 1);
  CHECK(order_at_one({3}) == 0);

  auto r = QRing::make(Rationals{}, 4, true);
  auto zero = dimension_codim<Rationals>({Polynomial<Rationals>(r)});
  CHECK(zero.dim == 10);
  CHECK(zero.codim == 0);
  CHECK(zero.numerator == std::vector<long long>{1});
  auto inhom = var<Rationals>(r, 1, 2) + Polynomial<Rationals>::constant(r, 1);
  CHECK_THROWS_AS(dimension_codim<Rationals>({inhom}), StructuralError);
}

TEST_CASE("codimension table") {
  PrimeField p(32003);
  const int expected_j[] = {0, 0, 1, 2, 3, 5, 8};
  for (int f = 2; f <= 6; ++f) {
    auto r = PRing::make(p, f, true);
    CHECK(dimension_codim(build_ideal<PrimeField>(r, IdealKind::J).gens).codim == expected_j[f]);
  }
  for (int f = 4; f <= 6; ++f) {
    auto r = PRing::make(p, f, false);
    CHECK(dimension_codim(build_ideal<PrimeField>(r, IdealKind::I).gens).codim == binom(f - 2, 2));
    for (int l = 1; l < f; ++l)
      CHECK(dimension_codim(build_ideal<PrimeField>(r, IdealKind::Ilambda, l).gens).codim == binom(f - 2, 2) + l - 1);
  }
}

TEST_CASE("codimension does not depend on the characteristic") {
  for (int f : {4, 5}) {
    auto rq = QRing::make(Rationals{}, f, true);
    std::vector<HilbertData> ref;
    for (auto kind : {IdealKind::I, IdealKind::J, IdealKind::Ilambda})
      ref.push_back(dimension_codim(build_ideal<Rationals>(rq, kind, 2).gens));
    for (std::uint32_t p : {2u, 3u, 32003u}) {
      auto r = PRing::make(PrimeField(p), f, true);
      std::size_t k = 0;
      for (auto kind : {IdealKind::I, IdealKind::J, IdealKind::Ilambda}) {
        auto h = dimension_codim(build_ideal<PrimeField>(r, kind, 2).gens);
        CHECK(h.codim == ref[k].codim);
        CHECK(h.numerator == ref[k].numerator);
        ++k;
      }
    }
  }
}

TEST_CASE("exact division") {
  auto r = QRing::make(Rationals{}, 3, false);
  auto a = var<Rationals>(r, 1, 2), b = var<Rationals>(r, 2, 3);
  CHECK(divide_exact(a * b + a * a, a) == a + b);
  CHECK_THROWS_AS(divide_exact(a * b + Polynomial<Rationals>::constant(r, 1), a), StructuralError);
}
