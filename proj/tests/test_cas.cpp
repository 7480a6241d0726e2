#include <sstream>

#include "doctest.h"
#include "pfg/cas.hpp"
#include "pfg/constructions.hpp"

using namespace pfg;

namespace {

template <class K>
void round_trip_all(const K& k) {
  for (int f = 2; f <= 6; ++f)
    for (bool with_t : {false, true})
      for (auto kind : {IdealKind::I, IdealKind::K, IdealKind::J, IdealKind::Ilambda, IdealKind::Iprime}) {
        if (!with_t && (kind == IdealKind::K || kind == IdealKind::J)) continue;
        auto r = PolyRing<K>::make(k, f, with_t);
        const int lambda = kind == IdealKind::Ilambda ? f - 1 : 0;
        auto gens = build_ideal<K>(r, kind, lambda).gens;
        std::istringstream doc(render_cas(gens, *r));
        std::string header;
        std::getline(doc, header);
        auto h = parse_cas_header(header);
        CHECK(h.f == f);
        CHECK(h.with_t == with_t);
        auto r2 = PolyRing<K>::make(k, h.f, h.with_t);
        auto back = parse_cas_body<K>(r2, doc);
        REQUIRE(back.size() == gens.size());
        for (std::size_t i = 0; i < gens.size(); ++i) {
          CHECK(render(back[i]) == render(gens[i]));
          CHECK(parse_polynomial<K>(r, render(gens[i])) == gens[i]);
        }
      }
}

}  // namespace

TEST_CASE("CAS header") {
  auto r = PolyRing<Rationals>::make(Rationals{}, 4, true);
  CHECK(cas_header(*r) == "ring: QQ[x_(1,2)..x_(3,4), t_1..t_4], order: grevlex");
  auto p = PolyRing<PrimeField>::make(PrimeField(32003), 2, false);
  CHECK(cas_header(*p) == "ring: ZZ/32003[x_(1,2)], order: grevlex");

  auto h = parse_cas_header("ring: ZZ/7[x_(1,2)..x_(4,5), t_1..t_5], order: grevlex");
  CHECK(h.characteristic == 7);
  CHECK(h.f == 5);
  CHECK(h.with_t);
  CHECK_THROWS_AS(parse_cas_header("ring: QQ[x_(1,2)..x_(2,4)], order: grevlex"), ParseError);
  CHECK_THROWS_AS(parse_cas_header("ring: QQ[x_(1,2)..x_(3,4), t_1..t_3], order: grevlex"), ParseError);
  CHECK_THROWS_AS(parse_cas_header("ring: QQ[x_(1,2)], order: lex"), ParseError);
  CHECK_THROWS_AS(parse_cas_header("QQ[x_(1,2)]"), ParseError);
}

TEST_CASE("every generator of every ideal round-trips at f = 2..6") {
  round_trip_all(Rationals{});
  round_trip_all(PrimeField(32003));
}

TEST_CASE("body parsing skips comments and blank lines") {
  auto r = PolyRing<Rationals>::make(Rationals{}, 3, false);
  std::istringstream body("# comment\n\nx_(1,2) - 2*x_(2,3)\n   \n0\n");
  auto gens = parse_cas_body<Rationals>(r, body);
  REQUIRE(gens.size() == 2);
  CHECK(render(gens[0]) == "x_(1,2) - 2*x_(2,3)");
  CHECK(gens[1].is_zero());
  std::istringstream bad("x_(1,4)\n");
  CHECK_THROWS_AS(parse_cas_body<Rationals>(r, bad), ParseError);
}
