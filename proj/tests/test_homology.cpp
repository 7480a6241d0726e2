#include "doctest.h"
#include "oracle/linear_oracle.hpp"
#include "pfg/homology.hpp"

using namespace pfg;

namespace {

using QRing = PolyRing<Rationals>;

template <class K>
PresentedComplex<K> as_presented(const FreeComplex<K>& c) {
  PresentedComplex<K> p;
  p.ring = c.ring;
  p.free_complex = true;
  for (std::size_t i = c.terms(); i-- > 0;) p.terms.push_back(free_module<K>(c.ring, "F", c.term(i)));
  for (std::size_t i = c.maps.size(); i-- > 0;) p.maps.push_back(c.maps[i]);
  return p;
}

// interior positions of a resolution F_len -> ... -> F_0 are exact
template <class K>
bool resolution_sound(const FreeComplex<K>& c) {
  if (!composites_vanish(c)) return false;
  auto p = as_presented(c);
  for (int pos = 0; pos + 1 < static_cast<int>(p.terms.size()); ++pos)
    if (!homology_is_zero(p, pos)) return false;
  return true;
}

template <class K>
BettiTable resolve_betti(const K& k, int f, ModuleName m) {
  auto mod = build_module<K>(k, f, m);
  auto res = free_resolution(mod.relations, default_max_len(f));
  REQUIRE(!res.truncated);
  return res.betti();
}

}  // namespace

TEST_CASE("syzygies of small matrices") {
  auto r = QRing::make(Rationals{}, 3, false);
  auto x = Polynomial<Rationals>::variable(r, 0), y = Polynomial<Rationals>::variable(r, 1);
  GradedMatrix<Rationals> m(r, {{0, 0}}, {{1, 0}, {1, 0}});
  m.at(0, 0) = x;
  m.at(0, 1) = y;
  auto s = syzygies(m);
  REQUIRE(s.cols() == 1);
  CHECK(s.source_deg()[0] == Bidegree{2, 0});
  CHECK(((s.at(0, 0) == y && s.at(1, 0) == -x) || (s.at(0, 0) == -y && s.at(1, 0) == x)));
  CHECK((m * s).is_zero());

  auto id = GradedMatrix<Rationals>::identity(r, {{0, 0}, {1, 0}});
  CHECK(syzygies(id).cols() == 0);
}

TEST_CASE("syzygies of d1 against degreewise linear algebra") {
  auto r = QRing::make(Rationals{}, 5, false);
  auto d1 = map_matrix<Rationals>(r, MapName::d1);
  auto s = syzygies(d1);
  CHECK((d1 * s).is_zero());
  CHECK(s.cols() > 0);
  for (const auto& d : s.source_deg()) CHECK(d.x >= 2);
  oracle::GradedModule<Rationals> target(GradedMatrix<Rationals>(r, d1.target_deg(), {}), d1.target_deg());
  oracle::GradedModule<Rationals> source(GradedMatrix<Rationals>(r, d1.source_deg(), {}), d1.source_deg());
  std::vector<std::vector<Polynomial<Rationals>>> d1_cols, s_cols;
  for (std::size_t j = 0; j < d1.cols(); ++j) d1_cols.push_back(d1.column(j));
  for (std::size_t j = 0; j < s.cols(); ++j) s_cols.push_back(s.column(j));
  for (int d = 0; d <= 4; ++d) {
    auto kernel = source.free_dim({d, 0}) - target.span_rank(d1_cols, d1.source_deg(), {d, 0});
    CHECK(source.span_rank(s_cols, s.source_deg(), {d, 0}) == kernel);
  }
}

TEST_CASE("resolution of a principal ideal") {
  auto r = QRing::make(Rationals{}, 3, false);
  GradedMatrix<Rationals> p(r, {{0, 0}}, {{1, 0}});
  p.at(0, 0) = Polynomial<Rationals>::variable(r, 0);
  auto res = free_resolution(p, 4);
  CHECK(!res.truncated);
  CHECK(res.length() == 1);
  CHECK(res.betti().at(1, {1, 0}) == 1);
  CHECK_THROWS_AS(free_resolution(p, 0), StructuralError);

  GradedMatrix<Rationals> q(r, {{0, 0}}, {{1, 0}, {1, 0}, {1, 0}});
  for (int v = 0; v < 3; ++v) q.at(0, v) = Polynomial<Rationals>::variable(r, v);
  auto koszul = free_resolution(q, 2);
  CHECK(koszul.truncated);
  auto full = free_resolution(q, 5);
  CHECK(!full.truncated);
  CHECK(full.betti().totals() == std::vector<long>{1, 3, 3, 1});
}

TEST_CASE("R/J at f = 4: Gorenstein of codimension three") {
  auto check = [](auto field) {
    using K = decltype(field);
    auto mod = build_module<K>(field, 4, ModuleName::RJ);
    auto res = free_resolution(mod.relations, default_max_len(4));
    CHECK(!res.truncated);
    CHECK(res.length() == 3);
    CHECK(res.betti().totals() == std::vector<long>{1, 5, 5, 1});
    CHECK(res.betti() == oracle::koszul_betti(mod, 6));
    CHECK(resolution_sound(res));
    auto pal = betti_palindrome_check(res.betti(), 3);
    CHECK(pal.palindromic);
    CHECK(pal.sigma == Bidegree{3, 2});
  };
  check(Rationals{});
  check(PrimeField(32003));
}

TEST_CASE("projective dimension of A and N") {
  for (int f : {4, 5}) {
    const int pd = binom(f - 2, 2);
    auto nq = resolve_betti(Rationals{}, f, ModuleName::N);
    auto n2 = resolve_betti(PrimeField(2), f, ModuleName::N);
    auto np = resolve_betti(PrimeField(32003), f, ModuleName::N);
    CHECK(nq.length() == pd);
    CHECK(n2.length() == pd);
    CHECK(np.length() == pd);
    CHECK(nq == np);
    auto a = resolve_betti(Rationals{}, f, ModuleName::A);
    CHECK(a.length() == pd);
    CHECK(a.totals().back() == 1);
    CHECK(betti_palindrome_check(nq, pd).palindromic);
    CHECK(betti_palindrome_check(a, pd).palindromic);
  }
  auto n4 = build_module<Rationals>(Rationals{}, 4, ModuleName::N);
  CHECK(resolve_betti(Rationals{}, 4, ModuleName::N) == oracle::koszul_betti(n4, 4));
}

TEST_CASE("R/J at f = 5 over a prime field") {
  auto mod = build_module<PrimeField>(PrimeField(32003), 5, ModuleName::RJ);
  auto res = free_resolution(mod.relations, default_max_len(5));
  CHECK(!res.truncated);
  CHECK(res.length() == 5);
  CHECK(res.betti().totals().back() == 1);
  CHECK(betti_palindrome_check(res.betti(), 5).palindromic);
}

TEST_CASE("mapping cone prediction at f = 4") {
  auto a = build_module<Rationals>(Rationals{}, 4, ModuleName::A);
  auto n = build_module<Rationals>(Rationals{}, 4, ModuleName::N);
  auto beta = oracle::koszul_betti(a, 6);
  auto gamma = oracle::koszul_betti(n, 6);
  auto predicted = mapping_cone_betti(beta, gamma);
  CHECK(predicted == resolve_betti(Rationals{}, 4, ModuleName::RJ));
  CHECK(predicted.totals() == std::vector<long>{1, 5, 5, 1});
}

TEST_CASE("minimalize") {
  auto mod = build_module<Rationals>(Rationals{}, 4, ModuleName::RJ);
  auto res = free_resolution(mod.relations, 5);
  auto same = minimalize(res);
  CHECK(same.betti() == res.betti());
  for (std::size_t i = 0; i < res.maps.size(); ++i)
    for (std::size_t r = 0; r < res.maps[i].rows(); ++r)
      for (std::size_t c = 0; c < res.maps[i].cols(); ++c) CHECK(same.maps[i].at(r, c) == res.maps[i].at(r, c));

  // pad F_1 and F_2 with a cancelling pair R(-(4,1)) -> R(-(4,1))
  FreeComplex<Rationals> padded = res;
  const auto& ring = res.ring;
  Bidegree pad{4, 1};
  auto d1 = res.maps[0];
  auto tgt1 = d1.target_deg();
  auto src1 = d1.source_deg();
  src1.push_back(pad);
  GradedMatrix<Rationals> nd1(ring, tgt1, src1);
  for (std::size_t c = 0; c < d1.cols(); ++c) nd1.at(0, c) = d1.at(0, c);
  auto d2 = res.maps[1];
  auto src2 = d2.source_deg();
  src2.push_back(pad);
  GradedMatrix<Rationals> nd2(ring, src1, src2);
  for (std::size_t r = 0; r < d2.rows(); ++r)
    for (std::size_t c = 0; c < d2.cols(); ++c) nd2.at(r, c) = d2.at(r, c);
  nd2.at(src1.size() - 1, src2.size() - 1) = Polynomial<Rationals>::constant(ring, 3);
  auto d3 = res.maps[2];
  GradedMatrix<Rationals> nd3(ring, src2, d3.source_deg());
  for (std::size_t r = 0; r < d3.rows(); ++r)
    for (std::size_t c = 0; c < d3.cols(); ++c) nd3.at(r, c) = d3.at(r, c);
  padded.maps = {nd1, nd2, nd3};
  CHECK(composites_vanish(padded));
  CHECK(padded.betti().totals() == std::vector<long>{1, 6, 6, 1});
  auto cleaned = minimalize(padded);
  CHECK(cleaned.betti() == res.betti());
  CHECK(composites_vanish(cleaned));
}

TEST_CASE("exactness of the named complexes") {
  for (int f : {2, 3, 4}) {
    auto c = build_complex<Rationals>(Rationals{}, f, ComplexName::seq43);
    for (int p = 0; p < static_cast<int>(c.terms.size()); ++p) CHECK(homology_is_zero(c, p));
  }
  auto check32 = [](auto field) {
    using K = decltype(field);
    for (int f : {4, 5}) {
      auto c = build_complex<K>(field, f, ComplexName::seq32);
      for (int p : c.exact_positions) CHECK(homology_is_zero(c, p));
      CHECK(!homology_is_zero(c, 0));
    }
  };
  check32(Rationals{});
  check32(PrimeField(2));
  check32(PrimeField(32003));
  for (int f : {4, 5}) {
    auto c = build_complex<PrimeField>(PrimeField(2), f, ComplexName::seq43);
    for (int p : c.exact_positions) CHECK(homology_is_zero(c, p));
    auto pre = build_complex<Rationals>(Rationals{}, f, ComplexName::precplx);
    for (int p : pre.exact_positions) CHECK(homology_is_zero(pre, p));
  }
  auto rel = build_complex<Rationals>(Rationals{}, 4, ComplexName::relcplx);
  CHECK(!homology_is_zero(rel, 2));
  CHECK_THROWS_AS(homology_is_zero(rel, 3), StructuralError);
}

TEST_CASE("closure of the named complexes") {
  for (int f : {3, 4}) {
    for (auto name : {ComplexName::precplx, ComplexName::seq32, ComplexName::seq43, ComplexName::relcplx}) {
      auto c = build_complex<Rationals>(Rationals{}, f, name);
      auto rep = check_closure(c);
      CHECK(rep.composites_ok);
      CHECK(rep.well_defined);
      CHECK(rep.first_failure == -1);
    }
  }
  // a map that is not a complex
  auto c = build_complex<Rationals>(Rationals{}, 4, ComplexName::precplx);
  for (std::size_t j = 0; j < c.maps[0].cols(); ++j)
    if (!c.maps[0].at(0, j).is_zero()) {
      c.maps[0].at(0, j) = c.maps[0].at(0, j).scaled(2);
      break;
    }
  auto bad = check_closure(c);
  CHECK((!bad.composites_ok || !bad.well_defined));
  CHECK(bad.first_failure >= 0);
}

TEST_CASE("Betti palindromes") {
  BettiTable b;
  b.add(0, {0, 0}, 1);
  b.add(1, {2, 0}, 3);
  b.add(2, {3, 0}, 2);
  b.add(3, {5, 0}, 1);
  auto r = betti_palindrome_check(b);
  CHECK(!r.palindromic);
  b.add(2, {3, 0}, 1);
  r = betti_palindrome_check(b);
  CHECK(r.palindromic);
  CHECK(r.c == 3);
  CHECK(r.sigma == Bidegree{5, 0});
  CHECK(!betti_palindrome_check(b, 2).palindromic);
  CHECK(!betti_palindrome_check(BettiTable{}).palindromic);
}

TEST_CASE("characteristic two anomaly") {
  auto rep = char2_anomaly_check(5);
  CHECK(rep.witness_outside_d1_char2);
  CHECK(rep.witness_in_relations_char2);
  CHECK(rep.certificate_holds_char0);
  CHECK(rep.beta1_char2 > rep.beta1_char0);
  CHECK(rep.pd_char2 == 3);
  CHECK(rep.pd_char0 == 3);
  CHECK_THROWS_AS(char2_anomaly_check(4), StructuralError);

  auto n5q = build_module<Rationals>(Rationals{}, 5, ModuleName::N);
  auto n52 = build_module<PrimeField>(PrimeField(2), 5, ModuleName::N);
  auto oq = oracle::koszul_betti(n5q, 2);
  auto o2 = oracle::koszul_betti(n52, 2);
  CHECK(oq.totals()[1] == rep.beta1_char0);
  CHECK(o2.totals()[1] == rep.beta1_char2);
}
