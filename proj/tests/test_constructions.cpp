#include "doctest.h"
#include "pfg/constructions.hpp"
#include "pfg/text.hpp"

using namespace pfg;

namespace {

using QRing = PolyRing<Rationals>;
using QPoly = Polynomial<Rationals>;

QPoly q(const QRing::Ptr& r, const char* s) { return parse_polynomial<Rationals>(r, s); }

std::vector<std::string> rendered(const std::vector<QPoly>& v) {
  std::vector<std::string> out;
  for (const auto& p : v) out.push_back(render(p));
  return out;
}

}  // namespace

TEST_CASE("xi and tau") {
  auto r2 = QRing::make(Rationals{}, 2, true);
  auto xi = generic_xi<Rationals>(r2);
  CHECK(xi.terms().size() == 1);
  CHECK(xi.coeff(0x3) == q(r2, "x_(1,2)"));
  auto r3 = QRing::make(Rationals{}, 3, true);
  auto xi3 = generic_xi<Rationals>(r3);
  CHECK(xi3.coeff(subset_of({1, 3})) == q(r3, "x_(1,3)"));
  for (int f = 2; f <= 6; ++f)
    CHECK(generic_xi<Rationals>(QRing::make(Rationals{}, f, false)).terms().size() == std::size_t(binom(f, 2)));
  CHECK_THROWS_AS(generic_xi<Rationals>(QRing::make(Rationals{}, 1, false)), StructuralError);

  auto tau_row = map_matrix<Rationals>(r2, MapName::tau_row);
  CHECK(tau_row.at(0, 0) == q(r2, "t_1"));
  CHECK(tau_row.at(0, 1) == q(r2, "t_2"));
  auto txi = map_matrix<Rationals>(r2, MapName::tXi_row);
  CHECK(txi.at(0, 0) == q(r2, "-t_2*x_(1,2)"));
  CHECK(txi.at(0, 1) == q(r2, "t_1*x_(1,2)"));
  CHECK(txi.is_graded());
}

TEST_CASE("ideals") {
  auto r2 = QRing::make(Rationals{}, 2, true);
  CHECK(rendered(build_ideal<Rationals>(r2, IdealKind::J).gens) == std::vector<std::string>{"-t_2*x_(1,2)", "t_1*x_(1,2)"});
  auto r3 = QRing::make(Rationals{}, 3, true);
  CHECK(rendered(build_ideal<Rationals>(r3, IdealKind::J).gens) ==
        std::vector<std::string>{"-t_2*x_(1,2) - t_3*x_(1,3)", "t_1*x_(1,2) - t_3*x_(2,3)", "t_1*x_(1,3) + t_2*x_(2,3)"});
  auto r5 = QRing::make(Rationals{}, 5, false);
  auto i5 = build_ideal<Rationals>(r5, IdealKind::I).gens;
  CHECK(i5.size() == 5);
  auto a = AlternatingMatrix<Rationals>::generic(r5);
  std::size_t k = 0;
  for (Subset s : k_subsets(5, 4)) {
    std::vector<int> rows;
    for (int i : subset_indices(s)) rows.push_back(i - 1);
    CHECK(i5[k] == pfaffian_oracle(a, rows));
    CHECK(i5[k].size() == 3);
    CHECK(*i5[k].bidegree() == Bidegree{2, 0});
    ++k;
  }
  for (int f = 2; f <= 6; ++f) {
    auto r = QRing::make(Rationals{}, f, true);
    CHECK(build_ideal<Rationals>(r, IdealKind::I).gens.size() == std::size_t(binom(f, 4)));
    CHECK(build_ideal<Rationals>(r, IdealKind::K).gens.size() == std::size_t(f));
    for (int l = 1; l < f; ++l)
      CHECK(build_ideal<Rationals>(r, IdealKind::Ilambda, l).gens.size() == std::size_t(binom(f, 4) + binom(l, 2)));
    for (const auto& g : build_ideal<Rationals>(r, IdealKind::K).gens) CHECK(*g.bidegree() == Bidegree{1, 1});
  }
  CHECK_THROWS_AS(build_ideal<Rationals>(r3, IdealKind::Ilambda, 3), StructuralError);
  CHECK_THROWS_AS(build_ideal<Rationals>(r5, IdealKind::K), StructuralError);
  auto ip = build_ideal<Rationals>(r5, IdealKind::Iprime).gens;
  CHECK(rendered(ip) == std::vector<std::string>{"x_(2,3)*x_(4,5) - x_(2,4)*x_(3,5) + x_(2,5)*x_(3,4)"});
}

TEST_CASE("map matrices") {
  auto r4 = QRing::make(Rationals{}, 4, false);
  auto d1 = map_matrix<Rationals>(r4, MapName::d1);
  CHECK(d1.rows() == 4);
  CHECK(d1.cols() == 4);
  CHECK(d1.col_labels[0] == "e_3*^e_2*^e_1*");
  CHECK(d1.at(0, 0) == q(r4, "x_(2,3)"));
  CHECK(d1.at(1, 0) == q(r4, "-x_(1,3)"));
  CHECK(d1.at(2, 0) == q(r4, "x_(1,2)"));
  CHECK(d1.at(3, 0).is_zero());
  // generic column for e_k^*^e_j^*^e_i^*
  auto cols = wedge_basis(4, 3, true);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    auto idx = subset_indices(cols[c].set);
    int i = idx[0], j = idx[1], k = idx[2];
    CHECK(d1.at(i - 1, c) == QPoly::variable(r4, r4->x(j, k)));
    CHECK(d1.at(j - 1, c) == -QPoly::variable(r4, r4->x(i, k)));
    CHECK(d1.at(k - 1, c) == QPoly::variable(r4, r4->x(i, j)));
  }

  auto d0 = map_matrix<Rationals>(r4, MapName::d0);
  auto x = AlternatingMatrix<Rationals>::generic(r4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(d0.at(i, j) == -x.at(i, j));
  auto d0p = map_matrix<Rationals>(r4, MapName::d0prime);
  CHECK(d0p.rows() == 3);
  CHECK(d0p.at(0, 1) == q(r4, "-x_(1,2)"));
  CHECK(d0p.at(2, 0) == q(r4, "x_(1,3)"));
  CHECK(d0p.at(2, 3) == q(r4, "-x_(3,4)"));

  auto delta1 = map_matrix<Rationals>(r4, MapName::delta1);
  for (std::size_t i = 0; i < d1.rows(); ++i)
    for (std::size_t j = 0; j < d1.cols(); ++j) CHECK(delta1.at(j, i) == d1.at(i, j));

  auto rho = map_matrix<Rationals>(r4, MapName::rho);
  CHECK(rho.at(0, 0) == q(r4, "x_(2,3)"));
  CHECK(rho.at(0, 1) == q(r4, "-x_(1,3)"));
  CHECK(rho.at(0, 2) == q(r4, "x_(1,2)"));
  auto rd = rho * d0p;
  for (int j = 0; j < 3; ++j) CHECK(rd.at(0, j).is_zero());
  CHECK(rd.at(0, 3) == -build_ideal<Rationals>(r4, IdealKind::I).gens[0]);
  CHECK_THROWS_AS(map_matrix<Rationals>(QRing::make(Rationals{}, 2, false), MapName::d1), StructuralError);
  CHECK_THROWS_AS(map_name_from_string("d7"), StructuralError);

  for (int f : {4, 5}) {
    auto r = QRing::make(Rationals{}, f, true);
    auto dd1 = map_matrix<Rationals>(r, MapName::D1);
    auto dd2 = map_matrix<Rationals>(r, MapName::D2);
    CHECK(dd1.cols() == std::size_t(f + binom(f, 4)));
    CHECK(dd1.is_graded());
    CHECK(dd2.is_graded());
    CHECK((dd1 * dd2).is_zero());
    auto j = build_ideal<Rationals>(r, IdealKind::J).gens;
    for (std::size_t c = 0; c < dd1.cols(); ++c) {
      bool found = false;
      for (const auto& g : j) found = found || g == dd1.at(0, c);
      CHECK(found);
    }
  }
  // from f = 6 on the middle block of E_2 is a proper kernel
  for (int f : {6, 7}) {
    auto r = PolyRing<PrimeField>::make(PrimeField(32003), f, true);
    auto dd2 = map_matrix<PrimeField>(r, MapName::D2);
    const std::size_t middle = f * binom(f, 5) - binom(f, 6);
    CHECK(dd2.cols() == std::size_t(binom(f, 3) + middle + binom(f, 3) * binom(f, 3)));
    CHECK(dd2.is_graded());
    CHECK((map_matrix<PrimeField>(r, MapName::D1) * dd2).is_zero());
  }
}

TEST_CASE("named complexes have graded maps") {
  for (auto name : {ComplexName::precplx, ComplexName::seq32, ComplexName::seq43, ComplexName::relcplx})
    for (int f : {3, 4}) {
      auto c = build_complex<Rationals>(Rationals{}, f, name);
      for (const auto& m : c.maps) CHECK(m.is_graded());
      for (const auto& t : c.terms) CHECK(t.relations.is_graded());
      for (std::size_t i = 0; i < c.maps.size(); ++i) {
        CHECK(c.maps[i].cols() == c.terms[i].gens.size());
        CHECK(c.maps[i].rows() == c.terms[i + 1].gens.size());
      }
    }
  auto c2 = build_complex<Rationals>(Rationals{}, 2, ComplexName::seq43);
  CHECK(c2.maps[1].at(0, 0) == q(c2.ring, "t_1"));
  CHECK(c2.maps[2].at(0, 0) == q(c2.ring, "-t_2*x_(1,2)"));
  auto c3 = build_complex<Rationals>(Rationals{}, 3, ComplexName::seq43);
  CHECK(rendered(c3.maps[2].column(0)) == std::vector<std::string>{"-t_2*x_(1,2) - t_3*x_(1,3)"});
  CHECK(c3.terms[2].relations.cols() == 1);
}

TEST_CASE("pivot sets") {
  auto r4 = QRing::make(Rationals{}, 4, true);
  auto s = s1_s2_sets<Rationals>(r4);
  CHECK(s.s1.size() == 6);
  CHECK(s.s2.size() == 3);
  auto r3 = QRing::make(Rationals{}, 3, true);
  CHECK(rendered(s1_s2_sets<Rationals>(r3).s2) ==
        std::vector<std::string>{"t_2*x_(1,2) + t_3*x_(1,3)", "t_1*x_(1,2) - t_3*x_(2,3)"});
  for (int f = 3; f <= 6; ++f) {
    auto r = QRing::make(Rationals{}, f, true);
    auto p = s1_s2_sets<Rationals>(r);
    CHECK(p.s1.size() == std::size_t(3 * (f - 2)));
    CHECK(p.s2.size() == std::size_t(binom(f - 2, 2) + 2));
  }
}

TEST_CASE("mapping cone formula") {
  BettiTable a, n;
  CHECK(mapping_cone_betti(a, n).entries.empty());
  a.add(0, {0, 0}, 1);
  a.add(1, {2, 0}, 1);
  auto only_a = mapping_cone_betti(a, n);
  CHECK(only_a.at(0, {0, 0}) == 1);
  CHECK(only_a.at(1, {2, 0}) == 1);
  CHECK(only_a.at(2, {1, 2}) == 1);
  CHECK(only_a.at(3, {3, 2}) == 1);
  n.add(0, {0, 0}, 4);
  n.add(1, {1, 0}, 4);
  CHECK(mapping_cone_betti(a, n).totals() == std::vector<long>{1, 5, 5, 1});
}
