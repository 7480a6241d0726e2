#include "pfg/constructions.hpp"

#include <algorithm>
#include <numeric>

namespace pfg {

namespace {

int reversal_sign(int k) { return ((k * (k - 1) / 2) % 2) ? -1 : 1; }

template <class K>
Polynomial<K> coeff_in(const ExteriorElement<K>& e, const WedgeBasis& b) {
  auto c = e.coeff(b.set);
  if (b.decreasing && reversal_sign(subset_size(b.set)) < 0) return -c;
  return c;
}

std::vector<Bidegree> repeat(Bidegree d, std::size_t n) { return std::vector<Bidegree>(n, d); }

template <class K>
void require_t(const RingOf<K>& ring) {
  if (ring->t_count() == 0) throw StructuralError("this construction needs the t variables");
}

}  // namespace

IdealKind ideal_kind_from_string(const std::string& s) {
  if (s == "I") return IdealKind::I;
  if (s == "K") return IdealKind::K;
  if (s == "J") return IdealKind::J;
  if (s == "Ilambda") return IdealKind::Ilambda;
  if (s == "Iprime") return IdealKind::Iprime;
  throw StructuralError("unknown ideal '" + s + "'");
}

std::string to_string(IdealKind k) {
  switch (k) {
    case IdealKind::I: return "I";
    case IdealKind::K: return "K";
    case IdealKind::J: return "J";
    case IdealKind::Ilambda: return "Ilambda";
    case IdealKind::Iprime: return "Iprime";
  }
  return "?";
}

MapName map_name_from_string(const std::string& s) {
  static const std::map<std::string, MapName> names{
      {"d0", MapName::d0},         {"d1", MapName::d1},           {"delta1", MapName::delta1},
      {"rho", MapName::rho},       {"d0prime", MapName::d0prime}, {"tau_row", MapName::tau_row},
      {"tXi_row", MapName::tXi_row}, {"D1", MapName::D1},         {"D2", MapName::D2}};
  auto it = names.find(s);
  if (it == names.end()) throw StructuralError("unknown map '" + s + "'");
  return it->second;
}

ComplexName complex_name_from_string(const std::string& s) {
  if (s == "precplx") return ComplexName::precplx;
  if (s == "seq32") return ComplexName::seq32;
  if (s == "seq43") return ComplexName::seq43;
  if (s == "relcplx") return ComplexName::relcplx;
  throw StructuralError("unknown complex '" + s + "'");
}

std::string to_string(ComplexName c) {
  switch (c) {
    case ComplexName::precplx: return "precplx";
    case ComplexName::seq32: return "seq32";
    case ComplexName::seq43: return "seq43";
    case ComplexName::relcplx: return "relcplx";
  }
  return "?";
}

std::vector<WedgeBasis> wedge_basis(int f, int k, bool decreasing) {
  std::vector<WedgeBasis> out;
  for (Subset s : k_subsets(f, k)) out.push_back({s, decreasing});
  return out;
}

std::string wedge_label(const WedgeBasis& b, bool dual) {
  auto idx = subset_indices(b.set);
  if (b.decreasing) std::reverse(idx.begin(), idx.end());
  if (idx.empty()) return "1";
  std::string s;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k) s += "^";
    s += "e_" + std::to_string(idx[k]) + (dual ? "*" : "");
  }
  return s;
}

template <class K>
ExteriorElement<K> basis_element(const RingOf<K>& ring, Side side, const WedgeBasis& b) {
  auto idx = subset_indices(b.set);
  if (b.decreasing) std::reverse(idx.begin(), idx.end());
  return ExteriorElement<K>::wedge_of(ring, ring->f(), side, idx);
}

template <class K>
ExteriorElement<K> generic_xi(const RingOf<K>& ring) {
  const int f = ring->f();
  if (f < 2) throw StructuralError("xi needs f >= 2");
  ExteriorElement<K> xi(ring, f, Side::Primal, 2);
  for (int i = 1; i < f; ++i)
    for (int j = i + 1; j <= f; ++j) xi.add_term(subset_of({i, j}), Polynomial<K>::variable(ring, ring->x(i, j)));
  return xi;
}

template <class K>
ExteriorElement<K> generic_tau(const RingOf<K>& ring) {
  require_t<K>(ring);
  const int f = ring->f();
  ExteriorElement<K> tau(ring, f, Side::Dual, 1);
  for (int i = 1; i <= f; ++i) tau.add_term(subset_of({i}), Polynomial<K>::variable(ring, ring->t(i)));
  return tau;
}

template <class K>
IdealSpec<K> build_ideal(const RingOf<K>& ring, IdealKind kind, int lambda) {
  using Poly = Polynomial<K>;
  const int f = ring->f();
  if (f < 2) throw StructuralError("ideals need f >= 2");
  IdealSpec<K> spec{kind, f, lambda, ring, {}};
  auto pfaffians = [&](int from) {
    std::vector<Poly> out;
    auto xi = generic_xi<K>(ring);
    if (from == 1) {
      if (f >= 4) {
        auto xi2 = divided_power(xi, 2);
        for (Subset s : k_subsets(f, 4)) out.push_back(xi2.coeff(s));
      }
      return out;
    }
    auto a = AlternatingMatrix<K>::generic(ring);
    for (Subset s : k_subsets(f - from + 1, 4)) {
      std::vector<int> rows;
      for (int i : subset_indices(s)) rows.push_back(i + from - 2);
      out.push_back(pfaffian_by_matchings(a, rows));
    }
    return out;
  };
  auto k_gens = [&] {
    require_t<K>(ring);
    auto v = generic_tau<K>(ring).act_on(generic_xi<K>(ring));
    std::vector<Poly> out;
    for (int j = 1; j <= f; ++j) out.push_back(v.coeff(subset_of({j})));
    return out;
  };
  switch (kind) {
    case IdealKind::I: spec.gens = pfaffians(1); break;
    case IdealKind::Iprime: spec.gens = pfaffians(2); break;
    case IdealKind::K: spec.gens = k_gens(); break;
    case IdealKind::J: {
      spec.gens = pfaffians(1);
      auto k = k_gens();
      spec.gens.insert(spec.gens.end(), k.begin(), k.end());
      break;
    }
    case IdealKind::Ilambda: {
      if (lambda < 1 || lambda > f - 1)
        throw StructuralError("lambda must lie in [1, f-1], got " + std::to_string(lambda));
      spec.gens = pfaffians(1);
      for (int i = 1; i <= lambda; ++i)
        for (int j = i + 1; j <= lambda; ++j) spec.gens.push_back(Poly::variable(ring, ring->x(i, j)));
      break;
    }
  }
  return spec;
}

template <class K>
GradedMatrix<K> regraded(const GradedMatrix<K>& m, std::vector<Bidegree> target, std::vector<Bidegree> source) {
  if (target.size() != m.rows() || source.size() != m.cols()) throw StructuralError("twist sizes do not match");
  GradedMatrix<K> r(m.ring(), std::move(target), std::move(source));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j);
  r.row_labels = m.row_labels;
  r.col_labels = m.col_labels;
  return r;
}

namespace {

template <class K>
GradedMatrix<K> from_images(const RingOf<K>& ring, const std::vector<WedgeBasis>& rows, Bidegree row_deg,
                            const std::vector<ExteriorElement<K>>& images, std::vector<Bidegree> source_deg,
                            bool rows_dual) {
  GradedMatrix<K> m(ring, repeat(row_deg, rows.size()), std::move(source_deg));
  for (std::size_t j = 0; j < images.size(); ++j)
    for (std::size_t i = 0; i < rows.size(); ++i) m.at(i, j) = coeff_in(images[j], rows[i]);
  for (const auto& r : rows) m.row_labels.push_back(wedge_label(r, rows_dual));
  return m;
}

}  // namespace

template <class K>
GradedMatrix<K> map_matrix(const RingOf<K>& ring, MapName name) {
  using Ext = ExteriorElement<K>;
  const int f = ring->f();
  if (f < 2) throw StructuralError("maps need f >= 2");
  const Bidegree zero{0, 0}, lin{1, 0};
  auto xi = generic_xi<K>(ring);
  auto ones = wedge_basis(f, 1, false);
  auto labels = [](const std::vector<WedgeBasis>& b, bool dual) {
    std::vector<std::string> out;
    for (const auto& w : b) out.push_back(wedge_label(w, dual));
    return out;
  };

  switch (name) {
    case MapName::d1: {
      if (f < 3) throw StructuralError("d1 needs f >= 3");
      auto cols = wedge_basis(f, 3, true);
      std::vector<Ext> img;
      for (const auto& c : cols) img.push_back(xi.act_on(basis_element<K>(ring, Side::Dual, c)));
      auto m = from_images<K>(ring, ones, zero, img, repeat(lin, cols.size()), true);
      m.col_labels = labels(cols, true);
      return m;
    }
    case MapName::d0:
    case MapName::d0prime: {
      if (name == MapName::d0prime && f < 3) throw StructuralError("d0prime needs f >= 3");
      std::vector<Ext> img;
      for (const auto& c : ones) img.push_back(basis_element<K>(ring, Side::Dual, c).act_on(xi));
      auto rows = ones;
      if (name == MapName::d0prime) rows.resize(3);
      auto m = from_images<K>(ring, rows, zero, img, repeat(lin, ones.size()), false);
      m.col_labels = labels(ones, true);
      return m;
    }
    case MapName::delta1: {
      if (f < 3) throw StructuralError("delta1 needs f >= 3");
      auto rows = wedge_basis(f, 3, false);
      std::vector<Ext> img;
      for (const auto& c : ones) img.push_back(basis_element<K>(ring, Side::Primal, c).wedge(xi));
      auto m = from_images<K>(ring, rows, zero, img, repeat(lin, ones.size()), false);
      m.col_labels = labels(ones, false);
      return m;
    }
    case MapName::rho: {
      if (f < 3) throw StructuralError("rho needs f >= 3");
      auto v = xi.act_on(Ext::wedge_of(ring, f, Side::Dual, {3, 2, 1}));
      GradedMatrix<K> m(ring, {zero}, repeat(lin, 3));
      for (int i = 1; i <= 3; ++i) m.at(0, i - 1) = v.coeff(subset_of({i}));
      m.col_labels = {"e_1", "e_2", "e_3"};
      return m;
    }
    case MapName::tau_row: {
      auto tau = generic_tau<K>(ring);
      GradedMatrix<K> m(ring, {zero}, repeat({0, 1}, f));
      for (int i = 1; i <= f; ++i) m.at(0, i - 1) = tau.coeff(subset_of({i}));
      m.col_labels = labels(ones, false);
      return m;
    }
    case MapName::tXi_row: {
      auto v = generic_tau<K>(ring).act_on(xi);
      GradedMatrix<K> m(ring, {zero}, repeat({1, 1}, f));
      for (int j = 1; j <= f; ++j)
        m.at(0, j - 1) = contract(basis_element<K>(ring, Side::Dual, ones[j - 1]), v).scalar();
      m.col_labels = labels(ones, true);
      return m;
    }
    case MapName::D1: {
      auto v = generic_tau<K>(ring).act_on(xi);
      auto fours = wedge_basis(f, 4, false);
      std::vector<Bidegree> src = repeat({1, 1}, f);
      auto s4 = repeat({2, 0}, fours.size());
      src.insert(src.end(), s4.begin(), s4.end());
      GradedMatrix<K> m(ring, {zero}, src);
      for (int j = 0; j < f; ++j) m.at(0, j) = contract(basis_element<K>(ring, Side::Dual, ones[j]), v).scalar();
      if (!fours.empty()) {
        auto xi2 = divided_power(xi, 2);
        for (std::size_t k = 0; k < fours.size(); ++k)
          m.at(0, f + k) = contract(basis_element<K>(ring, Side::Dual, fours[k]), xi2).scalar();
      }
      m.col_labels = labels(ones, true);
      auto l4 = labels(fours, true);
      m.col_labels.insert(m.col_labels.end(), l4.begin(), l4.end());
      return m;
    }
    case MapName::D2: {
      auto tau = generic_tau<K>(ring);
      auto threes = wedge_basis(f, 3, true);
      auto fours = wedge_basis(f, 4, false);
      auto fives = wedge_basis(f, 5, false);
      std::vector<Bidegree> tgt = repeat({1, 1}, f);
      auto t4 = repeat({2, 0}, fours.size());
      tgt.insert(tgt.end(), t4.begin(), t4.end());
      // columns are pairs (F^* component, wedge^4 component)
      std::vector<std::pair<Ext, Ext>> cols;
      std::vector<Bidegree> src;
      std::vector<std::string> col_labels;
      auto zero1 = Ext(ring, f, Side::Dual, 1);
      for (const auto& b : threes) {
        auto phi = basis_element<K>(ring, Side::Dual, b);
        cols.push_back({xi.act_on(phi), tau.wedge(phi)});
        src.push_back({2, 1});
        col_labels.push_back(wedge_label(b, true));
      }
      // kernel of F^* (x) wedge^5 F^* -> wedge^6 F^*: pairs with a in b, then
      // for each 6-set S the differences against the pair (min S, S - min S)
      auto pair_image = [&](Subset a, Subset b) {
        auto phi1 = basis_element<K>(ring, Side::Dual, {a, false});
        auto phi5 = basis_element<K>(ring, Side::Dual, {b, false});
        return phi1.act_on(xi).act_on(phi5);
      };
      auto pair_label = [](Subset a, Subset b) { return wedge_label({a, false}, true) + "(x)" + wedge_label({b, false}, true); };
      for (const auto& a : ones)
        for (const auto& b : fives) {
          if (!(a.set & b.set)) continue;
          cols.push_back({zero1, pair_image(a.set, b.set)});
          src.push_back({3, 0});
          col_labels.push_back(pair_label(a.set, b.set));
        }
      for (Subset s : k_subsets(f, 6)) {
        const Subset a0 = s & (~s + 1);
        const int e0 = merge_sign(a0, s & ~a0);
        for (Subset rest = s & ~a0; rest; rest &= rest - 1) {
          const Subset a = rest & (~rest + 1);
          const int ea = merge_sign(a, s & ~a);
          auto img = pair_image(a, s & ~a).scaled(Polynomial<K>::constant(ring, e0)) -
                     pair_image(a0, s & ~a0).scaled(Polynomial<K>::constant(ring, ea));
          cols.push_back({zero1, img});
          src.push_back({3, 0});
          col_labels.push_back((e0 > 0 ? "" : "-") + pair_label(a, s & ~a) + (ea > 0 ? " - " : " + ") +
                               pair_label(a0, s & ~a0));
        }
      }
      for (const auto& a : threes)
        for (const auto& b : threes) {
          auto p = basis_element<K>(ring, Side::Dual, a);
          auto q = basis_element<K>(ring, Side::Dual, b);
          cols.push_back({zero1, xi.act_on(p).wedge(q) - p.wedge(xi.act_on(q))});
          src.push_back({3, 0});
          col_labels.push_back(wedge_label(a, true) + "(x)" + wedge_label(b, true));
        }
      GradedMatrix<K> m(ring, tgt, src);
      for (std::size_t j = 0; j < cols.size(); ++j) {
        for (int i = 0; i < f; ++i) m.at(i, j) = coeff_in(cols[j].first, ones[i]);
        for (std::size_t k = 0; k < fours.size(); ++k) m.at(f + k, j) = coeff_in(cols[j].second, fours[k]);
      }
      m.row_labels = labels(ones, true);
      auto l4 = labels(fours, true);
      m.row_labels.insert(m.row_labels.end(), l4.begin(), l4.end());
      m.col_labels = col_labels;
      return m;
    }
  }
  throw StructuralError("unknown map");
}

template <class K>
PresentedModule<K> free_module(const RingOf<K>& ring, std::string label, std::vector<Bidegree> gens) {
  PresentedModule<K> m{std::move(label), gens, GradedMatrix<K>(ring, gens, {})};
  return m;
}

template <class K>
PresentedModule<K> with_ideal_relations(PresentedModule<K> m, const std::vector<Polynomial<K>>& ideal) {
  const auto& ring = m.relations.ring();
  std::vector<Bidegree> src;
  std::vector<std::pair<std::size_t, const Polynomial<K>*>> where;
  for (const auto& g : ideal) {
    auto d = g.bidegree();
    if (!d) throw StructuralError("relation ideal generators must be bihomogeneous");
    for (std::size_t i = 0; i < m.gens.size(); ++i) {
      src.push_back(m.gens[i] + *d);
      where.push_back({i, &g});
    }
  }
  GradedMatrix<K> extra(ring, m.gens, src);
  for (std::size_t j = 0; j < where.size(); ++j) extra.at(where[j].first, j) = *where[j].second;
  m.relations = m.relations.hconcat(extra);
  return m;
}

template <class K>
PresentedComplex<K> build_complex(const K& field, int f, ComplexName name) {
  using GM = GradedMatrix<K>;
  if (f < 2) throw StructuralError("complexes need f >= 2");
  PresentedComplex<K> c;
  c.name = to_string(name);
  const bool with_t = name == ComplexName::seq43 || name == ComplexName::relcplx;
  c.ring = PolyRing<K>::make(field, f, with_t);
  const auto& ring = c.ring;
  auto ideal_i = build_ideal<K>(ring, IdealKind::I).gens;
  auto a_mod = [&](std::string label, std::vector<Bidegree> gens) {
    return with_ideal_relations(free_module<K>(ring, std::move(label), std::move(gens)), ideal_i);
  };
  const std::size_t c3 = binom(f, 3);

  switch (name) {
    case ComplexName::precplx: {
      if (f < 3) throw StructuralError("precplx needs f >= 3");
      c.terms = {a_mod("wedge3 F*", repeat({3, 0}, c3)), a_mod("F*", repeat({2, 0}, f)), a_mod("F", repeat({1, 0}, f)),
                 a_mod("wedge3 F", repeat({0, 0}, c3))};
      c.maps = {regraded(map_matrix<K>(ring, MapName::d1), c.terms[1].gens, c.terms[0].gens),
                regraded(map_matrix<K>(ring, MapName::d0), c.terms[2].gens, c.terms[1].gens),
                regraded(map_matrix<K>(ring, MapName::delta1), c.terms[3].gens, c.terms[2].gens)};
      c.exact_positions = {1, 2};
      break;
    }
    case ComplexName::seq32: {
      if (f < 3) throw StructuralError("seq32 needs f >= 3");
      std::vector<Polynomial<K>> i3 = ideal_i;
      for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {2, 3}}) i3.push_back(Polynomial<K>::variable(ring, ring->x(i, j)));
      c.terms = {a_mod("wedge3 F*", repeat({3, 0}, c3)), a_mod("F*", repeat({2, 0}, f)), a_mod("A^3", repeat({1, 0}, 3)),
                 a_mod("A", {{0, 0}}),
                 with_ideal_relations(free_module<K>(ring, "A'", {{0, 0}}), i3), free_module<K>(ring, "0", {})};
      GM one = GM::identity(ring, {{0, 0}});
      c.maps = {regraded(map_matrix<K>(ring, MapName::d1), c.terms[1].gens, c.terms[0].gens),
                regraded(map_matrix<K>(ring, MapName::d0prime), c.terms[2].gens, c.terms[1].gens),
                regraded(map_matrix<K>(ring, MapName::rho), c.terms[3].gens, c.terms[2].gens), one,
                GM(ring, {}, {{0, 0}})};
      c.exact_positions = {1, 2, 3, 4};
      break;
    }
    case ComplexName::seq43: {
      auto n_mod = free_module<K>(ring, "N", repeat({1, 1}, f));
      if (f >= 3) n_mod.relations = regraded(map_matrix<K>(ring, MapName::d1), n_mod.gens, repeat({2, 1}, c3));
      n_mod = with_ideal_relations(n_mod, ideal_i);
      auto j_gens = build_ideal<K>(ring, IdealKind::J).gens;
      c.terms = {free_module<K>(ring, "0", {}), a_mod("A", {{1, 2}}), n_mod, a_mod("A", {{0, 0}}),
                 with_ideal_relations(free_module<K>(ring, "R/J", {{0, 0}}), j_gens), free_module<K>(ring, "0", {})};
      auto tau = map_matrix<K>(ring, MapName::tau_row).transpose_with(repeat({1, 1}, f), {{1, 2}});
      c.maps = {GM(ring, {{1, 2}}, {}), tau, regraded(map_matrix<K>(ring, MapName::tXi_row), {{0, 0}}, repeat({1, 1}, f)),
                GM::identity(ring, {{0, 0}}), GM(ring, {}, {{0, 0}})};
      c.exact_positions = {1, 2, 3, 4};
      break;
    }
    case ComplexName::relcplx: {
      auto d2 = map_matrix<K>(ring, MapName::D2);
      auto d1 = map_matrix<K>(ring, MapName::D1);
      c.terms = {free_module<K>(ring, "E2", d2.source_deg()), free_module<K>(ring, "E1", d2.target_deg()),
                 free_module<K>(ring, "E0", {{0, 0}})};
      c.maps = {d2, d1};
      c.free_complex = true;
      break;
    }
  }
  return c;
}

ModuleName module_name_from_string(const std::string& s) {
  if (s == "A") return ModuleName::A;
  if (s == "N") return ModuleName::N;
  if (s == "RJ") return ModuleName::RJ;
  if (s == "Ilambda") return ModuleName::Ilambda;
  throw StructuralError("unknown module '" + s + "'");
}

std::string to_string(ModuleName m) {
  switch (m) {
    case ModuleName::A: return "A";
    case ModuleName::N: return "N";
    case ModuleName::RJ: return "RJ";
    case ModuleName::Ilambda: return "Ilambda";
  }
  return "?";
}

template <class K>
PresentedModule<K> build_module(const K& field, int f, ModuleName name, int lambda) {
  auto ring = PolyRing<K>::make(field, f, name == ModuleName::RJ);
  auto cyclic = [&](IdealKind kind) {
    return with_ideal_relations(free_module<K>(ring, to_string(name), {{0, 0}}), build_ideal<K>(ring, kind, lambda).gens);
  };
  switch (name) {
    case ModuleName::A: return cyclic(IdealKind::I);
    case ModuleName::RJ: return cyclic(IdealKind::J);
    case ModuleName::Ilambda: return cyclic(IdealKind::Ilambda);
    case ModuleName::N: {
      if (f < 3) throw StructuralError("N needs f >= 3");
      auto n = free_module<K>(ring, "N", repeat({0, 0}, f));
      n.relations = regraded(map_matrix<K>(ring, MapName::d1), n.gens, repeat({1, 0}, binom(f, 3)));
      return with_ideal_relations(n, build_ideal<K>(ring, IdealKind::I).gens);
    }
  }
  throw StructuralError("unknown module");
}

template <class K>
PivotSets<K> s1_s2_sets(const RingOf<K>& ring, std::pair<int, int> pivot) {
  using Poly = Polynomial<K>;
  require_t<K>(ring);
  const int f = ring->f();
  if (f < 3) throw StructuralError("S1/S2 need f >= 3");
  auto [a, b] = pivot;
  if (a < 1 || b > f || a >= b) throw StructuralError("pivot must satisfy 1 <= a < b <= f");
  std::vector<int> perm{0, a, b};
  for (int i = 1; i <= f; ++i)
    if (i != a && i != b) perm.push_back(i);
  auto x = [&](int i, int j) {
    int p = perm[i], q = perm[j];
    return p < q ? Poly::variable(ring, ring->x(p, q)) : -Poly::variable(ring, ring->x(q, p));
  };
  auto t = [&](int i) { return Poly::variable(ring, ring->t(perm[i])); };
  PivotSets<K> out;
  for (int i = 1; i <= 2; ++i)
    for (int j = 3; j <= f; ++j) out.s1.push_back(x(i, j));
  for (int j = 3; j <= f; ++j) out.s1.push_back(t(j));
  for (int i = 3; i <= f; ++i)
    for (int j = i + 1; j <= f; ++j) out.s2.push_back(x(1, 2) * x(i, j) - x(1, i) * x(2, j) + x(1, j) * x(2, i));
  Poly u = x(1, 2) * t(2), v = x(1, 2) * t(1);
  for (int j = 3; j <= f; ++j) {
    u += x(1, j) * t(j);
    v -= x(2, j) * t(j);
  }
  out.s2.push_back(u);
  out.s2.push_back(v);
  return out;
}

std::vector<long> BettiTable::totals() const {
  std::vector<long> out;
  for (const auto& [key, n] : entries) {
    if (key.first >= static_cast<int>(out.size())) out.resize(key.first + 1, 0);
    out[key.first] += n;
  }
  return out;
}

std::map<std::pair<int, int>, long> BettiTable::singly_graded() const {
  std::map<std::pair<int, int>, long> out;
  for (const auto& [key, n] : entries) out[{key.first, key.second.total()}] += n;
  return out;
}

int BettiTable::length() const {
  int l = -1;
  for (const auto& [key, n] : entries)
    if (n != 0) l = std::max(l, key.first);
  return l;
}

BettiTable mapping_cone_betti(const BettiTable& beta_a, const BettiTable& gamma_n) {
  BettiTable out;
  for (const auto& [key, n] : beta_a.entries) {
    auto [i, d] = key;
    if (d.t != 0) throw StructuralError("mapping cone inputs must be tables over the x-ring");
    out.add(i, {d.x, 0}, n);
    out.add(i + 2, {d.x + 1, 2}, n);
  }
  for (const auto& [key, n] : gamma_n.entries) {
    auto [i, d] = key;
    if (d.t != 0) throw StructuralError("mapping cone inputs must be tables over the x-ring");
    out.add(i + 1, {d.x + 1, 1}, n);
  }
  return out;
}

#define PFG_INSTANTIATE(K)                                                                                     \
  template ExteriorElement<K> generic_xi<K>(const RingOf<K>&);                                                 \
  template ExteriorElement<K> generic_tau<K>(const RingOf<K>&);                                                \
  template IdealSpec<K> build_ideal<K>(const RingOf<K>&, IdealKind, int);                                      \
  template ExteriorElement<K> basis_element<K>(const RingOf<K>&, Side, const WedgeBasis&);                     \
  template GradedMatrix<K> map_matrix<K>(const RingOf<K>&, MapName);                                           \
  template GradedMatrix<K> regraded(const GradedMatrix<K>&, std::vector<Bidegree>, std::vector<Bidegree>);     \
  template PresentedModule<K> free_module<K>(const RingOf<K>&, std::string, std::vector<Bidegree>);            \
  template PresentedModule<K> with_ideal_relations(PresentedModule<K>, const std::vector<Polynomial<K>>&);     \
  template PresentedComplex<K> build_complex(const K&, int, ComplexName);                                      \
  template PresentedModule<K> build_module(const K&, int, ModuleName, int);                                    \
  template PivotSets<K> s1_s2_sets<K>(const RingOf<K>&, std::pair<int, int>);

PFG_INSTANTIATE(Rationals)
PFG_INSTANTIATE(PrimeField)

}  // namespace pfg
