#include "pfg/homology.hpp"

#include <algorithm>
#include <limits>

namespace pfg {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

template <class K>
std::vector<int> totals(const std::vector<Bidegree>& d) {
  std::vector<int> out;
  out.reserve(d.size());
  for (const auto& b : d) out.push_back(b.total());
  return out;
}

template <class K>
std::vector<Polynomial<K>> to_column(const typename PolyRing<K>::Ptr& ring, const MVec<K>& v, int offset,
                                     std::size_t rank) {
  std::vector<std::vector<Term<K>>> parts(rank);
  for (const auto& t : v) parts[t.comp - offset].push_back({t.m, t.c});
  std::vector<Polynomial<K>> col;
  col.reserve(rank);
  for (auto& p : parts) col.push_back(Polynomial<K>::from_terms(ring, std::move(p)));
  return col;
}

template <class K>
bool column_is_zero(const GradedMatrix<K>& m, std::size_t j) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (!m.at(i, j).is_zero()) return false;
  return true;
}

template <class K>
GradedMatrix<K> from_columns(const typename PolyRing<K>::Ptr& ring, std::vector<Bidegree> target,
                             const std::vector<std::vector<Polynomial<K>>>& cols, std::vector<Bidegree> source) {
  GradedMatrix<K> m(ring, std::move(target), std::move(source));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = cols[j][i];
  return m;
}

// all kernel elements of a Groebner basis of [m; identity] (not minimalized)
template <class K>
std::vector<std::pair<std::vector<Polynomial<K>>, Bidegree>> kernel_elements(const GradedMatrix<K>& m) {
  const auto& ring = m.ring();
  const std::size_t r = m.rows(), c = m.cols();
  ModuleLayout layout;
  layout.comp_deg = totals<K>(m.target_deg());
  auto src = totals<K>(m.source_deg());
  layout.comp_deg.insert(layout.comp_deg.end(), src.begin(), src.end());
  layout.block.assign(r, 0);
  layout.block.resize(r + c, 1);
  ModuleGB<K> gb(ring, layout);
  std::vector<MVec<K>> in;
  for (std::size_t j = 0; j < c; ++j) {
    MVec<K> v = gb.from_column(m.column(j));
    v.push_back({ring->one(), static_cast<int>(r + j), ring->field().one()});
    gb.sort_terms(v);
    in.push_back(std::move(v));
  }
  gb.compute(std::move(in));
  std::vector<std::pair<std::vector<Polynomial<K>>, Bidegree>> out;
  for (const auto& v : gb.basis()) {
    if (v.front().comp < static_cast<int>(r)) continue;
    const auto& lead = v.front();
    Bidegree d = ring->bidegree(lead.m) + m.source_deg()[lead.comp - r];
    out.push_back({to_column<K>(ring, v, static_cast<int>(r), c), d});
  }
  return out;
}

template <class K>
GradedMatrix<K> drop(const GradedMatrix<K>& m, std::size_t row, std::size_t col) {
  std::vector<Bidegree> tgt, src;
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (i != row) {
      rows.push_back(i);
      tgt.push_back(m.target_deg()[i]);
    }
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (j != col) {
      cols.push_back(j);
      src.push_back(m.source_deg()[j]);
    }
  GradedMatrix<K> out(m.ring(), tgt, src);
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b) out.at(a, b) = m.at(rows[a], cols[b]);
  return out;
}

}  // namespace

// ---------------------------------------------------------------- submodules

template <class K>
Submodule<K>::Submodule(const GradedMatrix<K>& gens)
    : ring_(gens.ring()), rank_(gens.rows()), gb_(gens.ring(), ModuleLayout::top(totals<K>(gens.target_deg()))) {
  std::vector<MVec<K>> in;
  for (std::size_t j = 0; j < gens.cols(); ++j)
    if (!column_is_zero(gens, j)) in.push_back(gb_.from_column(gens.column(j)));
  gb_.compute(std::move(in));
}

template <class K>
bool Submodule<K>::contains(const std::vector<Polynomial<K>>& column) const {
  if (column.size() != rank_) throw StructuralError("column has the wrong length for this submodule");
  return gb_.contains(gb_.from_column(column));
}

template <class K>
std::optional<std::size_t> Submodule<K>::first_column_outside(const GradedMatrix<K>& m) const {
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!contains(m.column(j))) return j;
  return std::nullopt;
}

template <class K>
GradedMatrix<K> minimal_columns(const GradedMatrix<K>& m) {
  ModuleGB<K> gb(m.ring(), ModuleLayout::top(totals<K>(m.target_deg())));
  std::vector<MVec<K>> in;
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!column_is_zero(m, j)) {
      in.push_back(gb.from_column(m.column(j)));
      idx.push_back(j);
    }
  gb.compute(std::move(in));
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < idx.size(); ++k)
    if (gb.minimal_inputs()[k]) keep.push_back(idx[k]);
  return m.select_columns(keep);
}

template <class K>
GradedMatrix<K> syzygies(const GradedMatrix<K>& m) {
  auto ker = kernel_elements(m);
  std::vector<std::vector<Polynomial<K>>> cols;
  std::vector<Bidegree> deg;
  for (auto& [c, d] : ker) {
    cols.push_back(std::move(c));
    deg.push_back(d);
  }
  return minimal_columns(from_columns<K>(m.ring(), m.source_deg(), cols, deg));
}

// ---------------------------------------------------------------- resolutions

template <class K>
int FreeComplex<K>::length() const {
  int l = f0.empty() ? -1 : 0;
  for (std::size_t i = 0; i < maps.size(); ++i)
    if (maps[i].cols() > 0) l = static_cast<int>(i) + 1;
  return l;
}

template <class K>
BettiTable FreeComplex<K>::betti() const {
  BettiTable b;
  for (std::size_t i = 0; i < terms(); ++i)
    for (const auto& d : term(i)) b.add(static_cast<int>(i), d, 1);
  return b;
}

int default_max_len(int f) { return binom(f - 2, 2) + 3; }

template <class K>
FreeComplex<K> free_resolution(const GradedMatrix<K>& presentation, int max_len) {
  if (max_len < 1) throw StructuralError("max_len must be at least 1");
  FreeComplex<K> c;
  c.ring = presentation.ring();
  c.f0 = presentation.target_deg();
  GradedMatrix<K> d = minimal_columns(presentation);
  while (d.cols() > 0) {
    if (static_cast<int>(c.maps.size()) == max_len) {
      c.truncated = true;
      break;
    }
    c.maps.push_back(d);
    d = syzygies(d);
  }
  return minimalize(c);
}

template <class K>
FreeComplex<K> minimalize(const FreeComplex<K>& in) {
  FreeComplex<K> c = in;
  const K& k = c.ring->field();
  while (true) {
    std::size_t mi = kNone, row = 0, col = 0;
    for (std::size_t i = 0; i < c.maps.size() && mi == kNone; ++i)
      for (std::size_t j = 0; j < c.maps[i].cols() && mi == kNone; ++j)
        for (std::size_t r = 0; r < c.maps[i].rows(); ++r) {
          const auto& e = c.maps[i].at(r, j);
          if (!e.is_zero() && e.is_constant()) {
            mi = i;
            row = r;
            col = j;
            break;
          }
        }
    if (mi == kNone) break;
    const auto& d = c.maps[mi];
    auto inv = Polynomial<K>::constant(c.ring, k.inv(d.at(row, col).lead_coeff()));
    GradedMatrix<K> nd = drop(d, row, col);
    std::size_t a = 0;
    for (std::size_t i = 0; i < d.rows(); ++i) {
      if (i == row) continue;
      if (!d.at(i, col).is_zero()) {
        auto factor = d.at(i, col) * inv;
        std::size_t b = 0;
        for (std::size_t j = 0; j < d.cols(); ++j) {
          if (j == col) continue;
          if (!d.at(row, j).is_zero()) nd.at(a, b) -= factor * d.at(row, j);
          ++b;
        }
      }
      ++a;
    }
    if (mi + 1 < c.maps.size()) c.maps[mi + 1] = drop(c.maps[mi + 1], col, kNone);
    if (mi > 0) {
      c.maps[mi - 1] = drop(c.maps[mi - 1], kNone, row);
    } else {
      c.f0.erase(c.f0.begin() + static_cast<long>(row));
    }
    c.maps[mi] = std::move(nd);
  }
  while (!c.maps.empty() && c.maps.back().cols() == 0) c.maps.pop_back();
  return c;
}

template <class K>
bool composites_vanish(const FreeComplex<K>& c) {
  for (std::size_t i = 0; i + 1 < c.maps.size(); ++i)
    if (!(c.maps[i] * c.maps[i + 1]).is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------- presented complexes

template <class K>
bool homology_is_zero(const PresentedComplex<K>& c, int position) {
  if (position < 0 || position >= static_cast<int>(c.terms.size()))
    throw StructuralError("homology position out of range");
  const auto& term = c.terms[position];
  const std::size_t n = term.gens.size();
  if (n == 0) return true;
  const auto& ring = c.ring;

  std::vector<std::vector<Polynomial<K>>> kernel;
  const bool has_out = position < static_cast<int>(c.maps.size()) && !c.terms[position + 1].gens.empty();
  if (has_out) {
    const auto& out = c.maps[position];
    auto aug = out.hconcat(c.terms[position + 1].relations);
    for (auto& [col, d] : kernel_elements(aug)) {
      col.resize(n);
      kernel.push_back(std::move(col));
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Polynomial<K>> e(n, Polynomial<K>(ring));
      e[i] = Polynomial<K>::constant(ring, 1);
      kernel.push_back(std::move(e));
    }
  }
  GradedMatrix<K> image = position > 0 ? c.maps[position - 1].hconcat(term.relations) : term.relations;
  Submodule<K> sub(image);
  for (const auto& v : kernel) {
    bool zero = std::all_of(v.begin(), v.end(), [](const auto& p) { return p.is_zero(); });
    if (!zero && !sub.contains(v)) return false;
  }
  return true;
}

template <class K>
ClosureReport check_closure(const PresentedComplex<K>& c) {
  ClosureReport rep;
  auto fail = [&](std::size_t i) {
    if (rep.first_failure < 0) rep.first_failure = static_cast<int>(i);
  };
  for (std::size_t i = 0; i + 1 < c.maps.size(); ++i) {
    auto comp = c.maps[i + 1] * c.maps[i];
    bool ok = comp.is_zero();
    if (!ok && !c.free_complex) ok = !Submodule<K>(c.terms[i + 2].relations).first_column_outside(comp).has_value();
    if (!ok) {
      rep.composites_ok = false;
      fail(i);
    }
  }
  if (!c.free_complex)
    for (std::size_t i = 0; i < c.maps.size(); ++i) {
      if (c.terms[i].relations.cols() == 0 || c.terms[i + 1].gens.empty()) continue;
      auto img = c.maps[i] * c.terms[i].relations;
      if (Submodule<K>(c.terms[i + 1].relations).first_column_outside(img)) {
        rep.well_defined = false;
        fail(i);
      }
    }
  return rep;
}

// ---------------------------------------------------------------- Betti tables

PalindromeResult betti_palindrome_check(const BettiTable& b, int codim) {
  PalindromeResult res;
  res.c = b.length();
  if (res.c < 0) return res;
  std::optional<Bidegree> lo, hi;
  for (const auto& [key, n] : b.entries) {
    if (n == 0) continue;
    if (key.first == 0 && (!lo || key.second < *lo)) lo = key.second;
    if (key.first == res.c && (!hi || *hi < key.second)) hi = key.second;
  }
  if (!lo || !hi) return res;
  res.sigma = *lo + *hi;
  if (codim >= 0 && codim != res.c) return res;
  for (const auto& [key, n] : b.entries)
    if (b.at(res.c - key.first, res.sigma - key.second) != n) return res;
  res.palindromic = true;
  return res;
}

// ---------------------------------------------------------------- characteristic two

GradedMatrix<Rationals> char0_certificate(const PolyRing<Rationals>::Ptr& ring) {
  using Ext = ExteriorElement<Rationals>;
  using Poly = Polynomial<Rationals>;
  const int f = ring->f();
  if (f != 5) throw StructuralError("the characteristic-two witness lives at f = 5");
  auto xi = generic_xi<Rationals>(ring);
  auto phi1 = Ext::basis(ring, f, Side::Dual, subset_of({5}));
  auto phi4 = Ext::basis(ring, f, Side::Dual, subset_of({1, 2, 3, 4}));
  auto half = Poly::constant(ring, Rationals{}.from_fraction(1, 2));
  auto phi3 = phi1.act_on(xi).act_on(phi4) + xi.act_on(phi1.wedge(phi4)).scaled(half);
  auto cols = wedge_basis(f, 3, true);
  GradedMatrix<Rationals> c(ring, std::vector<Bidegree>(cols.size(), {1, 0}), {{2, 0}});
  // decreasing wedges of three factors carry the reversal sign -1
  for (std::size_t i = 0; i < cols.size(); ++i) c.at(i, 0) = -phi3.coeff(cols[i].set);
  return c;
}

namespace {

template <class K>
GradedMatrix<K> witness_column(const typename PolyRing<K>::Ptr& ring) {
  GradedMatrix<K> w(ring, std::vector<Bidegree>(ring->f(), {0, 0}), {{2, 0}});
  w.at(4, 0) = build_ideal<K>(ring, IdealKind::I).gens[0];
  return w;
}

}  // namespace

Char2AnomalyReport char2_anomaly_check(int f) {
  if (f != 5) throw StructuralError("the characteristic-two witness lives at f = 5");
  Char2AnomalyReport rep;
  {
    auto n = build_module<PrimeField>(PrimeField(2), f, ModuleName::N);
    const auto& ring = n.relations.ring();
    auto d1 = map_matrix<PrimeField>(ring, MapName::d1);
    auto w = witness_column<PrimeField>(ring).column(0);
    rep.witness_outside_d1_char2 = !Submodule<PrimeField>(d1).contains(w);
    rep.witness_in_relations_char2 = Submodule<PrimeField>(n.relations).contains(w);
    auto res = free_resolution(n.relations, default_max_len(f));
    rep.betti_char2 = res.betti();
    rep.pd_char2 = res.truncated ? -1 : res.length();
    auto t = rep.betti_char2.totals();
    rep.beta1_char2 = t.size() > 1 ? t[1] : 0;
  }
  {
    auto n = build_module<Rationals>(Rationals{}, f, ModuleName::N);
    const auto& ring = n.relations.ring();
    auto d1 = map_matrix<Rationals>(ring, MapName::d1);
    auto cert = char0_certificate(ring);
    auto lhs = d1 * cert;
    auto w = witness_column<Rationals>(ring);
    bool same = true;
    for (int i = 0; i < f; ++i) same = same && lhs.at(i, 0) == w.at(i, 0);
    rep.certificate_holds_char0 = same;
    auto res = free_resolution(n.relations, default_max_len(f));
    rep.betti_char0 = res.betti();
    rep.pd_char0 = res.truncated ? -1 : res.length();
    auto t = rep.betti_char0.totals();
    rep.beta1_char0 = t.size() > 1 ? t[1] : 0;
  }
  return rep;
}

#define PFG_INSTANTIATE(K)                                                             \
  template class Submodule<K>;                                                         \
  template struct FreeComplex<K>;                                                      \
  template GradedMatrix<K> minimal_columns(const GradedMatrix<K>&);                    \
  template GradedMatrix<K> syzygies(const GradedMatrix<K>&);                           \
  template FreeComplex<K> free_resolution(const GradedMatrix<K>&, int);                \
  template FreeComplex<K> minimalize(const FreeComplex<K>&);                           \
  template bool composites_vanish(const FreeComplex<K>&);                              \
  template bool homology_is_zero(const PresentedComplex<K>&, int);                     \
  template ClosureReport check_closure(const PresentedComplex<K>&);

PFG_INSTANTIATE(Rationals)
PFG_INSTANTIATE(PrimeField)

}  // namespace pfg
