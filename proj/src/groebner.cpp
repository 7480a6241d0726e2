#include "pfg/groebner.hpp"

#include "pfg/budget.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace pfg {

namespace {

struct Divisor {
  Monomial lm;
  std::uint32_t mask;
  int idx;
};

}  // namespace

template <class K>
ModuleGB<K>::ModuleGB(RingPtr ring, ModuleLayout layout)
    : ring_(std::move(ring)), layout_(std::move(layout)) {
  if (layout_.block.size() != layout_.comp_deg.size()) throw StructuralError("module layout is inconsistent");
  graded_order_ = ring_->order().kind == MonomialOrder::Kind::GrevLex;
}

template <class K>
std::strong_ordering ModuleGB<K>::compare(const Monomial& a, int ca, const Monomial& b, int cb) const {
  using so = std::strong_ordering;
  if (layout_.block[ca] != layout_.block[cb]) return layout_.block[ca] < layout_.block[cb] ? so::greater : so::less;
  if (layout_.pot) {
    if (ca != cb) return ca < cb ? so::greater : so::less;
    return ring_->order().compare_unchecked(a, b);
  }
  if (graded_order_) {
    int da = a.degree() + layout_.comp_deg[ca];
    int db = b.degree() + layout_.comp_deg[cb];
    if (da != db) return da <=> db;
  }
  auto c = ring_->order().compare_unchecked(a, b);
  if (c != 0) return c;
  if (ca != cb) return ca < cb ? so::greater : so::less;
  return so::equal;
}

template <class K>
void ModuleGB<K>::sort_terms(MVec<K>& v) const {
  const K& k = ring_->field();
  std::sort(v.begin(), v.end(), [&](const MTerm<K>& a, const MTerm<K>& b) { return compare(a.m, a.comp, b.m, b.comp) > 0; });
  MVec<K> out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (!out.empty() && out.back().comp == t.comp && out.back().m == t.m) {
      k.add_to(out.back().c, t.c);
      if (k.is_zero(out.back().c)) out.pop_back();
    } else if (!k.is_zero(t.c)) {
      out.push_back(std::move(t));
    }
  }
  v = std::move(out);
}

template <class K>
MVec<K> ModuleGB<K>::from_column(const std::vector<Polynomial<K>>& col, int offset) const {
  MVec<K> v;
  for (std::size_t i = 0; i < col.size(); ++i)
    for (const auto& t : col[i].terms()) v.push_back({t.m, static_cast<int>(i) + offset, t.c});
  sort_terms(v);
  return v;
}

template <class K>
void ModuleGB<K>::make_monic(MVec<K>& f) const {
  if (f.empty()) return;
  const K& k = ring_->field();
  if (k.is_one(f.front().c)) return;
  Elem inv = k.inv(f.front().c);
  for (auto& t : f) t.c = k.mul(t.c, inv);
}

namespace {

// result = f[from:] - c * q * g[1:]   (the leading terms are known to cancel)
template <class K, class Cmp>
MVec<K> sub_shifted(const K& k, const MVec<K>& f, std::size_t from, const MVec<K>& g, const Monomial& q,
                    const typename K::Elem& c, Cmp&& cmp) {
  MVec<K> out;
  out.reserve(f.size() - from + g.size());
  std::size_t i = from, j = 1;
  while (i < f.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(f[i++]);
      continue;
    }
    Monomial gm = g[j].m * q;
    if (i == f.size()) {
      out.push_back({gm, g[j].comp, k.neg(k.mul(c, g[j].c))});
      ++j;
      continue;
    }
    auto o = cmp(f[i].m, f[i].comp, gm, g[j].comp);
    if (o > 0) {
      out.push_back(f[i++]);
    } else if (o < 0) {
      out.push_back({gm, g[j].comp, k.neg(k.mul(c, g[j].c))});
      ++j;
    } else {
      auto v = f[i].c;
      k.sub_mul(v, c, g[j].c);
      if (!k.is_zero(v)) out.push_back({f[i].m, f[i].comp, v});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

template <class K>
MVec<K> ModuleGB<K>::reduce(MVec<K> f, bool full, const std::vector<int>& usable) const {
  const K& k = ring_->field();
  std::vector<std::vector<Divisor>> by_comp(layout_.rank());
  for (int idx : usable) {
    const auto& lead = elts_[idx].v.front();
    by_comp[lead.comp].push_back({lead.m, lead.m.support(), idx});
  }
  auto cmp = [this](const Monomial& a, int ca, const Monomial& b, int cb) { return compare(a, ca, b, cb); };
  MVec<K> out;
  std::size_t pos = 0;
  while (pos < f.size()) {
    const auto& t = f[pos];
    const Divisor* hit = nullptr;
    for (const auto& d : by_comp[t.comp])
      if ((d.mask & ~t.m.support()) == 0 && d.lm.divides(t.m)) {
        hit = &d;
        break;
      }
    if (!hit) {
      if (!full) {
        out.insert(out.end(), f.begin() + static_cast<long>(pos), f.end());
        return out;
      }
      out.push_back(t);
      ++pos;
      continue;
    }
    const auto& g = elts_[hit->idx].v;
    Monomial q = t.m / hit->lm;
    Elem c = t.c;  // divisors are monic
    f = sub_shifted(k, f, pos + 1, g, q, c, cmp);
    pos = 0;
  }
  return out;
}

template <class K>
MVec<K> ModuleGB<K>::normal_form(MVec<K> f) const {
  sort_terms(f);
  std::vector<int> all(elts_.size());
  std::iota(all.begin(), all.end(), 0);
  return reduce(std::move(f), true, active_.empty() ? all : active_);
}

template <class K>
void ModuleGB<K>::compute(std::vector<MVec<K>> gens) {
  const K& k = ring_->field();
  const bool ideal_case = layout_.rank() == 1;
  elts_.clear();
  active_.clear();
  basis_.clear();
  minimal_.assign(gens.size(), false);
  pairs_processed_ = zero_reductions_ = 0;

  struct Pair {
    int sugar;
    int kind;  // 0: S-pair, 1: input generator
    Monomial lcm;
    int comp;
    int i;
    int j;
  };
  auto pair_less = [this](const Pair& a, const Pair& b) {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.kind == 0) {
      auto c = compare(a.lcm, a.comp, b.lcm, b.comp);
      if (c != 0) return c < 0;
    }
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::set<Pair, decltype(pair_less)> queue(pair_less);

  for (std::size_t g = 0; g < gens.size(); ++g) {
    sort_terms(gens[g]);
    if (gens[g].empty()) continue;
    int s = 0;
    for (const auto& t : gens[g]) s = std::max(s, weighted_degree(t));
    queue.insert({s, 1, Monomial(), 0, static_cast<int>(g), -1});
  }

  auto add_element = [&](MVec<K> v, int sugar) {
    make_monic(v);
    const int kidx = static_cast<int>(elts_.size());
    elts_.push_back({std::move(v), sugar});
    const auto& lk = elts_[kidx].v.front();

    // Gebauer-Moeller update
    std::vector<Pair> cand;
    std::vector<bool> coprime;
    for (int a : active_) {
      const auto& la = elts_[a].v.front();
      if (la.comp != lk.comp) continue;
      Monomial l = la.m.lcm(lk.m);
      int s = std::max(elts_[a].sugar + (l.degree() - la.m.degree()), sugar + (l.degree() - lk.m.degree()));
      cand.push_back({s, 0, l, lk.comp, a, kidx});
      coprime.push_back(ideal_case && la.m.coprime(lk.m));
    }
    std::vector<std::size_t> kept;
    for (std::size_t p = 0; p < cand.size(); ++p) {
      bool keep = coprime[p];
      if (!keep) {
        keep = true;
        for (std::size_t q = p + 1; q < cand.size() && keep; ++q)
          if (cand[q].lcm.divides(cand[p].lcm)) keep = false;
        for (std::size_t q : kept)
          if (keep && cand[q].lcm.divides(cand[p].lcm)) keep = false;
      }
      if (keep) kept.push_back(p);
    }
    for (auto it = queue.begin(); it != queue.end();) {
      const Pair& p = *it;
      if (p.kind == 0 && p.comp == lk.comp && lk.m.divides(p.lcm)) {
        const auto& li = elts_[p.i].v.front().m;
        const auto& lj = elts_[p.j].v.front().m;
        if (!(li.lcm(lk.m) == p.lcm) && !(lj.lcm(lk.m) == p.lcm)) {
          it = queue.erase(it);
          continue;
        }
      }
      ++it;
    }
    for (std::size_t p : kept)
      if (!coprime[p]) queue.insert(cand[p]);
    std::vector<int> next;
    for (int a : active_) {
      const auto& la = elts_[a].v.front();
      if (la.comp == lk.comp && lk.m.divides(la.m)) continue;
      next.push_back(a);
    }
    next.push_back(kidx);
    active_ = std::move(next);
  };

  while (!queue.empty()) {
    poll_deadline();
    Pair p = *queue.begin();
    queue.erase(queue.begin());
    ++pairs_processed_;
    MVec<K> h;
    if (p.kind == 1) {
      h = reduce(gens[p.i], true, active_);
      if (!h.empty()) minimal_[p.i] = true;
    } else {
      const auto& gi = elts_[p.i].v;
      const auto& gj = elts_[p.j].v;
      Monomial qi = p.lcm / gi.front().m;
      Monomial qj = p.lcm / gj.front().m;
      MVec<K> a;
      a.reserve(gi.size());
      for (std::size_t t = 1; t < gi.size(); ++t) a.push_back({gi[t].m * qi, gi[t].comp, gi[t].c});
      // a - qj * gj with the cancelling leads skipped
      MVec<K> lead_pad;
      lead_pad.push_back({p.lcm, p.comp, k.one()});
      lead_pad.insert(lead_pad.end(), a.begin(), a.end());
      auto cmp = [this](const Monomial& x, int cx, const Monomial& y, int cy) { return compare(x, cx, y, cy); };
      MVec<K> s = sub_shifted(k, lead_pad, 1, gj, qj, k.one(), cmp);
      h = reduce(std::move(s), true, active_);
    }
    if (h.empty()) {
      ++zero_reductions_;
      continue;
    }
    add_element(std::move(h), p.sugar);
  }

  // interreduce the tails of the active elements
  std::vector<MVec<K>> out;
  for (int a : active_) {
    std::vector<int> others;
    for (int b : active_)
      if (b != a) others.push_back(b);
    MVec<K> tail(elts_[a].v.begin() + 1, elts_[a].v.end());
    MVec<K> r = reduce(std::move(tail), true, others);
    MVec<K> v;
    v.push_back(elts_[a].v.front());
    v.insert(v.end(), r.begin(), r.end());
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), [this](const MVec<K>& x, const MVec<K>& y) {
    return compare(x.front().m, x.front().comp, y.front().m, y.front().comp) > 0;
  });
  // reset the reducer state to the reduced basis
  elts_.clear();
  active_.clear();
  for (auto& v : out) {
    active_.push_back(static_cast<int>(elts_.size()));
    elts_.push_back({v, 0});
  }
  basis_ = std::move(out);
}

template <class K>
void ModuleGB<K>::set_basis(std::vector<MVec<K>> basis) {
  elts_.clear();
  active_.clear();
  for (auto& v : basis) {
    sort_terms(v);
    if (v.empty()) continue;
    make_monic(v);
    active_.push_back(static_cast<int>(elts_.size()));
    elts_.push_back({v, 0});
  }
  basis_.clear();
  for (int a : active_) basis_.push_back(elts_[a].v);
}

// ---------------------------------------------------------------- ideals

namespace {

template <class K>
MVec<K> to_mvec(const Polynomial<K>& f) {
  MVec<K> v;
  v.reserve(f.size());
  for (const auto& t : f.terms()) v.push_back({t.m, 0, t.c});
  return v;
}

template <class K>
Polynomial<K> from_mvec(typename PolyRing<K>::Ptr ring, const MVec<K>& v) {
  std::vector<Term<K>> terms;
  terms.reserve(v.size());
  for (const auto& t : v) terms.push_back({t.m, t.c});
  return Polynomial<K>::from_terms(ring, std::move(terms));
}

template <class K>
ModuleGB<K> engine_for(const GroebnerBasis<K>& gb) {
  ModuleGB<K> e(gb.ring, ModuleLayout::single());
  std::vector<MVec<K>> gens;
  for (const auto& g : gb.gens) gens.push_back(to_mvec(g));
  e.set_basis(std::move(gens));
  return e;
}

}  // namespace

template <class K>
GroebnerBasis<K> groebner_basis(const std::vector<Polynomial<K>>& gens, MonomialOrder order) {
  if (gens.empty()) throw StructuralError("groebner_basis needs at least one (possibly zero) generator");
  auto ring = gens.front().ring()->with_order(order);
  ModuleGB<K> e(ring, ModuleLayout::single());
  std::vector<MVec<K>> in;
  for (const auto& g : gens) in.push_back(to_mvec(g.map_to(ring)));
  e.compute(std::move(in));
  GroebnerBasis<K> gb{ring, {}};
  for (const auto& v : e.basis()) gb.gens.push_back(from_mvec<K>(ring, v));
  return gb;
}

template <class K>
GroebnerBasis<K> groebner_basis(const std::vector<Polynomial<K>>& gens) {
  if (gens.empty()) throw StructuralError("groebner_basis needs at least one (possibly zero) generator");
  return groebner_basis(gens, gens.front().ring()->order());
}

template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const GroebnerBasis<K>& gb) {
  if (gb.gens.empty()) return f;
  ModuleGB<K> e = engine_for(gb);
  auto r = e.normal_form(to_mvec(f.map_to(gb.ring)));
  return from_mvec<K>(gb.ring, r).map_to(f.ring());
}

template <class K>
bool same_ideal(const GroebnerBasis<K>& a, const GroebnerBasis<K>& b) {
  for (const auto& g : a.gens)
    if (!ideal_member(g, b)) return false;
  for (const auto& g : b.gens)
    if (!ideal_member(g, a)) return false;
  return true;
}

template <class K>
Polynomial<K> divide_exact(const Polynomial<K>& h, const Polynomial<K>& f) {
  if (f.is_zero()) throw StructuralError("division by zero polynomial");
  const K& k = f.field();
  Polynomial<K> q(h.ring());
  Polynomial<K> r = h;
  auto inv = k.inv(f.lead_coeff());
  while (!r.is_zero()) {
    if (!f.lead_monomial().divides(r.lead_monomial())) throw StructuralError("polynomial division is not exact");
    auto t = Polynomial<K>::monomial(h.ring(), r.lead_monomial() / f.lead_monomial(), k.mul(r.lead_coeff(), inv));
    q += t;
    r -= t * f;
  }
  return q;
}

template <class K>
GroebnerBasis<K> ideal_quotient(const std::vector<Polynomial<K>>& gens, const Polynomial<K>& f) {
  if (f.is_zero()) throw StructuralError("ideal quotient by the zero polynomial");
  auto ring = f.ring();
  auto tagged = ring->with_tags(1, MonomialOrder::elim(1));
  std::vector<int> up(ring->nvars());
  std::iota(up.begin(), up.end(), 1);
  auto w = Polynomial<K>::variable(tagged, 0);
  auto one = Polynomial<K>::constant(tagged, 1);
  std::vector<Polynomial<K>> in;
  for (const auto& g : gens)
    if (!g.is_zero()) in.push_back(w * g.map_to(tagged, up));
  in.push_back((one - w) * f.map_to(tagged, up));
  auto gb = groebner_basis(in, tagged->order());
  std::vector<int> down(tagged->nvars());
  for (int i = 0; i < tagged->nvars(); ++i) down[i] = i - 1;
  std::vector<Polynomial<K>> quot;
  for (const auto& g : gb.gens) {
    bool has_tag = false;
    for (const auto& t : g.terms())
      if (t.m.exponent(0)) has_tag = true;
    if (has_tag) continue;
    quot.push_back(divide_exact(g.map_to(ring, down), f));
  }
  if (quot.empty()) quot.push_back(Polynomial<K>(ring));
  return groebner_basis(quot, ring->order());
}

template <class K>
SaturationResult saturation_member(const std::vector<Polynomial<K>>& gens, const Polynomial<K>& f,
                                   const Polynomial<K>& g, int bound) {
  if (bound < 0) throw StructuralError("saturation bound must be nonnegative");
  auto gb = groebner_basis(gens);
  Polynomial<K> h = g;
  for (int n = 0; n <= bound; ++n) {
    if (ideal_member(h, gb)) return {true, n};
    h = h * f;
  }
  return {false, -1};
}

// ---------------------------------------------------------------- dimension

int monomial_ideal_dimension(int nvars, const std::vector<Monomial>& leads) {
  std::vector<std::uint32_t> supp;
  for (const auto& m : leads) {
    if (m.is_one()) return -1;
    supp.push_back(m.support());
  }
  std::sort(supp.begin(), supp.end(), [](auto a, auto b) { return std::popcount(a) < std::popcount(b); });
  std::vector<std::uint32_t> minimal;
  for (auto s : supp) {
    bool redundant = false;
    for (auto t : minimal)
      if ((t & ~s) == 0) redundant = true;
    if (!redundant) minimal.push_back(s);
  }
  int best = 0;
  std::function<void(int, std::uint32_t, int)> dfs = [&](int v, std::uint32_t chosen, int size) {
    if (size + (nvars - v) <= best) return;
    if (v == nvars) {
      best = size;
      return;
    }
    std::uint32_t with = chosen | (1u << v);
    bool ok = true;
    for (auto s : minimal)
      if ((s & ~with) == 0) {
        ok = false;
        break;
      }
    if (ok) dfs(v + 1, with, size + 1);
    dfs(v + 1, chosen, size);
  };
  dfs(0, 0, 0);
  return best;
}

namespace {

using IPoly = std::vector<long long>;

IPoly ipoly_add(const IPoly& a, const IPoly& b) {
  IPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  while (r.size() > 1 && r.back() == 0) r.pop_back();
  return r;
}

IPoly ipoly_mul(const IPoly& a, const IPoly& b) {
  IPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  while (r.size() > 1 && r.back() == 0) r.pop_back();
  return r;
}

IPoly ipoly_shift(const IPoly& a, int d) {
  IPoly r(d, 0);
  r.insert(r.end(), a.begin(), a.end());
  return r;
}

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> g) {
  std::sort(g.begin(), g.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.raw() < b.raw();
  });
  std::vector<Monomial> out;
  for (const auto& m : g) {
    bool red = false;
    for (const auto& o : out)
      if (o.divides(m)) {
        red = true;
        break;
      }
    if (!red) out.push_back(m);
  }
  return out;
}

IPoly hilbert_rec(int nvars, std::vector<Monomial> gens) {
  gens = minimalize_monomials(std::move(gens));
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {0};
  bool coprime = true;
  std::uint32_t seen = 0;
  for (const auto& m : gens) {
    if (seen & m.support()) {
      coprime = false;
      break;
    }
    seen |= m.support();
  }
  if (coprime) {
    IPoly r{1};
    for (const auto& m : gens) {
      IPoly f(m.degree() + 1, 0);
      f[0] = 1;
      f[m.degree()] -= 1;
      r = ipoly_mul(r, f);
    }
    return r;
  }
  std::vector<int> count(nvars, 0);
  for (const auto& m : gens)
    for (int v = 0; v < nvars; ++v)
      if (m.exponent(v)) ++count[v];
  int v = static_cast<int>(std::max_element(count.begin(), count.end()) - count.begin());
  int e = 255;
  for (const auto& m : gens)
    if (m.exponent(v)) e = std::min(e, m.exponent(v));
  Monomial p(nvars);
  p.set_exponent(v, e);
  std::vector<Monomial> plus = gens;
  plus.push_back(p);
  std::vector<Monomial> colon;
  for (const auto& m : gens) {
    Monomial q = m;
    q.set_exponent(v, std::max(0, m.exponent(v) - e));
    colon.push_back(q);
  }
  return ipoly_add(hilbert_rec(nvars, std::move(plus)), ipoly_shift(hilbert_rec(nvars, std::move(colon)), e));
}

}  // namespace

std::vector<long long> hilbert_numerator(int nvars, const std::vector<Monomial>& leads) {
  return hilbert_rec(nvars, leads);
}

int order_at_one(std::vector<long long> p) {
  int k = 0;
  while (true) {
    bool zero = std::all_of(p.begin(), p.end(), [](long long c) { return c == 0; });
    if (zero) return -1;
    long long s = std::accumulate(p.begin(), p.end(), 0LL);
    if (s != 0) return k;
    std::vector<long long> q(p.size() - 1, 0);
    long long acc = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      acc += p[i];
      q[i] = acc;
    }
    p = std::move(q);
    ++k;
  }
}

namespace {

HilbertData finish_hilbert(int n, int dim_sets, std::vector<long long> num) {
  HilbertData h;
  h.nvars = n;
  h.numerator = std::move(num);
  int ord = order_at_one(h.numerator);
  if (ord < 0) {
    h.dim = -1;
    h.codim = n + 1;
    return h;
  }
  h.dim = n - ord;
  if (h.dim != dim_sets) throw std::logic_error("dimension from independent sets disagrees with the Hilbert series");
  h.codim = n - h.dim;
  return h;
}

}  // namespace

template <class K>
HilbertData dimension_codim(const std::vector<Polynomial<K>>& gens) {
  if (gens.empty()) throw StructuralError("dimension_codim needs at least one (possibly zero) generator");
  for (const auto& g : gens)
    if (!g.is_homogeneous()) throw StructuralError("dimension_codim needs homogeneous generators");
  auto gb = groebner_basis(gens, MonomialOrder::grevlex());
  const int n = gb.ring->nvars();
  std::vector<Monomial> leads;
  for (const auto& g : gb.gens) leads.push_back(g.lead_monomial());
  return finish_hilbert(n, monomial_ideal_dimension(n, leads), hilbert_numerator(n, leads));
}

template <class K>
HilbertData module_dimension(const GradedMatrix<K>& m) {
  auto ring = m.ring()->with_order(MonomialOrder::grevlex());
  const int n = ring->nvars();
  std::vector<int> deg;
  int lo = 0;
  for (const auto& d : m.target_deg()) {
    deg.push_back(d.total());
    lo = std::min(lo, d.total());
  }
  ModuleGB<K> e(ring, ModuleLayout::top(deg));
  std::vector<MVec<K>> cols;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    std::vector<Polynomial<K>> c;
    for (std::size_t i = 0; i < m.rows(); ++i) c.push_back(m.at(i, j).map_to(ring));
    cols.push_back(e.from_column(c));
  }
  e.compute(std::move(cols));
  std::vector<std::vector<Monomial>> leads(m.rows());
  for (const auto& v : e.basis()) leads[v.front().comp].push_back(v.front().m);
  int dim = -1;
  std::vector<long long> num{0};
  for (std::size_t c = 0; c < m.rows(); ++c) {
    dim = std::max(dim, monomial_ideal_dimension(n, leads[c]));
    num = ipoly_add(num, ipoly_shift(hilbert_numerator(n, leads[c]), deg[c] - lo));
  }
  HilbertData h = finish_hilbert(n, dim, num);
  return h;
}

#define PFG_INSTANTIATE(K)                                                                                     \
  template class ModuleGB<K>;                                                                                  \
  template GroebnerBasis<K> groebner_basis(const std::vector<Polynomial<K>>&, MonomialOrder);                 \
  template GroebnerBasis<K> groebner_basis(const std::vector<Polynomial<K>>&);                                \
  template Polynomial<K> normal_form(const Polynomial<K>&, const GroebnerBasis<K>&);                          \
  template bool same_ideal(const GroebnerBasis<K>&, const GroebnerBasis<K>&);                                  \
  template Polynomial<K> divide_exact(const Polynomial<K>&, const Polynomial<K>&);                            \
  template GroebnerBasis<K> ideal_quotient(const std::vector<Polynomial<K>>&, const Polynomial<K>&);          \
  template SaturationResult saturation_member(const std::vector<Polynomial<K>>&, const Polynomial<K>&,        \
                                              const Polynomial<K>&, int);                                      \
  template HilbertData dimension_codim(const std::vector<Polynomial<K>>&);                                     \
  template HilbertData module_dimension(const GradedMatrix<K>&);

PFG_INSTANTIATE(Rationals)
PFG_INSTANTIATE(PrimeField)

}  // namespace pfg
