#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "pfg/ring.hpp"

namespace pfg {

template <class K>
struct Term {
  Monomial m;
  typename K::Elem c;
};

/// Sparse polynomial; terms are kept strictly descending in the ring's order
/// with no zero coefficients.
template <class K>
class Polynomial {
 public:
  using Elem = typename K::Elem;
  using RingPtr = typename PolyRing<K>::Ptr;

  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, const Elem& c) {
    Polynomial p(ring);
    if (!ring->field().is_zero(c)) p.terms_.push_back({ring->one(), c});
    return p;
  }
  static Polynomial constant(RingPtr ring, long c) { return constant(ring, ring->field().from_int(c)); }
  static Polynomial constant(RingPtr ring, int c) { return constant(ring, static_cast<long>(c)); }
  static Polynomial variable(RingPtr ring, int idx) {
    Polynomial p(ring);
    p.terms_.push_back({ring->var_monomial(idx), ring->field().one()});
    return p;
  }
  static Polynomial variable(RingPtr ring, const Variable& v) { return variable(ring, ring->index(v)); }
  static Polynomial monomial(RingPtr ring, const Monomial& m, const Elem& c) {
    Polynomial p(ring);
    if (!ring->field().is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }
  /// Builds a polynomial from arbitrary (unsorted, possibly repeated) terms.
  static Polynomial from_terms(RingPtr ring, std::vector<Term<K>> terms) {
    Polynomial p(ring);
    p.terms_ = std::move(terms);
    p.canonicalize();
    return p;
  }

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term<K>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Monomial& lead_monomial() const { return terms_.front().m; }
  const Elem& lead_coeff() const { return terms_.front().c; }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }

  Polynomial operator+(const Polynomial& o) const { return combine(o, false); }
  Polynomial operator-(const Polynomial& o) const { return combine(o, true); }
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.c = field().neg(t.c);
    return r;
  }

  Polynomial operator*(const Polynomial& o) const {
    check_ring(o);
    Polynomial r(ring_);
    if (is_zero() || o.is_zero()) return r;
    std::vector<Term<K>> prod;
    prod.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
      for (const auto& b : o.terms_) prod.push_back({a.m * b.m, field().mul(a.c, b.c)});
    r.terms_ = std::move(prod);
    r.canonicalize();
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const Elem& c) const {
    Polynomial r(ring_);
    if (field().is_zero(c)) return r;
    r.terms_ = terms_;
    for (auto& t : r.terms_) t.c = field().mul(t.c, c);
    return r;
  }
  Polynomial scaled(long c) const { return scaled(field().from_int(c)); }
  Polynomial scaled(int c) const { return scaled(static_cast<long>(c)); }
  Polynomial mul_term(const Monomial& m, const Elem& c) const {
    Polynomial r(ring_);
    if (field().is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.m * m, field().mul(t.c, c)});
    return r;
  }
  Polynomial pow(int e) const {
    Polynomial r = constant(ring_, field().one());
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }
  /// Scales so that the leading coefficient is one.
  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(field().inv(lead_coeff()));
  }

  bool operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (!(terms_[i].m == o.terms_[i].m) || !field().equal(terms_[i].c, o.terms_[i].c)) return false;
    return true;
  }

  int total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.m.degree());
    return d;
  }
  bool is_homogeneous() const {
    for (const auto& t : terms_)
      if (t.m.degree() != terms_.front().m.degree()) return false;
    return true;
  }
  /// Common bidegree of all terms, or nullopt for an inhomogeneous polynomial.
  /// The zero polynomial is reported as bidegree (0, 0).
  std::optional<Bidegree> bidegree() const {
    if (terms_.empty()) return Bidegree{};
    Bidegree d = ring_->bidegree(terms_.front().m);
    for (const auto& t : terms_)
      if (ring_->bidegree(t.m) != d) return std::nullopt;
    return d;
  }

  /// Exact evaluation; every variable that occurs must be assigned.
  Elem specialize(const std::map<int, Elem>& assignment) const {
    const K& k = field();
    Elem acc = k.zero();
    for (const auto& t : terms_) {
      Elem v = t.c;
      for (int i = 0; i < t.m.nvars(); ++i) {
        int e = t.m.exponent(i);
        if (e == 0) continue;
        auto it = assignment.find(i);
        if (it == assignment.end())
          throw StructuralError("no value assigned to variable " + ring_->name(i));
        for (int p = 0; p < e; ++p) v = k.mul(v, it->second);
      }
      k.add_to(acc, v);
    }
    return acc;
  }

  /// Re-expresses this polynomial in `target`: variable k goes to index
  /// `index_map[k]` (identity when empty); terms are re-sorted.
  Polynomial map_to(RingPtr target, const std::vector<int>& index_map = {}) const {
    std::vector<Term<K>> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m(target->nvars());
      for (int i = 0; i < t.m.nvars(); ++i) {
        int e = t.m.exponent(i);
        if (e == 0) continue;
        int j = index_map.empty() ? i : index_map[i];
        if (j < 0 || j >= target->nvars()) throw StructuralError("variable cannot be mapped into target ring");
        m.set_exponent(j, e);
      }
      out.push_back({m, t.c});
    }
    return from_terms(target, std::move(out));
  }

  const K& field() const { return ring_->field(); }

 private:
  void check_ring(const Polynomial& o) const {
    if (ring_ != o.ring_ && !(ring_ && o.ring_ && ring_->same_as(*o.ring_)))
      throw StructuralError("polynomials live in different rings");
  }

  Polynomial combine(const Polynomial& o, bool subtract) const {
    check_ring(o);
    const K& k = field();
    const auto& ord = ring_->order();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size() ||
          (i < terms_.size() && ord.compare_unchecked(terms_[i].m, o.terms_[j].m) > 0)) {
        r.terms_.push_back(terms_[i++]);
      } else if (i == terms_.size() || ord.compare_unchecked(terms_[i].m, o.terms_[j].m) < 0) {
        r.terms_.push_back({o.terms_[j].m, subtract ? k.neg(o.terms_[j].c) : o.terms_[j].c});
        ++j;
      } else {
        Elem c = subtract ? k.sub(terms_[i].c, o.terms_[j].c) : k.add(terms_[i].c, o.terms_[j].c);
        if (!k.is_zero(c)) r.terms_.push_back({terms_[i].m, c});
        ++i;
        ++j;
      }
    }
    return r;
  }

  void canonicalize() {
    const K& k = field();
    const auto& ord = ring_->order();
    for (const auto& t : terms_)
      if (t.m.nvars() != ring_->nvars()) throw StructuralError("monomial has wrong number of variables");
    std::sort(terms_.begin(), terms_.end(),
              [&](const Term<K>& a, const Term<K>& b) { return ord.compare_unchecked(a.m, b.m) > 0; });
    std::vector<Term<K>> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().m == t.m) {
        k.add_to(out.back().c, t.c);
      } else {
        if (!out.empty() && k.is_zero(out.back().c)) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && k.is_zero(out.back().c)) out.pop_back();
    terms_ = std::move(out);
  }

  RingPtr ring_;
  std::vector<Term<K>> terms_;
};

}  // namespace pfg
