#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <vector>

#include "pfg/polynomial.hpp"

namespace pfg {

using Subset = std::uint32_t;  // bit k-1 set <=> index k in the subset

inline int subset_size(Subset s) { return std::popcount(s); }
inline Subset subset_of(std::initializer_list<int> idx) {
  Subset s = 0;
  for (int i : idx) s |= Subset{1} << (i - 1);
  return s;
}
inline std::vector<int> subset_indices(Subset s) {
  std::vector<int> out;
  for (int i = 0; s >> i; ++i)
    if ((s >> i) & 1u) out.push_back(i + 1);
  return out;
}

/// All k-subsets of {1..n} in lexicographic order of their increasing index lists.
std::vector<Subset> k_subsets(int n, int k);

/// Sign of e_S ^ e_T relative to e_{S u T}; zero when S and T meet.
inline int merge_sign(Subset s, Subset t) {
  if (s & t) return 0;
  int inv = 0;
  for (Subset rest = t; rest; rest &= rest - 1) {
    int b = std::countr_zero(rest);
    inv += std::popcount(s >> (b + 1));  // elements of S larger than this element of T
  }
  return (inv & 1) ? -1 : 1;
}

/// Sign of the action of the basis element e_S of one side on e_T of the other,
/// where e_S = e_{s1} ^ ... ^ e_{sp} acts as e_{s1}(e_{s2}(...e_{sp}(.)...)).
/// Zero unless S is contained in T.
inline int contract_sign(Subset s, Subset t) {
  if ((s & t) != s) return 0;
  int sign = 1;
  Subset cur = t;
  for (Subset rest = s; rest;) {
    int b = 31 - std::countl_zero(rest);  // largest remaining element acts first
    rest &= ~(Subset{1} << b);
    if (std::popcount(cur & ((Subset{1} << b) - 1)) & 1) sign = -sign;
    cur &= ~(Subset{1} << b);
  }
  return sign;
}

enum class Side { Primal, Dual };

/// Homogeneous element of the exterior algebra of F (Primal) or F* (Dual) over
/// a polynomial ring.
template <class K>
class ExteriorElement {
 public:
  using Poly = Polynomial<K>;
  using RingPtr = typename PolyRing<K>::Ptr;

  ExteriorElement(RingPtr ring, int rank, Side side, int degree)
      : ring_(std::move(ring)), rank_(rank), side_(side), degree_(degree) {}

  static ExteriorElement basis(RingPtr ring, int rank, Side side, Subset s, long coeff = 1) {
    ExteriorElement e(ring, rank, side, subset_size(s));
    e.add_term(s, Poly::constant(ring, coeff));
    return e;
  }
  /// e_{i1} ^ e_{i2} ^ ... in the given (not necessarily increasing) order.
  static ExteriorElement wedge_of(RingPtr ring, int rank, Side side, const std::vector<int>& idx) {
    ExteriorElement acc = basis(ring, rank, side, 0);
    for (int i : idx) acc = acc.wedge(basis(ring, rank, side, subset_of({i})));
    return acc;
  }

  const RingPtr& ring() const { return ring_; }
  int rank() const { return rank_; }
  Side side() const { return side_; }
  int degree() const { return degree_; }
  const std::map<Subset, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Poly coeff(Subset s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Poly(ring_) : it->second;
  }
  /// Scalar value of a degree-0 element.
  Poly scalar() const { return coeff(0); }

  void add_term(Subset s, const Poly& c) {
    if (subset_size(s) != degree_) throw StructuralError("basis subset has wrong size");
    if (c.is_zero()) return;
    auto it = terms_.find(s);
    if (it == terms_.end()) {
      terms_.emplace(s, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  ExteriorElement operator+(const ExteriorElement& o) const {
    check_compatible(o);
    if (degree_ != o.degree_) throw StructuralError("adding exterior elements of different degrees");
    ExteriorElement r(*this);
    for (const auto& [s, c] : o.terms_) r.add_term(s, c);
    return r;
  }
  ExteriorElement operator-(const ExteriorElement& o) const { return *this + o.scaled(Poly::constant(ring_, -1)); }
  ExteriorElement scaled(const Poly& c) const {
    ExteriorElement r(ring_, rank_, side_, degree_);
    for (const auto& [s, v] : terms_) r.add_term(s, v * c);
    return r;
  }
  bool operator==(const ExteriorElement& o) const {
    return side_ == o.side_ && degree_ == o.degree_ && rank_ == o.rank_ && terms_ == o.terms_;
  }

  ExteriorElement wedge(const ExteriorElement& o) const {
    check_compatible(o);
    if (side_ != o.side_) throw StructuralError("wedge of elements from different exterior algebras");
    ExteriorElement r(ring_, rank_, side_, degree_ + o.degree_);
    if (degree_ + o.degree_ > rank_) return r;
    for (const auto& [s, a] : terms_)
      for (const auto& [t, b] : o.terms_) {
        int sg = merge_sign(s, t);
        if (sg == 0) continue;
        r.add_term(s | t, sg > 0 ? a * b : -(a * b));
      }
    return r;
  }

  /// The module action of this element on `o`, which lives in the opposite
  /// algebra and has degree at least ours.
  ExteriorElement act_on(const ExteriorElement& o) const {
    check_compatible(o);
    if (side_ == o.side_) throw StructuralError("contraction needs elements of opposite sides");
    ExteriorElement r(ring_, rank_, o.side_, o.degree_ - degree_);
    if (degree_ > o.degree_) return ExteriorElement(ring_, rank_, o.side_, 0);
    for (const auto& [s, a] : terms_)
      for (const auto& [t, b] : o.terms_) {
        int sg = contract_sign(s, t);
        if (sg == 0) continue;
        r.add_term(t & ~s, sg > 0 ? a * b : -(a * b));
      }
    return r;
  }

 private:
  void check_compatible(const ExteriorElement& o) const {
    if (rank_ != o.rank_) throw StructuralError("exterior elements over different ranks");
    if (ring_ != o.ring_ && !ring_->same_as(*o.ring_)) throw StructuralError("exterior elements over different rings");
  }

  RingPtr ring_;
  int rank_;
  Side side_;
  int degree_;
  std::map<Subset, Poly> terms_;
};

/// Action of phi (Dual, degree q) on f (Primal, degree p) when q <= p, and of
/// f on phi when p < q.
template <class K>
ExteriorElement<K> contract(const ExteriorElement<K>& phi, const ExteriorElement<K>& f) {
  if (phi.side() == f.side()) throw StructuralError("contraction needs elements of opposite sides");
  if (phi.degree() <= f.degree()) return phi.act_on(f);
  return f.act_on(phi);
}

/// Alternating matrix stored by its strict upper triangle (0-based indices).
template <class K>
class AlternatingMatrix {
 public:
  using Poly = Polynomial<K>;

  AlternatingMatrix(typename PolyRing<K>::Ptr ring, int n) : ring_(std::move(ring)), n_(n) {
    upper_.assign(static_cast<std::size_t>(n) * n, Poly(ring_));
  }
  int size() const { return n_; }
  const typename PolyRing<K>::Ptr& ring() const { return ring_; }

  void set(int i, int j, const Poly& v) {
    if (i == j) throw StructuralError("diagonal of an alternating matrix is zero");
    if (i < j) upper_[i * n_ + j] = v;
    else upper_[j * n_ + i] = -v;
  }
  Poly at(int i, int j) const {
    if (i == j) return Poly(ring_);
    if (i < j) return upper_[i * n_ + j];
    return -upper_[j * n_ + i];
  }

  /// The generic alternating matrix X of the ring.
  static AlternatingMatrix generic(typename PolyRing<K>::Ptr ring) {
    AlternatingMatrix a(ring, ring->f());
    for (int i = 1; i < ring->f(); ++i)
      for (int j = i + 1; j <= ring->f(); ++j) a.set(i - 1, j - 1, Poly::variable(ring, ring->x(i, j)));
    return a;
  }

 private:
  typename PolyRing<K>::Ptr ring_;
  int n_;
  std::vector<Poly> upper_;
};

/// Pfaffian of the principal submatrix on `rows` (0-based, increasing) by
/// summing over perfect matchings with their permutation signs.
template <class K>
Polynomial<K> pfaffian_by_matchings(const AlternatingMatrix<K>& a, const std::vector<int>& rows);

/// Pfaffian by recursive expansion along the first row.
template <class K>
Polynomial<K> pfaffian_oracle(const AlternatingMatrix<K>& a, const std::vector<int>& rows);

/// Determinant by cofactor expansion along the first row.
template <class K>
Polynomial<K> determinant_cofactor(const std::vector<std::vector<Polynomial<K>>>& m);

/// The l-th divided power of a 2-form: coefficient of e_I is the Pfaffian of
/// the I-principal submatrix of the alternating matrix of f2.
template <class K>
ExteriorElement<K> divided_power(const ExteriorElement<K>& f2, int l);

/// Alternating matrix A with A_{i,j} the coefficient of e_i ^ e_j in f2.
template <class K>
AlternatingMatrix<K> matrix_of_two_form(const ExteriorElement<K>& f2);

}  // namespace pfg
