#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "pfg/matrix.hpp"
#include "pfg/polynomial.hpp"

namespace pfg {

/// A term of a vector in a free module: coefficient * monomial * e_comp.
template <class K>
struct MTerm {
  Monomial m;
  int comp;
  typename K::Elem c;
};

/// Module element; terms strictly descending in the module order.
template <class K>
using MVec = std::vector<MTerm<K>>;

/// Shape of a free module R^r together with a module order.  Components are
/// grouped into blocks (lower block id is larger).  Inside a block the order is
/// either position-over-term or term-over-position; the latter compares the
/// weighted degree deg(m) + comp_deg[c] first when the ring order is graded.
struct ModuleLayout {
  std::vector<int> comp_deg;
  std::vector<int> block;
  bool pot = false;

  int rank() const { return static_cast<int>(comp_deg.size()); }
  static ModuleLayout single(int deg = 0) { return {{deg}, {0}, false}; }
  static ModuleLayout top(std::vector<int> deg) {
    std::vector<int> b(deg.size(), 0);
    return {std::move(deg), std::move(b), false};
  }
};

template <class K>
class ModuleGB {
 public:
  using Elem = typename K::Elem;
  using RingPtr = typename PolyRing<K>::Ptr;

  ModuleGB(RingPtr ring, ModuleLayout layout);

  /// Runs Buchberger's algorithm (normal strategy with sugar, Gebauer-Moeller
  /// criteria).  For homogeneous input, `minimal_inputs()` afterwards flags the
  /// inputs forming a minimal generating set (processed degree by degree in
  /// input order).
  void compute(std::vector<MVec<K>> gens);

  /// Installs an already reduced Groebner basis for reduction only.
  void set_basis(std::vector<MVec<K>> basis);

  const std::vector<MVec<K>>& basis() const { return basis_; }
  const std::vector<bool>& minimal_inputs() const { return minimal_; }

  /// Fully reduced remainder of f.
  MVec<K> normal_form(MVec<K> f) const;
  bool contains(const MVec<K>& f) const { return normal_form(f).empty(); }

  const RingPtr& ring() const { return ring_; }
  const ModuleLayout& layout() const { return layout_; }

  std::strong_ordering compare(const Monomial& a, int ca, const Monomial& b, int cb) const;
  void sort_terms(MVec<K>& v) const;  // sorts and merges duplicates
  MVec<K> from_column(const std::vector<Polynomial<K>>& col, int offset = 0) const;

  /// Statistics of the last computation.
  std::size_t pairs_processed() const { return pairs_processed_; }
  std::size_t zero_reductions() const { return zero_reductions_; }

 private:
  struct Elt {
    MVec<K> v;
    int sugar;
  };

  MVec<K> reduce(MVec<K> f, bool full, const std::vector<int>& usable) const;
  void make_monic(MVec<K>& f) const;
  int weighted_degree(const MTerm<K>& t) const { return t.m.degree() + layout_.comp_deg[t.comp]; }

  RingPtr ring_;
  ModuleLayout layout_;
  bool graded_order_;
  std::vector<Elt> elts_;
  std::vector<int> active_;
  std::vector<MVec<K>> basis_;
  std::vector<bool> minimal_;
  std::size_t pairs_processed_ = 0;
  std::size_t zero_reductions_ = 0;
};

/// Reduced Groebner basis of an ideal, with its ring (which carries the order).
template <class K>
struct GroebnerBasis {
  typename PolyRing<K>::Ptr ring;
  std::vector<Polynomial<K>> gens;

  bool is_unit_ideal() const { return gens.size() == 1 && gens[0].is_constant() && !gens[0].is_zero(); }
};

template <class K>
GroebnerBasis<K> groebner_basis(const std::vector<Polynomial<K>>& gens, MonomialOrder order);
template <class K>
GroebnerBasis<K> groebner_basis(const std::vector<Polynomial<K>>& gens);

template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const GroebnerBasis<K>& gb);
template <class K>
bool ideal_member(const Polynomial<K>& f, const GroebnerBasis<K>& gb) {
  return normal_form(f, gb).is_zero();
}
/// Two-sided containment test of the ideals generated by a and b.
template <class K>
bool same_ideal(const GroebnerBasis<K>& a, const GroebnerBasis<K>& b);

/// Exact quotient h / f; throws StructuralError if f does not divide h.
template <class K>
Polynomial<K> divide_exact(const Polynomial<K>& h, const Polynomial<K>& f);

/// (I : f) computed through I n (f) with an auxiliary tag variable.
template <class K>
GroebnerBasis<K> ideal_quotient(const std::vector<Polynomial<K>>& gens, const Polynomial<K>& f);

struct SaturationResult {
  bool member = false;
  int exponent = -1;
};

/// Least N <= bound with f^N * g in the ideal generated by gens.
template <class K>
SaturationResult saturation_member(const std::vector<Polynomial<K>>& gens, const Polynomial<K>& f,
                                   const Polynomial<K>& g, int bound);

struct HilbertData {
  int nvars = 0;
  int dim = 0;
  int codim = 0;
  std::vector<long long> numerator;  // Hilbert series = numerator(T) / (1-T)^nvars
};

/// Dimension by maximal independent sets of the leading-term ideal's supports.
int monomial_ideal_dimension(int nvars, const std::vector<Monomial>& leads);
/// Hilbert series numerator of R / (leads) by pivot recursion.
std::vector<long long> hilbert_numerator(int nvars, const std::vector<Monomial>& leads);
/// Multiplicity of the root T = 1 of a nonzero integer polynomial.
int order_at_one(std::vector<long long> p);

template <class K>
HilbertData dimension_codim(const std::vector<Polynomial<K>>& gens);

/// Dimension data of the graded module coker(M), via leading terms of a module GB
/// of the columns.
template <class K>
HilbertData module_dimension(const GradedMatrix<K>& m);

}  // namespace pfg
