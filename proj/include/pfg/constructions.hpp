#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pfg/exterior.hpp"
#include "pfg/matrix.hpp"

namespace pfg {

template <class K>
using RingOf = typename PolyRing<K>::Ptr;

/// xi = sum_{i<j} x_(i,j) e_i ^ e_j
template <class K>
ExteriorElement<K> generic_xi(const RingOf<K>& ring);

/// tau = sum_i t_i e_i^*  (the ring must carry t variables)
template <class K>
ExteriorElement<K> generic_tau(const RingOf<K>& ring);

enum class IdealKind { I, K, J, Ilambda, Iprime };

IdealKind ideal_kind_from_string(const std::string& s);
std::string to_string(IdealKind k);

template <class K>
struct IdealSpec {
  IdealKind kind;
  int f = 0;
  int lambda = 0;
  RingOf<K> ring;
  std::vector<Polynomial<K>> gens;
};

/// I = Pf_4(X), K = I_1(tX), J = I + K, I_lambda = I + (x_(i,j) : j <= lambda),
/// Iprime = Pf_4 of X with row and column 1 removed.  K and J need t variables.
template <class K>
IdealSpec<K> build_ideal(const RingOf<K>& ring, IdealKind kind, int lambda = 0);

enum class MapName { d0, d1, delta1, rho, d0prime, tau_row, tXi_row, D1, D2 };
MapName map_name_from_string(const std::string& s);

/// Basis of the exterior power used for matrix rows and columns: a subset together
/// with the wedge order (increasing, or decreasing for the third powers of F^*).
struct WedgeBasis {
  Subset set;
  bool decreasing;
};

std::vector<WedgeBasis> wedge_basis(int f, int k, bool decreasing);
std::string wedge_label(const WedgeBasis& b, bool dual);

template <class K>
ExteriorElement<K> basis_element(const RingOf<K>& ring, Side side, const WedgeBasis& b);

/// Matrix of the named map.  Generators of the target sit in degree (0,0) except
/// where a composite requires otherwise; D1 and D2 carry the twists of E_0, E_1, E_2.
template <class K>
GradedMatrix<K> map_matrix(const RingOf<K>& ring, MapName name);

/// Same entries with new twists.
template <class K>
GradedMatrix<K> regraded(const GradedMatrix<K>& m, std::vector<Bidegree> target, std::vector<Bidegree> source);

/// Free cover with relations; the relation matrix has the generators as its target.
template <class K>
struct PresentedModule {
  std::string label;
  std::vector<Bidegree> gens;
  GradedMatrix<K> relations;
  int rank() const { return static_cast<int>(gens.size()); }
};

template <class K>
PresentedModule<K> free_module(const RingOf<K>& ring, std::string label, std::vector<Bidegree> gens);

/// Relations ideal * (free cover) appended to the existing relations.
template <class K>
PresentedModule<K> with_ideal_relations(PresentedModule<K> m, const std::vector<Polynomial<K>>& ideal);

template <class K>
struct PresentedComplex {
  std::string name;
  RingOf<K> ring;
  std::vector<PresentedModule<K>> terms;
  std::vector<GradedMatrix<K>> maps;  // maps[i] : terms[i] -> terms[i+1]
  std::vector<int> exact_positions;   // positions where exactness is asserted
  bool free_complex = false;          // composites vanish identically, not only modulo relations
};

enum class ComplexName { precplx, seq32, seq43, relcplx };
ComplexName complex_name_from_string(const std::string& s);
std::string to_string(ComplexName c);

template <class K>
PresentedComplex<K> build_complex(const K& field, int f, ComplexName name);

enum class ModuleName { A, N, RJ, Ilambda };
ModuleName module_name_from_string(const std::string& s);
std::string to_string(ModuleName m);

/// A = R/I, N = coker(d1) (x) A over R, RJ = R'/J over the ring with t variables,
/// Ilambda = R/I_lambda.  Generators sit in degree (0,0).
template <class K>
PresentedModule<K> build_module(const K& field, int f, ModuleName name, int lambda = 0);

template <class K>
struct PivotSets {
  std::vector<Polynomial<K>> s1;  // variables
  std::vector<Polynomial<K>> s2;
};

/// The variable set S1 and polynomial set S2 attached to the pivot x_(a,b).
template <class K>
PivotSets<K> s1_s2_sets(const RingOf<K>& ring, std::pair<int, int> pivot = {1, 2});

/// Bigraded Betti numbers: (i, (jx, jt)) -> count.
struct BettiTable {
  std::map<std::pair<int, Bidegree>, long> entries;

  void add(int i, Bidegree d, long n) {
    if (n == 0) return;
    entries[{i, d}] += n;
  }
  long at(int i, Bidegree d) const {
    auto it = entries.find({i, d});
    return it == entries.end() ? 0 : it->second;
  }
  std::vector<long> totals() const;
  /// Betti numbers by (i, total degree).
  std::map<std::pair<int, int>, long> singly_graded() const;
  int length() const;  // largest i with a nonzero entry, -1 if empty
  bool operator==(const BettiTable& o) const { return entries == o.entries; }
};

/// Predicted table of R/J from the tables of A (beta) and N (gamma) over R:
/// L_i = beta_{i-2,j} at (j+1,2) + gamma_{i-1,j} at (j+1,1) + beta_{i,j} at (j,0).
BettiTable mapping_cone_betti(const BettiTable& beta_a, const BettiTable& gamma_n);

}  // namespace pfg
