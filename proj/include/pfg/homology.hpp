#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pfg/constructions.hpp"
#include "pfg/groebner.hpp"

namespace pfg {

/// Submodule of a graded free module spanned by the columns of a matrix, with a
/// Groebner basis for membership queries.
template <class K>
class Submodule {
 public:
  explicit Submodule(const GradedMatrix<K>& gens);

  bool contains(const std::vector<Polynomial<K>>& column) const;
  /// Index of the first column of `m` outside the submodule, if any.
  std::optional<std::size_t> first_column_outside(const GradedMatrix<K>& m) const;

 private:
  typename PolyRing<K>::Ptr ring_;
  std::size_t rank_;
  ModuleGB<K> gb_;
};

/// Minimal generating subset of the column span (graded Nakayama); zero columns dropped.
template <class K>
GradedMatrix<K> minimal_columns(const GradedMatrix<K>& m);

/// Minimal homogeneous generators of ker(m), as columns over the source of m.
template <class K>
GradedMatrix<K> syzygies(const GradedMatrix<K>& m);

/// F_0 <- F_1 <- F_2 <- ...; maps[i] : F_{i+1} -> F_i.
template <class K>
struct FreeComplex {
  typename PolyRing<K>::Ptr ring;
  std::vector<Bidegree> f0;
  std::vector<GradedMatrix<K>> maps;
  bool truncated = false;

  const std::vector<Bidegree>& term(std::size_t i) const { return i == 0 ? f0 : maps[i - 1].source_deg(); }
  std::size_t terms() const { return maps.size() + 1; }
  /// Largest i with F_i nonzero.
  int length() const;
  BettiTable betti() const;
};

/// Minimal free resolution of coker(presentation), up to max_len maps.  Sets
/// `truncated` when a nonzero syzygy module remains after max_len steps.
template <class K>
FreeComplex<K> free_resolution(const GradedMatrix<K>& presentation, int max_len);

/// Default length bound C(f-2,2)+3.
int default_max_len(int f);

/// Cancels unit entries (lowest homological index, then column, then row first)
/// until every differential has entries in the irrelevant ideal.
template <class K>
FreeComplex<K> minimalize(const FreeComplex<K>& c);

/// True iff every consecutive composite is identically zero.
template <class K>
bool composites_vanish(const FreeComplex<K>& c);

/// H at `position` of a complex of presented modules: ker(maps[pos]) modulo
/// relations, against image(maps[pos-1]) + relations.
template <class K>
bool homology_is_zero(const PresentedComplex<K>& c, int position);

struct ClosureReport {
  bool composites_ok = true;      // maps[i+1] maps[i] lands in the relations
  bool well_defined = true;       // maps send relations into relations
  int first_failure = -1;         // index i of the first failing map
};

template <class K>
ClosureReport check_closure(const PresentedComplex<K>& c);

struct PalindromeResult {
  bool palindromic = false;
  int c = -1;
  Bidegree sigma{0, 0};
};

/// beta_{i,j} = beta_{c-i, sigma-j} with c the length of the table; `codim`
/// (when nonnegative) must equal that length.
PalindromeResult betti_palindrome_check(const BettiTable& b, int codim = -1);

struct Char2AnomalyReport {
  bool witness_outside_d1_char2 = false;
  bool witness_in_relations_char2 = false;
  bool certificate_holds_char0 = false;
  long beta1_char2 = 0;
  long beta1_char0 = 0;
  int pd_char2 = -1;
  int pd_char0 = -1;
  BettiTable betti_char2;
  BettiTable betti_char0;
};

/// Witness Pf_{1234} e_5^* at f = 5 against d1 over Z/2 and over Q.
Char2AnomalyReport char2_anomaly_check(int f = 5);

/// The rational certificate phi3 = [e_5^*(xi)](e_1234^*) + 1/2 xi(e_5^* ^ e_1234^*)
/// as a coefficient vector over the columns of d1.
GradedMatrix<Rationals> char0_certificate(const PolyRing<Rationals>::Ptr& ring);

}  // namespace pfg
