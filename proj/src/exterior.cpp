#include "pfg/exterior.hpp"

#include <functional>

namespace pfg {

std::vector<Subset> k_subsets(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i + 1;
  while (true) {
    Subset s = 0;
    for (int i : idx) s |= Subset{1} << (i - 1);
    out.push_back(s);
    int p = k - 1;
    while (p >= 0 && idx[p] == n - k + p + 1) --p;
    if (p < 0) break;
    ++idx[p];
    for (int q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
  return out;
}

template <class K>
Polynomial<K> pfaffian_by_matchings(const AlternatingMatrix<K>& a, const std::vector<int>& rows) {
  using Poly = Polynomial<K>;
  const auto& ring = a.ring();
  if (rows.size() % 2) throw StructuralError("Pfaffian of an odd-sized matrix");
  Poly total(ring);
  const int n = static_cast<int>(rows.size());
  std::vector<int> perm;
  std::vector<bool> used(n, false);
  // enumerate matchings {(p1,q1),...} with p_k < q_k and p1 < p2 < ...;
  // sign is the sign of the permutation (p1 q1 p2 q2 ...).
  std::function<void(Poly)> rec = [&](Poly acc) {
    int first = -1;
    for (int i = 0; i < n; ++i)
      if (!used[i]) {
        first = i;
        break;
      }
    if (first < 0) {
      int inv = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (perm[i] > perm[j]) ++inv;
      total += (inv & 1) ? -acc : acc;
      return;
    }
    used[first] = true;
    for (int j = first + 1; j < n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      perm.push_back(first);
      perm.push_back(j);
      rec(acc * a.at(rows[first], rows[j]));
      perm.pop_back();
      perm.pop_back();
      used[j] = false;
    }
    used[first] = false;
  };
  rec(Poly::constant(ring, 1));
  return total;
}

template <class K>
Polynomial<K> pfaffian_oracle(const AlternatingMatrix<K>& a, const std::vector<int>& rows) {
  using Poly = Polynomial<K>;
  if (rows.size() % 2) throw StructuralError("Pfaffian of an odd-sized matrix");
  if (rows.empty()) return Poly::constant(a.ring(), 1);
  Poly total(a.ring());
  for (std::size_t j = 1; j < rows.size(); ++j) {
    std::vector<int> rest;
    for (std::size_t k = 1; k < rows.size(); ++k)
      if (k != j) rest.push_back(rows[k]);
    Poly term = a.at(rows[0], rows[j]) * pfaffian_oracle(a, rest);
    // (-1)^j with 1-based column index j+1
    total += (j % 2 == 1) ? term : -term;
  }
  return total;
}

template <class K>
Polynomial<K> determinant_cofactor(const std::vector<std::vector<Polynomial<K>>>& m) {
  using Poly = Polynomial<K>;
  const std::size_t n = m.size();
  if (n == 0) throw StructuralError("determinant of an empty matrix");
  const auto& ring = m[0][0].ring();
  if (n == 1) return m[0][0];
  Poly total(ring);
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Poly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    Poly term = m[0][j] * determinant_cofactor(minor);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

template <class K>
AlternatingMatrix<K> matrix_of_two_form(const ExteriorElement<K>& f2) {
  if (f2.side() != Side::Primal || f2.degree() != 2) throw StructuralError("expected an element of the second exterior power");
  AlternatingMatrix<K> a(f2.ring(), f2.rank());
  for (const auto& [s, c] : f2.terms()) {
    auto idx = subset_indices(s);
    a.set(idx[0] - 1, idx[1] - 1, c);
  }
  return a;
}

template <class K>
ExteriorElement<K> divided_power(const ExteriorElement<K>& f2, int l) {
  if (l < 1) throw StructuralError("divided power exponent must be positive");
  const int n = f2.rank();
  ExteriorElement<K> out(f2.ring(), n, Side::Primal, 2 * l);
  if (2 * l > n) return out;
  auto a = matrix_of_two_form(f2);
  for (Subset s : k_subsets(n, 2 * l)) {
    std::vector<int> rows;
    for (int i : subset_indices(s)) rows.push_back(i - 1);
    out.add_term(s, pfaffian_by_matchings(a, rows));
  }
  return out;
}

#define PFG_INSTANTIATE(K)                                                                            \
  template Polynomial<K> pfaffian_by_matchings(const AlternatingMatrix<K>&, const std::vector<int>&); \
  template Polynomial<K> pfaffian_oracle(const AlternatingMatrix<K>&, const std::vector<int>&);       \
  template Polynomial<K> determinant_cofactor(const std::vector<std::vector<Polynomial<K>>>&);        \
  template AlternatingMatrix<K> matrix_of_two_form(const ExteriorElement<K>&);                        \
  template ExteriorElement<K> divided_power(const ExteriorElement<K>&, int);

PFG_INSTANTIATE(Rationals)
PFG_INSTANTIATE(PrimeField)

}  // namespace pfg
