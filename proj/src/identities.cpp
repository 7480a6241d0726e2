#include "pfg/identities.hpp"

namespace pfg {

namespace {

template <class K>
Polynomial<K> random_coeff(const RingOf<K>& ring, std::mt19937_64& rng) {
  using Poly = Polynomial<K>;
  const K& k = ring->field();
  std::uniform_int_distribution<int> var(0, ring->nvars() - 1);
  Poly c = Poly::constant(ring, k.random(rng));
  for (int r = 0; r < 2; ++r) c += Poly::variable(ring, var(rng)).scaled(k.random(rng));
  return c;
}

// elements that vanish for degree reasons carry no meaningful degree
template <class K>
bool same(const ExteriorElement<K>& a, const ExteriorElement<K>& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return a == b;
}

}  // namespace

template <class K>
ExteriorElement<K> random_exterior(const RingOf<K>& ring, Side side, int degree, std::mt19937_64& rng) {
  ExteriorElement<K> e(ring, ring->f(), side, degree);
  for (Subset s : k_subsets(ring->f(), degree)) e.add_term(s, random_coeff<K>(ring, rng));
  return e;
}

template <class K>
AlternatingMatrix<K> random_alternating(const RingOf<K>& ring, int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-9, 9);
  AlternatingMatrix<K> a(ring, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) a.set(i, j, Polynomial<K>::constant(ring, d(rng)));
  return a;
}

template <class K>
bool trial_module_action(const RingOf<K>& ring, std::mt19937_64& rng) {
  const int f = ring->f();
  auto f1 = random_exterior<K>(ring, Side::Primal, 1, rng);
  for (int p = 0; p < f; ++p)
    for (int q = 0; q <= p; ++q) {
      auto phi = random_exterior<K>(ring, Side::Dual, q, rng);
      auto fp = random_exterior<K>(ring, Side::Primal, p, rng);
      auto lhs = f1.act_on(phi).act_on(fp);
      auto a = f1.wedge(phi.act_on(fp));
      auto b = phi.act_on(f1.wedge(fp));
      auto rhs = (q % 2 == 1) ? a + b : a - b;
      if (!same(lhs, rhs)) return false;
    }
  return true;
}

template <class K>
bool trial_divided_square(const RingOf<K>& ring, std::mt19937_64& rng) {
  auto f2 = random_exterior<K>(ring, Side::Primal, 2, rng);
  auto phi3 = random_exterior<K>(ring, Side::Dual, 3, rng);
  return f2.act_on(phi3).act_on(f2) == phi3.act_on(divided_power(f2, 2));
}

template <class K>
bool trial_three_forms(const RingOf<K>& ring, std::mt19937_64& rng) {
  auto f2 = random_exterior<K>(ring, Side::Primal, 2, rng);
  auto a = random_exterior<K>(ring, Side::Dual, 1, rng);
  auto b = random_exterior<K>(ring, Side::Dual, 1, rng);
  auto c = random_exterior<K>(ring, Side::Dual, 1, rng);
  auto lhs = f2.act_on(a.wedge(b).wedge(c));
  auto pair = [&](const ExteriorElement<K>& u, const ExteriorElement<K>& v) { return f2.act_on(u.wedge(v)).scalar(); };
  auto rhs = c.scaled(pair(a, b)) - b.scaled(pair(a, c)) + a.scaled(pair(b, c));
  return lhs == rhs;
}

template <class K>
bool trial_derivation(const RingOf<K>& ring, std::mt19937_64& rng) {
  auto tau = random_exterior<K>(ring, Side::Dual, 1, rng);
  auto v1 = random_exterior<K>(ring, Side::Primal, 2, rng);
  auto v2 = random_exterior<K>(ring, Side::Primal, 2, rng);
  if (!(tau.act_on(v1.wedge(v2)) == tau.act_on(v1).wedge(v2) + v1.wedge(tau.act_on(v2)))) return false;
  return tau.act_on(divided_power(v1, 2)) == tau.act_on(v1).wedge(v1);
}

template <class K>
bool trial_pairing(const RingOf<K>& ring, std::mt19937_64& rng) {
  for (int i = 0; i <= ring->f(); ++i) {
    auto phi = random_exterior<K>(ring, Side::Dual, i, rng);
    auto fi = random_exterior<K>(ring, Side::Primal, i, rng);
    if (!(phi.act_on(fi).scalar() == fi.act_on(phi).scalar())) return false;
  }
  return true;
}

template <class K>
bool trial_two_unit(const RingOf<K>& ring, std::mt19937_64& rng) {
  const K& k = ring->field();
  auto xi = generic_xi<K>(ring);
  auto phi4 = random_exterior<K>(ring, Side::Dual, 4, rng);
  auto phi1 = random_exterior<K>(ring, Side::Dual, 1, rng);
  auto lhs = phi1.scaled(divided_power(xi, 2).act_on(phi4).scalar());
  auto half = Polynomial<K>::constant(ring, k.inv(k.from_int(2)));
  auto inner = phi1.act_on(xi).act_on(phi4) + xi.act_on(phi1.wedge(phi4)).scaled(half);
  return lhs == xi.act_on(inner);
}

template <class K>
bool trial_pfaffian_square(const RingOf<K>& ring, std::mt19937_64& rng) {
  const int n = 6;
  auto a = random_alternating<K>(ring, n, rng);
  std::vector<int> rows{0, 1, 2, 3, 4, 5};
  auto pf = pfaffian_oracle(a, rows);
  if (!(pf == pfaffian_by_matchings(a, rows))) return false;
  std::vector<std::vector<Polynomial<K>>> m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i].push_back(a.at(i, j));
  return pf * pf == determinant_cofactor(m);
}

#define PFG_INSTANTIATE(K)                                                                          \
  template ExteriorElement<K> random_exterior<K>(const RingOf<K>&, Side, int, std::mt19937_64&);    \
  template AlternatingMatrix<K> random_alternating<K>(const RingOf<K>&, int, std::mt19937_64&);     \
  template bool trial_module_action<K>(const RingOf<K>&, std::mt19937_64&);                         \
  template bool trial_divided_square<K>(const RingOf<K>&, std::mt19937_64&);                        \
  template bool trial_three_forms<K>(const RingOf<K>&, std::mt19937_64&);                           \
  template bool trial_derivation<K>(const RingOf<K>&, std::mt19937_64&);                            \
  template bool trial_pairing<K>(const RingOf<K>&, std::mt19937_64&);                               \
  template bool trial_two_unit<K>(const RingOf<K>&, std::mt19937_64&);                              \
  template bool trial_pfaffian_square<K>(const RingOf<K>&, std::mt19937_64&);

PFG_INSTANTIATE(Rationals)
PFG_INSTANTIATE(PrimeField)

}  // namespace pfg
