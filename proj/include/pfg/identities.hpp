#pragma once

#include <random>

#include "pfg/constructions.hpp"

namespace pfg {

/// Random homogeneous exterior element: each coefficient is a constant plus a
/// linear form in two random variables of the ring.
template <class K>
ExteriorElement<K> random_exterior(const RingOf<K>& ring, Side side, int degree, std::mt19937_64& rng);

/// Random alternating matrix with small integer entries.
template <class K>
AlternatingMatrix<K> random_alternating(const RingOf<K>& ring, int n, std::mt19937_64& rng);

// One seeded trial each; true iff the identity holds exactly.

/// (f1(phi_q))(f_p) = f1 ^ phi_q(f_p) + (-1)^(1+q) phi_q(f1 ^ f_p) for every q <= p <= f-1.
template <class K>
bool trial_module_action(const RingOf<K>& ring, std::mt19937_64& rng);

/// [f2(phi3)](f2) = phi3(f2^(2))
template <class K>
bool trial_divided_square(const RingOf<K>& ring, std::mt19937_64& rng);

/// f2(phi1^phi1'^phi1'') = f2(phi1^phi1') phi1'' - f2(phi1^phi1'') phi1' + f2(phi1'^phi1'') phi1
template <class K>
bool trial_three_forms(const RingOf<K>& ring, std::mt19937_64& rng);

/// tau(v1 ^ v2) = tau(v1) ^ v2 + v1 ^ tau(v2) and tau(v^(2)) = tau(v) ^ v
template <class K>
bool trial_derivation(const RingOf<K>& ring, std::mt19937_64& rng);

/// phi_i(f_i) = f_i(phi_i) in every degree 0..f
template <class K>
bool trial_pairing(const RingOf<K>& ring, std::mt19937_64& rng);

/// xi^(2)(phi4) phi1 = xi([phi1(xi)](phi4) + 1/2 xi(phi1 ^ phi4)); needs characteristic != 2
template <class K>
bool trial_two_unit(const RingOf<K>& ring, std::mt19937_64& rng);

/// Pf(A)^2 = det(A) and the matching expansion agrees with the row expansion, 6x6.
template <class K>
bool trial_pfaffian_square(const RingOf<K>& ring, std::mt19937_64& rng);

}  // namespace pfg
