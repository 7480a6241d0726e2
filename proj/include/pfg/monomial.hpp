#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "pfg/field.hpp"

namespace pfg {

inline constexpr int kMaxVars = 32;

/// Dense exponent vector over a fixed number of variables (at most kMaxVars).
/// Exponents are bounded by 255; overflow throws.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int nvars);
  Monomial(int nvars, std::span<const int> exponents);

  int nvars() const { return n_; }
  int degree() const { return deg_; }
  int exponent(int var) const { return e_[var]; }
  std::uint32_t support() const { return mask_; }
  bool is_one() const { return deg_ == 0; }

  void set_exponent(int var, int value);

  /// True iff this monomial divides `other`.
  bool divides(const Monomial& other) const {
    if ((mask_ & ~other.mask_) != 0) return false;
    for (int i = 0; i < n_; ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires other | *this.
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  bool coprime(const Monomial& other) const { return (mask_ & other.mask_) == 0; }

  bool operator==(const Monomial& other) const {
    return n_ == other.n_ && deg_ == other.deg_ && e_ == other.e_;
  }

  std::size_t hash() const;

  const std::array<std::uint8_t, kMaxVars>& raw() const { return e_; }

 private:
  void recompute();

  std::array<std::uint8_t, kMaxVars> e_{};
  std::uint16_t deg_ = 0;
  std::uint8_t n_ = 0;
  std::uint32_t mask_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Monomial orders. Variable 0 is the largest variable.
/// `Elim` compares the first `block` variables (graded reverse
/// lexicographically) before the remaining ones.
struct MonomialOrder {
  enum class Kind { GrevLex, Lex, Elim };
  Kind kind = Kind::GrevLex;
  int block = 0;

  static MonomialOrder grevlex() { return {Kind::GrevLex, 0}; }
  static MonomialOrder lex() { return {Kind::Lex, 0}; }
  static MonomialOrder elim(int block) { return {Kind::Elim, block}; }

  /// Three-way comparison; throws StructuralError on mismatched variable counts.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != b.nvars()) throw StructuralError("monomials over different variable sets");
    return compare_unchecked(a, b);
  }
  std::strong_ordering compare_unchecked(const Monomial& a, const Monomial& b) const;

  bool operator==(const MonomialOrder&) const = default;
  std::string name() const;
};

/// Bidegree (x-degree, t-degree) used for the bigraded ring.
struct Bidegree {
  int x = 0;
  int t = 0;
  int total() const { return x + t; }
  Bidegree operator+(Bidegree o) const { return {x + o.x, t + o.t}; }
  Bidegree operator-(Bidegree o) const { return {x - o.x, t - o.t}; }
  auto operator<=>(const Bidegree&) const = default;
};

}  // namespace pfg
