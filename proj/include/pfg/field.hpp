#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace pfg {

/// Raised when an operation receives structurally invalid input
/// (mismatched rings, out-of-range indices, odd Pfaffian sizes, ...).
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

bool is_prime(std::uint64_t n);

/// Exact rational numbers backed by GMP.
class Rationals {
 public:
  using Elem = mpq_class;

  static constexpr std::uint32_t characteristic() { return 0; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long v) const { return Elem(v); }
  Elem from_fraction(const mpz_class& num, const mpz_class& den) const {
    if (den == 0) throw StructuralError("zero denominator");
    Elem r(num, den);
    r.canonicalize();
    return r;
  }

  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (sgn(a) == 0) throw std::domain_error("inverse of zero");
    return 1 / a;
  }
  void add_to(Elem& a, const Elem& b) const { a += b; }
  // a -= b * c
  void sub_mul(Elem& a, const Elem& b, const Elem& c) const { a -= b * c; }

  Elem random(std::mt19937_64& rng, int spread = 9) const {
    std::uniform_int_distribution<long> num(-spread, spread);
    std::uniform_int_distribution<long> den(1, 4);
    Elem r(num(rng), den(rng));
    r.canonicalize();
    return r;
  }

  std::string to_string(const Elem& a) const { return a.get_str(); }
  std::string name() const { return "QQ"; }
};

/// The prime field Z/p with canonical representatives in [0, p).
class PrimeField {
 public:
  using Elem = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p < 2 || p >= (1u << 31) || !is_prime(p))
      throw StructuralError("characteristic must be a prime below 2^31, got " + std::to_string(p));
  }

  std::uint32_t characteristic() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long v) const {
    long r = v % static_cast<long>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  Elem from_fraction(const mpz_class& num, const mpz_class& den) const {
    Elem d = reduce(den);
    if (d == 0) throw StructuralError("denominator vanishes modulo " + std::to_string(p_));
    return mul(reduce(num), inv(d));
  }

  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  bool equal(Elem a, Elem b) const { return a == b; }

  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const;
  void add_to(Elem& a, Elem b) const { a = add(a, b); }
  void sub_mul(Elem& a, Elem b, Elem c) const { a = sub(a, mul(b, c)); }

  Elem random(std::mt19937_64& rng) const {
    std::uniform_int_distribution<std::uint32_t> d(0, p_ - 1);
    return d(rng);
  }

  std::string to_string(Elem a) const { return std::to_string(a); }
  std::string name() const { return "ZZ/" + std::to_string(p_); }

 private:
  Elem reduce(const mpz_class& v) const {
    mpz_class r = v % p_;
    if (r < 0) r += p_;
    return static_cast<Elem>(r.get_ui());
  }

  std::uint32_t p_;
};

}  // namespace pfg
