#include "pfg/monomial.hpp"

#include <algorithm>

namespace pfg {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  // extended Euclid on signed 64-bit values
  std::int64_t r0 = p_, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  std::int64_t r = s0 % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

Monomial::Monomial(int nvars) : n_(static_cast<std::uint8_t>(nvars)) {
  if (nvars < 0 || nvars > kMaxVars) throw StructuralError("too many variables");
}

Monomial::Monomial(int nvars, std::span<const int> exponents) : Monomial(nvars) {
  if (static_cast<int>(exponents.size()) != nvars)
    throw StructuralError("exponent vector length does not match variable count");
  for (int i = 0; i < nvars; ++i) {
    if (exponents[i] < 0 || exponents[i] > 255) throw StructuralError("exponent out of range");
    e_[i] = static_cast<std::uint8_t>(exponents[i]);
  }
  recompute();
}

void Monomial::set_exponent(int var, int value) {
  if (var < 0 || var >= n_) throw StructuralError("variable index out of range");
  if (value < 0 || value > 255) throw StructuralError("exponent out of range");
  e_[var] = static_cast<std::uint8_t>(value);
  recompute();
}

void Monomial::recompute() {
  deg_ = 0;
  mask_ = 0;
  for (int i = 0; i < n_; ++i) {
    deg_ = static_cast<std::uint16_t>(deg_ + e_[i]);
    if (e_[i]) mask_ |= (1u << i);
  }
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (int i = 0; i < n_; ++i) {
    int s = e_[i] + other.e_[i];
    if (s > 255) throw std::overflow_error("monomial exponent overflow");
    r.e_[i] = static_cast<std::uint8_t>(s);
  }
  r.deg_ = static_cast<std::uint16_t>(deg_ + other.deg_);
  r.mask_ = mask_ | other.mask_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r(*this);
  for (int i = 0; i < n_; ++i) r.e_[i] = static_cast<std::uint8_t>(e_[i] - other.e_[i]);
  r.recompute();
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(*this);
  for (int i = 0; i < n_; ++i) r.e_[i] = std::max(e_[i], other.e_[i]);
  r.recompute();
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r(*this);
  for (int i = 0; i < n_; ++i) r.e_[i] = std::min(e_[i], other.e_[i]);
  r.recompute();
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (int i = 0; i < n_; ++i) h = (h ^ e_[i]) * 1099511628211ull;
  return h;
}

namespace {

std::strong_ordering revlex_tail(const Monomial& a, const Monomial& b, int lo, int hi) {
  // larger monomial has the smaller exponent in the last differing variable
  for (int i = hi - 1; i >= lo; --i) {
    int d = a.exponent(i) - b.exponent(i);
    if (d != 0) return d < 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
  int da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += a.exponent(i);
    db += b.exponent(i);
  }
  if (da != db) return da <=> db;
  return revlex_tail(a, b, lo, hi);
}

}  // namespace

std::strong_ordering MonomialOrder::compare_unchecked(const Monomial& a, const Monomial& b) const {
  const int n = a.nvars();
  switch (kind) {
    case Kind::GrevLex:
      if (a.degree() != b.degree()) return a.degree() <=> b.degree();
      return revlex_tail(a, b, 0, n);
    case Kind::Lex:
      for (int i = 0; i < n; ++i)
        if (a.exponent(i) != b.exponent(i)) return a.exponent(i) <=> b.exponent(i);
      return std::strong_ordering::equal;
    case Kind::Elim: {
      int k = std::min(block, n);
      auto c = grevlex_range(a, b, 0, k);
      if (c != 0) return c;
      return grevlex_range(a, b, k, n);
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::name() const {
  switch (kind) {
    case Kind::GrevLex:
      return "grevlex";
    case Kind::Lex:
      return "lex";
    case Kind::Elim:
      return "elim(" + std::to_string(block) + ")";
  }
  return "?";
}

}  // namespace pfg
