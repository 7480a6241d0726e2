#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pfg/field.hpp"
#include "pfg/monomial.hpp"

namespace pfg {

/// A variable of the bigraded ring: x_(i,j) with 1 <= i < j <= f, or t_i.
struct Variable {
  enum class Kind { X, T };
  Kind kind = Kind::X;
  int i = 0;
  int j = 0;

  static Variable x(int i, int j) { return {Kind::X, i, j}; }
  static Variable t(int i) { return {Kind::T, i, 0}; }
  bool operator==(const Variable&) const = default;
  std::string name() const {
    return kind == Kind::X ? "x_(" + std::to_string(i) + "," + std::to_string(j) + ")"
                           : "t_" + std::to_string(i);
  }
};

inline int binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<int>(r);
}

/// Position of x_(i,j) among the x-variables ordered lexicographically by (i, j).
inline int x_position(int f, int i, int j) {
  // pairs (a, b) with a < i come first: sum_{a<i} (f - a)
  return (i - 1) * f - (i - 1) * i / 2 + (j - i - 1);
}

/// Polynomial ring over a coefficient field K.  Variables are laid out as
/// [auxiliary tags][x_(1,2) .. x_(f-1,f)][t_1 .. t_f]; the tag block is empty
/// except for internal elimination rings and the t-block is empty for R.
template <class K>
class PolyRing {
 public:
  using Ptr = std::shared_ptr<const PolyRing>;

  /// R = K[x_(i,j)] (with_t = false) or the bigraded ring K[x_(i,j), t_i].
  static Ptr make(K field, int f, bool with_t, MonomialOrder order = MonomialOrder::grevlex()) {
    if (f < 1) throw StructuralError("f must be positive");
    auto r = std::shared_ptr<PolyRing>(new PolyRing(std::move(field)));
    r->f_ = f;
    r->tags_ = 0;
    r->x_count_ = binom(f, 2);
    r->t_count_ = with_t ? f : 0;
    r->order_ = order;
    r->init_names();
    return r;
  }

  const K& field() const { return field_; }
  int f() const { return f_; }
  int nvars() const { return tags_ + x_count_ + t_count_; }
  int tags() const { return tags_; }
  int x_count() const { return x_count_; }
  int t_count() const { return t_count_; }
  bool has_t() const { return t_count_ > 0; }
  const MonomialOrder& order() const { return order_; }
  const std::string& name(int idx) const { return names_.at(idx); }

  int index(const Variable& v) const {
    if (v.kind == Variable::Kind::X) {
      if (v.i < 1 || v.i >= v.j || v.j > f_)
        throw StructuralError("variable " + v.name() + " out of range for f = " + std::to_string(f_));
      return tags_ + x_position(f_, v.i, v.j);
    }
    if (v.i < 1 || v.i > t_count_)
      throw StructuralError("variable " + v.name() + " not in this ring");
    return tags_ + x_count_ + v.i - 1;
  }
  int x(int i, int j) const { return index(Variable::x(i, j)); }
  int t(int i) const { return index(Variable::t(i)); }

  std::optional<Variable> variable(int idx) const {
    if (idx < tags_ || idx >= nvars()) return std::nullopt;
    int k = idx - tags_;
    if (k >= x_count_) return Variable::t(k - x_count_ + 1);
    for (int i = 1; i < f_; ++i)
      for (int j = i + 1; j <= f_; ++j)
        if (x_position(f_, i, j) == k) return Variable::x(i, j);
    return std::nullopt;
  }

  Bidegree bidegree(const Monomial& m) const {
    Bidegree d;
    for (int i = tags_; i < tags_ + x_count_; ++i) d.x += m.exponent(i);
    for (int i = tags_ + x_count_; i < nvars(); ++i) d.t += m.exponent(i);
    return d;
  }

  Monomial one() const { return Monomial(nvars()); }
  Monomial var_monomial(int idx, int power = 1) const {
    Monomial m(nvars());
    m.set_exponent(idx, power);
    return m;
  }

  /// Same variables, different order.
  Ptr with_order(MonomialOrder order) const {
    auto r = std::shared_ptr<PolyRing>(new PolyRing(*this));
    r->order_ = order;
    return r;
  }
  /// Same variables plus `k` leading tag variables w_1..w_k; the order is
  /// chosen by the caller (typically Elim(k)).
  Ptr with_tags(int k, MonomialOrder order) const {
    auto r = std::shared_ptr<PolyRing>(new PolyRing(*this));
    r->tags_ = tags_ + k;
    r->order_ = order;
    r->init_names();
    if (r->nvars() > kMaxVars) throw StructuralError("too many variables");
    return r;
  }
  /// The ring with t-variables adjoined (identity when already present).
  Ptr with_t_vars() const {
    auto r = std::shared_ptr<PolyRing>(new PolyRing(*this));
    r->t_count_ = f_;
    r->init_names();
    return r;
  }

  bool same_as(const PolyRing& o) const {
    return field_.characteristic() == o.field_.characteristic() && f_ == o.f_ && tags_ == o.tags_ &&
           x_count_ == o.x_count_ && t_count_ == o.t_count_ && order_ == o.order_;
  }

 private:
  explicit PolyRing(K field) : field_(std::move(field)) {}

  void init_names() {
    names_.clear();
    for (int k = 1; k <= tags_; ++k) names_.push_back("w_" + std::to_string(k));
    for (int i = 1; i < f_; ++i)
      for (int j = i + 1; j <= f_; ++j) names_.push_back(Variable::x(i, j).name());
    for (int i = 1; i <= t_count_; ++i) names_.push_back(Variable::t(i).name());
  }

  K field_;
  int f_ = 0;
  int tags_ = 0;
  int x_count_ = 0;
  int t_count_ = 0;
  MonomialOrder order_;
  std::vector<std::string> names_;
};

}  // namespace pfg
