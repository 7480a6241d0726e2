#pragma once

#include <string>
#include <vector>

#include "pfg/polynomial.hpp"

namespace pfg {

/// Map between graded free modules with polynomial entries.  Generators of the
/// source and target carry bidegrees; a nonzero entry (i, j) is bihomogeneous of
/// bidegree source_deg[j] - target_deg[i].  (In twist notation the source is
/// sum R(-source_deg[j]).)
template <class K>
class GradedMatrix {
 public:
  using Poly = Polynomial<K>;
  using RingPtr = typename PolyRing<K>::Ptr;

  GradedMatrix() = default;
  GradedMatrix(RingPtr ring, std::vector<Bidegree> target_deg, std::vector<Bidegree> source_deg)
      : ring_(std::move(ring)), target_deg_(std::move(target_deg)), source_deg_(std::move(source_deg)) {
    entries_.assign(rows() * cols(), Poly(ring_));
  }

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return target_deg_.size(); }
  std::size_t cols() const { return source_deg_.size(); }
  const std::vector<Bidegree>& target_deg() const { return target_deg_; }
  const std::vector<Bidegree>& source_deg() const { return source_deg_; }

  const Poly& at(std::size_t i, std::size_t j) const { return entries_[i * cols() + j]; }
  Poly& at(std::size_t i, std::size_t j) { return entries_[i * cols() + j]; }
  void set(std::size_t i, std::size_t j, Poly v) { entries_[i * cols() + j] = std::move(v); }

  std::vector<Poly> column(std::size_t j) const {
    std::vector<Poly> c;
    c.reserve(rows());
    for (std::size_t i = 0; i < rows(); ++i) c.push_back(at(i, j));
    return c;
  }

  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  /// True iff every nonzero entry has the bidegree dictated by the twists.
  bool is_graded() const {
    for (std::size_t i = 0; i < rows(); ++i)
      for (std::size_t j = 0; j < cols(); ++j) {
        const auto& e = at(i, j);
        if (e.is_zero()) continue;
        auto d = e.bidegree();
        if (!d || *d != source_deg_[j] - target_deg_[i]) return false;
      }
    return true;
  }

  /// this * o (o's target must be this's source).
  GradedMatrix operator*(const GradedMatrix& o) const {
    if (cols() != o.rows()) throw StructuralError("matrix dimensions do not compose");
    GradedMatrix r(ring_, target_deg_, o.source_deg_);
    for (std::size_t i = 0; i < rows(); ++i)
      for (std::size_t k = 0; k < cols(); ++k) {
        const auto& a = at(i, k);
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < o.cols(); ++j) {
          const auto& b = o.at(k, j);
          if (!b.is_zero()) r.at(i, j) += a * b;
        }
      }
    r.row_labels = row_labels;
    r.col_labels = o.col_labels;
    return r;
  }

  /// Columns of `o` appended to the right (same target).
  GradedMatrix hconcat(const GradedMatrix& o) const {
    if (rows() != o.rows()) throw StructuralError("horizontal concatenation needs equal row counts");
    auto src = source_deg_;
    src.insert(src.end(), o.source_deg_.begin(), o.source_deg_.end());
    GradedMatrix r(ring_, target_deg_, src);
    for (std::size_t i = 0; i < rows(); ++i) {
      for (std::size_t j = 0; j < cols(); ++j) r.at(i, j) = at(i, j);
      for (std::size_t j = 0; j < o.cols(); ++j) r.at(i, cols() + j) = o.at(i, j);
    }
    r.row_labels = row_labels;
    if (!col_labels.empty() || !o.col_labels.empty()) {
      r.col_labels = col_labels;
      r.col_labels.resize(cols());
      r.col_labels.insert(r.col_labels.end(), o.col_labels.begin(), o.col_labels.end());
      r.col_labels.resize(r.cols());
    }
    return r;
  }

  /// Rows of `o` appended below (same source).
  GradedMatrix vconcat(const GradedMatrix& o) const {
    if (cols() != o.cols()) throw StructuralError("vertical concatenation needs equal column counts");
    auto tgt = target_deg_;
    tgt.insert(tgt.end(), o.target_deg_.begin(), o.target_deg_.end());
    GradedMatrix r(ring_, tgt, source_deg_);
    for (std::size_t j = 0; j < cols(); ++j) {
      for (std::size_t i = 0; i < rows(); ++i) r.at(i, j) = at(i, j);
      for (std::size_t i = 0; i < o.rows(); ++i) r.at(rows() + i, j) = o.at(i, j);
    }
    return r;
  }

  GradedMatrix select_columns(const std::vector<std::size_t>& idx) const {
    std::vector<Bidegree> src;
    for (auto j : idx) src.push_back(source_deg_[j]);
    GradedMatrix r(ring_, target_deg_, src);
    for (std::size_t i = 0; i < rows(); ++i)
      for (std::size_t k = 0; k < idx.size(); ++k) r.at(i, k) = at(i, idx[k]);
    r.row_labels = row_labels;
    if (col_labels.size() == cols())
      for (auto j : idx) r.col_labels.push_back(col_labels[j]);
    return r;
  }

  GradedMatrix transpose_with(std::vector<Bidegree> target_deg, std::vector<Bidegree> source_deg) const {
    GradedMatrix r(ring_, std::move(target_deg), std::move(source_deg));
    if (r.rows() != cols() || r.cols() != rows()) throw StructuralError("transpose twist sizes do not match");
    for (std::size_t i = 0; i < rows(); ++i)
      for (std::size_t j = 0; j < cols(); ++j) r.at(j, i) = at(i, j);
    return r;
  }

  /// Same entries read in another ring with the same variables (e.g. another order).
  GradedMatrix in_ring(RingPtr target) const {
    GradedMatrix r(target, target_deg_, source_deg_);
    for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] = entries_[k].map_to(target);
    r.row_labels = row_labels;
    r.col_labels = col_labels;
    return r;
  }

  static GradedMatrix identity(RingPtr ring, const std::vector<Bidegree>& deg) {
    GradedMatrix r(ring, deg, deg);
    for (std::size_t i = 0; i < deg.size(); ++i) r.at(i, i) = Poly::constant(ring, 1);
    return r;
  }

 private:
  RingPtr ring_;
  std::vector<Bidegree> target_deg_;
  std::vector<Bidegree> source_deg_;
  std::vector<Poly> entries_;
};

}  // namespace pfg
