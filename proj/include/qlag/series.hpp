#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qlag/bigrational.hpp"
#include "qlag/bilaurent.hpp"
#include "qlag/errors.hpp"
#include "qlag/poly.hpp"

namespace qlag {

namespace detail {
inline BigRational ring_inverse(const BigRational& c) {
  if (c.is_zero()) throw NonUnitReciprocal("constant term is zero");
  return c.inverse();
}
inline BiLaurent ring_inverse(const BiLaurent& c) { return c.unit_inverse(); }
}  // namespace detail

/// Power series in t truncated after t^order; arithmetic is exact modulo
/// t^(order+1).
template <class C>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order) : coeffs_(static_cast<std::size_t>(checked(order)) + 1, C(0)) {}
  TruncatedSeries(int order, std::vector<C> coeffs) : TruncatedSeries(order) {
    for (std::size_t i = 0; i < coeffs.size() && i < coeffs_.size(); ++i) coeffs_[i] = std::move(coeffs[i]);
  }

  static TruncatedSeries constant(int order, const C& c) { return TruncatedSeries(order, {c}); }
  /// c * t^k
  static TruncatedSeries monomial(int order, const C& c, int k) {
    TruncatedSeries s(order);
    if (k <= order) s.coeffs_[static_cast<std::size_t>(k)] = c;
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const C& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  C coefficient(int k) const { return k >= 0 && k <= order() ? coeffs_[static_cast<std::size_t>(k)] : C(0); }
  const std::vector<C>& coeffs() const { return coeffs_; }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    same_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    same_order(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.same_order(b);
    TruncatedSeries r(a.order());
    const std::size_t n = a.coeffs_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (detail::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; i + j < n; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
  }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

  TruncatedSeries scaled(const C& c) const {
    TruncatedSeries r = *this;
    for (auto& v : r.coeffs_) v = v * c;
    return r;
  }

  /// 1/s; requires an invertible constant term.
  TruncatedSeries reciprocal() const {
    const C inv0 = detail::ring_inverse(coeffs_[0]);
    TruncatedSeries r(order());
    r.coeffs_[0] = inv0;
    for (std::size_t n = 1; n < coeffs_.size(); ++n) {
      C acc(0);
      for (std::size_t k = 1; k <= n; ++k) acc += coeffs_[k] * r.coeffs_[n - k];
      r.coeffs_[n] = -(acc * inv0);
    }
    return r;
  }

  TruncatedSeries truncate(int new_order) const {
    TruncatedSeries r(new_order);
    for (int i = 0; i <= new_order && i <= order(); ++i) r.coeffs_[static_cast<std::size_t>(i)] = coeffs_[static_cast<std::size_t>(i)];
    return r;
  }

 private:
  static int checked(int order) {
    if (order < 0) throw NegativeIndex("series order " + std::to_string(order));
    return order;
  }
  void same_order(const TruncatedSeries& o) const {
    if (o.order() != order()) throw SizeMismatch("series orders differ");
  }
  std::vector<C> coeffs_;
};

}  // namespace qlag
