#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qlag/bigrational.hpp"
#include "qlag/bilaurent.hpp"
#include "qlag/errors.hpp"

namespace qlag {

namespace detail {
inline bool is_zero(const BigRational& c) { return c.is_zero(); }
inline bool is_zero(const BiLaurent& c) { return c.is_zero(); }
inline std::string text(const BigRational& c) { return c.to_string(); }
inline std::string text(const BiLaurent& c) { return c.to_string(); }
}  // namespace detail

/// Dense univariate polynomial in x over a coefficient ring C. Trailing
/// zero coefficients are trimmed, so degree() is the index of the last
/// nonzero coefficient (-1 for the zero polynomial).
template <class C>
class Poly {
 public:
  Poly() = default;
  Poly(const C& c) : coeffs_{c} { trim(); }  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Poly x() { return Poly(std::vector<C>{C(0), C(1)}); }
  /// x - root
  static Poly linear(const C& root) { return Poly(std::vector<C>{-root, C(1)}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<C>& coeffs() const { return coeffs_; }
  C coeff(int k) const { return k >= 0 && k <= degree() ? coeffs_[static_cast<std::size_t>(k)] : C(0); }
  C leading() const { return is_zero() ? C(0) : coeffs_.back(); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), C(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), C(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<C> out(a.coeffs_.size() + b.coeffs_.size() - 1, C(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (detail::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  Poly scaled(const C& c) const {
    Poly r = *this;
    for (auto& v : r.coeffs_) v = v * c;
    r.trim();
    return r;
  }

  Poly pow(int e) const {
    if (e < 0) throw NegativeIndex("negative polynomial power");
    Poly r(C(1));
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
  }

  C eval(const C& x) const {
    C acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// "(c0) + (c1)*x + (c2)*x^2", zero coefficients omitted.
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (detail::is_zero(coeffs_[k])) continue;
      if (!out.empty()) out += " + ";
      out += "(" + detail::text(coeffs_[k]) + ")";
      if (k == 1) out += "*x";
      if (k > 1) out += "*x^" + std::to_string(k);
    }
    return out;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && detail::is_zero(coeffs_.back())) coeffs_.pop_back();
  }
  std::vector<C> coeffs_;
};

using XPoly = Poly<BiLaurent>;
using RatPoly = Poly<BigRational>;

/// Evaluates an XPoly at a full rational point (x, y, q).
BigRational eval_at(const XPoly& p, const BigRational& x, const BigRational& y, const BigRational& q);
inline BigRational eval_at(const BiLaurent& a, const BigRational& y, const BigRational& q) {
  return a.eval(y, q);
}

}  // namespace qlag
