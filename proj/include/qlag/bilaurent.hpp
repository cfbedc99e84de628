#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "qlag/bigrational.hpp"

namespace qlag {

/// Exponent pair of a BiLaurent monomial y^ey q^eq. Ordered by (ey, eq),
/// which is also the canonical printing order.
struct Monomial {
  std::int32_t ey = 0;
  std::int32_t eq = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Sparse polynomial in y (non-negative powers) and q (Laurent) with exact
/// rational coefficients. No zero coefficient is ever stored, so equality
/// is term-set equality.
class BiLaurent {
 public:
  using Terms = std::map<Monomial, BigRational>;

  BiLaurent() = default;
  BiLaurent(long c) : BiLaurent(BigRational(c)) {}  // NOLINT(google-explicit-constructor)
  BiLaurent(int c) : BiLaurent(BigRational(c)) {}   // NOLINT
  BiLaurent(const BigRational& c);                  // NOLINT

  static BiLaurent y() { return monomial(1, 1, 0); }
  static BiLaurent q() { return monomial(1, 0, 1); }
  static BiLaurent monomial(const BigRational& coeff, std::int32_t ey, std::int32_t eq);

  /// Parses the canonical text form (the inverse of to_string()).
  static BiLaurent parse(std::string_view text);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Single term with no y: invertible in the ring.
  bool is_unit() const;
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of y^ey q^eq (zero if absent).
  BigRational coeff(std::int32_t ey, std::int32_t eq) const;
  /// Coefficient of y^ey as a Laurent polynomial in q.
  BiLaurent y_coefficient(std::int32_t ey) const;

  std::int32_t min_q() const;
  std::int32_t max_q() const;
  std::int32_t max_y() const;
  bool has_negative_q() const { return !is_zero() && min_q() < 0; }
  bool all_coefficients_integral() const;
  bool all_coefficients_nonnegative() const;

  BiLaurent operator-() const;
  BiLaurent& operator+=(const BiLaurent& o);
  BiLaurent& operator-=(const BiLaurent& o);
  BiLaurent& operator*=(const BiLaurent& o);

  friend BiLaurent operator+(BiLaurent a, const BiLaurent& b) { return a += b; }
  friend BiLaurent operator-(BiLaurent a, const BiLaurent& b) { return a -= b; }
  friend BiLaurent operator*(const BiLaurent& a, const BiLaurent& b);
  friend bool operator==(const BiLaurent& a, const BiLaurent& b) { return a.terms_ == b.terms_; }

  /// Multiplies by y^dy q^dq.
  BiLaurent shifted(std::int32_t dy, std::int32_t dq) const;
  BiLaurent scaled(const BigRational& c) const;
  /// Integer power. Negative exponents are allowed for units only.
  BiLaurent pow(long exponent) const;
  /// Inverse of a unit c*q^e; throws NonUnitReciprocal otherwise.
  BiLaurent unit_inverse() const;

  /// Exact value at (y, q). Throws PoleAtZero when q = 0 meets a negative exponent.
  BigRational eval(const BigRational& y, const BigRational& q) const;
  /// Specializes q, leaving a polynomial in y.
  BiLaurent eval_q(const BigRational& q) const;
  /// Specializes y, leaving a Laurent polynomial in q.
  BiLaurent eval_y(const BigRational& y) const;
  /// Substitutes an arbitrary BiLaurent for y.
  BiLaurent substitute_y(const BiLaurent& value) const;

  /// Canonical text: terms by (ey asc, eq asc), e.g. "1*y + 3*y^2 + 1*y^2*q".
  /// The variable names may be overridden (e.g. "a" for Charlier moments).
  std::string to_string(std::string_view yname = "y", std::string_view qname = "q") const;

 private:
  void add_term(const Monomial& m, const BigRational& c);
  Terms terms_;
};

/// Returns c with a = b*c. Throws DivisionByZero for b = 0 and NotDivisible
/// when b does not divide a in Q[y, q, 1/q].
BiLaurent exact_div(const BiLaurent& a, const BiLaurent& b);

/// Overflow-checked exponent arithmetic.
std::int32_t checked_exp_add(std::int64_t a, std::int64_t b);

}  // namespace qlag
