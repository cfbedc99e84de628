#pragma once

#include "qlag/bigrational.hpp"
#include "qlag/bilaurent.hpp"
#include "qlag/poly.hpp"

namespace qlag {

/// Rescaled Al-Salam-Chihara parameters: y = 1/alpha^2, B = alpha*beta.
/// R is BiLaurent for symbolic work or BigRational at a sample point.
template <class R>
struct ASCParams {
  R y;
  R B;
  R q;
};

/// q-Laguerre: alpha = 1/sqrt(y), alpha*beta = q, symbolic in y and q.
ASCParams<BiLaurent> laguerre_params();
/// q-Charlier: beta = 0, y = a(1-q). The variable a lives in the y slot.
ASCParams<BiLaurent> charlier_params();

/// Monic three-term data p_{n+1} = (x - b_n) p_n - lam_n p_{n-1}.
template <class R>
class JacobiCoefficients {
 public:
  explicit JacobiCoefficients(ASCParams<R> params) : params_(std::move(params)) {}
  const ASCParams<R>& params() const { return params_; }
  /// ((1+By)q^n - (1+y)) / (q-1)
  R b(int n) const;
  /// y (1-q^n)(1-Bq^(n-1)) / (1-q)^2
  R lam(int n) const;

 private:
  ASCParams<R> params_;
};

template <class R>
JacobiCoefficients<R> jacobi_for(const ASCParams<R>& params) {
  return JacobiCoefficients<R>(params);
}

enum class LaguerreMethod { Recurrence, Explicit };

/// L_n(x; q) as a polynomial in x over Z[y, q].
XPoly laguerre_poly(int n, LaguerreMethod method = LaguerreMethod::Recurrence);

/// Q_n(x; alpha, beta | q) from the three-term recurrence.
RatPoly asc_Q(int n, const BigRational& alpha, const BigRational& beta, const BigRational& q);

/// Q_n at x = (u + 1/u)/2 from one of the three terminating basic
/// hypergeometric expressions (form 1: 3phi2, forms 2 and 3: 2phi1).
BigRational asc_hypergeometric(int n, const BigRational& u, const BigRational& alpha, const BigRational& beta,
                               const BigRational& q, int form);

}  // namespace qlag
