#include "qlag/families.hpp"

#include "qlag/errors.hpp"
#include "qlag/qcalc.hpp"

namespace qlag {

ASCParams<BiLaurent> laguerre_params() { return {BiLaurent::y(), BiLaurent::q(), BiLaurent::q()}; }

ASCParams<BiLaurent> charlier_params() {
  const BiLaurent a = BiLaurent::y();
  return {a * (BiLaurent(1) - BiLaurent::q()), BiLaurent(0), BiLaurent::q()};
}

template <class R>
R JacobiCoefficients<R>::b(int n) const {
  require_nonnegative(n, "Jacobi index");
  const auto& [y, B, q] = params_;
  return divide((R(1) + B * y) * rpow(q, n) - (R(1) + y), q - R(1));
}

template <class R>
R JacobiCoefficients<R>::lam(int n) const {
  require_nonnegative(n, "Jacobi index");
  const auto& [y, B, q] = params_;
  const R one_minus_q = R(1) - q;
  return divide(y * (R(1) - rpow(q, n)) * (R(1) - B * rpow(q, n - 1)), one_minus_q * one_minus_q);
}

template class JacobiCoefficients<BiLaurent>;
template class JacobiCoefficients<BigRational>;

XPoly laguerre_poly(int n, LaguerreMethod method) {
  require_nonnegative(n, "Laguerre degree");
  const BiLaurent y = BiLaurent::y();
  const BiLaurent q = BiLaurent::q();
  const XPoly x = XPoly::x();
  if (method == LaguerreMethod::Recurrence) {
    XPoly prev;  // L_{-1} = 0
    XPoly cur(BiLaurent(1));
    for (int m = 0; m < n; ++m) {
      const BiLaurent qm = q_int(m, q);
      XPoly next = (x - XPoly(y * q_int(m + 1, q) + qm)) * cur - (prev.scaled(y * qm * qm));
      prev = std::move(cur);
      cur = std::move(next);
    }
    return cur;
  }
  XPoly total;
  XPoly falling(BiLaurent(1));  // prod_{j<k} (x - (1 - y q^-j)[j]_q)
  const BiLaurent nfact = q_factorial(n, q);
  for (int k = 0; k <= n; ++k) {
    if (k > 0) {
      const int j = k - 1;
      falling *= x - XPoly((BiLaurent(1) - y * rpow(q, -j)) * q_int(j, q));
    }
    BiLaurent c = exact_div(nfact, q_factorial(k, q)) * q_binomial(n, k, q) * rpow(q, static_cast<long>(k) * (k - n)) *
                  y.pow(n - k);
    if ((n - k) % 2) c = -c;
    total += falling.scaled(c);
  }
  return total;
}

RatPoly asc_Q(int n, const BigRational& alpha, const BigRational& beta, const BigRational& q) {
  require_nonnegative(n, "Al-Salam-Chihara degree");
  const RatPoly two_x(std::vector<BigRational>{0, 2});
  RatPoly prev;
  RatPoly cur(BigRational(1));
  BigRational qm(1);  // q^m
  BigRational qm1 = q.is_zero() ? BigRational(0) : q.inverse();  // q^(m-1)
  for (int m = 0; m < n; ++m) {
    RatPoly next = (two_x - RatPoly((alpha + beta) * qm)) * cur -
                   prev.scaled((BigRational(1) - qm) * (BigRational(1) - alpha * beta * qm1));
    prev = std::move(cur);
    cur = std::move(next);
    qm1 = qm;
    qm *= q;
  }
  return cur;
}

namespace {

// (a;q)_k for several a at once.
BigRational poch_product(std::initializer_list<BigRational> as, int k, const BigRational& q) {
  BigRational acc(1);
  for (const auto& a : as) acc *= q_pochhammer(a, k, q);
  return acc;
}

}  // namespace

BigRational asc_hypergeometric(int n, const BigRational& u, const BigRational& alpha, const BigRational& beta,
                               const BigRational& q, int form) {
  require_nonnegative(n, "Al-Salam-Chihara degree");
  if (u.is_zero() || q.is_zero()) throw PoleAtSample("u and q must be nonzero");
  const BigRational qn_inv = rpow(q, -n);
  BigRational sum(0);
  switch (form) {
    case 1: {
      const BigRational ab = alpha * beta;
      for (int k = 0; k <= n; ++k) {
        const BigRational num = poch_product({qn_inv, alpha * u, divide(alpha, u)}, k, q) * q.pow(k);
        sum += divide(num, poch_product({ab, q}, k, q));
      }
      return divide(q_pochhammer(ab, n, q), rpow(alpha, n)) * sum;
    }
    case 2: {
      const BigRational lower = divide(rpow(q, 1 - n), alpha * u);
      const BigRational z = divide(q * u, alpha);
      for (int k = 0; k <= n; ++k) {
        const BigRational num = poch_product({qn_inv, divide(beta, u)}, k, q) * z.pow(k);
        sum += divide(num, poch_product({lower, q}, k, q));
      }
      return q_pochhammer(alpha * u, n, q) * rpow(u, -n) * sum;
    }
    case 3: {
      const BigRational lower = divide(rpow(q, 1 - n) * u, beta);
      const BigRational z = divide(q, beta * u);
      for (int k = 0; k <= n; ++k) {
        const BigRational num = poch_product({qn_inv, alpha * u}, k, q) * z.pow(k);
        sum += divide(num, poch_product({lower, q}, k, q));
      }
      return q_pochhammer(divide(beta, u), n, q) * u.pow(n) * sum;
    }
    default:
      throw InvalidArgument("hypergeometric form must be 1, 2 or 3");
  }
}

}  // namespace qlag
