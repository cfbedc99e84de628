#include "qlag/linearization.hpp"

#include <algorithm>

#include "qlag/errors.hpp"
#include "qlag/families.hpp"
#include "qlag/moments.hpp"
#include "qlag/qcalc.hpp"

namespace qlag {

namespace {

BiLaurent closed3(int n1, int n2, int n3) {
  const BiLaurent q = BiLaurent::q();
  const BiLaurent y = BiLaurent::y();
  const int N = n1 + n2 + n3;
  const BiLaurent prefactor = q_factorial(n1, q) * q_factorial(n2, q) * q_factorial(n3, q);
  BiLaurent total;
  for (int s = std::max({n1, n2, n3}); 2 * s <= N; ++s) {
    const int m = N - 2 * s;
    // s!/(m! (s-n1)! (s-n2)! (s-n3)!) is a q-multinomial: the parts sum to s.
    const BiLaurent multinomial = exact_div(q_factorial(s, q), q_factorial(m, q) * q_factorial(s - n1, q) *
                                                                    q_factorial(s - n2, q) * q_factorial(s - n3, q));
    BiLaurent inner;
    for (int k = 0; k <= m; ++k) {
      inner += q_binomial(m, k, q) * q.pow(choose2(k + 1) + choose2(m - k)) * y.pow(k);
    }
    total += (prefactor * multinomial * inner).shifted(s, 0);
  }
  return total;
}

}  // namespace

BiLaurent linearize(const std::vector<int>& blocks, LinearizeMethod method, int cap) {
  for (int b : blocks) require_nonnegative(b, "block size");
  switch (method) {
    case LinearizeMethod::Functional: {
      XPoly product(BiLaurent(1));
      for (int b : blocks) product *= laguerre_poly(b);
      return functional_apply(product, laguerre_moment_table());
    }
    case LinearizeMethod::Enumeration: {
      std::vector<int> sizes;
      std::copy_if(blocks.begin(), blocks.end(), std::back_inserter(sizes), [](int b) { return b > 0; });
      if (sizes.empty()) return BiLaurent(1);
      return class_polynomial(BlockSpec(sizes), cap);
    }
    case LinearizeMethod::Closed3: {
      if (blocks.size() != 3) throw InvalidArgument("closed3 needs exactly three blocks");
      BiLaurent value = closed3(blocks[0], blocks[1], blocks[2]);
      if (value.has_negative_q() || !value.all_coefficients_integral()) {
        throw NotPolynomial("closed3 value " + value.to_string());
      }
      return value;
    }
  }
  throw InvalidArgument("unknown linearization method");
}

BigRational classical_linearization3(int n1, int n2, int n3) {
  require_nonnegative(std::min({n1, n2, n3}), "block size");
  const int N2 = n1 + n2;
  BigRational total(0);
  for (int s = std::max({n1, n2, n3}); 2 * s <= N2 + n3; ++s) {
    total += factorial(n1) * factorial(n2) * factorial(n3) * BigRational(2).pow(N2 + n3 - 2 * s) * factorial(s) /
             (factorial(s - n1) * factorial(s - n2) * factorial(s - n3) * factorial(N2 + n3 - 2 * s));
  }
  return total;
}

namespace {

BigRational qq(int m, const BigRational& q) { return q_pochhammer(q, m, q); }

BigRational closed_C(int n1, int n2, int n3, const BigRational& alpha, const BigRational& beta, const BigRational& q) {
  const BigRational ab = alpha * beta;
  BigRational sum(0);
  for (int m3 = 0; m3 <= n1 + n2 + n3; ++m3) {
    for (int m2 = 0; m2 <= n1 + n2 + n3; ++m2) {
      const int M = n3 + n2 - n1 - m2 - 2 * m3;
      // 1/(q;q)_m vanishes for m < 0.
      if (M < 0 || m3 + n1 - n3 < 0 || m3 + n1 - n2 < 0) continue;
      const BigRational num = q_pochhammer(ab, n1 + m3, q) * alpha.pow(m2) * beta.pow(M) *
                              rpow(q, choose2(m2) + choose2(M));
      const BigRational den = qq(M, q) * qq(m2, q) * qq(m3 + n1 - n3, q) * qq(m3 + n1 - n2, q) * qq(m3, q);
      sum += divide(num, den);
    }
  }
  BigRational c = divide(qq(n1, q) * qq(n2, q), q_pochhammer(ab, n3, q)) * sum;
  return (n1 + n2 + n3) % 2 ? -c : c;
}

BigRational basis_C(int n1, int n2, int n3, const BigRational& alpha, const BigRational& beta, const BigRational& q) {
  if (n3 > n1 + n2) return BigRational(0);
  RatPoly rest = asc_Q(n1, alpha, beta, q) * asc_Q(n2, alpha, beta, q);
  BigRational found(0);
  for (int d = rest.degree(); d >= 0 && d >= n3; --d) {
    const BigRational c = rest.coeff(d) / BigRational(2).pow(d);
    if (d == n3) found = c;
    rest -= asc_Q(d, alpha, beta, q).scaled(c);
  }
  return found;
}

}  // namespace

BigRational asc_linearize_C(int n1, int n2, int n3, const BigRational& alpha, const BigRational& beta,
                            const BigRational& q, AscCMethod method) {
  require_nonnegative(std::min({n1, n2, n3}), "degree");
  return method == AscCMethod::Closed ? closed_C(n1, n2, n3, alpha, beta, q) : basis_C(n1, n2, n3, alpha, beta, q);
}

}  // namespace qlag
