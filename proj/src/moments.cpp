#include "qlag/moments.hpp"

#include <algorithm>

#include "qlag/errors.hpp"
#include "qlag/qcalc.hpp"
#include "qlag/stirling.hpp"

namespace qlag {

template <class R>
std::vector<R> moments_motzkin_all(int N, const JacobiCoefficients<R>& jc) {
  require_nonnegative(N, "moment index");
  const int H = N / 2;
  std::vector<R> b, lam;
  for (int h = 0; h <= H; ++h) {
    b.push_back(jc.b(h));
    lam.push_back(h == 0 ? R(0) : jc.lam(h));
  }
  std::vector<R> cur(static_cast<std::size_t>(H) + 1, R(0));
  cur[0] = R(1);
  std::vector<R> out{R(1)};
  for (int step = 1; step <= N; ++step) {
    // Paths that still have to return to 0 never rise above N - step.
    const int top = std::min(H, std::min(step, N - step));
    std::vector<R> next(static_cast<std::size_t>(H) + 1, R(0));
    for (int h = 0; h <= top; ++h) {
      const auto uh = static_cast<std::size_t>(h);
      R v = cur[uh] * b[uh];
      if (h > 0) v += cur[uh - 1];
      if (h < H) v += cur[uh + 1] * lam[uh + 1];
      next[uh] = std::move(v);
    }
    cur = std::move(next);
    out.push_back(cur[0]);
  }
  return out;
}

template <class R>
R moments_motzkin(int n, const JacobiCoefficients<R>& jc) {
  return moments_motzkin_all(n, jc).back();
}

template std::vector<BiLaurent> moments_motzkin_all(int, const JacobiCoefficients<BiLaurent>&);
template std::vector<BigRational> moments_motzkin_all(int, const JacobiCoefficients<BigRational>&);
template BiLaurent moments_motzkin(int, const JacobiCoefficients<BiLaurent>&);
template BigRational moments_motzkin(int, const JacobiCoefficients<BigRational>&);

template <class R>
MomentTable<R>::MomentTable(std::string family, JacobiCoefficients<R> jc, int limit)
    : family_(std::move(family)), jc_(std::move(jc)), limit_(limit) {
  if (limit < 0) throw InvalidArgument("moment table limit must be >= 0");
}

template <class R>
R MomentTable<R>::at(int n) const {
  require_nonnegative(n, "moment index");
  if (n > limit_) {
    throw TableTooShort(family_ + " moments cover degrees <= " + std::to_string(limit_) + ", need " + std::to_string(n));
  }
  std::lock_guard lock(mutex_);
  if (static_cast<int>(cache_.size()) <= n) {
    const int target = std::min(limit_, std::max(n, 2 * static_cast<int>(cache_.size())));
    cache_ = moments_motzkin_all(target, jc_);
  }
  return cache_[static_cast<std::size_t>(n)];
}

template class MomentTable<BiLaurent>;
template class MomentTable<BigRational>;

const MomentTable<BiLaurent>& laguerre_moment_table() {
  static const MomentTable<BiLaurent> table("laguerre", jacobi_for(laguerre_params()), 64);
  return table;
}

BiLaurent moment_closed_laguerre(int n) {
  require_nonnegative(n, "moment index");
  if (n == 0) return BiLaurent(1);
  const BiLaurent q = BiLaurent::q();
  BiLaurent total;
  for (int k = 1; k <= n; ++k) {
    BiLaurent inner;
    for (int i = 0; i < k; ++i) {
      BiLaurent t = q_int(k - i, q).pow(n) * q.pow(static_cast<long>(k) * (i - k)) *
                    (ibinom<BiLaurent>(n, i) * q.pow(k - i) + ibinom<BiLaurent>(n, i - 1));
      if (i % 2) t = -t;
      inner += t;
    }
    total += inner.shifted(k, 0);
  }
  if (total.has_negative_q()) throw NotPolynomial("Laguerre moment " + std::to_string(n) + ": " + total.to_string());
  return total;
}

BiLaurent moment_closed_charlier(int n) {
  require_nonnegative(n, "moment index");
  if (n == 0) return BiLaurent(1);
  const BiLaurent q = BiLaurent::q();
  const BiLaurent one_minus_q = BiLaurent(1) - q;
  // Every 1/((k-l)!_q (l-j)!_q) is cleared by n!_q and restored at the end.
  const BiLaurent nfact = q_factorial(n, q);
  BiLaurent total;
  for (int k = 1; k <= n; ++k) {
    BiLaurent outer;
    for (int l = 0; l <= k; ++l) {
      BiLaurent middle;
      for (int j = 0; j <= l; ++j) {
        const BiLaurent cleared = exact_div(nfact, q_factorial(k - l, q) * q_factorial(l - j, q));
        middle += cleared * one_minus_q.pow(j) * q.pow(choose2(l - j + 1) - static_cast<long>(k) * (k - l)) *
                  (ibinom<BiLaurent>(n, j) * q.pow(k - l) + ibinom<BiLaurent>(n, j - 1));
      }
      BiLaurent t = q_int(k - l, q).pow(n) * middle;
      if (l % 2) t = -t;
      outer += t;
    }
    total += outer.shifted(k, 0);
  }
  BiLaurent mu;
  try {
    mu = exact_div(total, nfact);
  } catch (const NotDivisible&) {
    throw NotPolynomial("Charlier moment " + std::to_string(n) + " is not a polynomial in a and q");
  }
  if (mu.has_negative_q() || !mu.all_coefficients_integral()) {
    throw NotPolynomial("Charlier moment " + std::to_string(n) + ": " + mu.to_string("a"));
  }
  return mu;
}

namespace {

// sum_k num_k t^k / prod_{i<=k} (c_i + d_i t), truncated after t^N.
template <class R, class Num, class Factor>
TruncatedSeries<R> rational_sum(int N, const Num& num, const Factor& factor) {
  TruncatedSeries<R> total(N);
  TruncatedSeries<R> inv_prod = TruncatedSeries<R>::constant(N, R(1));
  for (int k = 0; k <= N; ++k) {
    if (k > 0) inv_prod = inv_prod * factor(k).reciprocal();
    total += (inv_prod * TruncatedSeries<R>::monomial(N, R(1), k)).scaled(num(k));
  }
  return total;
}

}  // namespace

TruncatedSeries<BiLaurent> moment_gf_laguerre(int N) {
  const BiLaurent q = BiLaurent::q();
  const BiLaurent y = BiLaurent::y();
  return rational_sum<BiLaurent>(
      N, [&](int k) { return q_factorial(k, q) * (q * y).pow(k); },
      [&](int i) {
        const BiLaurent qi = q.pow(i);
        return TruncatedSeries<BiLaurent>(N, {qi, q_int(i, q) * (y - qi)});
      });
}

TruncatedSeries<BiLaurent> moment_gf_charlier(int N) {
  const BiLaurent q = BiLaurent::q();
  const BiLaurent a = BiLaurent::y();
  return rational_sum<BiLaurent>(
      N, [&](int k) { return (a * q).pow(k); },
      [&](int i) {
        const BiLaurent qi = q.pow(i);
        return TruncatedSeries<BiLaurent>(N, {qi, q_int(i, q) * (a * (BiLaurent(1) - q) - qi)});
      });
}

template <class R>
TruncatedSeries<R> moment_gf_asc(const ASCParams<R>& params, int N) {
  const auto& [y, B, q] = params;
  const R one_minus_q = R(1) - q;
  // Scaled by (1-q)^N so the symbolic case stays in the Laurent ring.
  TruncatedSeries<R> scaled = rational_sum<R>(
      N,
      [&](int k) { return q_pochhammer(B, k, q) * rpow(q, -choose2(k)) * rpow(y, k) * rpow(one_minus_q, N - k); },
      [&](int i) { return TruncatedSeries<R>(N, {R(1), -(q_int(i, q) * (R(1) - y * rpow(q, -i)))}); });
  const R denom = rpow(one_minus_q, N);
  std::vector<R> coeffs;
  for (int n = 0; n <= N; ++n) coeffs.push_back(divide(scaled[n], denom));
  return TruncatedSeries<R>(N, std::move(coeffs));
}

template TruncatedSeries<BiLaurent> moment_gf_asc(const ASCParams<BiLaurent>&, int);
template TruncatedSeries<BigRational> moment_gf_asc(const ASCParams<BigRational>&, int);

template <class R>
R asc_moment_stirling(int n, const ASCParams<R>& params) {
  require_nonnegative(n, "moment index");
  if (n == 0) return R(1);
  const auto& [y, B, q] = params;
  const auto S = stirling_S_table(n, y, q);
  const R one_minus_q = R(1) - q;
  R total(0);
  for (int k = 1; k <= n; ++k) {
    total += S[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] * q_pochhammer(B, k, q) *
             rpow(q, -choose2(k)) * rpow(y, k) * rpow(one_minus_q, n - k);
  }
  return divide(total, rpow(one_minus_q, n));
}

template BiLaurent asc_moment_stirling(int, const ASCParams<BiLaurent>&);
template BigRational asc_moment_stirling(int, const ASCParams<BigRational>&);

BigRational asc_moment_explicit(int n, const ASCParams<BigRational>& params) {
  require_nonnegative(n, "moment index");
  if (n == 0) return BigRational(1);
  const auto& [y, B, q] = params;
  if (q.is_zero() || y.is_zero()) throw PoleAtSample("y and q must be nonzero");
  BigRational total(0);
  for (int k = 1; k <= n; ++k) {
    const BigRational outer = divide(q_pochhammer(B, k, q), q_pochhammer(q, k, q));
    for (int i = 1; i <= k; ++i) {
      const BigRational a_i = q_int(i, q) * (BigRational(1) - y * rpow(q, -i));
      const BigRational num = q_binomial(k, i, q) * rpow(q, k - static_cast<long>(i) * i) * y.pow(i) * a_i.pow(n);
      const BigRational den = q_pochhammer(rpow(q, 1 - 2 * i) * y, i, q) *
                              q_pochhammer(divide(rpow(q, 1 + 2 * i), y), k - i, q);
      total += outer * divide(num, den);
    }
  }
  return total;
}

BiLaurent functional_apply(const XPoly& p, const MomentTable<BiLaurent>& table) {
  BiLaurent total;
  for (int m = 0; m <= p.degree(); ++m) {
    const BiLaurent& c = p.coeffs()[static_cast<std::size_t>(m)];
    if (!c.is_zero()) total += c * table.at(m);
  }
  return total;
}

}  // namespace qlag
