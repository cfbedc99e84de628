#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "qlag/bigrational.hpp"
#include "qlag/bilaurent.hpp"
#include "qlag/errors.hpp"

// q-analogues, written once for both coefficient rings: BiLaurent for
// symbolic work and BigRational for evaluation at a sample point.
namespace qlag {

inline BiLaurent divide(const BiLaurent& a, const BiLaurent& b) { return exact_div(a, b); }
inline BigRational divide(const BigRational& a, const BigRational& b) {
  if (b.is_zero()) throw PoleAtSample("zero denominator at sample point");
  return a / b;
}

/// Integer power; negative exponents need an invertible base.
inline BiLaurent rpow(const BiLaurent& a, long e) { return a.pow(e); }
inline BigRational rpow(const BigRational& a, long e) {
  if (e < 0 && a.is_zero()) throw PoleAtSample("negative power of zero");
  return a.pow(e);
}

inline void require_nonnegative(int n, const char* what) {
  if (n < 0) throw NegativeIndex(std::string(what) + " of " + std::to_string(n));
}

/// [n]_q = 1 + q + ... + q^(n-1)
template <class R>
R q_int(int n, const R& q) {
  require_nonnegative(n, "q-integer");
  R acc(0);
  R p(1);
  for (int j = 0; j < n; ++j) {
    acc += p;
    p = p * q;
  }
  return acc;
}

template <class R>
R q_factorial(int n, const R& q) {
  require_nonnegative(n, "q-factorial");
  R acc(1);
  for (int j = 2; j <= n; ++j) acc = acc * q_int(j, q);
  return acc;
}

/// Gaussian binomial by the Pascal rule [n,k] = [n-1,k-1] + q^k [n-1,k].
template <class R>
R q_binomial(int n, int k, const R& q) {
  require_nonnegative(n, "q-binomial");
  if (k < 0 || k > n) return R(0);
  k = std::min(k, n - k);
  std::vector<R> row(static_cast<std::size_t>(k) + 1, R(0));
  row[0] = R(1);
  for (int m = 1; m <= n; ++m) {
    for (int j = std::min(m, k); j >= 1; --j) {
      row[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j) - 1] + rpow(q, j) * row[static_cast<std::size_t>(j)];
    }
  }
  return row[static_cast<std::size_t>(k)];
}

/// (a;q)_n = (1-a)(1-aq)...(1-aq^(n-1))
template <class R>
R q_pochhammer(const R& a, int n, const R& q) {
  require_nonnegative(n, "q-Pochhammer");
  R acc(1);
  R term = a;
  for (int j = 0; j < n; ++j) {
    acc = acc * (R(1) - term);
    term = term * q;
  }
  return acc;
}

/// Integer binomial coefficient lifted into the ring (0 outside 0 <= k <= n).
template <class R>
R ibinom(int n, int k) {
  return R(binomial(n, k));
}

inline long choose2(long m) { return m * (m - 1) / 2; }

}  // namespace qlag
