#include "qlag/stirling.hpp"

#include "qlag/errors.hpp"
#include "qlag/qcalc.hpp"

namespace qlag {

namespace {

template <class R>
R node(int j, const R& y, const R& q) {
  return q_int(j, q) * (R(1) - y * rpow(q, -j));
}

}  // namespace

template <class R>
std::vector<std::vector<R>> stirling_S_table(int N, const R& y, const R& q) {
  require_nonnegative(N, "Stirling size");
  std::vector<std::vector<R>> S(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) {
    auto& row = S[static_cast<std::size_t>(n)];
    row.assign(static_cast<std::size_t>(n) + 1, R(0));
    if (n == 0) {
      row[0] = R(1);
      continue;
    }
    const auto& prev = S[static_cast<std::size_t>(n) - 1];
    for (int k = 1; k <= n; ++k) {
      R v = prev[static_cast<std::size_t>(k) - 1];
      if (k < n) v += node(k, y, q) * prev[static_cast<std::size_t>(k)];
      row[static_cast<std::size_t>(k)] = std::move(v);
    }
  }
  return S;
}

template <class R>
std::vector<std::vector<R>> stirling_s_table(int N, const R& y, const R& q) {
  require_nonnegative(N, "Stirling size");
  std::vector<std::vector<R>> s(static_cast<std::size_t>(N) + 1);
  s[0] = {R(1)};
  for (int n = 1; n <= N; ++n) {
    const auto& prev = s[static_cast<std::size_t>(n) - 1];
    const R root = node(n - 1, y, q);
    std::vector<R> row(static_cast<std::size_t>(n) + 1, R(0));
    for (int k = 0; k < n; ++k) {
      row[static_cast<std::size_t>(k) + 1] += prev[static_cast<std::size_t>(k)];
      row[static_cast<std::size_t>(k)] -= root * prev[static_cast<std::size_t>(k)];
    }
    s[static_cast<std::size_t>(n)] = std::move(row);
  }
  return s;
}

template std::vector<std::vector<BiLaurent>> stirling_S_table(int, const BiLaurent&, const BiLaurent&);
template std::vector<std::vector<BigRational>> stirling_S_table(int, const BigRational&, const BigRational&);
template std::vector<std::vector<BiLaurent>> stirling_s_table(int, const BiLaurent&, const BiLaurent&);
template std::vector<std::vector<BigRational>> stirling_s_table(int, const BigRational&, const BigRational&);

BiLaurent stirling_S(int n, int k) {
  require_nonnegative(n, "Stirling n");
  if (k < 0 || k > n) return BiLaurent(0);
  return stirling_S_table(n, BiLaurent::y(), BiLaurent::q())[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BiLaurent stirling_s(int n, int k) {
  require_nonnegative(n, "Stirling n");
  if (k < 0 || k > n) return BiLaurent(0);
  return stirling_s_table(n, BiLaurent::y(), BiLaurent::q())[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

namespace {

// (q^(1-2i) y; q)_i (q^(1+2i)/y; q)_(k-i)
BigRational gamma_denominator(int k, int i, const BigRational& y, const BigRational& q) {
  return q_pochhammer(rpow(q, 1 - 2 * i) * y, i, q) * q_pochhammer(divide(rpow(q, 1 + 2 * i), y), k - i, q);
}

}  // namespace

BigRational stirling_closed(int n, int k, const BigRational& y, const BigRational& q) {
  require_nonnegative(n, "Stirling n");
  if (k < 0 || k > n) return BigRational(0);
  if (q.is_zero() || y.is_zero()) throw PoleAtSample("y and q must be nonzero");
  if (k == 0) return BigRational(n == 0 ? 1 : 0);
  BigRational sum(0);
  for (int i = 1; i <= k; ++i) {
    const BigRational num = q_binomial(k, i, q) * rpow(y, i - k) * rpow(q, static_cast<long>(k) * k - i * i) *
                            node(i, y, q).pow(n);
    sum += divide(num, gamma_denominator(k, i, y, q));
  }
  return divide(rpow(q, -choose2(k)), q_factorial(k, q)) * sum;
}

BigRational partial_fraction_gamma(int k, int i, const BigRational& y, const BigRational& q) {
  require_nonnegative(k, "partial fraction order");
  if (i < 0 || i > k) throw InvalidArgument("need 0 <= i <= k");
  if (q.is_zero() || y.is_zero()) throw PoleAtSample("y and q must be nonzero");
  const BigRational num = q_binomial(k, i, q) * rpow(y, i - k) * rpow(q, choose2(k) + k - static_cast<long>(i) * i);
  return divide(num, q_factorial(k, q) * gamma_denominator(k, i, y, q));
}

}  // namespace qlag
