#pragma once

#include <vector>

#include "qlag/bigrational.hpp"
#include "qlag/bilaurent.hpp"

namespace qlag {

/// Rows 0..N of S_q(n,k,y), from S(n,k) = S(n-1,k-1) + [k]_q (1 - y q^-k) S(n-1,k).
template <class R>
std::vector<std::vector<R>> stirling_S_table(int N, const R& y, const R& q);
/// Rows 0..N of s_q(n,k,y): coefficients of X^k in prod_{j<n} (X - [j]_q (1 - y q^-j)).
template <class R>
std::vector<std::vector<R>> stirling_s_table(int N, const R& y, const R& q);

/// Symbolic values in Z[y, q, 1/q]; zero outside 0 <= k <= n.
BiLaurent stirling_S(int n, int k);
BiLaurent stirling_s(int n, int k);

/// The closed sum for S_q(n,k,y) at a rational point.
BigRational stirling_closed(int n, int k, const BigRational& y, const BigRational& q);
/// gamma_k(i) in t^k / prod_{j=1..k} (1 - a_j t) = sum_{i=0..k} gamma_k(i) / (1 - a_i t),
/// with a_i = [i]_q (1 - y q^-i).
BigRational partial_fraction_gamma(int k, int i, const BigRational& y, const BigRational& q);

}  // namespace qlag
