#pragma once

#include <mutex>
#include <string>
#include <vector>

#include "qlag/families.hpp"
#include "qlag/series.hpp"

namespace qlag {

/// mu_n as the weight of Motzkin paths of length n: up steps weigh 1, a
/// level step at height h weighs b_h, a down step from height h weighs lam_h.
template <class R>
R moments_motzkin(int n, const JacobiCoefficients<R>& jc);
/// mu_0 .. mu_N in one sweep.
template <class R>
std::vector<R> moments_motzkin_all(int N, const JacobiCoefficients<R>& jc);

/// Lazily extended, mutex-guarded moment cache. Entries are computed from
/// the Motzkin route and are immutable once published.
template <class R>
class MomentTable {
 public:
  MomentTable(std::string family, JacobiCoefficients<R> jc, int limit);
  const std::string& family() const { return family_; }
  int limit() const { return limit_; }
  /// Throws TableTooShort for n > limit().
  R at(int n) const;

 private:
  std::string family_;
  JacobiCoefficients<R> jc_;
  int limit_;
  mutable std::mutex mutex_;
  mutable std::vector<R> cache_;
};

/// Shared q-Laguerre table (limit 64).
const MomentTable<BiLaurent>& laguerre_moment_table();

/// The polynomial double-sum formula for q-Laguerre moments.
BiLaurent moment_closed_laguerre(int n);
/// The triple-sum formula for q-Charlier moments, returned with a in the
/// y slot. Throws NotPolynomial if it fails to reduce to Z[a, q].
BiLaurent moment_closed_charlier(int n);

enum class Family { Laguerre, Charlier, ASC };

/// Moment generating function truncated after t^N, summing terms k <= N.
TruncatedSeries<BiLaurent> moment_gf_laguerre(int N);
TruncatedSeries<BiLaurent> moment_gf_charlier(int N);
template <class R>
TruncatedSeries<R> moment_gf_asc(const ASCParams<R>& params, int N);

/// mu_n = sum_k S_q(n,k,y) (B;q)_k q^-C(k,2) (1-q)^-k y^k
template <class R>
R asc_moment_stirling(int n, const ASCParams<R>& params);
/// The explicit double sum over k and i at a rational point.
BigRational asc_moment_explicit(int n, const ASCParams<BigRational>& params);

/// Linear extension x^m -> mu_m.
BiLaurent functional_apply(const XPoly& p, const MomentTable<BiLaurent>& table);

}  // namespace qlag
