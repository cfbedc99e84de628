#include <doctest.h>

#include "qlag/errors.hpp"
#include "qlag/families.hpp"
#include "qlag/moments.hpp"
#include "qlag/permstats.hpp"
#include "qlag/qcalc.hpp"
#include "qlag/stirling.hpp"

using namespace qlag;

namespace {

const BiLaurent Y = BiLaurent::y();
const BiLaurent Q = BiLaurent::q();

XPoly from(std::initializer_list<const char*> cs) {
  std::vector<BiLaurent> v;
  for (const char* c : cs) v.push_back(BiLaurent::parse(c));
  return XPoly(std::move(v));
}

}  // namespace

TEST_CASE("low-degree q-Laguerre polynomials") {
  CHECK(laguerre_poly(0) == XPoly(BiLaurent(1)));
  CHECK(laguerre_poly(1) == from({"-y", "1"}));
  CHECK(laguerre_poly(2) == from({"y^2 + q*y^2", "-1 - 2*y - q*y", "1"}));
  for (int n = 0; n <= 7; ++n) CHECK(laguerre_poly(n, LaguerreMethod::Explicit) == laguerre_poly(n));
}

TEST_CASE("Laguerre Jacobi data") {
  const auto jc = jacobi_for(laguerre_params());
  CHECK(jc.b(0) == Y);
  CHECK(jc.b(2) == Y * (BiLaurent(1) + Q + Q * Q) + BiLaurent(1) + Q);
  CHECK(jc.lam(3) == Y * q_int(3, Q).pow(2));
}

TEST_CASE("moments at q = y = 1 count permutations") {
  const auto& t = laguerre_moment_table();
  for (int n = 0; n <= 12; ++n) CHECK(t.at(n).eval(1, 1) == factorial(n));
  CHECK_THROWS_AS(t.at(65), TableTooShort);
}

TEST_CASE("moment routes agree") {
  const auto gf = moment_gf_laguerre(7);
  for (int n = 0; n <= 7; ++n) {
    const BiLaurent m = laguerre_moment_table().at(n);
    CHECK(moment_closed_laguerre(n) == m);
    CHECK(gf[n] == m);
    CHECK(permutation_polynomial(n) == m);
  }
}

TEST_CASE("q-Charlier moments specialize to Touchard polynomials") {
  // At q = 1 the a^k coefficient is the Stirling number S(n,k).
  const long S6[] = {0, 1, 31, 90, 65, 15, 1};
  const BiLaurent m = moment_closed_charlier(6).eval_q(1);
  for (int k = 0; k <= 6; ++k) CHECK(m.y_coefficient(k) == BiLaurent(S6[k]));
  CHECK(moment_closed_charlier(4) == BiLaurent::parse("y + 6*y^2 + y^2*q + 6*y^3 + y^4"));
}

TEST_CASE("ASC moments at a rational point") {
  const ASCParams<BigRational> p{BigRational::parse("2/3"), BigRational::parse("-1/2"), BigRational::parse("3/5")};
  const auto motzkin = moments_motzkin_all(6, jacobi_for(p));
  const auto gf = moment_gf_asc(p, 6);
  for (int n = 0; n <= 6; ++n) {
    CHECK(asc_moment_stirling(n, p) == motzkin[static_cast<std::size_t>(n)]);
    CHECK(asc_moment_explicit(n, p) == motzkin[static_cast<std::size_t>(n)]);
    CHECK(gf[n] == motzkin[static_cast<std::size_t>(n)]);
  }
  // mu_1 = b_0 = y(1-B)/(1-q).
  CHECK(motzkin[1] == p.y * (BigRational(1) - p.B) / (BigRational(1) - p.q));
}

TEST_CASE("ASC hypergeometric forms") {
  const BigRational u = BigRational::parse("3/2"), a = BigRational::parse("2/5"), b = BigRational::parse("-4/3");
  const BigRational q = BigRational::parse("1/3");
  const BigRational x = (u + u.inverse()) / BigRational(2);
  for (int n = 0; n <= 5; ++n) {
    for (int form = 1; form <= 3; ++form) CHECK(asc_hypergeometric(n, u, a, b, q, form) == asc_Q(n, a, b, q).eval(x));
  }
  CHECK_THROWS_AS(asc_hypergeometric(2, u, a, b, q, 4), InvalidArgument);
  CHECK(asc_Q(1, a, b, q) == RatPoly({-(a + b), BigRational(2)}));
}

TEST_CASE("Stirling tables") {
  CHECK(stirling_S(0, 0) == BiLaurent(1));
  CHECK(stirling_S(3, 5).is_zero());
  CHECK(stirling_S(2, 1) == BiLaurent(1) - Y * Q.pow(-1));
  // s and S are inverse matrices.
  for (int n = 0; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) {
      BiLaurent sum;
      for (int j = k; j <= n; ++j) sum += stirling_S(n, j) * stirling_s(j, k);
      CHECK(sum == BiLaurent(n == k ? 1 : 0));
    }
  }
  const BigRational y = BigRational::parse("5/7"), q = BigRational::parse("-2/3");
  for (int n = 0; n <= 6; ++n) {
    for (int k = 0; k <= n; ++k) CHECK(stirling_closed(n, k, y, q) == stirling_S(n, k).eval(y, q));
  }
}
