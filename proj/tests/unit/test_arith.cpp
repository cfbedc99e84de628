#include <doctest.h>

#include "qlag/bigrational.hpp"
#include "qlag/bilaurent.hpp"
#include "qlag/errors.hpp"
#include "qlag/poly.hpp"
#include "qlag/qcalc.hpp"
#include "qlag/series.hpp"

using namespace qlag;

TEST_CASE("rationals normalize and round-trip") {
  CHECK(BigRational::parse("-6/4").to_string() == "-3/2");
  CHECK_THROWS_AS(BigRational::parse("6/-4"), ParseError);
  CHECK(BigRational::parse("0/7").is_zero());
  CHECK(BigRational(mpz_class(10), mpz_class(4)) == BigRational::parse("5/2"));
  CHECK_THROWS_AS(BigRational(mpz_class(1), mpz_class(0)), DivisionByZero);
  CHECK_THROWS_AS(BigRational(3) / BigRational(0), DivisionByZero);
  CHECK_THROWS_AS(BigRational::parse("1.5"), ParseError);
  CHECK(BigRational::parse("-2/3").pow(-3) == BigRational::parse("-27/8"));
  CHECK(BigRational(3) < BigRational::parse("7/2"));
}

TEST_CASE("factorial and binomial against Pascal") {
  CHECK(factorial(0) == BigRational(1));
  CHECK(factorial(20).to_string() == "2432902008176640000");
  for (int n = 1; n <= 12; ++n) {
    for (int k = 1; k < n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
  }
  CHECK(binomial(4, 7) == BigRational(0));
}

TEST_CASE("bilaurent canonical text") {
  const BiLaurent y = BiLaurent::y(), q = BiLaurent::q();
  const BiLaurent p = (BiLaurent(1) + q).pow(3) * (BiLaurent(1) + q * y) * y.pow(2);
  CHECK(p.to_string() == "1*y^2 + 3*y^2*q + 3*y^2*q^2 + 1*y^2*q^3 + 1*y^3*q + 3*y^3*q^2 + 3*y^3*q^3 + 1*y^3*q^4");
  CHECK(BiLaurent::parse(p.to_string()) == p);
  CHECK(BiLaurent().to_string() == "0");
  CHECK(BiLaurent::parse("2*y*q^-1 - 1/2").to_string() == "-1/2 + 2*y*q^-1");
  CHECK((y - y).is_zero());
}

TEST_CASE("bilaurent evaluation matches direct substitution") {
  const BiLaurent p = BiLaurent::parse("3*y^2*q^-2 - y + 5/4");
  const BigRational y = BigRational::parse("2/3"), q = BigRational::parse("-3/5");
  const BigRational direct = BigRational(3) * y * y / (q * q) - y + BigRational::parse("5/4");
  CHECK(p.eval(y, q) == direct);
  CHECK_THROWS_AS(p.eval(y, BigRational(0)), PoleAtZero);
  CHECK(p.eval_q(q).eval(y, 1) == direct);
}

TEST_CASE("exact division") {
  const BiLaurent a = BiLaurent::parse("1 + q"), b = BiLaurent::parse("1 - q + q^2");
  CHECK(exact_div(a * b, a) == b);
  CHECK(exact_div((a * b).shifted(0, -3), b) == a.shifted(0, -3));
  CHECK_THROWS_AS(exact_div(b, a), NotDivisible);
  CHECK_THROWS_AS(exact_div(a, BiLaurent()), DivisionByZero);
  CHECK(BiLaurent::q().pow(-2) == BiLaurent::monomial(1, 0, -2));
  CHECK_THROWS(a.pow(-1));
}

TEST_CASE("polynomials in x") {
  const RatPoly p = RatPoly::linear(BigRational(2)) * RatPoly::linear(BigRational(-3));
  CHECK(p.degree() == 2);
  CHECK(p.eval(BigRational(2)).is_zero());
  CHECK(p.eval(BigRational(0)) == BigRational(-6));
  CHECK((p - p).is_zero());
  const XPoly x = XPoly::x();
  CHECK(eval_at(x * x - XPoly(BiLaurent::y()), BigRational(3), BigRational(2), BigRational(5)) == BigRational(7));
}

TEST_CASE("truncated series reciprocal") {
  // 1/(1 - t)^2 = sum (k+1) t^k
  TruncatedSeries<BigRational> s(6, {BigRational(1), BigRational(-2), BigRational(1)});
  const auto r = s.reciprocal();
  for (int k = 0; k <= 6; ++k) CHECK(r[k] == BigRational(k + 1));
  CHECK_THROWS_AS(TruncatedSeries<BigRational>(3, {BigRational(0), BigRational(1)}).reciprocal(), NonUnitReciprocal);
  CHECK_THROWS_AS(s + TruncatedSeries<BigRational>(4), SizeMismatch);
}

TEST_CASE("q-analogues reduce to classical values at q = 1") {
  for (int n = 0; n <= 8; ++n) {
    CHECK(q_factorial(n, BigRational(1)) == factorial(n));
    for (int k = 0; k <= n; ++k) CHECK(q_binomial(n, k, BigRational(1)) == binomial(n, k));
  }
}

TEST_CASE("q-binomial equals the ratio of q-factorials") {
  const BiLaurent q = BiLaurent::q();
  for (int n = 0; n <= 7; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(q_binomial(n, k, q) * q_factorial(k, q) * q_factorial(n - k, q) == q_factorial(n, q));
    }
  }
  CHECK(q_int(3, q).to_string() == "1 + 1*q + 1*q^2");
  CHECK(q_pochhammer(q, 2, q) == (BiLaurent(1) - q) * (BiLaurent(1) - q * q));
}
