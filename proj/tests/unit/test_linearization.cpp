#include <doctest.h>

#include "qlag/errors.hpp"
#include "qlag/linearization.hpp"
#include "qlag/qcalc.hpp"

using namespace qlag;

TEST_CASE("I(2,2,1) by every route") {
  const BiLaurent expected = (BiLaurent(1) + BiLaurent::q()).pow(3) *
                             (BiLaurent(1) + BiLaurent::q() * BiLaurent::y()) * BiLaurent::y().pow(2);
  CHECK(linearize({2, 2, 1}, LinearizeMethod::Functional) == expected);
  CHECK(linearize({2, 2, 1}, LinearizeMethod::Enumeration) == expected);
  CHECK(linearize({2, 2, 1}, LinearizeMethod::Closed3) == expected);
}

TEST_CASE("degenerate block lists") {
  CHECK(linearize({}, LinearizeMethod::Functional) == BiLaurent(1));
  CHECK(linearize({}, LinearizeMethod::Enumeration) == BiLaurent(1));
  CHECK(linearize({0, 3, 3}, LinearizeMethod::Enumeration) == linearize({3, 3}, LinearizeMethod::Functional));
  CHECK(linearize({4}, LinearizeMethod::Functional).is_zero());
  CHECK_THROWS_AS(linearize({1, 2}, LinearizeMethod::Closed3), InvalidArgument);
  CHECK_THROWS_AS(linearize({6, 6}, LinearizeMethod::Enumeration), CapExceeded);
}

TEST_CASE("I(1^n) counts derangements by weight") {
  // At q = y = 1, D(1^n) are the ordinary derangements.
  const long d[] = {1, 0, 1, 2, 9, 44, 265};
  for (int n = 1; n <= 6; ++n) {
    CHECK(linearize(std::vector<int>(static_cast<std::size_t>(n), 1), LinearizeMethod::Functional).eval(1, 1) ==
          BigRational(d[n]));
  }
}

TEST_CASE("I(n,n) = y^n (n!_q)^2") {
  for (int n = 0; n <= 5; ++n) {
    CHECK(linearize({n, n}, LinearizeMethod::Functional) == q_factorial(n, BiLaurent::q()).pow(2).shifted(n, 0));
  }
}

TEST_CASE("classical three-block sum") {
  // L(L_1 L_1 L_2) at q = y = 1 counts D(1,1,2) = 4.
  CHECK(classical_linearization3(1, 1, 2) == BigRational(4));
  CHECK(classical_linearization3(2, 2, 1) == BigRational(16));
  CHECK(classical_linearization3(3, 1, 1) == BigRational(0));
}

TEST_CASE("ASC linearization coefficients") {
  const BigRational a = BigRational::parse("3/4"), b = BigRational::parse("-5/2"), q = BigRational::parse("2/7");
  for (int n1 = 0; n1 <= 4; ++n1) {
    for (int n2 = 0; n2 <= 4; ++n2) {
      for (int n3 = 0; n3 <= n1 + n2 + 1; ++n3) {
        CHECK(asc_linearize_C(n1, n2, n3, a, b, q, AscCMethod::Closed) ==
              asc_linearize_C(n1, n2, n3, a, b, q, AscCMethod::Basis));
      }
    }
  }
  // Q_0 Q_n = Q_n.
  CHECK(asc_linearize_C(0, 3, 3, a, b, q, AscCMethod::Closed) == BigRational(1));
  CHECK(asc_linearize_C(2, 2, 5, a, b, q, AscCMethod::Basis).is_zero());
}
