from math import factorial
from itertools import permutations

import pytest

import qlag


def test_moment_n0():
    assert qlag.moment(0) == "1"


def test_moment_routes_agree():
    for n in range(7):
        ref = qlag.moment(n)
        assert qlag.moment(n, method="closed") == ref
        assert qlag.moment(n, method="gf") == ref
        assert qlag.moment(n, method="enum") == ref


def test_moments_count_permutations():
    # At q = y = 1 the coefficients add up to n!.
    for n in range(9):
        assert sum(int(c) for _, _, c in qlag.moment_terms(n)) == factorial(n)


def test_linearize_221():
    assert qlag.linearize([2, 2, 1]) == (
        "1*y^2 + 3*y^2*q + 3*y^2*q^2 + 1*y^2*q^3 + 1*y^3*q + 3*y^3*q^2 + 3*y^3*q^3 + 1*y^3*q^4"
    )


def test_statistics_against_definition():
    for s in permutations(range(1, 6)):
        n = len(s)
        w = sum(1 for i in range(1, n + 1) if i <= s[i - 1])
        c = sum(
            1
            for i in range(1, n + 1)
            for j in range(1, n + 1)
            if (j < i <= s[j - 1] < s[i - 1]) or (j > i > s[j - 1] > s[i - 1])
        )
        assert qlag.wex(list(s)) == w
        assert qlag.cr(list(s)) == c


def test_golden_bijections():
    sigma = [15, 4, 6, 13, 3, 8, 2, 14, 1, 7, 12, 5, 10, 9, 11]
    image = [15, 5, 13, 6, 3, 1, 8, 14, 2, 7, 12, 4, 10, 9, 11]
    assert qlag.gamma(sigma, 3, 4) == image
    assert qlag.gamma(image, 4, 3) == sigma
    sigma = [6, 7, 15, 8, 11, 10, 13, 14, 1, 4, 12, 5, 3, 9, 2]
    image = [5, 8, 7, 10, 11, 13, 1, 9, 2, 15, 6, 14, 3, 4, 12]
    assert qlag.phi(sigma, 3) == image
    assert qlag.phi_inverse(image, 3) == sigma


def test_domain_error():
    with pytest.raises(qlag.QlagError, match="NotInDomain"):
        qlag.phi([1, 2, 3], 1)
    with pytest.raises(ValueError):
        qlag.linearize([6, 6], method="enum")


def test_verify_stirling():
    rows = qlag.verify("stirling", max_n=4, samples=2)
    assert rows
    assert all(status in ("PASS", "NOTE") for _, status, _ in rows)
    assert [r[0] for r in rows] == sorted(r[0] for r in rows)
