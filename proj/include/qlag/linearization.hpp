#pragma once

#include <vector>

#include "qlag/bigrational.hpp"
#include "qlag/bilaurent.hpp"
#include "qlag/permstats.hpp"

namespace qlag {

enum class LinearizeMethod { Functional, Enumeration, Closed3 };

/// I(n_1, ..., n_k) = L_q(L_{n_1} ... L_{n_k}). Block sizes may be zero
/// (L_0 = 1); the enumeration route drops them.
BiLaurent linearize(const std::vector<int>& blocks, LinearizeMethod method, int cap = kDefaultCap);

/// Classical (q = y = 1) value of L(L_{n1} L_{n2} L_{n3}) from the sum with
/// 2^(N2 + n3 - 2s) s!.
BigRational classical_linearization3(int n1, int n2, int n3);

enum class AscCMethod { Closed, Basis };

/// C^{n3}_{n1,n2}(alpha, beta; q): coefficient of Q_{n3} in Q_{n1} Q_{n2}.
BigRational asc_linearize_C(int n1, int n2, int n3, const BigRational& alpha, const BigRational& beta,
                            const BigRational& q, AscCMethod method);

}  // namespace qlag
