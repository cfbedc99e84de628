#pragma once

#include <array>
#include <iosfwd>

#include "qlag/permutation.hpp"

namespace qlag {

/// ^kS_n: sigma(i) > k for every i <= k.
bool in_phi_domain(const Permutation& sigma, int k);
/// S_n^k: sigma(j) <= n - k for every j > n - k.
bool in_phi_codomain(const Permutation& sigma, int k);
/// S_n^(n1,n2): no arc inside [1,n1] or inside [n1+1, n1+n2].
bool in_gamma_domain(const Permutation& sigma, int n1, int n2);

/// Phi_k : ^kS_n -> S_n^k. Throws NotInDomain outside ^kS_n.
Permutation phi(const Permutation& sigma, int k);
Permutation phi_inverse(const Permutation& image, int k);

/// Gamma^(n1,n2) : S_n^(n1,n2) -> S_n^(n2,n1).
Permutation gamma(const Permutation& sigma, int n1, int n2);

/// (|L1|, |L2|, |L3|, |L4|) for sigma in ^kS_n.
std::array<int, 4> crossing_decomposition_L(const Permutation& sigma, int k);
/// (|G1|, ..., |G5|) for sigma in S_n^(n1,n2).
std::array<int, 5> crossing_decomposition_G(const Permutation& sigma, int n1, int n2);
/// |G5| from the arcs inside [1, n1+n2] alone.
int g5_closed(const Permutation& sigma, int n1, int n2);

void write_L_csv_row(const Permutation& sigma, int k, std::ostream& out);
void write_G_csv_row(const Permutation& sigma, int n1, int n2, std::ostream& out);

}  // namespace qlag
