#include "qlag/bijections.hpp"

#include <algorithm>
#include <ostream>
#include <vector>

#include "qlag/errors.hpp"

namespace qlag {

bool in_phi_domain(const Permutation& sigma, int k) {
  if (k < 1 || k > sigma.size()) return false;
  for (int i = 1; i <= k; ++i) {
    if (sigma(i) <= k) return false;
  }
  return true;
}

bool in_phi_codomain(const Permutation& sigma, int k) {
  const int n = sigma.size();
  if (k < 1 || k > n) return false;
  for (int j = n - k + 1; j <= n; ++j) {
    if (sigma(j) > n - k) return false;
  }
  return true;
}

bool in_gamma_domain(const Permutation& sigma, int n1, int n2) {
  if (n1 < 1 || n2 < 1 || n1 + n2 > sigma.size()) return false;
  const int N2 = n1 + n2;
  for (int i = 1; i <= N2; ++i) {
    const int v = sigma(i);
    if (i <= n1 && v <= n1) return false;
    if (i > n1 && v > n1 && v <= N2) return false;
  }
  return true;
}

namespace {

void require(bool ok, const Permutation& sigma, const std::string& where) {
  if (!ok) throw NotInDomain(sigma.to_string() + " is not in " + where);
}

std::string phi_dom(int k) { return "^" + std::to_string(k) + "S_n"; }
std::string gamma_dom(int n1, int n2) { return "S_n^(" + std::to_string(n1) + "," + std::to_string(n2) + ")"; }

}  // namespace

Permutation phi(const Permutation& sigma, int k) {
  require(in_phi_domain(sigma, k), sigma, phi_dom(k));
  const int n = sigma.size();
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    int v;
    if (i <= n - k) {
      const int s = sigma(i + k);
      v = s > k ? s - k : s + n - k;
    } else {
      v = sigma(i + k - n) - k;
    }
    out[static_cast<std::size_t>(i - 1)] = v;
  }
  return Permutation(std::move(out));
}

Permutation phi_inverse(const Permutation& image, int k) {
  require(in_phi_codomain(image, k), image, "S_n^" + std::to_string(k));
  const int n = image.size();
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int m = 1; m <= n; ++m) {
    int v;
    if (m <= k) {
      v = image(m + n - k) + k;
    } else {
      const int s = image(m - k);
      v = s <= n - k ? s + k : s - (n - k);
    }
    out[static_cast<std::size_t>(m - 1)] = v;
  }
  return Permutation(std::move(out));
}

Permutation gamma(const Permutation& sigma, int n1, int n2) {
  require(in_gamma_domain(sigma, n1, n2), sigma, gamma_dom(n1, n2));
  const int n = sigma.size();
  const int N2 = n1 + n2;
  const Permutation inv = sigma.inverse();
  std::vector<int> out(static_cast<std::size_t>(n), 0);
  auto set = [&out](int i, int v) { out[static_cast<std::size_t>(i - 1)] = v; };

  // (1) arcs with both ends above N2 stay.
  for (int i = N2 + 1; i <= n; ++i) {
    if (sigma(i) > N2) set(i, sigma(i));
  }

  // (2) arcs inside [1, N2] are reflected. Both the upper rule
  // (i, N2+1-j) -> (j, N2+1-i) and the lower rule (k, N2+1-l) -> (N2+1-k, l)
  // amount to sigma'(N2+1-sigma(i)) = N2+1-i.
  std::vector<char> pos_used(static_cast<std::size_t>(N2) + 1, 0), val_used(static_cast<std::size_t>(N2) + 1, 0);
  for (int i = 1; i <= N2; ++i) {
    const int v = sigma(i);
    if (v > N2) continue;
    const int from = N2 + 1 - v;
    const int to = N2 + 1 - i;
    set(from, to);
    pos_used[static_cast<std::size_t>(from)] = 1;
    val_used[static_cast<std::size_t>(to)] = 1;
  }

  // (3) arcs leaving or entering [1, N2] are re-attached to the free
  // positions E and free values F, keeping their relative order patterns.
  std::vector<int> C, D, r, s, E, F;
  for (int i = 1; i <= N2; ++i) {
    if (sigma(i) > N2) C.push_back(i);
    if (inv(i) > N2) D.push_back(i);
    if (!pos_used[static_cast<std::size_t>(i)]) E.push_back(i);
    if (!val_used[static_cast<std::size_t>(i)]) F.push_back(i);
  }
  for (int c : C) r.push_back(sigma(c));
  for (int d : D) s.push_back(inv(d));
  std::sort(r.begin(), r.end());
  std::sort(s.begin(), s.end());
  const std::size_t u = C.size();
  if (D.size() != u || E.size() != u || F.size() != u) {
    throw std::logic_error("gamma: unbalanced boundary arcs for " + sigma.to_string());
  }
  auto rank = [](const std::vector<int>& sorted, int v) {
    return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
  };
  for (std::size_t i = 0; i < u; ++i) {
    const std::size_t alpha_i = rank(r, sigma(C[i]));  // sigma(c_i) = r_alpha(i)
    const std::size_t beta_i = rank(s, inv(D[i]));     // sigma^-1(d_i) = s_beta(i)
    set(E[i], r[alpha_i]);
    set(s[i], F[beta_i]);
  }
  return Permutation(std::move(out));
}

std::array<int, 4> crossing_decomposition_L(const Permutation& sigma, int k) {
  require(in_phi_domain(sigma, k), sigma, phi_dom(k));
  const int n = sigma.size();
  std::array<int, 4> L{0, 0, 0, 0};
  for (int i = 1; i <= n; ++i) {
    const int si = sigma(i);
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      const int sj = sigma(j);
      if ((k < i && i < j && j <= si && si < sj) || (i > j && j > si && si > sj && sj > k)) ++L[0];
      if ((i < j && j <= k && k < si && si < sj) || (i > j && j > k && k >= si && si > sj)) ++L[1];
      if ((i <= k && k < j && j <= si && si < sj) || (i > j && j > si && si > k && k >= sj)) ++L[2];
      if ((si <= k && k < j && j < i && i <= sj) || (i <= k && k < sj && sj < si && si < j)) ++L[3];
    }
  }
  return L;
}

std::array<int, 5> crossing_decomposition_G(const Permutation& sigma, int n1, int n2) {
  require(in_gamma_domain(sigma, n1, n2), sigma, gamma_dom(n1, n2));
  const int n = sigma.size();
  const int N = n1 + n2;
  std::array<int, 5> G{0, 0, 0, 0, 0};
  for (int i = 1; i <= n; ++i) {
    const int gi = sigma(i);
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      const int gj = sigma(j);
      if ((N < i && i < j && j <= gi && gi < gj) || (i > j && j > gi && gi > gj && gj > N)) ++G[0];
      if ((i < j && j < gi && gi < gj && gj <= N) || (N >= i && i > j && j > gi && gi > gj)) ++G[1];
      if ((i < j && j <= N && N < gi && gi < gj) || (i > j && j > N && N >= gi && gi > gj)) ++G[2];
      if ((i <= N && N < j && j <= gi && gi < gj) || (i > j && j > gi && gi > N && N >= gj)) ++G[3];
      if ((i < j && j <= gi && gi <= N && N < gj) || (i > N && N >= j && j > gi && gi > gj)) ++G[4];
    }
  }
  return G;
}

int g5_closed(const Permutation& sigma, int n1, int n2) {
  require(in_gamma_domain(sigma, n1, n2), sigma, gamma_dom(n1, n2));
  const int N = n1 + n2;
  int total = 0;
  int arcs = 0;
  for (int i = 1; i <= N; ++i) {
    const int g = sigma(i);
    if (i < g && g <= N) {
      total += g - i;
      ++arcs;
    } else if (g < i) {
      total += i - g - 1;
      ++arcs;
    }
  }
  return total - arcs * (arcs - 1) / 2;
}

void write_L_csv_row(const Permutation& sigma, int k, std::ostream& out) {
  const auto L = crossing_decomposition_L(sigma, k);
  out << '"' << sigma.to_string() << '"';
  for (int v : L) out << ',' << v;
  out << '\n';
}

void write_G_csv_row(const Permutation& sigma, int n1, int n2, std::ostream& out) {
  const auto G = crossing_decomposition_G(sigma, n1, n2);
  out << '"' << sigma.to_string() << '"';
  for (int v : G) out << ',' << v;
  out << '\n';
}

}  // namespace qlag
