#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "qlag/bijections.hpp"
#include "qlag/errors.hpp"
#include "qlag/permstats.hpp"

using namespace qlag;

namespace {

std::pair<Permutation, Permutation> read_golden(const std::string& file) {
  std::ifstream in(std::string(QLAG_GOLDEN_DIR) + "/" + file);
  REQUIRE(in);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  }
  REQUIRE(lines.size() == 2);
  return {Permutation::parse(lines[0]), Permutation::parse(lines[1])};
}

std::vector<Permutation> all(int n) {
  std::vector<int> s(static_cast<std::size_t>(n));
  std::iota(s.begin(), s.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(s);
  while (std::next_permutation(s.begin(), s.end()));
  return out;
}

}  // namespace

TEST_CASE("golden Phi_3") {
  const auto [s, img] = read_golden("phi_k3.txt");
  CHECK(phi(s, 3) == img);
  CHECK(phi_inverse(img, 3) == s);
}

TEST_CASE("golden Gamma^(3,4)") {
  const auto [s, img] = read_golden("gamma_3_4.txt");
  CHECK(gamma(s, 3, 4) == img);
  CHECK(gamma(img, 4, 3) == s);
  CHECK(wex(img) == wex(s));
  CHECK(cr(img) == cr(s));
}

TEST_CASE("domains") {
  CHECK(in_phi_domain(Permutation::parse("3,4,1,2"), 2));
  CHECK_FALSE(in_phi_domain(Permutation::parse("2,4,1,3"), 2));
  CHECK_THROWS_AS(phi(Permutation::parse("1,2,3"), 1), NotInDomain);
  CHECK_THROWS_AS(gamma(Permutation::parse("1,2,3"), 1, 1), NotInDomain);
  CHECK_FALSE(in_gamma_domain(Permutation::parse("2,1"), 0, 2));
}

TEST_CASE("Phi_k is a statistic-preserving bijection on S_6") {
  const auto perms = all(6);
  for (int k = 1; k <= 5; ++k) {
    std::set<Permutation> images;
    std::size_t domain = 0;
    for (const auto& s : perms) {
      if (!in_phi_domain(s, k)) continue;
      ++domain;
      const Permutation t = phi(s, k);
      CHECK(in_phi_codomain(t, k));
      CHECK(wex(t) == wex(s));
      CHECK(cr(t) == cr(s));
      images.insert(t);
    }
    const auto codomain = std::count_if(perms.begin(), perms.end(), [k](const Permutation& p) { return in_phi_codomain(p, k); });
    CHECK(images.size() == domain);
    CHECK(static_cast<long>(domain) == codomain);
  }
}

TEST_CASE("Gamma involution property on S_6") {
  for (const auto& s : all(6)) {
    for (int n1 = 1; n1 <= 4; ++n1) {
      for (int n2 = 1; n1 + n2 <= 6; ++n2) {
        if (!in_gamma_domain(s, n1, n2)) continue;
        const Permutation t = gamma(s, n1, n2);
        CHECK(gamma(t, n2, n1) == s);
        CHECK(cr(t) == cr(s));
      }
    }
  }
}

TEST_CASE("crossing decompositions") {
  for (const auto& s : all(6)) {
    for (int k = 1; k <= 5; ++k) {
      if (!in_phi_domain(s, k)) continue;
      const auto L = crossing_decomposition_L(s, k);
      CHECK(L[0] + L[1] + L[2] == cr(s));
      CHECK(L[2] == L[3]);
    }
    if (in_gamma_domain(s, 2, 2)) {
      const auto G = crossing_decomposition_G(s, 2, 2);
      CHECK(G[0] + G[1] + G[2] + G[3] + G[4] == cr(s));
      CHECK(g5_closed(s, 2, 2) == G[4]);
    }
  }
  std::ostringstream out;
  write_L_csv_row(Permutation::parse("3,4,1,2"), 2, out);
  CHECK(out.str().rfind("\"3,4,1,2\",", 0) == 0);
}
