// One line per acceptance criterion. Equality is exact everywhere; the only
// tolerances are the wall-clock limits below.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include "qlag/bijections.hpp"
#include "qlag/errors.hpp"
#include "qlag/families.hpp"
#include "qlag/linearization.hpp"
#include "qlag/moments.hpp"
#include "qlag/permstats.hpp"
#include "qlag/verify.hpp"

using namespace qlag;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

std::vector<std::string> golden_lines(const std::string& file) {
  std::ifstream in(std::string(QLAG_GOLDEN_DIR) + "/" + file);
  if (!in) throw InvalidArgument("missing golden file " + file);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line[0] != '#') out.push_back(line);
  }
  return out;
}

XPoly xpoly(std::initializer_list<const char*> cs) {
  std::vector<BiLaurent> v;
  for (const char* c : cs) v.push_back(BiLaurent::parse(c));
  return XPoly(std::move(v));
}

Outcome suite(const std::string& name, VerifyOptions opt, const std::vector<std::string>& required_prefixes) {
  const auto results = run_suite(name, opt);
  int pass = 0, fail = 0;
  std::string first_fail;
  for (const auto& r : results) {
    if (r.status == CheckStatus::Pass) ++pass;
    if (r.status == CheckStatus::Fail) {
      if (first_fail.empty()) first_fail = r.name + " (" + r.detail + ")";
      ++fail;
    }
  }
  for (const auto& prefix : required_prefixes) {
    const bool present = std::any_of(results.begin(), results.end(), [&](const CheckResult& r) {
      return r.name.rfind(prefix, 0) == 0 && r.status == CheckStatus::Pass;
    });
    if (!present) return {false, "no passing check named " + prefix + "*"};
  }
  std::string detail = std::to_string(pass) + " checks passed";
  if (fail) detail += ", " + std::to_string(fail) + " failed, first: " + first_fail;
  return {fail == 0, detail};
}

Outcome criterion1() {
  bool ok = laguerre_poly(1) == xpoly({"-y", "1"});
  ok = ok && laguerre_poly(2) == xpoly({"y^2 + q*y^2", "-1 - 2*y - q*y", "1"});
  ok = ok && laguerre_poly(3) == xpoly({"-2*q^2*y^3 - 2*q*y^3 - q^3*y^3 - y^3",
                                        "q^3*y^2 + y*q^2 + q + 2*q*y + 3*q^2*y^2 + 1 + 4*q*y^2 + 2*y + 3*y^2",
                                        "-q^2*y - 3*y - q - 2 - 2*q*y", "1"});
  if (!ok) return {false, "L_1..L_3 differ from the displayed polynomials"};
  const char* mu[] = {"y", "y + y^2", "y + (3+q)*y^2 + y^3", "y + (6+4*q+q^2)*y^2 + (6+4*q+q^2)*y^3 + y^4"};
  const char* mu_expanded[] = {"y", "y + y^2", "y + 3*y^2 + q*y^2 + y^3",
                               "y + 6*y^2 + 4*q*y^2 + q^2*y^2 + 6*y^3 + 4*q*y^3 + q^2*y^3 + y^4"};
  for (int n = 1; n <= 4; ++n) {
    if (!(laguerre_moment_table().at(n) == BiLaurent::parse(mu_expanded[n - 1]))) {
      return {false, std::string("mu_") + std::to_string(n) + " != " + mu[n - 1]};
    }
  }
  const BiLaurent Y = BiLaurent::y(), Q = BiLaurent::q();
  const BiLaurent i221 = (BiLaurent(1) + Q).pow(3) * (BiLaurent(1) + Q * Y) * Y.pow(2);
  for (auto m : {LinearizeMethod::Functional, LinearizeMethod::Enumeration, LinearizeMethod::Closed3}) {
    if (!(linearize({2, 2, 1}, m) == i221)) return {false, "I(2,2,1) != (1+q)^3(1+qy)y^2"};
  }
  std::vector<std::pair<int, int>> got, want;
  enumerate_class(BlockSpec({2, 2, 1}), [&](std::span<const int> s) { got.emplace_back(wex(s), cr(s)); });
  const auto rows = golden_lines("d221_weights.csv");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto comma = rows[i].find(',');
    want.emplace_back(std::stoi(rows[i].substr(0, comma)), std::stoi(rows[i].substr(comma + 1)));
  }
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  if (got.size() != 16 || got != want) return {false, "D(2,2,1) weight multiset differs"};
  return {true, "L_1..L_3, mu_1..mu_4, I(2,2,1) and 16 weights of D(2,2,1)"};
}

Outcome criterion7() {
  VerifyOptions opt;
  opt.max_n = 7;
  Outcome o = suite("bijections", opt,
                    {"prop-phi-bijection", "prop-phi-stats", "prop-gamma-bijection", "prop-gamma-stats",
                     "prop-gamma-inverse", "lem-phi-classes", "lem-gamma-classes", "lem-L3-L4", "lem-G-decomposition",
                     "lem-G5-closed"});
  if (!o.ok) return o;
  const auto p = golden_lines("phi_k3.txt");
  const auto g = golden_lines("gamma_3_4.txt");
  const Permutation ps = Permutation::parse(p[0]), pi = Permutation::parse(p[1]);
  const Permutation gs = Permutation::parse(g[0]), gi = Permutation::parse(g[1]);
  if (!(phi(ps, 3) == pi && phi_inverse(pi, 3) == ps)) return {false, "Phi_3 golden pair"};
  if (!(gamma(gs, 3, 4) == gi && gamma(gi, 4, 3) == gs)) return {false, "Gamma^(3,4) golden pair"};
  o.detail += "; both golden pairs round-trip";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "reference values", 1.0, criterion1},
      {2, "four-route moments n<=10 (enumeration to cap 10)", 120.0,
       [] {
         VerifyOptions o;
         o.max_n = 10;
         o.cap = 10;
         return suite("moments", o, {"thm-moments n=8", "thm-moments n=10", "ex-moment-list"});
       }},
      {3, "linearization theorem, closed3, orthogonality", 300.0,
       [] {
         VerifyOptions o;
         o.max_n = 8;
         return suite("linearization", o, {"thm-linearization blocks=2,2,1", "thm-linearization blocks=1,1,1,1,1,1,1,1",
                                           "thm-orthogonality n1=5,n2=5", "lem-rearrangement"});
       }},
      {4, "classical specializations", 120.0,
       [] {
         VerifyOptions o;
         o.max_n = 10;
         return suite("classical", o, {"cls-moments n=10", "cls-linearization blocks=4,4,4", "cls-derangement-count"});
       }},
      {5, "ASC layer at 20 seeded rational points", 120.0,
       [] {
         VerifyOptions o;
         o.samples = 20;
         o.max_n = 8;
         return suite("asc", o, {"thm-asc-linearization n1=5,n2=5", "def-asc-hypergeometric n=6", "thm-asc-moments"});
       }},
      {6, "Stirling inversion, specializations, closed form", 120.0,
       [] {
         VerifyOptions o;
         o.samples = 20;
         o.max_n = 8;
         return suite("stirling", o, {"def-stirling-inverse n=8", "rem-stirling-q1", "rem-stirling-y0", "thm-stirling-closed sample=19"});
       }},
      {7, "bijections exhaustive n<=7, golden pairs", 300.0, criterion7},
  };

  bool all_ok = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit_s) {
      o.ok = false;
      o.detail += "; over the time limit";
    }
    all_ok = all_ok && o.ok;
    std::cout << "criterion " << c.id << ' ' << (o.ok ? "PASS" : "FAIL") << "  " << c.title << "  [" << o.detail << "; "
              << secs << " s / limit " << c.limit_s << " s]\n";
  }
  return all_ok ? 0 : 1;
}
