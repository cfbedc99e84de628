#include "qlag/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <set>

#include "qlag/bijections.hpp"
#include "qlag/errors.hpp"
#include "qlag/families.hpp"
#include "qlag/linearization.hpp"
#include "qlag/moments.hpp"
#include "qlag/qcalc.hpp"
#include "qlag/sampling.hpp"
#include "qlag/stirling.hpp"

namespace qlag {

namespace {

class Recorder {
 public:
  void check(std::string name, bool ok, std::string detail = {}, std::string lhs = {}, std::string rhs = {}) {
    results_.push_back({std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail), std::move(lhs),
                        std::move(rhs)});
  }
  template <class T>
  void equal(std::string name, const T& lhs, const T& rhs, std::string detail = {}) {
    check(std::move(name), lhs == rhs, std::move(detail), lhs.to_string(), rhs.to_string());
  }
  void note(std::string name, std::string detail) {
    results_.push_back({std::move(name), CheckStatus::Note, std::move(detail), {}, {}});
  }
  /// Runs body; a library error becomes a failed check instead of aborting the suite.
  void guarded(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const PoleAtSample&) {
      throw;
    } catch (const Error& e) {
      check(name, false, e.what());
    }
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

/// All compositions (positive parts) of every total in [1, max_total].
std::vector<std::vector<int>> compositions(int max_total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int remaining) {
    if (!cur.empty()) out.push_back(cur);
    for (int part = 1; part <= remaining; ++part) {
      cur.push_back(part);
      rec(remaining - part);
      cur.pop_back();
    }
  };
  rec(max_total);
  return out;
}

/// Draws sample points until `samples` of them evaluate without a pole.
void sampled(RationalSampler& rng, int samples, const std::function<void(RationalSampler&, int)>& body) {
  int tries = 0;
  for (int s = 0; s < samples;) {
    try {
      body(rng, s);
      ++s;
    } catch (const PoleAtSample&) {
      if (++tries > kMaxResamples * samples) throw PoleAtSample("too many rejected sample points");
    }
  }
}

BiLaurent Y() { return BiLaurent::y(); }
BiLaurent Q() { return BiLaurent::q(); }

// --- moments -----------------------------------------------------------

void moments_suite(Recorder& rec, const VerifyOptions& opt) {
  const int N = opt.max_n > 0 ? opt.max_n : 8;
  const auto& table = laguerre_moment_table();
  const auto gf = moment_gf_laguerre(N);
  for (int n = 0; n <= N; ++n) {
    rec.guarded("thm-moments n=" + std::to_string(n), [&] {
      const BiLaurent motzkin = table.at(n);
      const BiLaurent closed = moment_closed_laguerre(n);
      const BiLaurent series = gf[n];
      bool ok = motzkin == closed && closed == series;
      std::string detail = "motzkin,closed,gf";
      BiLaurent lhs = motzkin;
      if (n <= opt.cap) {
        lhs = permutation_polynomial(n, opt.cap);
        ok = ok && lhs == motzkin;
        detail = "enum," + detail;
      }
      rec.check("thm-moments n=" + std::to_string(n), ok, detail, lhs.to_string(), motzkin.to_string());
    });
  }

  const std::vector<std::string> listed = {"1*y", "1*y + 1*y^2", "1*y + 3*y^2 + 1*y^2*q + 1*y^3",
                                           "1*y + 6*y^2 + 4*y^2*q + 1*y^2*q^2 + 6*y^3 + 4*y^3*q + 1*y^3*q^2 + 1*y^4"};
  for (int n = 1; n <= std::min<int>(N, static_cast<int>(listed.size())); ++n) {
    rec.equal("ex-moment-list n=" + std::to_string(n), table.at(n), BiLaurent::parse(listed[static_cast<std::size_t>(n - 1)]));
  }

  const auto charlier_gf = moment_gf_charlier(N);
  const auto charlier_motzkin = moments_motzkin_all(N, jacobi_for(charlier_params()));
  for (int n = 1; n <= N; ++n) {
    const std::string name = "thm-charlier-moments n=" + std::to_string(n);
    rec.guarded(name, [&] {
      const BiLaurent closed = moment_closed_charlier(n);
      const bool ok = closed == charlier_gf[n] && closed == charlier_motzkin[static_cast<std::size_t>(n)];
      rec.check(name, ok, "closed,gf,motzkin; polynomial in a and q", closed.to_string("a"),
                charlier_gf[n].to_string("a"));
    });
  }

  // mu_n = sum_k C(n,k) y^k d_{n-k}
  const int conv = std::min({N, 8, opt.cap});
  std::vector<BiLaurent> d{BiLaurent(1)};
  for (int m = 1; m <= conv; ++m) d.push_back(class_polynomial(BlockSpec(std::vector<int>(static_cast<std::size_t>(m), 1)), opt.cap));
  for (int n = 0; n <= conv; ++n) {
    BiLaurent sum;
    for (int k = 0; k <= n; ++k) sum += d[static_cast<std::size_t>(n - k)].shifted(k, 0).scaled(binomial(n, k));
    rec.equal("lem-derangement-convolution n=" + std::to_string(n), sum, table.at(n));
  }

  for (int n = 1; n <= std::min(N, 8); ++n) {
    const BiLaurent mu = table.at(n);
    bool palindromic = true;
    for (int j = 0; j <= n + 1; ++j) palindromic = palindromic && mu.y_coefficient(j) == mu.y_coefficient(n + 1 - j);
    rec.note("obs-palindromic-in-y n=" + std::to_string(n), palindromic ? "holds (observation only)" : "fails (observation only)");
  }

  for (int n = 0; n <= std::min(N, 6); ++n) {
    rec.equal("lem-asc-moments-laguerre n=" + std::to_string(n), asc_moment_stirling(n, laguerre_params()), table.at(n));
  }
  const int Ngf = std::min(N, 4);
  const auto asc_gf = moment_gf_asc(laguerre_params(), Ngf);
  const auto lag_gf = moment_gf_laguerre(Ngf);
  for (int n = 0; n <= Ngf; ++n) rec.equal("gf-asc-specializes n=" + std::to_string(n), asc_gf[n], lag_gf[n]);
}

// --- stirling ----------------------------------------------------------

void stirling_suite(Recorder& rec, const VerifyOptions& opt) {
  const int N = opt.max_n > 0 ? opt.max_n : 8;
  const auto S = stirling_S_table(N, Y(), Q());
  const auto s = stirling_s_table(N, Y(), Q());
  auto at = [](const auto& t, int n, int k) { return k <= n ? t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] : BiLaurent(0); };
  for (int n = 0; n <= N; ++n) {
    bool ok = true, ok_t = true;
    for (int k = 0; k <= n; ++k) {
      BiLaurent a, b;
      for (int j = k; j <= n; ++j) {
        a += at(S, n, j) * at(s, j, k);
        b += at(s, n, j) * at(S, j, k);
      }
      ok = ok && a == BiLaurent(n == k ? 1 : 0);
      ok_t = ok_t && b == BiLaurent(n == k ? 1 : 0);
    }
    rec.check("def-stirling-inverse n=" + std::to_string(n), ok, "sum_j S(n,j) s(j,k) = delta");
    rec.check("def-stirling-inverse-transpose n=" + std::to_string(n), ok_t, "sum_j s(n,j) S(j,k) = delta");
  }

  // Classical S(n,k) and the y = 0 q-Stirling numbers, each from its own recurrence.
  std::vector<std::vector<BigRational>> classical(static_cast<std::size_t>(N) + 1);
  std::vector<std::vector<BiLaurent>> qstir(static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) {
    classical[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(N) + 1, BigRational(0));
    qstir[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(N) + 1, BiLaurent(0));
    for (int k = 0; k <= n; ++k) {
      if (n == 0) {
        classical[0][0] = 1;
        qstir[0][0] = BiLaurent(1);
        continue;
      }
      const auto un = static_cast<std::size_t>(n), uk = static_cast<std::size_t>(k);
      BigRational c = k ? classical[un - 1][uk - 1] : BigRational(0);
      BiLaurent qc = k ? qstir[un - 1][uk - 1] : BiLaurent(0);
      if (k < n) {
        c += BigRational(k) * classical[un - 1][uk];
        qc += q_int(k, Q()) * qstir[un - 1][uk];
      }
      classical[un][uk] = c;
      qstir[un][uk] = qc;
    }
  }
  for (int n = 0; n <= N; ++n) {
    bool ok1 = true, ok0 = true;
    for (int k = 0; k <= n; ++k) {
      const BiLaurent v = at(S, n, k);
      const BiLaurent expect1 = (BiLaurent(1) - Y()).pow(n - k).scaled(classical[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]);
      ok1 = ok1 && v.eval_q(1) == expect1;
      ok0 = ok0 && v.eval_y(0) == qstir[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }
    rec.check("rem-stirling-q1 n=" + std::to_string(n), ok1, "S_q(n,k,y)|q=1 = S(n,k)(1-y)^(n-k)");
    rec.check("rem-stirling-y0 n=" + std::to_string(n), ok0, "S_q(n,k,0) = classical q-Stirling");
  }

  RationalSampler rng(opt.seed);
  sampled(rng, opt.samples, [&](RationalSampler& r, int idx) {
    const BigRational y = r.next(), q = r.next();
    const auto table = stirling_S_table(N, y, q);
    bool ok = true;
    for (int n = 0; n <= N; ++n) {
      for (int k = 0; k <= n; ++k) {
        ok = ok && stirling_closed(n, k, y, q) == table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
      }
    }
    rec.check("thm-stirling-closed sample=" + std::to_string(idx), ok, "y=" + y.to_string() + " q=" + q.to_string());
  });

  sampled(rng, 1, [&](RationalSampler& r, int) {
    const BigRational y = r.next(), q = r.next();
    std::vector<BigRational> a{BigRational(0)};
    for (int i = 1; i <= N; ++i) a.push_back(q_int(i, q) * (BigRational(1) - y * rpow(q, -i)));
    std::vector<std::pair<int, bool>> outcomes;
    for (int k = 0; k <= N; ++k) {
      std::vector<BigRational> g;
      for (int i = 0; i <= k; ++i) g.push_back(partial_fraction_gamma(k, i, y, q));
      bool ok = true;
      for (int t = 1; t <= k + 2; ++t) {
        BigRational rhs(0);
        for (int i = 0; i <= k; ++i) {
          BigRational prod(1);
          for (int j = 1; j <= k; ++j) {
            if (j != i) prod *= BigRational(1) - a[static_cast<std::size_t>(j)] * BigRational(t);
          }
          rhs += g[static_cast<std::size_t>(i)] * prod;
        }
        ok = ok && rhs == BigRational(t).pow(k);
      }
      outcomes.emplace_back(k, ok);
    }
    for (auto [k, ok] : outcomes) {
      rec.check("lem-partial-fraction k=" + std::to_string(k), ok, "y=" + y.to_string() + " q=" + q.to_string() + ", k+2 values of t");
    }
  });
}

// --- linearization -------------------------------------------------------

XPoly xpoly_from(std::initializer_list<const char*> coeffs) {
  std::vector<BiLaurent> c;
  for (const char* s : coeffs) c.push_back(BiLaurent::parse(s));
  return XPoly(std::move(c));
}

void linearization_suite(Recorder& rec, const VerifyOptions& opt) {
  const int N = std::min(opt.max_n > 0 ? opt.max_n : 8, opt.cap);
  rec.equal("ex-laguerre n=1", laguerre_poly(1), xpoly_from({"-y", "1"}));
  rec.equal("ex-laguerre n=2", laguerre_poly(2), xpoly_from({"y^2 + q*y^2", "-1 - 2*y - q*y", "1"}));
  rec.equal("ex-laguerre n=3", laguerre_poly(3),
            xpoly_from({"-2*q^2*y^3 - 2*q*y^3 - q^3*y^3 - y^3",
                        "q^3*y^2 + y*q^2 + q + 2*q*y + 3*q^2*y^2 + 1 + 4*q*y^2 + 2*y + 3*y^2",
                        "-q^2*y - 3*y - q - 2 - 2*q*y", "1"}));
  for (int n = 0; n <= N; ++n) {
    rec.equal("def-laguerre-explicit n=" + std::to_string(n), laguerre_poly(n, LaguerreMethod::Explicit),
              laguerre_poly(n, LaguerreMethod::Recurrence));
  }

  rec.equal("ex-I blocks=2,2,1", linearize({2, 2, 1}, LinearizeMethod::Closed3),
            (BiLaurent(1) + Q()).pow(3) * (BiLaurent(1) + Q() * Y()) * Y().pow(2));

  std::map<std::vector<int>, BiLaurent> by_multiset;
  std::map<std::vector<int>, bool> invariant;
  for (const auto& blocks : compositions(N)) {
    const std::string name = "thm-linearization blocks=" + join(blocks);
    rec.guarded(name, [&] {
      const BiLaurent e = linearize(blocks, LinearizeMethod::Enumeration, opt.cap);
      const BiLaurent f = linearize(blocks, LinearizeMethod::Functional, opt.cap);
      bool ok = e == f;
      std::string detail = "enum,functional";
      if (blocks.size() == 3) {
        ok = ok && linearize(blocks, LinearizeMethod::Closed3) == e;
        detail += ",closed3";
      }
      rec.check(name, ok, detail, e.to_string(), f.to_string());
      std::vector<int> key = blocks;
      std::sort(key.begin(), key.end());
      auto [it, fresh] = by_multiset.try_emplace(key, e);
      invariant.try_emplace(key, true);
      if (!fresh && !(it->second == e)) invariant[key] = false;
    });
  }
  for (const auto& [key, ok] : invariant) {
    rec.check("lem-rearrangement sizes=" + join(key), ok, "class polynomial equal over all orderings");
  }

  // (1, n, rest) = (n+1, rest) + (yq+1)[n] (n, rest) + y [n]^2 (n-1, rest)
  std::vector<std::vector<int>> rests{{}};
  for (auto& c : compositions(std::max(0, N - 2))) rests.push_back(c);
  for (const auto& rest : rests) {
    int rest_total = 0;
    for (int v : rest) rest_total += v;
    for (int n = 1; 1 + n + rest_total <= N; ++n) {
      auto with = [&rest, cap = opt.cap](int first) {
        std::vector<int> b{first};
        b.insert(b.end(), rest.begin(), rest.end());
        return linearize(b, LinearizeMethod::Enumeration, cap);
      };
      std::vector<int> lhs_blocks{1, n};
      lhs_blocks.insert(lhs_blocks.end(), rest.begin(), rest.end());
      const BiLaurent lhs = linearize(lhs_blocks, LinearizeMethod::Enumeration, opt.cap);
      const BiLaurent qn = q_int(n, Q());
      const BiLaurent rhs = with(n + 1) + (Y() * Q() + BiLaurent(1)) * qn * with(n) + Y() * qn * qn * with(n - 1);
      rec.equal("thm-I-recurrence blocks=" + join(lhs_blocks), lhs, rhs);
    }
  }

  for (int n1 = 0; n1 <= 5; ++n1) {
    for (int n2 = 0; n2 <= 5; ++n2) {
      const BiLaurent v = functional_apply(laguerre_poly(n1) * laguerre_poly(n2), laguerre_moment_table());
      const BiLaurent expect = n1 == n2 ? (q_factorial(n1, Q()).pow(2)).shifted(n1, 0) : BiLaurent(0);
      rec.equal("thm-orthogonality n1=" + std::to_string(n1) + ",n2=" + std::to_string(n2), v, expect);
    }
  }
  for (int n = 1; n <= 4; ++n) {
    rec.equal("thm-single-block n=" + std::to_string(n), linearize({n}, LinearizeMethod::Functional), BiLaurent(0));
  }
}

// --- ASC layer ------------------------------------------------------------

void asc_suite(Recorder& rec, const VerifyOptions& opt) {
  const int N = opt.max_n > 0 ? opt.max_n : 8;
  RationalSampler rng(opt.seed);

  for (int n1 = 0; n1 <= 5; ++n1) {
    for (int n2 = 0; n2 <= 5; ++n2) {
      bool ok = true;
      std::string first_bad;
      sampled(rng, opt.samples, [&](RationalSampler& r, int) {
        const BigRational alpha = r.next(), beta = r.next(), q = r.next();
        std::vector<std::pair<BigRational, BigRational>> values;
        for (int n3 = 0; n3 <= n1 + n2 + 1; ++n3) {
          values.emplace_back(asc_linearize_C(n1, n2, n3, alpha, beta, q, AscCMethod::Closed),
                              asc_linearize_C(n1, n2, n3, alpha, beta, q, AscCMethod::Basis));
        }
        for (std::size_t n3 = 0; n3 < values.size(); ++n3) {
          if (!(values[n3].first == values[n3].second) && first_bad.empty()) {
            first_bad = "n3=" + std::to_string(n3) + " alpha=" + alpha.to_string() + " beta=" + beta.to_string() +
                        " q=" + q.to_string();
          }
          ok = ok && values[n3].first == values[n3].second;
        }
      });
      rec.check("thm-asc-linearization n1=" + std::to_string(n1) + ",n2=" + std::to_string(n2), ok,
                first_bad.empty() ? std::to_string(opt.samples) + " samples, all n3" : first_bad);
    }
  }

  for (int n = 0; n <= std::min(N, 6); ++n) {
    bool ok = true;
    sampled(rng, opt.samples, [&](RationalSampler& r, int) {
      const BigRational u = r.next(), alpha = r.next(), beta = r.next(), q = r.next();
      const BigRational x = (u + u.inverse()) / BigRational(2);
      const BigRational expect = asc_Q(n, alpha, beta, q).eval(x);
      const BigRational f1 = asc_hypergeometric(n, u, alpha, beta, q, 1);
      const BigRational f2 = asc_hypergeometric(n, u, alpha, beta, q, 2);
      const BigRational f3 = asc_hypergeometric(n, u, alpha, beta, q, 3);
      ok = ok && f1 == expect && f2 == expect && f3 == expect;
    });
    rec.check("def-asc-hypergeometric n=" + std::to_string(n), ok, "forms 1,2,3 vs recurrence");
  }

  sampled(rng, opt.samples, [&](RationalSampler& r, int idx) {
    const ASCParams<BigRational> p{r.next(), r.next(), r.next()};
    const auto motzkin = moments_motzkin_all(N, jacobi_for(p));
    const auto gf = moment_gf_asc(p, N);
    std::vector<bool> oks;
    for (int n = 0; n <= N; ++n) {
      const BigRational a = asc_moment_stirling(n, p);
      const BigRational b = asc_moment_explicit(n, p);
      oks.push_back(a == b && b == gf[n] && gf[n] == motzkin[static_cast<std::size_t>(n)]);
    }
    rec.check("thm-asc-moments sample=" + std::to_string(idx),
              std::all_of(oks.begin(), oks.end(), [](bool b) { return b; }),
              "y=" + p.y.to_string() + " B=" + p.B.to_string() + " q=" + p.q.to_string() + ", n<=" + std::to_string(N));
  });

  const JacobiCoefficients<BiLaurent> lag = jacobi_for(laguerre_params());
  for (int n = 0; n <= 4; ++n) {
    rec.equal("def-jacobi-laguerre-b n=" + std::to_string(n), lag.b(n), Y() * q_int(n + 1, Q()) + q_int(n, Q()));
    rec.equal("def-jacobi-laguerre-lam n=" + std::to_string(n), lag.lam(n), Y() * q_int(n, Q()).pow(2));
  }
}

// --- bijections -----------------------------------------------------------

struct Golden {
  const char* name;
  const char* sigma;
  const char* image;
  int a;
  int b;
};

constexpr Golden kPhiExample{"golden-phi k=3 n=15", "6,7,15,8,11,10,13,14,1,4,12,5,3,9,2",
                             "5,8,7,10,11,13,1,9,2,15,6,14,3,4,12", 3, 0};
constexpr Golden kGammaExample{"golden-gamma n1=3,n2=4 n=15", "15,4,6,13,3,8,2,14,1,7,12,5,10,9,11",
                               "15,5,13,6,3,1,8,14,2,7,12,4,10,9,11", 3, 4};

std::vector<Permutation> all_perms(int n) {
  std::vector<Permutation> out;
  enumerate_all(n, [&out](std::span<const int> s) { out.emplace_back(std::vector<int>(s.begin(), s.end())); }, n);
  return out;
}

void bijections_suite(Recorder& rec, const VerifyOptions& opt) {
  const int N = opt.max_n > 0 ? opt.max_n : 7;

  {
    const Permutation s = Permutation::parse(kPhiExample.sigma);
    const Permutation img = phi(s, kPhiExample.a);
    rec.equal(kPhiExample.name, img, Permutation::parse(kPhiExample.image));
    rec.equal(std::string(kPhiExample.name) + " inverse", phi_inverse(img, kPhiExample.a), s);
    const auto L = crossing_decomposition_L(s, kPhiExample.a);
    rec.check(std::string(kPhiExample.name) + " stats", wex(img) == wex(s) && cr(img) == cr(s) && L[0] + L[1] + L[2] == cr(s) && L[2] == L[3],
              "wex=" + std::to_string(wex(s)) + " cr=" + std::to_string(cr(s)));
  }
  {
    const Permutation s = Permutation::parse(kGammaExample.sigma);
    const Permutation img = gamma(s, kGammaExample.a, kGammaExample.b);
    rec.equal(kGammaExample.name, img, Permutation::parse(kGammaExample.image));
    rec.equal(std::string(kGammaExample.name) + " inverse", gamma(img, kGammaExample.b, kGammaExample.a), s);
    const auto G = crossing_decomposition_G(s, kGammaExample.a, kGammaExample.b);
    rec.check(std::string(kGammaExample.name) + " stats",
              wex(img) == wex(s) && cr(img) == cr(s) && G[0] + G[1] + G[2] + G[3] + G[4] == cr(s) &&
                  g5_closed(s, kGammaExample.a, kGammaExample.b) == G[4],
              "wex=" + std::to_string(wex(s)) + " cr=" + std::to_string(cr(s)));
  }

  for (int n = 1; n <= N; ++n) {
    const auto perms = all_perms(n);
    const std::string sn = " n=" + std::to_string(n);

    bool ai = true;
    for (const auto& s : perms) {
      const Permutation inv = s.inverse();
      for (int i = 1; i <= n; ++i) {
        int a = 0, b = 0, c = 0;
        for (int j = 1; j <= n; ++j) {
          if (j <= i && i < s(j)) ++a;
          if (j > i && i >= s(j)) ++b;
          if (j <= i && i < inv(j)) ++c;
        }
        ai = ai && a == b && b == c;
      }
    }
    rec.check("lem-A-identity" + sn, ai, "|A_i(s)| = #{j > i >= s(j)} = |A_i(s^-1)|");

    for (int k = 1; k < n; ++k) {
      std::set<Permutation> images;
      std::size_t domain = 0, codomain = 0;
      bool stats = true, round = true, decomp = true, shift = true;
      for (const auto& s : perms) {
        if (in_phi_codomain(s, k)) ++codomain;
        if (!in_phi_domain(s, k)) continue;
        ++domain;
        const Permutation img = phi(s, k);
        images.insert(img);
        stats = stats && in_phi_codomain(img, k) && wex(img) == wex(s) && cr(img) == cr(s);
        round = round && phi_inverse(img, k) == s;
        const auto L = crossing_decomposition_L(s, k);
        decomp = decomp && L[0] + L[1] + L[2] == cr(s) && L[2] == L[3];
        for (int i = 1; i <= n - k; ++i) {
          if (s(i + k) > k) shift = shift && i - img(i) == (i + k) - s(i + k);
        }
      }
      const std::string tag = " k=" + std::to_string(k) + sn;
      rec.check("prop-phi-bijection" + tag, images.size() == domain && domain == codomain,
                std::to_string(domain) + " -> " + std::to_string(codomain));
      rec.check("prop-phi-stats" + tag, stats, "(wex, cr) preserved");
      rec.check("prop-phi-roundtrip" + tag, round);
      rec.check("lem-L3-L4" + tag, decomp, "L1+L2+L3 = cr and |L3| = |L4|");
      rec.check("prop-phi-shift" + tag, shift, "i - s'(i) = (i+k) - s(i+k) on arcs above k");
    }

    for (int n1 = 1; n1 < n; ++n1) {
      for (int n2 = 1; n1 + n2 <= n; ++n2) {
        std::set<Permutation> images;
        std::size_t domain = 0, codomain = 0;
        bool stats = true, round = true, decomp = true, g5 = true, fixed = true;
        for (const auto& s : perms) {
          if (in_gamma_domain(s, n2, n1)) ++codomain;
          if (!in_gamma_domain(s, n1, n2)) continue;
          ++domain;
          const Permutation img = gamma(s, n1, n2);
          images.insert(img);
          stats = stats && in_gamma_domain(img, n2, n1) && wex(img) == wex(s) && cr(img) == cr(s);
          round = round && gamma(img, n2, n1) == s;
          const auto G = crossing_decomposition_G(s, n1, n2);
          decomp = decomp && G[0] + G[1] + G[2] + G[3] + G[4] == cr(s);
          g5 = g5 && g5_closed(s, n1, n2) == G[4];
          for (int i = n1 + n2 + 1; i <= n; ++i) {
            if (s(i) > n1 + n2) fixed = fixed && img(i) == s(i);
          }
        }
        const std::string tag = " n1=" + std::to_string(n1) + ",n2=" + std::to_string(n2) + sn;
        rec.check("prop-gamma-bijection" + tag, images.size() == domain && domain == codomain,
                  std::to_string(domain) + " -> " + std::to_string(codomain));
        rec.check("prop-gamma-stats" + tag, stats, "(wex, cr) preserved");
        rec.check("prop-gamma-inverse" + tag, round, "Gamma^(n2,n1) inverts Gamma^(n1,n2)");
        rec.check("lem-G-decomposition" + tag, decomp, "G1+...+G5 = cr");
        rec.check("lem-G5-closed" + tag, g5);
        rec.check("prop-gamma-fixed-above" + tag, fixed);
      }
    }
  }

  // Derangement classes are carried onto their rotated / swapped classes.
  for (const auto& blocks : compositions(N)) {
    if (blocks.size() < 2) continue;
    const BlockSpec b(blocks);
    std::vector<int> rotated(blocks.begin() + 1, blocks.end());
    rotated.push_back(blocks[0]);
    std::vector<int> swapped = blocks;
    std::swap(swapped[0], swapped[1]);
    const BlockSpec br(rotated), bs(swapped);
    std::set<Permutation> phi_img, gamma_img;
    bool phi_ok = true, gamma_ok = true;
    std::size_t count = 0;
    enumerate_class(b, [&](std::span<const int> sp) {
      const Permutation s(std::vector<int>(sp.begin(), sp.end()));
      ++count;
      const Permutation p = phi(s, blocks[0]);
      phi_ok = phi_ok && is_generalized_derangement(p, br);
      phi_img.insert(p);
      const Permutation g = gamma(s, blocks[0], blocks[1]);
      gamma_ok = gamma_ok && is_generalized_derangement(g, bs);
      gamma_img.insert(g);
    }, N);
    std::size_t count_r = 0, count_s = 0;
    enumerate_class(br, [&](std::span<const int>) { ++count_r; }, N);
    enumerate_class(bs, [&](std::span<const int>) { ++count_s; }, N);
    rec.check("lem-phi-classes blocks=" + join(blocks), phi_ok && phi_img.size() == count && count == count_r,
              "D(" + b.to_string() + ") onto D(" + br.to_string() + ")");
    rec.check("lem-gamma-classes blocks=" + join(blocks), gamma_ok && gamma_img.size() == count && count == count_s,
              "D(" + b.to_string() + ") onto D(" + bs.to_string() + ")");
  }
}

// --- classical --------------------------------------------------------------

void classical_suite(Recorder& rec, const VerifyOptions& opt) {
  const int N = opt.max_n > 0 ? opt.max_n : 10;
  const auto& table = laguerre_moment_table();
  for (int n = 0; n <= N; ++n) {
    const std::string name = "cls-moments n=" + std::to_string(n);
    const BigRational m = table.at(n).eval(1, 1);
    bool ok = m == factorial(n);
    std::string detail = "motzkin";
    if (n <= opt.cap) {
      ok = ok && permutation_polynomial(n, opt.cap).eval(1, 1) == factorial(n);
      detail += ",enum";
    }
    rec.check(name, ok, detail, m.to_string(), factorial(n).to_string());
  }
  for (int n1 = 0; n1 <= 4; ++n1) {
    for (int n2 = 0; n2 <= 4; ++n2) {
      for (int n3 = 0; n3 <= 4; ++n3) {
        const BigRational expect = classical_linearization3(n1, n2, n3);
        const BigRational f = linearize({n1, n2, n3}, LinearizeMethod::Functional).eval(1, 1);
        const BigRational c = linearize({n1, n2, n3}, LinearizeMethod::Closed3).eval(1, 1);
        rec.check("cls-linearization blocks=" + join({n1, n2, n3}), f == expect && c == expect, "functional,closed3",
                  f.to_string(), expect.to_string());
      }
    }
  }
  for (const auto& blocks : compositions(std::min(8, opt.cap))) {
    long count = 0;
    enumerate_class(BlockSpec(blocks), [&count](std::span<const int>) { ++count; }, opt.cap);
    const BigRational f = linearize(blocks, LinearizeMethod::Functional).eval(1, 1);
    rec.check("cls-derangement-count blocks=" + join(blocks), f == BigRational(count), "L(prod L) at q=y=1 = |D|",
              f.to_string(), std::to_string(count));
  }
}

using SuiteFn = void (*)(Recorder&, const VerifyOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"moments", moments_suite},       {"stirling", stirling_suite},       {"linearization", linearization_suite},
      {"asc", asc_suite},               {"bijections", bijections_suite},   {"classical", classical_suite},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v{"all"};
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

std::vector<CheckResult> run_suite(std::string_view suite, const VerifyOptions& options) {
  if (options.samples < 1) throw InvalidArgument("sample count must be >= 1");
  if (options.cap < 1) throw InvalidArgument("enumeration cap must be >= 1");
  Recorder rec;
  bool found = false;
  for (const auto& [name, fn] : registry()) {
    if (suite == "all" || suite == name) {
      fn(rec, options);
      found = true;
    }
  }
  if (!found) throw InvalidArgument("unknown suite '" + std::string(suite) + "'");
  auto results = rec.take();
  std::stable_sort(results.begin(), results.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return results;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::none_of(results.begin(), results.end(), [](const CheckResult& r) { return r.status == CheckStatus::Fail; });
}

std::string_view status_text(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Note: return "NOTE";
  }
  return "?";
}

void write_golden_csv(const std::vector<CheckResult>& results, std::ostream& out) {
  out << "case,lhs,rhs,equal\n";
  for (const auto& r : results) {
    if (r.lhs.empty() && r.rhs.empty()) continue;
    out << '"' << r.name << "\",\"" << r.lhs << "\",\"" << r.rhs << "\"," << (r.lhs == r.rhs ? "true" : "false") << '\n';
  }
}

}  // namespace qlag
