// qlag: tables, formulas, bijections and identity checks from the command line.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "qlag/bijections.hpp"
#include "qlag/errors.hpp"
#include "qlag/families.hpp"
#include "qlag/linearization.hpp"
#include "qlag/moments.hpp"
#include "qlag/permstats.hpp"
#include "qlag/stirling.hpp"
#include "qlag/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace qlag;

struct Config {
  int cap = kDefaultCap;
  std::uint64_t seed = 42;
  int samples = 20;
  std::string format = "text";
  std::string output;
};

json terms_json(const BiLaurent& p) {
  json terms = json::array();
  for (const auto& [m, c] : p.terms()) terms.push_back({{"y", m.ey}, {"q", m.eq}, {"coeff", c.to_string()}});
  return json{{"terms", terms}};
}

std::string terms_csv(const BiLaurent& p) {
  std::string out = "y,q,coeff\n";
  for (const auto& [m, c] : p.terms()) out += std::to_string(m.ey) + "," + std::to_string(m.eq) + "," + c.to_string() + "\n";
  return out;
}

std::string render(const Config& cfg, const BiLaurent& p, std::string_view yname = "y") {
  if (cfg.format == "json") return terms_json(p).dump() + "\n";
  if (cfg.format == "csv") return terms_csv(p);
  return p.to_string(yname) + "\n";
}

std::string render(const Config& cfg, const BigRational& v) {
  if (cfg.format == "json") return json{{"value", v.to_string()}}.dump() + "\n";
  if (cfg.format == "csv") return "value\n" + v.to_string() + "\n";
  return v.to_string() + "\n";
}

template <class C>
std::string render_poly(const Config& cfg, const Poly<C>& p) {
  if (cfg.format == "json") {
    json coeffs = json::array();
    for (int k = 0; k <= p.degree(); ++k) {
      if constexpr (std::is_same_v<C, BiLaurent>) {
        coeffs.push_back({{"x", k}, {"terms", terms_json(p.coeff(k))["terms"]}});
      } else {
        coeffs.push_back({{"x", k}, {"coeff", p.coeff(k).to_string()}});
      }
    }
    return json{{"coefficients", coeffs}}.dump() + "\n";
  }
  if (cfg.format == "csv") {
    std::string out = "x,coeff\n";
    for (int k = 0; k <= p.degree(); ++k) out += std::to_string(k) + ",\"" + detail::text(p.coeff(k)) + "\"\n";
    return out;
  }
  return p.to_string() + "\n";
}

class Emitter {
 public:
  explicit Emitter(const Config& cfg) : cfg_(cfg) {}
  void operator()(const std::string& text) const {
    if (cfg_.output.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(cfg_.output);
    if (!f) throw InvalidArgument("cannot write " + cfg_.output);
    f << text;
  }

 private:
  const Config& cfg_;
};

BigRational rational_arg(const std::optional<std::string>& s, const char* what) {
  if (!s) throw InvalidArgument(std::string("--") + what + " is required");
  return BigRational::parse(*s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-Laguerre moments, linearization coefficients and permutation bijections"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--cap", cfg.cap, "Enumeration size cap")->envname("QLAG_ENUM_CAP")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Seed for rational sample points");
  app.add_option("--samples", cfg.samples, "Sample points per check")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("-o,--output", cfg.output, "Write output to a file");
  const Emitter emit(cfg);

  int exit_status = 0;

  // moments
  auto* mom = app.add_subcommand("moments", "Print mu_n");
  int mom_n = 0;
  std::string mom_family = "laguerre", mom_method = "motzkin";
  std::optional<std::string> alpha, beta, qv;
  mom->add_option("--n", mom_n)->required()->check(CLI::NonNegativeNumber);
  mom->add_option("--family", mom_family)->check(CLI::IsMember({"laguerre", "charlier", "asc"}));
  mom->add_option("--method", mom_method)->check(CLI::IsMember({"enum", "motzkin", "closed", "gf"}));
  mom->add_option("--alpha", alpha, "asc only");
  mom->add_option("--beta", beta, "asc only");
  mom->add_option("--q", qv, "asc only");
  mom->callback([&] {
    if (mom_family == "laguerre") {
      BiLaurent v;
      if (mom_method == "enum") v = permutation_polynomial(mom_n, cfg.cap);
      else if (mom_method == "closed") v = moment_closed_laguerre(mom_n);
      else if (mom_method == "gf") v = moment_gf_laguerre(mom_n)[mom_n];
      else v = moments_motzkin(mom_n, jacobi_for(laguerre_params()));
      emit(render(cfg, v));
    } else if (mom_family == "charlier") {
      BiLaurent v;
      if (mom_method == "enum") throw InvalidArgument("no enumeration route for charlier moments");
      if (mom_method == "closed") v = moment_closed_charlier(mom_n);
      else if (mom_method == "gf") v = moment_gf_charlier(mom_n)[mom_n];
      else v = moments_motzkin(mom_n, jacobi_for(charlier_params()));
      emit(render(cfg, v, "a"));
    } else {
      const BigRational a = rational_arg(alpha, "alpha"), b = rational_arg(beta, "beta"), q = rational_arg(qv, "q");
      if (a.is_zero()) throw InvalidArgument("--alpha must be nonzero");
      const ASCParams<BigRational> p{(a * a).inverse(), a * b, q};
      BigRational v;
      if (mom_method == "enum") throw InvalidArgument("no enumeration route for asc moments");
      if (mom_method == "closed") v = asc_moment_explicit(mom_n, p);
      else if (mom_method == "gf") v = moment_gf_asc(p, mom_n)[mom_n];
      else v = moments_motzkin(mom_n, jacobi_for(p));
      emit(render(cfg, v));
    }
  });

  // poly
  auto* poly = app.add_subcommand("poly", "Print L_n or Q_n");
  int poly_n = 0;
  std::string poly_family = "laguerre";
  poly->add_option("--n", poly_n)->required()->check(CLI::NonNegativeNumber);
  poly->add_option("--family", poly_family)->check(CLI::IsMember({"laguerre", "asc"}));
  poly->add_option("--alpha", alpha);
  poly->add_option("--beta", beta);
  poly->add_option("--q", qv);
  poly->callback([&] {
    if (poly_family == "laguerre") {
      emit(render_poly(cfg, laguerre_poly(poly_n)));
    } else {
      emit(render_poly(cfg, asc_Q(poly_n, rational_arg(alpha, "alpha"), rational_arg(beta, "beta"), rational_arg(qv, "q"))));
    }
  });

  // stirling
  auto* stir = app.add_subcommand("stirling", "Print S_q(n,k,y) or s_q(n,k,y)");
  std::string kind = "S";
  int st_n = 0, st_k = 0;
  stir->add_option("--kind", kind)->check(CLI::IsMember({"S", "s"}));
  stir->add_option("--n", st_n)->required()->check(CLI::NonNegativeNumber);
  stir->add_option("--k", st_k)->required()->check(CLI::NonNegativeNumber);
  stir->callback([&] { emit(render(cfg, kind == "S" ? stirling_S(st_n, st_k) : stirling_s(st_n, st_k))); });

  // linearize
  auto* lin = app.add_subcommand("linearize", "Print I(n_1, ..., n_k)");
  std::string blocks_text, lin_method = "functional";
  lin->add_option("--blocks", blocks_text)->required();
  lin->add_option("--method", lin_method)->check(CLI::IsMember({"functional", "enum", "closed3"}));
  lin->callback([&] {
    const std::vector<int> blocks = parse_int_list(blocks_text);
    for (int b : blocks) {
      if (b < 0) throw InvalidArgument("block sizes must be >= 0");
    }
    const LinearizeMethod m = lin_method == "enum"      ? LinearizeMethod::Enumeration
                              : lin_method == "closed3" ? LinearizeMethod::Closed3
                                                        : LinearizeMethod::Functional;
    emit(render(cfg, linearize(blocks, m, cfg.cap)));
  });

  // bijection
  auto* bij = app.add_subcommand("bijection", "Apply Phi_k or Gamma^(n1,n2)");
  std::string map_name, sigma_text;
  std::optional<int> k_opt, n1_opt, n2_opt;
  bool with_stats = false;
  bij->add_option("--map", map_name)->required()->check(CLI::IsMember({"phi", "gamma"}));
  bij->add_option("--sigma", sigma_text)->required();
  bij->add_option("--k", k_opt);
  bij->add_option("--n1", n1_opt);
  bij->add_option("--n2", n2_opt);
  bij->add_flag("--stats", with_stats, "Also print (wex, cr) before and after");
  bij->callback([&] {
    const Permutation s = Permutation::parse(sigma_text);
    Permutation img = s;
    if (map_name == "phi") {
      if (!k_opt) throw InvalidArgument("--k is required for phi");
      img = phi(s, *k_opt);
    } else {
      if (!n1_opt || !n2_opt) throw InvalidArgument("--n1 and --n2 are required for gamma");
      img = gamma(s, *n1_opt, *n2_opt);
    }
    std::ostringstream out;
    if (cfg.format == "json") {
      json j{{"sigma", s.to_string()}, {"image", img.to_string()}};
      if (with_stats) {
        j["before"] = {{"wex", wex(s)}, {"cr", cr(s)}};
        j["after"] = {{"wex", wex(img)}, {"cr", cr(img)}};
      }
      out << j.dump() << '\n';
    } else if (cfg.format == "csv") {
      out << "sigma,image" << (with_stats ? ",wex_before,cr_before,wex_after,cr_after" : "") << '\n';
      out << '"' << s.to_string() << "\",\"" << img.to_string() << '"';
      if (with_stats) out << ',' << wex(s) << ',' << cr(s) << ',' << wex(img) << ',' << cr(img);
      out << '\n';
    } else {
      out << img.to_string() << '\n';
      if (with_stats) out << "before wex=" << wex(s) << " cr=" << cr(s) << "\nafter wex=" << wex(img) << " cr=" << cr(img) << '\n';
    }
    emit(out.str());
  });

  // verify
  auto* ver = app.add_subcommand("verify", "Run an identity suite");
  std::string suite = "all";
  int max_n = 0;
  ver->add_option("--suite", suite)->check(CLI::IsMember(suite_names()));
  ver->add_option("--max-n", max_n)->check(CLI::NonNegativeNumber);
  ver->callback([&] {
    VerifyOptions opt;
    opt.max_n = max_n;
    opt.seed = cfg.seed;
    opt.samples = cfg.samples;
    opt.cap = cfg.cap;
    const auto results = run_suite(suite, opt);
    std::ostringstream out;
    if (cfg.format == "json") {
      json checks = json::array();
      for (const auto& r : results) {
        checks.push_back({{"check", r.name}, {"status", std::string(status_text(r.status))}, {"detail", r.detail}});
      }
      out << json{{"checks", checks}, {"passed", all_passed(results)}}.dump() << '\n';
    } else if (cfg.format == "csv") {
      out << "check,status,detail\n";
      for (const auto& r : results) out << '"' << r.name << "\"," << status_text(r.status) << ",\"" << r.detail << "\"\n";
    } else {
      for (const auto& r : results) {
        out << r.name << ' ' << status_text(r.status);
        if (!r.detail.empty()) out << "  # " << r.detail;
        out << '\n';
        if (r.status == CheckStatus::Fail && !r.lhs.empty()) out << "  lhs: " << r.lhs << "\n  rhs: " << r.rhs << '\n';
      }
    }
    emit(out.str());
    if (!all_passed(results)) exit_status = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const ParseError& e) {
    std::cerr << "qlag: " << e.what() << '\n';
    return 2;
  } catch (const InvalidArgument& e) {
    std::cerr << "qlag: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "qlag: " << e.what() << '\n';
    return 1;
  }
  return exit_status;
}
