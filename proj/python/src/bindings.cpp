#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qlag/bijections.hpp"
#include "qlag/errors.hpp"
#include "qlag/families.hpp"
#include "qlag/linearization.hpp"
#include "qlag/moments.hpp"
#include "qlag/permstats.hpp"
#include "qlag/stirling.hpp"
#include "qlag/verify.hpp"

namespace py = pybind11;
using namespace qlag;

namespace {

using Term = std::tuple<int, int, std::string>;

std::vector<Term> terms(const BiLaurent& p) {
  std::vector<Term> out;
  for (const auto& [m, c] : p.terms()) out.emplace_back(m.ey, m.eq, c.to_string());
  return out;
}

BiLaurent moment(int n, const std::string& family, const std::string& method, int cap) {
  if (family == "laguerre") {
    if (method == "enum") return permutation_polynomial(n, cap);
    if (method == "closed") return moment_closed_laguerre(n);
    if (method == "gf") return moment_gf_laguerre(n)[n];
    if (method == "motzkin") return moments_motzkin(n, jacobi_for(laguerre_params()));
  } else if (family == "charlier") {
    if (method == "closed") return moment_closed_charlier(n);
    if (method == "gf") return moment_gf_charlier(n)[n];
    if (method == "motzkin") return moments_motzkin(n, jacobi_for(charlier_params()));
  }
  throw InvalidArgument("unsupported family/method " + family + "/" + method);
}

LinearizeMethod linearize_method(const std::string& m) {
  if (m == "functional") return LinearizeMethod::Functional;
  if (m == "enum") return LinearizeMethod::Enumeration;
  if (m == "closed3") return LinearizeMethod::Closed3;
  throw InvalidArgument("unknown method " + m);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact q-Laguerre moments, linearization coefficients and permutation bijections";

  static py::exception<Error> base(m, "QlagError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  m.def("moment", [](int n, const std::string& family, const std::string& method, int cap) {
        return moment(n, family, method, cap).to_string(family == "charlier" ? "a" : "y");
      },
      py::arg("n"), py::arg("family") = "laguerre", py::arg("method") = "motzkin", py::arg("cap") = kDefaultCap);
  m.def("moment_terms", [](int n) { return terms(laguerre_moment_table().at(n)); }, py::arg("n"),
        "mu_n as (y exponent, q exponent, coefficient) triples in canonical order.");
  m.def("laguerre_poly", [](int n) {
        std::vector<std::string> out;
        for (const auto& c : laguerre_poly(n).coeffs()) out.push_back(c.to_string());
        return out;
      },
      py::arg("n"), "Coefficients of x^0 .. x^n.");
  m.def("stirling", [](const std::string& kind, int n, int k) {
        if (kind != "S" && kind != "s") throw InvalidArgument("kind must be S or s");
        return (kind == "S" ? stirling_S(n, k) : stirling_s(n, k)).to_string();
      },
      py::arg("kind"), py::arg("n"), py::arg("k"));
  m.def("linearize", [](const std::vector<int>& blocks, const std::string& method, int cap) {
        return linearize(blocks, linearize_method(method), cap).to_string();
      },
      py::arg("blocks"), py::arg("method") = "functional", py::arg("cap") = kDefaultCap);
  m.def("wex", [](const std::vector<int>& s) { return wex(Permutation(s)); });
  m.def("cr", [](const std::vector<int>& s) { return cr(Permutation(s)); });
  m.def("phi", [](const std::vector<int>& s, int k) { return phi(Permutation(s), k).image(); }, py::arg("sigma"), py::arg("k"));
  m.def("phi_inverse", [](const std::vector<int>& s, int k) { return phi_inverse(Permutation(s), k).image(); },
        py::arg("image"), py::arg("k"));
  m.def("gamma", [](const std::vector<int>& s, int n1, int n2) { return gamma(Permutation(s), n1, n2).image(); },
        py::arg("sigma"), py::arg("n1"), py::arg("n2"));
  m.def("verify", [](const std::string& suite, int max_n, std::uint64_t seed, int samples, int cap) {
        VerifyOptions opt{max_n, seed, samples, cap};
        std::vector<std::tuple<std::string, std::string, std::string>> out;
        {
          py::gil_scoped_release release;
          for (const auto& r : run_suite(suite, opt)) out.emplace_back(r.name, std::string(status_text(r.status)), r.detail);
        }
        return out;
      },
      py::arg("suite") = "all", py::arg("max_n") = 0, py::arg("seed") = 42, py::arg("samples") = 20,
      py::arg("cap") = kDefaultCap);
}
