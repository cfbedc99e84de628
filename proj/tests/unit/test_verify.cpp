#include <doctest.h>

#include <sstream>

#include "qlag/errors.hpp"
#include "qlag/sampling.hpp"
#include "qlag/verify.hpp"

using namespace qlag;

TEST_CASE("sampler is deterministic and avoids 0 and +-1") {
  RationalSampler a(7), b(7);
  for (int i = 0; i < 200; ++i) {
    const BigRational v = a.next();
    CHECK(v == b.next());
    CHECK_FALSE(v.is_zero());
    CHECK(v != BigRational(1));
    CHECK(v != BigRational(-1));
  }
}

TEST_CASE("suite results are sorted and reproducible") {
  VerifyOptions opt;
  opt.max_n = 5;
  opt.samples = 3;
  const auto a = run_suite("stirling", opt);
  const auto b = run_suite("stirling", opt);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].detail == b[i].detail);
    if (i) CHECK(a[i - 1].name <= a[i].name);
  }
  CHECK(all_passed(a));
}

TEST_CASE("bad options") {
  VerifyOptions opt;
  opt.samples = 0;
  CHECK_THROWS_AS(run_suite("moments", opt), InvalidArgument);
  CHECK_THROWS_AS(run_suite("nonsense", VerifyOptions{}), InvalidArgument);
}

TEST_CASE("notes never fail a run") {
  std::vector<CheckResult> r{{"a", CheckStatus::Pass, "", "", ""}, {"b", CheckStatus::Note, "x", "", ""}};
  CHECK(all_passed(r));
  r.push_back({"c", CheckStatus::Fail, "", "1", "2"});
  CHECK_FALSE(all_passed(r));
  std::ostringstream out;
  write_golden_csv(r, out);
  CHECK(out.str() == "case,lhs,rhs,equal\n\"c\",\"1\",\"2\",false\n");
}
