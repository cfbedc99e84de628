#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qlag/errors.hpp"
#include "qlag/permstats.hpp"

using namespace qlag;

namespace {

// Reference statistics straight from the definitions, over all ordered pairs.
int ref_wex(const std::vector<int>& s) {
  int c = 0;
  for (std::size_t i = 0; i < s.size(); ++i) c += static_cast<int>(i + 1) <= s[i];
  return c;
}

int ref_cr(const std::vector<int>& s) {
  const int n = static_cast<int>(s.size());
  int c = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int si = s[static_cast<std::size_t>(i - 1)], sj = s[static_cast<std::size_t>(j - 1)];
      if (j < i && i <= sj && sj < si) ++c;
      if (j > i && i > sj && sj > si) ++c;
    }
  }
  return c;
}

}  // namespace

TEST_CASE("permutation parsing and validation") {
  const Permutation p = Permutation::parse("3,1,2");
  CHECK(p(1) == 3);
  CHECK(p.inverse().to_string() == "2,3,1");
  CHECK_THROWS_AS(Permutation::parse("1,1,2"), InvalidArgument);
  CHECK_THROWS_AS(Permutation::parse("1,x"), ParseError);
  CHECK(BlockSpec::parse("2,2,1").total() == 5);
  CHECK(BlockSpec::parse("2,2,1").segment_of(3) == 1);
  CHECK_THROWS_AS(BlockSpec({2, 0}), InvalidArgument);
}

TEST_CASE("statistics agree with the definitions on all of S_6") {
  std::vector<int> s(6);
  std::iota(s.begin(), s.end(), 1);
  do {
    CHECK(wex(s) == ref_wex(s));
    CHECK(cr(s) == ref_cr(s));
  } while (std::next_permutation(s.begin(), s.end()));
}

TEST_CASE("enumeration is lexicographic and complete") {
  std::vector<std::vector<int>> seen;
  enumerate_all(5, [&](std::span<const int> s) { seen.emplace_back(s.begin(), s.end()); });
  CHECK(seen.size() == 120);
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  CHECK_THROWS_AS(enumerate_all(11, [](std::span<const int>) {}), CapExceeded);
}

TEST_CASE("class sizes match inclusion-exclusion derangement counts") {
  // D(1^n) is the set of ordinary derangements.
  const long expected[] = {1, 0, 1, 2, 9, 44, 265, 1854};
  for (int n = 1; n <= 7; ++n) {
    long count = 0;
    enumerate_class(BlockSpec(std::vector<int>(static_cast<std::size_t>(n), 1)), [&](std::span<const int>) { ++count; });
    CHECK(count == expected[n]);
  }
}

TEST_CASE("D(2,2,1) reproduces the tabulated weights") {
  const BiLaurent p = class_polynomial(BlockSpec({2, 2, 1}));
  CHECK(p.eval(1, 1) == BigRational(16));
  CHECK(p == BiLaurent::parse("y^2 + 3*y^2*q + 3*y^2*q^2 + y^2*q^3 + y^3*q + 3*y^3*q^2 + 3*y^3*q^3 + y^3*q^4"));
}

TEST_CASE("threaded counting matches the sequential order") {
  CHECK(permutation_polynomial(7, 10, 3) == permutation_polynomial(7, 10, 1));
  CHECK(class_polynomial(BlockSpec({3, 2, 2}), 10, 4) == class_polynomial(BlockSpec({3, 2, 2})));
  CHECK(permutation_polynomial(0) == BiLaurent(1));
}

TEST_CASE("class csv") {
  std::ostringstream out;
  write_class_csv(BlockSpec({1, 1}), out);
  CHECK(out.str() == "sigma,wex,cr\n\"2,1\",1,0\n");
}
