#include "qlag/permstats.hpp"

#include <future>
#include <ostream>
#include <vector>

#include "qlag/errors.hpp"

namespace qlag {

int wex(std::span<const int> sigma) {
  int count = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (static_cast<int>(i) + 1 <= sigma[i]) ++count;
  }
  return count;
}

int cr(std::span<const int> sigma) {
  const int n = static_cast<int>(sigma.size());
  int count = 0;
  for (int i = 1; i <= n; ++i) {
    const int si = sigma[static_cast<std::size_t>(i - 1)];
    for (int j = 1; j < i; ++j) {
      const int sj = sigma[static_cast<std::size_t>(j - 1)];
      if (i <= sj && sj < si) ++count;
    }
    for (int j = i + 1; j <= n; ++j) {
      const int sj = sigma[static_cast<std::size_t>(j - 1)];
      if (i > sj && sj > si) ++count;
    }
  }
  return count;
}

bool is_generalized_derangement(const Permutation& sigma, const BlockSpec& b) {
  if (sigma.size() != b.total()) {
    throw SizeMismatch("permutation of size " + std::to_string(sigma.size()) + " vs blocks " + b.to_string());
  }
  for (int i = 1; i <= sigma.size(); ++i) {
    if (b.segment_of(i) == b.segment_of(sigma(i))) return false;
  }
  return true;
}

namespace {

template <class Allowed, class Visit>
void backtrack(int n, const Allowed& allowed, const Visit& visit, int first_image) {
  std::vector<int> image(static_cast<std::size_t>(n), 0);
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
  if (n == 0) {
    visit(std::span<const int>(image));
    return;
  }
  // Iterative depth-first search; image[pos] holds the last value tried.
  int pos = 0;
  while (pos >= 0) {
    int& v = image[static_cast<std::size_t>(pos)];
    if (v) used[static_cast<std::size_t>(v)] = 0;
    int next = v + 1;
    const int limit = (pos == 0 && first_image > 0) ? first_image : n;
    if (pos == 0 && first_image > 0 && next < first_image) next = first_image;
    while (next <= limit && (used[static_cast<std::size_t>(next)] || !allowed(pos + 1, next))) ++next;
    if (next > limit) {
      v = 0;
      --pos;
      continue;
    }
    v = next;
    used[static_cast<std::size_t>(v)] = 1;
    if (pos + 1 == n) {
      visit(std::span<const int>(image));
    } else {
      ++pos;
    }
  }
}

void check_cap(int n, int cap) {
  if (n > cap) throw CapExceeded("size " + std::to_string(n) + " exceeds enumeration cap " + std::to_string(cap));
}

using CountTable = std::vector<std::vector<long long>>;

template <class Allowed>
CountTable count_partition(int n, const Allowed& allowed, int first_image) {
  CountTable table(static_cast<std::size_t>(n) + 1, std::vector<long long>(static_cast<std::size_t>(n * n / 2) + 1, 0));
  backtrack(n, allowed,
            [&table](std::span<const int> s) {
              ++table[static_cast<std::size_t>(wex(s))][static_cast<std::size_t>(cr(s))];
            },
            first_image);
  return table;
}

template <class Allowed>
BiLaurent weight_polynomial(int n, const Allowed& allowed, int threads) {
  if (n == 0) return BiLaurent(1);
  std::vector<CountTable> parts(static_cast<std::size_t>(n));
  if (threads <= 1) {
    for (int v = 1; v <= n; ++v) parts[static_cast<std::size_t>(v - 1)] = count_partition(n, allowed, v);
  } else {
    std::vector<std::future<CountTable>> jobs;
    for (int v = 1; v <= n; ++v) {
      jobs.push_back(std::async(std::launch::async, [n, &allowed, v] { return count_partition(n, allowed, v); }));
      if (static_cast<int>(jobs.size()) == threads || v == n) {
        const int base = v - static_cast<int>(jobs.size());
        for (std::size_t j = 0; j < jobs.size(); ++j) parts[static_cast<std::size_t>(base) + j] = jobs[j].get();
        jobs.clear();
      }
    }
  }
  BiLaurent total;
  for (const auto& part : parts) {
    for (std::size_t w = 0; w < part.size(); ++w) {
      for (std::size_t c = 0; c < part[w].size(); ++c) {
        if (part[w][c]) {
          total += BiLaurent::monomial(BigRational(static_cast<long>(part[w][c])), static_cast<std::int32_t>(w), static_cast<std::int32_t>(c));
        }
      }
    }
  }
  return total;
}

}  // namespace

void enumerate_constrained(int n, const ImageConstraint& allowed, const PermVisitor& visit, int first_image) {
  backtrack(n, allowed, visit, first_image);
}

void enumerate_class(const BlockSpec& b, const PermVisitor& visit, int cap) {
  check_cap(b.total(), cap);
  backtrack(b.total(), [&b](int i, int v) { return b.segment_of(i) != b.segment_of(v); }, visit, 0);
}

void enumerate_all(int n, const PermVisitor& visit, int cap) {
  if (n < 0) throw NegativeIndex("permutation size " + std::to_string(n));
  check_cap(n, cap);
  backtrack(n, [](int, int) { return true; }, visit, 0);
}

BiLaurent class_polynomial(const BlockSpec& b, int cap, int threads) {
  check_cap(b.total(), cap);
  return weight_polynomial(b.total(), [&b](int i, int v) { return b.segment_of(i) != b.segment_of(v); }, threads);
}

BiLaurent permutation_polynomial(int n, int cap, int threads) {
  if (n < 0) throw NegativeIndex("permutation size " + std::to_string(n));
  check_cap(n, cap);
  return weight_polynomial(n, [](int, int) { return true; }, threads);
}

void write_class_csv(const BlockSpec& b, std::ostream& out, int cap) {
  out << "sigma,wex,cr\n";
  enumerate_class(
      b,
      [&out](std::span<const int> s) {
        out << '"' << Permutation(std::vector<int>(s.begin(), s.end())).to_string() << "\"," << wex(s) << ',' << cr(s)
            << '\n';
      },
      cap);
}

}  // namespace qlag
