#pragma once

#include <functional>
#include <iosfwd>
#include <span>

#include "qlag/bilaurent.hpp"
#include "qlag/permutation.hpp"

namespace qlag {

inline constexpr int kDefaultCap = 10;

/// #{i : i <= sigma(i)}
int wex(std::span<const int> sigma);
/// Crossings: #{j < i <= sigma(j) < sigma(i)} + #{j > i > sigma(j) > sigma(i)}.
int cr(std::span<const int> sigma);
inline int wex(const Permutation& s) { return wex(s.span()); }
inline int cr(const Permutation& s) { return cr(s.span()); }

/// True iff no i has i and sigma(i) in the same segment of b.
bool is_generalized_derangement(const Permutation& sigma, const BlockSpec& b);

using PermVisitor = std::function<void(std::span<const int>)>;
/// allowed(i, v): may sigma(i) take the value v (both 1-indexed).
using ImageConstraint = std::function<bool(int, int)>;

/// Backtracking over images in lexicographic order. If first_image > 0 only
/// permutations with sigma(1) = first_image are produced.
void enumerate_constrained(int n, const ImageConstraint& allowed, const PermVisitor& visit, int first_image = 0);

/// Members of D(b) in lexicographic order. Throws CapExceeded if b.total() > cap.
void enumerate_class(const BlockSpec& b, const PermVisitor& visit, int cap = kDefaultCap);
void enumerate_all(int n, const PermVisitor& visit, int cap = kDefaultCap);

/// Sum of y^wex q^cr over D(b). The search is split by sigma(1) across
/// `threads` workers and merged in a fixed order.
BiLaurent class_polynomial(const BlockSpec& b, int cap = kDefaultCap, int threads = 1);
/// Sum of y^wex q^cr over all of S_n.
BiLaurent permutation_polynomial(int n, int cap = kDefaultCap, int threads = 1);

/// CSV rows "sigma,wex,cr" for every member of D(b).
void write_class_csv(const BlockSpec& b, std::ostream& out, int cap = kDefaultCap);

}  // namespace qlag
