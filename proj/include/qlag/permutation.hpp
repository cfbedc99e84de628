#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qlag {

/// A bijection of {1..n}, stored as its image sequence sigma(1..n).
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidArgument unless `image` is a bijection of {1..n}.
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);
  /// "5,4,1,2,3"; the empty string is the empty permutation.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(image_.size()); }
  /// sigma(i), 1-indexed.
  int operator()(int i) const { return image_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& image() const { return image_; }
  std::span<const int> span() const { return image_; }

  Permutation inverse() const;
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

/// A composition (n_1, ..., n_k) cutting [n] into consecutive segments.
class BlockSpec {
 public:
  explicit BlockSpec(std::vector<int> sizes);
  static BlockSpec parse(std::string_view text);

  const std::vector<int>& sizes() const { return sizes_; }
  int blocks() const { return static_cast<int>(sizes_.size()); }
  int total() const { return total_; }
  /// 0-based index of the segment containing position i (1-indexed).
  int segment_of(int i) const { return segment_[static_cast<std::size_t>(i - 1)]; }
  std::string to_string() const;

 private:
  std::vector<int> sizes_;
  std::vector<int> segment_;
  int total_ = 0;
};

/// Parses "2,2,1" into integers; components may be any sign.
std::vector<int> parse_int_list(std::string_view text);

}  // namespace qlag
