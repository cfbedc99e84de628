#include "qlag/permutation.hpp"

#include <charconv>

#include "qlag/errors.hpp"

namespace qlag {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int value = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size()) {
      throw ParseError("bad integer list '" + std::string(text) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = size();
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)]) {
      throw InvalidArgument("not a permutation: " + to_string());
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(img));
}

Permutation Permutation::parse(std::string_view text) { return Permutation(parse_int_list(text)); }

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return Permutation(std::move(inv));
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(image_[i]);
  }
  return out;
}

BlockSpec::BlockSpec(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  for (std::size_t b = 0; b < sizes_.size(); ++b) {
    if (sizes_[b] < 1) throw InvalidArgument("block sizes must be positive: " + to_string());
    for (int j = 0; j < sizes_[b]; ++j) segment_.push_back(static_cast<int>(b));
    total_ += sizes_[b];
  }
}

BlockSpec BlockSpec::parse(std::string_view text) { return BlockSpec(parse_int_list(text)); }

std::string BlockSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(sizes_[i]);
  }
  return out;
}

}  // namespace qlag
