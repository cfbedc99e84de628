#include "qlag/sampling.hpp"

namespace qlag {

int RationalSampler::next_int(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<int>(engine_() % span);
}

BigRational RationalSampler::next() {
  while (true) {
    const int p = next_int(1, height_) * (next_int(0, 1) ? 1 : -1);
    const int r = next_int(1, height_);
    const BigRational v{mpz_class(p), mpz_class(r)};
    if (v != BigRational(1) && v != BigRational(-1)) return v;
  }
}

}  // namespace qlag
