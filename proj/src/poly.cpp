#include "qlag/poly.hpp"

namespace qlag {

BigRational eval_at(const XPoly& p, const BigRational& x, const BigRational& y, const BigRational& q) {
  BigRational acc(0);
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + it->eval(y, q);
  return acc;
}

}  // namespace qlag
