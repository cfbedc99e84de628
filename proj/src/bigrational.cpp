#include "qlag/bigrational.hpp"

#include <cctype>

#include "qlag/errors.hpp"

namespace qlag {

namespace {

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw ParseError("malformed rational '" + std::string(whole) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw ParseError("malformed rational '" + std::string(whole) + "'");
    }
  }
  mpz_class value(std::string(text.substr(i)), 10);
  return negative ? mpz_class(-value) : value;
}

}  // namespace

BigRational::BigRational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero("zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_integer(text, text));
  const mpz_class num = parse_integer(text.substr(0, slash), text);
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '+' || den_text.front() == '-')) {
    throw ParseError("denominator must be unsigned in '" + std::string(text) + "'");
  }
  return BigRational(num, parse_integer(den_text, text));
}

BigRational BigRational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  return BigRational(mpq_class(1) / v_);
}

BigRational BigRational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return BigRational(num, den);
}

std::string BigRational::to_string() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw DivisionByZero("division by zero");
  v_ /= o.v_;
  return *this;
}

BigRational factorial(int n) {
  if (n < 0) throw NegativeIndex("factorial of " + std::to_string(n));
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return BigRational(r);
}

BigRational binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return BigRational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return BigRational(r);
}

}  // namespace qlag
