#include "qlag/bilaurent.hpp"

#include <cctype>
#include <limits>
#include <vector>

#include "qlag/errors.hpp"

namespace qlag {

std::int32_t checked_exp_add(std::int64_t a, std::int64_t b) {
  const std::int64_t r = a + b;
  if (r > std::numeric_limits<std::int32_t>::max() || r < std::numeric_limits<std::int32_t>::min()) {
    throw std::overflow_error("BiLaurent exponent overflow");
  }
  return static_cast<std::int32_t>(r);
}

BiLaurent::BiLaurent(const BigRational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{0, 0}, c);
}

BiLaurent BiLaurent::monomial(const BigRational& coeff, std::int32_t ey, std::int32_t eq) {
  if (ey < 0) throw InvalidArgument("negative y exponent");
  BiLaurent r;
  if (!coeff.is_zero()) r.terms_.emplace(Monomial{ey, eq}, coeff);
  return r;
}

void BiLaurent::add_term(const Monomial& m, const BigRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool BiLaurent::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

bool BiLaurent::is_unit() const { return terms_.size() == 1 && terms_.begin()->first.ey == 0; }

BigRational BiLaurent::coeff(std::int32_t ey, std::int32_t eq) const {
  auto it = terms_.find(Monomial{ey, eq});
  return it == terms_.end() ? BigRational(0) : it->second;
}

BiLaurent BiLaurent::y_coefficient(std::int32_t ey) const {
  BiLaurent r;
  for (auto it = terms_.lower_bound(Monomial{ey, std::numeric_limits<std::int32_t>::min()});
       it != terms_.end() && it->first.ey == ey; ++it) {
    r.terms_.emplace(Monomial{0, it->first.eq}, it->second);
  }
  return r;
}

std::int32_t BiLaurent::min_q() const {
  std::int32_t m = std::numeric_limits<std::int32_t>::max();
  for (const auto& [mono, c] : terms_) m = std::min(m, mono.eq);
  return terms_.empty() ? 0 : m;
}

std::int32_t BiLaurent::max_q() const {
  std::int32_t m = std::numeric_limits<std::int32_t>::min();
  for (const auto& [mono, c] : terms_) m = std::max(m, mono.eq);
  return terms_.empty() ? 0 : m;
}

std::int32_t BiLaurent::max_y() const { return terms_.empty() ? 0 : terms_.rbegin()->first.ey; }

bool BiLaurent::all_coefficients_integral() const {
  for (const auto& [m, c] : terms_) {
    if (!c.is_integer()) return false;
  }
  return true;
}

bool BiLaurent::all_coefficients_nonnegative() const {
  for (const auto& [m, c] : terms_) {
    if (c.sign() < 0) return false;
  }
  return true;
}

BiLaurent BiLaurent::operator-() const {
  BiLaurent r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

BiLaurent& BiLaurent::operator+=(const BiLaurent& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

BiLaurent& BiLaurent::operator-=(const BiLaurent& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

BiLaurent operator*(const BiLaurent& a, const BiLaurent& b) {
  BiLaurent r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      r.add_term(Monomial{checked_exp_add(ma.ey, mb.ey), checked_exp_add(ma.eq, mb.eq)}, ca * cb);
    }
  }
  return r;
}

BiLaurent& BiLaurent::operator*=(const BiLaurent& o) { return *this = *this * o; }

BiLaurent BiLaurent::shifted(std::int32_t dy, std::int32_t dq) const {
  BiLaurent r;
  for (const auto& [m, c] : terms_) {
    const std::int32_t ey = checked_exp_add(m.ey, dy);
    if (ey < 0) throw InvalidArgument("shift produces negative y exponent");
    r.terms_.emplace_hint(r.terms_.end(), Monomial{ey, checked_exp_add(m.eq, dq)}, c);
  }
  return r;
}

BiLaurent BiLaurent::scaled(const BigRational& c) const {
  if (c.is_zero()) return {};
  BiLaurent r = *this;
  for (auto& [m, v] : r.terms_) v *= c;
  return r;
}

BiLaurent BiLaurent::unit_inverse() const {
  if (!is_unit()) throw NonUnitReciprocal("'" + to_string() + "' is not a unit");
  const auto& [m, c] = *terms_.begin();
  return monomial(c.inverse(), 0, checked_exp_add(0, -static_cast<std::int64_t>(m.eq)));
}

BiLaurent BiLaurent::pow(long exponent) const {
  if (exponent < 0) return unit_inverse().pow(-exponent);
  BiLaurent result(1);
  BiLaurent base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

BigRational BiLaurent::eval(const BigRational& y, const BigRational& q) const {
  BigRational total(0);
  for (const auto& [m, c] : terms_) {
    if (m.eq < 0 && q.is_zero()) throw PoleAtZero("q = 0 in '" + to_string() + "'");
    total += c * y.pow(m.ey) * q.pow(m.eq);
  }
  return total;
}

BiLaurent BiLaurent::eval_q(const BigRational& q) const {
  BiLaurent r;
  for (const auto& [m, c] : terms_) {
    if (m.eq < 0 && q.is_zero()) throw PoleAtZero("q = 0 in '" + to_string() + "'");
    r.add_term(Monomial{m.ey, 0}, c * q.pow(m.eq));
  }
  return r;
}

BiLaurent BiLaurent::eval_y(const BigRational& y) const {
  BiLaurent r;
  for (const auto& [m, c] : terms_) r.add_term(Monomial{0, m.eq}, c * y.pow(m.ey));
  return r;
}

BiLaurent BiLaurent::substitute_y(const BiLaurent& value) const {
  std::vector<BiLaurent> powers{BiLaurent(1)};
  BiLaurent r;
  for (const auto& [m, c] : terms_) {
    while (static_cast<std::int32_t>(powers.size()) <= m.ey) powers.push_back(powers.back() * value);
    r += powers[static_cast<std::size_t>(m.ey)].shifted(0, m.eq).scaled(c);
  }
  return r;
}

std::string BiLaurent::to_string(std::string_view yname, std::string_view qname) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    out += (c.sign() < 0 ? -c : c).to_string();
    auto factor = [&out](std::string_view name, std::int32_t e) {
      if (e == 0) return;
      out += "*";
      out += name;
      if (e != 1) out += "^" + std::to_string(e);
    };
    factor(yname, m.ey);
    factor(qname, m.eq);
  }
  return out;
}

BiLaurent BiLaurent::parse(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) throw ParseError("empty polynomial");
  BiLaurent r;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    }
    std::size_t end = pos;
    while (end < s.size() && !((s[end] == '+' || s[end] == '-') && end > pos && s[end - 1] != '^')) ++end;
    const std::string term = s.substr(pos, end - pos);
    pos = end;
    if (term.empty()) throw ParseError("empty term in '" + std::string(text) + "'");

    std::vector<std::string> factors;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= term.size(); ++i) {
      if (i == term.size() || term[i] == '*') {
        factors.push_back(term.substr(start, i - start));
        start = i + 1;
      }
    }
    BigRational coeff(1);
    Monomial mono;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const std::string& f = factors[i];
      if (f.empty()) throw ParseError("empty factor in '" + term + "'");
      if (std::isdigit(static_cast<unsigned char>(f[0]))) {
        if (i != 0) throw ParseError("coefficient must come first in '" + term + "'");
        coeff = BigRational::parse(f);
        continue;
      }
      const auto caret = f.find('^');
      const std::string name = f.substr(0, caret);
      long e = 1;
      if (caret != std::string::npos) {
        try {
          std::size_t used = 0;
          e = std::stol(f.substr(caret + 1), &used);
          if (used != f.size() - caret - 1) throw ParseError("bad exponent in '" + f + "'");
        } catch (const std::logic_error&) {
          throw ParseError("bad exponent in '" + f + "'");
        }
      }
      if (name == "y" || name == "a") {
        mono.ey = checked_exp_add(mono.ey, e);
      } else if (name == "q") {
        mono.eq = checked_exp_add(mono.eq, e);
      } else {
        throw ParseError("unknown variable '" + name + "'");
      }
    }
    if (mono.ey < 0) throw ParseError("negative y exponent in '" + term + "'");
    r.add_term(mono, negative ? -coeff : coeff);
  }
  return r;
}

BiLaurent exact_div(const BiLaurent& a, const BiLaurent& b) {
  if (b.is_zero()) throw DivisionByZero("exact_div by zero");
  if (a.is_zero()) return {};
  // q is a unit: normalize both to genuine polynomials with min q-exponent 0,
  // divide in Q[y, q] under lex order (y > q), then restore the shift.
  const std::int32_t sa = a.min_q();
  const std::int32_t sb = b.min_q();
  BiLaurent rem = a.shifted(0, -sa);
  const BiLaurent divisor = b.shifted(0, -sb);
  const auto& [lead_m, lead_c] = *divisor.terms().rbegin();
  BiLaurent quotient;
  while (!rem.is_zero()) {
    const auto& [rm, rc] = *rem.terms().rbegin();
    if (rm.ey < lead_m.ey || rm.eq < lead_m.eq) {
      throw NotDivisible("'" + b.to_string() + "' does not divide '" + a.to_string() + "'");
    }
    const BiLaurent t = BiLaurent::monomial(rc / lead_c, rm.ey - lead_m.ey, rm.eq - lead_m.eq);
    quotient += t;
    rem -= t * divisor;
  }
  return quotient.shifted(0, checked_exp_add(sa, -static_cast<std::int64_t>(sb)));
}

}  // namespace qlag
