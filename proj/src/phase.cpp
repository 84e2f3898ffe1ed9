#include "vvmf/phase.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "vvmf/errors.hpp"

namespace vvmf {

Fraction::Fraction(Int num, Int den) {
  if (den == 0) throw ArithmeticOverflow("zero denominator");
  Int g = std::gcd(num, den);
  if (g == 0) g = 1;
  num /= g;
  den /= g;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  num_ = num;
  den_ = den;
}

Fraction Fraction::operator+(const Fraction& o) const {
  Int g = std::gcd(den_, o.den_);
  Int l = checked_mul(den_ / g, o.den_);
  return {checked_add(checked_mul(num_, l / den_), checked_mul(o.num_, l / o.den_)), l};
}

Fraction Fraction::operator-(const Fraction& o) const { return *this + (-o); }

Fraction Fraction::operator*(const Fraction& o) const {
  Int g1 = std::gcd(num_, o.den_), g2 = std::gcd(o.num_, den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return {checked_mul(num_ / g1, o.num_ / g2), checked_mul(den_ / g2, o.den_ / g1)};
}

Fraction Fraction::operator/(const Fraction& o) const {
  if (o.num_ == 0) throw ArithmeticOverflow("division by zero fraction");
  return *this * Fraction(o.den_, o.num_);
}

Fraction Fraction::frac() const { return {mod_floor(num_, den_), den_}; }

std::strong_ordering Fraction::operator<=>(const Fraction& o) const {
  __int128 lhs = static_cast<__int128>(num_) * o.den_;
  __int128 rhs = static_cast<__int128>(o.num_) * den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Fraction::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Fraction Fraction::parse(std::string_view text) {
  std::string s(text);
  try {
    std::size_t used = 0;
    auto slash = s.find('/');
    if (slash == std::string::npos) {
      Int n = std::stoll(s, &used);
      if (used != s.size()) throw ParseError("bad rational '" + s + "'");
      return {n, 1};
    }
    std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
    Int n = std::stoll(ns, &used);
    if (used != ns.size()) throw ParseError("bad rational '" + s + "'");
    Int d = std::stoll(ds, &used);
    if (used != ds.size() || d == 0) throw ParseError("bad rational '" + s + "'");
    return {n, d};
  } catch (const std::logic_error&) {
    throw ParseError("bad rational '" + s + "'");
  }
}

Complex Phase::value() const {
  // Exact values at the quarter turns keep printed matrices clean.
  const Int n = r_.num(), d = r_.den();
  if (n == 0) return {1.0, 0.0};
  if (d == 2) return {-1.0, 0.0};
  if (d == 4) return n == 1 ? Complex{0.0, 1.0} : Complex{0.0, -1.0};
  const double angle = 2.0 * std::numbers::pi * r_.value();
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace vvmf
