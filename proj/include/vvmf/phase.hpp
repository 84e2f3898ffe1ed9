#pragma once

#include <compare>
#include <complex>
#include <string>
#include <string_view>

#include "vvmf/psl2.hpp"

namespace vvmf {

// Exact rational with int64 parts, kept in lowest terms with den > 0.
class Fraction {
 public:
  Fraction() = default;
  Fraction(Int num, Int den = 1);

  Int num() const { return num_; }
  Int den() const { return den_; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  Fraction operator+(const Fraction& o) const;
  Fraction operator-(const Fraction& o) const;
  Fraction operator*(const Fraction& o) const;
  Fraction operator/(const Fraction& o) const;
  Fraction operator-() const { return {-num_, den_}; }

  // x - floor(x), in [0, 1).
  Fraction frac() const;

  bool operator==(const Fraction&) const = default;
  std::strong_ordering operator<=>(const Fraction& o) const;

  std::string to_string() const;
  static Fraction parse(std::string_view text);

 private:
  Int num_ = 0, den_ = 1;
};

// The unit complex number exp(2 pi i r), with r normalized to [0, 1).
class Phase {
 public:
  Phase() = default;
  explicit Phase(Fraction r) : r_(r.frac()) {}
  Phase(Int num, Int den) : Phase(Fraction(num, den)) {}

  static Phase one() { return {}; }

  const Fraction& exponent() const { return r_; }
  Complex value() const;

  Phase operator*(const Phase& o) const { return Phase(r_ + o.r_); }
  Phase inverse() const { return Phase(-r_); }
  Phase pow(Int k) const { return Phase(r_ * Fraction(k)); }
  // Principal root: exponent r/n.
  Phase root(Int n) const { return Phase(r_ / Fraction(n)); }

  bool operator==(const Phase&) const = default;
  auto operator<=>(const Phase&) const = default;

  std::string to_string() const { return r_.to_string(); }

 private:
  Fraction r_;
};

}  // namespace vvmf
