#pragma once

#include <complex>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace vvmf {

using Int = std::int64_t;
using Complex = std::complex<double>;

// Overflow-checked integer helpers. Throw ArithmeticOverflow.
Int checked_mul(Int x, Int y);
Int checked_add(Int x, Int y);
Int floor_div(Int x, Int y);
Int mod_floor(Int x, Int m);

// A raw SL(2,Z) matrix. Sign is meaningful here, unlike GroupElement.
struct Matrix2 {
  Int a = 1, b = 0, c = 0, d = 1;

  Matrix2 operator*(const Matrix2& o) const;
  Matrix2 operator-() const { return {-a, -b, -c, -d}; }
  bool operator==(const Matrix2&) const = default;
};

// Element of PSL(2,Z), stored as the canonical representative of {M, -M}:
// c > 0, or c == 0 and d > 0.
class GroupElement {
 public:
  GroupElement() = default;
  // Throws ParseError if ad - bc != 1.
  GroupElement(Int a, Int b, Int c, Int d);
  explicit GroupElement(const Matrix2& m) : GroupElement(m.a, m.b, m.c, m.d) {}

  static GroupElement identity() { return {}; }
  static GroupElement t() { return {1, 1, 0, 1}; }
  static GroupElement s() { return {0, 1, -1, 0}; }

  Int a() const { return a_; }
  Int b() const { return b_; }
  Int c() const { return c_; }
  Int d() const { return d_; }
  Int trace() const { return a_ + d_; }
  Matrix2 matrix() const { return {a_, b_, c_, d_}; }

  bool is_identity() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }
  GroupElement inverse() const;
  GroupElement pow(Int n) const;
  GroupElement operator*(const GroupElement& o) const;

  auto operator<=>(const GroupElement&) const = default;

  // "[[a,b],[c,d]]"
  std::string to_string() const;

 private:
  Int a_ = 1, b_ = 0, c_ = 0, d_ = 1;
};

GroupElement compose(const GroupElement& g1, const GroupElement& g2);

// Word in the letters t, s, T (= t^-1), u (= s t^-1), read left to right as a
// product, e.g. "tst" = t*s*t. "1" or "" is the identity.
GroupElement from_word(std::string_view word);

// Accepts a word or the matrix format "[[a,b],[c,d]]".
GroupElement parse_element(std::string_view text);

enum class ElementClass { Identity, Elliptic, Parabolic, Hyperbolic };

ElementClass classify(const GroupElement& g);
std::string_view to_string(ElementClass k);

// Point of P^1(Q). q == 0 encodes infinity (with p == 1).
class Cusp {
 public:
  Cusp() = default;
  // Reduces to lowest terms with q >= 0. (0,0) is rejected.
  Cusp(Int p, Int q);

  static Cusp infinity() { return Cusp(1, 0); }

  Int p() const { return p_; }
  Int q() const { return q_; }
  bool is_infinity() const { return q_ == 0; }

  auto operator<=>(const Cusp&) const = default;

  // "oo", "p" or "p/q".
  std::string to_string() const;
  static Cusp parse(std::string_view text);

 private:
  Int p_ = 1, q_ = 0;
};

Cusp act(const GroupElement& g, const Cusp& x);
Complex act(const GroupElement& g, Complex tau);

// Deterministic sigma in PSL(2,Z) with sigma * oo == c: the unimodular
// matrix (p, x; q, y) with 0 <= y < q (y = 0 when q <= 1).
GroupElement scaling_matrix(const Cusp& c);

// j(g, tau) = c*tau + d for the canonical representative.
Complex automorphy_factor(const GroupElement& g, Complex tau);

}  // namespace vvmf

template <>
struct std::hash<vvmf::GroupElement> {
  std::size_t operator()(const vvmf::GroupElement& g) const noexcept {
    std::size_t h = std::hash<vvmf::Int>{}(g.a());
    for (vvmf::Int x : {g.b(), g.c(), g.d()})
      h = h * 1000003u ^ std::hash<vvmf::Int>{}(x);
    return h;
  }
};
