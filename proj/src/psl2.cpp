#include "vvmf/psl2.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "vvmf/errors.hpp"

namespace vvmf {

Int checked_mul(Int x, Int y) {
  Int r;
  if (__builtin_mul_overflow(x, y, &r)) throw ArithmeticOverflow("integer product overflows int64");
  return r;
}

Int checked_add(Int x, Int y) {
  Int r;
  if (__builtin_add_overflow(x, y, &r)) throw ArithmeticOverflow("integer sum overflows int64");
  return r;
}

Int floor_div(Int x, Int y) {
  Int q = x / y;
  if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
  return q;
}

Int mod_floor(Int x, Int m) {
  Int r = x % m;
  return r < 0 ? r + m : r;
}

Matrix2 Matrix2::operator*(const Matrix2& o) const {
  return {checked_add(checked_mul(a, o.a), checked_mul(b, o.c)),
          checked_add(checked_mul(a, o.b), checked_mul(b, o.d)),
          checked_add(checked_mul(c, o.a), checked_mul(d, o.c)),
          checked_add(checked_mul(c, o.b), checked_mul(d, o.d))};
}

GroupElement::GroupElement(Int a, Int b, Int c, Int d) : a_(a), b_(b), c_(c), d_(d) {
  if (checked_add(checked_mul(a, d), -checked_mul(b, c)) != 1) {
    std::ostringstream os;
    os << "determinant of [[" << a << "," << b << "],[" << c << "," << d << "]] is not 1";
    throw ParseError(os.str());
  }
  if (c_ < 0 || (c_ == 0 && d_ < 0)) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
    d_ = -d_;
  }
}

GroupElement GroupElement::inverse() const { return {d_, -b_, -c_, a_}; }

GroupElement GroupElement::operator*(const GroupElement& o) const {
  return GroupElement(matrix() * o.matrix());
}

GroupElement GroupElement::pow(Int n) const {
  GroupElement base = n < 0 ? inverse() : *this;
  GroupElement acc;
  for (Int e = n < 0 ? -n : n; e > 0; e >>= 1) {
    if (e & 1) acc = acc * base;
    if (e > 1) base = base * base;
  }
  return acc;
}

std::string GroupElement::to_string() const {
  std::ostringstream os;
  os << "[[" << a_ << "," << b_ << "],[" << c_ << "," << d_ << "]]";
  return os.str();
}

GroupElement compose(const GroupElement& g1, const GroupElement& g2) { return g1 * g2; }

GroupElement from_word(std::string_view word) {
  GroupElement g;
  for (char ch : word) {
    switch (ch) {
      case 't': g = g * GroupElement::t(); break;
      case 'T': g = g * GroupElement::t().inverse(); break;
      case 's': g = g * GroupElement::s(); break;
      case 'u': g = g * GroupElement::s() * GroupElement::t().inverse(); break;
      case '1':
      case ' ':
      case '*': break;
      default: throw ParseError(std::string("unknown letter '") + ch + "' in word");
    }
  }
  return g;
}

GroupElement parse_element(std::string_view text) {
  if (text.empty() || text.front() != '[') return from_word(text);
  std::string digits;
  for (char ch : text)
    digits += (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-') ? ch : ' ';
  std::istringstream is(digits);
  Int v[4];
  for (Int& x : v)
    if (!(is >> x)) throw ParseError("expected [[a,b],[c,d]], got '" + std::string(text) + "'");
  std::string rest;
  if (is >> rest) throw ParseError("trailing entries in '" + std::string(text) + "'");
  return {v[0], v[1], v[2], v[3]};
}

ElementClass classify(const GroupElement& g) {
  if (g.is_identity()) return ElementClass::Identity;
  Int tr = g.trace() < 0 ? -g.trace() : g.trace();
  if (tr < 2) return ElementClass::Elliptic;
  if (tr == 2) return ElementClass::Parabolic;
  return ElementClass::Hyperbolic;
}

std::string_view to_string(ElementClass k) {
  switch (k) {
    case ElementClass::Identity: return "identity";
    case ElementClass::Elliptic: return "elliptic";
    case ElementClass::Parabolic: return "parabolic";
    case ElementClass::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

Cusp::Cusp(Int p, Int q) {
  if (p == 0 && q == 0) throw ParseError("0/0 is not a cusp");
  if (q == 0) {
    p_ = 1;
    q_ = 0;
    return;
  }
  Int g = std::gcd(p, q);
  p /= g;
  q /= g;
  if (q < 0) {
    p = -p;
    q = -q;
  }
  p_ = p;
  q_ = q;
}

std::string Cusp::to_string() const {
  if (is_infinity()) return "oo";
  if (q_ == 1) return std::to_string(p_);
  return std::to_string(p_) + "/" + std::to_string(q_);
}

Cusp Cusp::parse(std::string_view text) {
  if (text == "oo" || text == "inf" || text == "infinity") return infinity();
  std::string s(text);
  auto slash = s.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      Int p = std::stoll(s, &used);
      if (used != s.size()) throw ParseError("bad cusp '" + s + "'");
      return Cusp(p, 1);
    }
    std::string ps = s.substr(0, slash), qs = s.substr(slash + 1);
    Int p = std::stoll(ps, &used);
    if (used != ps.size()) throw ParseError("bad cusp '" + s + "'");
    Int q = std::stoll(qs, &used);
    if (used != qs.size()) throw ParseError("bad cusp '" + s + "'");
    return Cusp(p, q);
  } catch (const std::logic_error&) {
    throw ParseError("bad cusp '" + s + "'");
  }
}

Cusp act(const GroupElement& g, const Cusp& x) {
  // (a b; c d) applied to the column (p, q).
  Int p = checked_add(checked_mul(g.a(), x.p()), checked_mul(g.b(), x.q()));
  Int q = checked_add(checked_mul(g.c(), x.p()), checked_mul(g.d(), x.q()));
  return Cusp(p, q);
}

Complex act(const GroupElement& g, Complex tau) {
  const double a = static_cast<double>(g.a()), b = static_cast<double>(g.b());
  const double c = static_cast<double>(g.c()), d = static_cast<double>(g.d());
  return (a * tau + b) / (c * tau + d);
}

GroupElement scaling_matrix(const Cusp& cusp) {
  if (cusp.is_infinity()) return GroupElement::identity();
  const Int p = cusp.p(), q = cusp.q();
  if (q == 1) return {p, -1, 1, 0};
  // Smallest y in [0, q) with p*y = 1 (mod q); then x = (p*y - 1)/q.
  Int old_r = mod_floor(p, q), r = q, old_s = 1, s = 0;
  while (r != 0) {
    Int quot = old_r / r;
    Int tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  Int y = mod_floor(old_s, q);
  Int x = (checked_mul(p, y) - 1) / q;
  return {p, x, q, y};
}

Complex automorphy_factor(const GroupElement& g, Complex tau) {
  return static_cast<double>(g.c()) * tau + static_cast<double>(g.d());
}

}  // namespace vvmf
