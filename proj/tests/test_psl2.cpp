#include <random>

#include "doctest.h"
#include "vvmf/errors.hpp"
#include "vvmf/psl2.hpp"

using namespace vvmf;

namespace {

GroupElement random_word(std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), letter(0, 2);
  std::string w;
  for (int k = len(rng); k > 0; --k) w += "tsT"[letter(rng)];
  return from_word(w);
}

}  // namespace

TEST_CASE("canonical sign") {
  const GroupElement g(-1, 0, -2, -1);
  CHECK(g.a() == 1);
  CHECK(g.c() == 2);
  CHECK(g.d() == 1);
  CHECK(GroupElement(-1, 0, 0, -1).is_identity());
  CHECK_THROWS_AS(GroupElement(1, 1, 1, 1), ParseError);
}

TEST_CASE("compose examples") {
  const auto t = GroupElement::t(), s = GroupElement::s();
  CHECK(compose(t, t) == GroupElement(1, 2, 0, 1));
  CHECK(compose(s, s).is_identity());
  CHECK(compose(s, t.inverse()) == GroupElement(0, -1, 1, -1));
  CHECK(from_word("u") == GroupElement(0, -1, 1, -1));
  CHECK(from_word("u").pow(3).is_identity());
  CHECK((t * s * from_word("u")).is_identity());
}

TEST_CASE("classify examples") {
  CHECK(classify(GroupElement::t()) == ElementClass::Parabolic);
  CHECK(classify(GroupElement::s()) == ElementClass::Elliptic);
  CHECK(classify(GroupElement(2, 1, 1, 1)) == ElementClass::Hyperbolic);
  CHECK(classify(GroupElement()) == ElementClass::Identity);
  CHECK(classify(from_word("u")) == ElementClass::Elliptic);
}

TEST_CASE("act examples") {
  CHECK(act(GroupElement::t(), Cusp::infinity()) == Cusp::infinity());
  CHECK(act(GroupElement::s(), Cusp(0, 1)) == Cusp::infinity());
  for (Int x : {-3, 0, 2, 7}) CHECK(act(GroupElement(x, -1, 1, 0), Cusp::infinity()) == Cusp(x, 1));
  const Complex tau(0.25, 1.5);
  CHECK(std::abs(act(GroupElement::s(), tau) - (-1.0 / tau)) < 1e-15);
}

TEST_CASE("scaling matrix examples") {
  CHECK(scaling_matrix(Cusp::infinity()).is_identity());
  CHECK(scaling_matrix(Cusp(0, 1)) == GroupElement(0, -1, 1, 0));
  CHECK(scaling_matrix(Cusp(1, 2)) == GroupElement(1, 0, 2, 1));
}

TEST_CASE("scaling matrix sends infinity to the cusp") {
  for (Int q = 0; q <= 100; ++q)
    for (Int p = -100; p <= 100; ++p) {
      if (q == 0 && p != 1) continue;
      if (std::gcd(p, q) != 1) continue;
      const Cusp c(p, q);
      const GroupElement g = scaling_matrix(c);
      CHECK(g.a() * g.d() - g.b() * g.c() == 1);
      if (act(g, Cusp::infinity()) != c) FAIL("scaling matrix of " << c.to_string());
    }
}

TEST_CASE("group law properties") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 300; ++k) {
    const auto a = random_word(rng, 10), b = random_word(rng, 10), c = random_word(rng, 10);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE((a * a.inverse()).is_identity());
    REQUIRE(classify(c * a * c.inverse()) == classify(a));
  }
  for (int k = 0; k < 1000; ++k) {
    const auto g = random_word(rng, 8), h = random_word(rng, 8);
    REQUIRE(classify(h * g * h.inverse()) == classify(g));
  }
}

TEST_CASE("action is a group action") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> re(-1, 1), im(0.5, 2);
  for (int k = 0; k < 200; ++k) {
    const auto a = random_word(rng, 6), b = random_word(rng, 6);
    const Cusp c(static_cast<Int>(k % 13) - 6, 1 + k % 5);
    REQUIRE(act(a * b, c) == act(a, act(b, c)));
    const Complex tau(re(rng), im(rng));
    const Complex lhs = act(a * b, tau), rhs = act(a, act(b, tau));
    REQUIRE(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("text formats") {
  CHECK(parse_element("[[2,1],[1,1]]") == GroupElement(2, 1, 1, 1));
  CHECK(parse_element("tst") == from_word("tst"));
  CHECK(GroupElement(1, 0, 2, 1).to_string() == "[[1,0],[2,1]]");
  CHECK(Cusp::parse("oo").is_infinity());
  CHECK(Cusp::parse("-1/2") == Cusp(-1, 2));
  CHECK(Cusp::parse("2/-4") == Cusp(-1, 2));
  CHECK(Cusp(3, 6).to_string() == "1/2");
  CHECK_THROWS_AS(parse_element("[[1,2],[3,4]]"), ParseError);
  CHECK_THROWS_AS(parse_element("tx"), ParseError);
  CHECK_THROWS_AS(Cusp::parse("1/0/2"), ParseError);
}

TEST_CASE("overflow is detected") {
  const GroupElement big(1, Int(1) << 62, 0, 1);
  CHECK_THROWS_AS(big * big, ArithmeticOverflow);
}
