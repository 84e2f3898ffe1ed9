#include <random>

#include "doctest.h"
#include "vvmf/errors.hpp"
#include "vvmf/qseries.hpp"

using namespace vvmf;

namespace {

mpq_class Q(long n, long d = 1) {
  mpq_class q(n, static_cast<unsigned long>(d));
  q.canonicalize();
  return q;
}

void check_coeffs(const QSeries& f, Int first, const std::vector<long>& expected) {
  for (std::size_t k = 0; k < expected.size(); ++k) {
    CAPTURE(first + static_cast<Int>(k));
    CHECK(f.coefficient(first + static_cast<Int>(k)) == Q(expected[k]));
  }
}

bool close(Complex a, Complex b, double rel) { return std::abs(a - b) <= rel * std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("eta expansion") {
  const QSeries eta = eta_expansion(20);
  CHECK(eta.offset() == Fraction(1, 24));
  CHECK(eta.coefficient(0) == 1);
  check_coeffs(eta, 0, {1, -1, -1, 0, 0, 1, 0, 1});
  const QSeries delta = eta.pow(24);
  CHECK(delta.offset() == Fraction(0));
  check_coeffs(delta, 1, {1, -24, 252, -1472, 4830, -6048});
  CHECK(delta == delta_power(12, delta.order()));
}

TEST_CASE("eta quotients") {
  CHECK(eta_quotient({{1, 24}}, 30) == delta_power(12, 30));
  const QSeries one = eta_quotient({}, 10);
  CHECK(one.coefficient(0) == 1);
  for (Int n = 1; n < 10; ++n) CHECK(one.coefficient(n) == 0);
  const QSeries r = eta_quotient({{1, 24}, {2, -24}}, 20);
  CHECK(r.valuation() == -1);
  check_coeffs(r, -1, {1, -24, 276, -2048, 11202, -49152});
}

TEST_CASE("delta powers") {
  CHECK(delta_power(0, 10) == QSeries::constant(1, 10));
  const QSeries inv = delta_power(-12, 30);
  check_coeffs(inv, -1, {1, 24, 324, 3200, 25650});
  const QSeries prod = inv * delta_power(12, 30);
  for (Int n = 0; n < prod.order(); ++n) CHECK(prod.coefficient(n) == (n == 0 ? 1 : 0));
  CHECK_THROWS(delta_power(3, 10));
}

TEST_CASE("hauptmodul of Gamma(2)") {
  const QSeries z = hauptmodul_gamma2();
  CHECK(z.width() == 2);
  CHECK(z.coefficient(-1) == Q(-1, 16));
  CHECK(z.coefficient(2) == 0);
  CHECK(z.coefficient(5) == Q(-27, 2));
  const auto& ref = gamma2_reference();
  for (std::size_t k = 0; k < ref.size(); ++k) CHECK(z.coefficient(static_cast<Int>(k) - 1) == ref[k]);
  // Expected coefficients times -16: 1, -8, 20, 0, -62, 0, 216.
  const std::vector<long> expected{1, -8, 20, 0, -62, 0, 216};
  for (std::size_t k = 0; k < expected.size(); ++k)
    CHECK(z.coefficient(static_cast<Int>(k) - 1) * -16 == Q(expected[k]));
}

TEST_CASE("hauptmodul of Gamma0(2)") {
  const QSeries z = hauptmodul_gamma0_2();
  CHECK(z.coefficient(-1) == Q(-1, 64));
  CHECK(z.coefficient(0) == Q(3, 8));
  CHECK(z.coefficient(2) == 32);
  const std::vector<long> expected{1, -24, 276, -2048};
  for (std::size_t k = 0; k < expected.size(); ++k)
    CHECK(z.coefficient(static_cast<Int>(k) - 1) * -64 == Q(expected[k]));
  CHECK(z == eta_quotient({{1, 24}, {2, -24}}, z.order()) * Q(-1, 64));
}

TEST_CASE("klein j") {
  const QSeries j = klein_j_series(20);
  check_coeffs(j, -1, {1, 744, 196884, 21493760});
}

TEST_CASE("ring laws") {
  const QSeries f = hauptmodul_gamma0_2(30), g = eta_quotient({{2, 24}}, 30) * Q(3, 7),
                h = delta_power(-12, 30) + QSeries::constant(Q(5, 2), 30);
  const QSeries lhs = (f + g) * h, rhs = f * h + g * h;
  const Int top = std::min(lhs.order(), rhs.order());
  for (Int n = -2; n < top; ++n) CHECK(lhs.coefficient(n) == rhs.coefficient(n));
  const QSeries finv = f * f.inverse();
  for (Int n = 0; n < finv.order(); ++n) CHECK(finv.coefficient(n) == (n == 0 ? 1 : 0));
  CHECK_THROWS_AS(hauptmodul_gamma2() + hauptmodul_gamma0_2(), DomainMismatch);
  CHECK_THROWS_AS(f.coefficient(f.order()), PrecisionLoss);
}

TEST_CASE("evaluation") {
  CHECK(QSeries::constant(1, 10).evaluate(Complex(0.3, 1.1)) == Complex(1, 0));
  // Oracles from independent high-precision evaluation (theta functions,
  // q-Pochhammer products, Klein's invariant).
  CHECK(std::abs(delta_power(12, kDefaultOrder).evaluate(Complex(0, 2)) - 3.4870504895354529382e-6) <=
        1e-10 * 3.4870504895354529382e-6);
  const Complex t1(0.3, 1.7);
  CHECK(close(hauptmodul_gamma2().evaluate(t1), Complex(-7.1689865760359095926, 10.545761053150789091), 1e-10));
  CHECK(close(hauptmodul_gamma2().evaluate(Complex(1, 2)), Complex(33.970562748477140586, 0), 1e-10));
  CHECK(close(hauptmodul_gamma0_2().evaluate(t1), Complex(210.59888434693222442, 647.00239960556574419), 1e-10));
  CHECK(close(klein_j_series(kDefaultOrder).evaluate(t1), Complex(-12711.733180389214781, -41403.865594803661441), 1e-10));
  CHECK(close(eta_expansion(kDefaultOrder).evaluate(Complex(0.1, 1.3)),
              Complex(0.71112502960642035223, 0.018502783366095972775), 1e-10));
}

TEST_CASE("analytic values agree with the series") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> re(-1, 1), im(1.5, 2.5);
  for (int k = 0; k < 30; ++k) {
    const Complex tau(re(rng), im(rng));
    CHECK(close(hauptmodul_gamma2_value(tau), hauptmodul_gamma2().evaluate(tau), 1e-10));
    CHECK(close(hauptmodul_gamma0_2_value(tau), hauptmodul_gamma0_2().evaluate(tau), 1e-10));
    CHECK(close(klein_j_value(tau), klein_j_series(kDefaultOrder).evaluate(tau), 1e-10));
    CHECK(close(delta_value(tau), delta_power(12, kDefaultOrder).evaluate(tau), 1e-10));
    CHECK(close(eta_value(tau), eta_expansion(kDefaultOrder).evaluate(tau), 1e-10));
    CHECK(close(eta_squared(tau), std::pow(eta_value(tau), 2), 1e-10));
  }
  // eta^2 after reduction, far from the fundamental domain.
  const Complex low(0.37, 0.02);
  CHECK(close(eta_squared(low), std::pow(eta_value(low), 2), 1e-8));
}

TEST_CASE("evaluation is multiplicative") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> re(-1, 1), im(1.5, 2.5);
  const QSeries f = hauptmodul_gamma0_2(), g = delta_power(12, kDefaultOrder) + QSeries::constant(Q(1, 3), kDefaultOrder);
  const QSeries e = eta_expansion(kDefaultOrder);
  for (int k = 0; k < 30; ++k) {
    const Complex tau(re(rng), im(rng));
    CHECK(close((f * g).evaluate(tau), f.evaluate(tau) * g.evaluate(tau), 1e-10));
    CHECK(close((e * e).evaluate(tau), e.evaluate(tau) * e.evaluate(tau), 1e-10));
  }
}

TEST_CASE("periodicity") {
  const Complex tau(0.21, 1.6);
  const QSeries eta = eta_expansion(kDefaultOrder);
  CHECK(close(eta.evaluate(tau + 1.0), Phase(1, 24).value() * eta.evaluate(tau), 1e-12));
  const QSeries z = hauptmodul_gamma2();
  CHECK(close(z.evaluate(tau + 2.0), z.evaluate(tau), 1e-12));
  CHECK(close(z.evaluate(tau + 1.0), z.evaluate(tau), 1e-12) == false);
  const QSeries e3 = eta_expansion(kDefaultOrder).pow(3);
  CHECK(close(e3.evaluate(tau + 1.0), Phase(1, 8).value() * e3.evaluate(tau), 1e-12));
}

TEST_CASE("truncation guard") {
  const QSeries z = hauptmodul_gamma0_2(10);
  CHECK_NOTHROW(z.evaluate(Complex(0, 2.0), 1e-8));
  CHECK_THROWS_AS(z.evaluate(Complex(0, 0.3), 1e-13), PrecisionLoss);
  CHECK_THROWS_AS(QSeries::constant(1, 5).evaluate(Complex(0, -1)), DomainMismatch);
}

TEST_CASE("json round trip") {
  for (const QSeries& f : {hauptmodul_gamma2(12), hauptmodul_gamma0_2(12), eta_expansion(9)}) {
    const nlohmann::json j = to_json(f);
    CHECK(qseries_from_json(j) == f);
    CHECK(qseries_from_json(nlohmann::json::parse(j.dump())) == f);
  }
  const nlohmann::json j = to_json(eta_expansion(4));
  CHECK(j.at("offset") == "1/24");
  CHECK_THROWS_AS(qseries_from_json(nlohmann::json{{"width", 1}}), ParseError);
  CHECK_THROWS_AS(qseries_from_json(nlohmann::json::parse(R"({"width":1,"offset":"0","order":2,"coeffs":[[0,"x"]]})")),
                  ParseError);
}
