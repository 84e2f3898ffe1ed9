#include "vvmf/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "vvmf/errors.hpp"
#include "vvmf/reps.hpp"

namespace vvmf {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex e(Complex z) { return std::exp(Complex(0.0, kTwoPi) * z); }

}  // namespace

QSeries::QSeries(Int width, Fraction offset, Int start, std::vector<mpq_class> coeffs)
    : width_(width), offset_(offset.frac()), start_(start), coeffs_(std::move(coeffs)) {
  if (width <= 0) throw DomainMismatch("series width must be positive");
  start_ = checked_add(start_, floor_div(offset.num(), offset.den()));
}

QSeries QSeries::constant(const mpq_class& c, Int order, Int width) {
  return monomial(c, 0, order, width);
}

QSeries QSeries::monomial(const mpq_class& c, Int n, Int order, Int width) {
  if (order <= n) throw PrecisionLoss("order must exceed the monomial degree");
  std::vector<mpq_class> coeffs(static_cast<std::size_t>(order - n));
  coeffs[0] = c;
  return {width, Fraction(0), n, std::move(coeffs)};
}

mpq_class QSeries::coefficient(Int n) const {
  if (n < start_) return 0;
  if (n >= order())
    throw PrecisionLoss("coefficient " + std::to_string(n) + " is beyond the truncation order " +
                        std::to_string(order()));
  return coeffs_[static_cast<std::size_t>(n - start_)];
}

Int QSeries::valuation() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return start_ + static_cast<Int>(k);
  throw PrecisionLoss("series vanishes to its truncation order");
}

void QSeries::require_compatible(const QSeries& o) const {
  if (width_ != o.width_)
    throw DomainMismatch("series widths " + std::to_string(width_) + " and " +
                         std::to_string(o.width_) + " differ");
}

QSeries QSeries::operator+(const QSeries& o) const {
  require_compatible(o);
  if (!(offset_ == o.offset_)) throw DomainMismatch("cannot add series with different offsets");
  const Int s = std::min(start_, o.start_), ord = std::min(order(), o.order());
  std::vector<mpq_class> c(static_cast<std::size_t>(std::max<Int>(ord - s, 0)));
  for (Int n = s; n < ord; ++n) c[static_cast<std::size_t>(n - s)] = coefficient(n) + o.coefficient(n);
  return {width_, offset_, s, std::move(c)};
}

QSeries QSeries::operator-() const { return *this * mpq_class(-1); }

QSeries QSeries::operator-(const QSeries& o) const { return *this + (-o); }

QSeries QSeries::operator*(const mpq_class& k) const {
  QSeries r = *this;
  for (auto& c : r.coeffs_) c *= k;
  return r;
}

QSeries QSeries::operator*(const QSeries& o) const {
  require_compatible(o);
  const Int s = start_ + o.start_;
  const Int ord = std::min(start_ + o.order(), o.start_ + order());
  std::vector<mpq_class> c(static_cast<std::size_t>(std::max<Int>(ord - s, 0)));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size() && i + j < c.size(); ++j)
      c[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return {width_, offset_ + o.offset_, s, std::move(c)};
}

QSeries QSeries::inverse() const {
  const Int v = valuation();
  const std::size_t skip = static_cast<std::size_t>(v - start_);
  const std::size_t len = coeffs_.size() - skip;
  const mpq_class lead_inv = 1 / coeffs_[skip];
  std::vector<mpq_class> b(len);
  b[0] = lead_inv;
  for (std::size_t k = 1; k < len; ++k) {
    mpq_class acc = 0;
    for (std::size_t i = 1; i <= k; ++i)
      if (coeffs_[skip + i] != 0) acc += coeffs_[skip + i] * b[k - i];
    b[k] = -lead_inv * acc;
  }
  return {width_, -offset_, -v, std::move(b)};
}

QSeries QSeries::pow(Int k) const {
  if (k < 0) return inverse().pow(-k);
  if (k == 0) return constant(1, std::max<Int>(order() - start_, 1), width_);
  std::optional<QSeries> result;
  QSeries base = *this;
  while (k > 0) {
    if (k & 1) result = result ? *result * base : base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return *result;
}

QSeries QSeries::truncated(Int ord) const {
  if (ord > order()) throw PrecisionLoss("cannot extend a series past its truncation order");
  QSeries r = *this;
  r.coeffs_.resize(static_cast<std::size_t>(std::max<Int>(ord - start_, 0)));
  return r;
}

bool QSeries::operator==(const QSeries& o) const {
  if (width_ != o.width_ || !(offset_ == o.offset_) || order() != o.order()) return false;
  const Int s = std::min(start_, o.start_);
  for (Int n = s; n < order(); ++n)
    if (coefficient(n) != o.coefficient(n)) return false;
  return true;
}

double QSeries::truncation_estimate(Complex tau) const {
  const double r = std::exp(-kTwoPi * tau.imag() / static_cast<double>(width_));
  double c = 0.0;
  for (std::size_t k = coeffs_.size() >= 3 ? coeffs_.size() - 3 : 0; k < coeffs_.size(); ++k)
    c = std::max(c, std::abs(coeffs_[k].get_d()));
  return c * std::pow(r, static_cast<double>(order()) + offset_.value());
}

Complex QSeries::evaluate(Complex tau, double tol) const {
  if (!(tau.imag() > 0)) throw DomainMismatch("evaluation point must lie in the upper half plane");
  const double est = truncation_estimate(tau);
  if (!(est < 1e3 * tol))
    throw PrecisionLoss("truncation error estimate " + std::to_string(est) + " at Im tau = " +
                        std::to_string(tau.imag()));
  const Complex z = tau / static_cast<double>(width_);
  const Complex qt = e(z);
  Complex power = e(z * (static_cast<double>(start_) + offset_.value()));
  Complex sum = 0.0;
  for (const auto& c : coeffs_) {
    if (c != 0) sum += c.get_d() * power;
    power *= qt;
  }
  return sum;
}

QSeries eta_expansion(Int order) {
  if (order < 1) throw DomainMismatch("eta expansion needs order >= 1");
  std::vector<mpq_class> c(static_cast<std::size_t>(order));
  for (Int k = 0;; ++k) {
    bool any = false;
    for (Int kk : {k, -k}) {
      const Int n = kk * (3 * kk - 1) / 2;
      if (n < order) {
        any = true;
        c[static_cast<std::size_t>(n)] = (k % 2 == 0) ? 1 : -1;
      }
    }
    if (!any) break;
  }
  return {1, Fraction(1, 24), 0, std::move(c)};
}

QSeries eta_quotient(const EtaParts& parts, Int order) {
  Int margin = 2;
  for (const auto& [m, r] : parts) {
    if (m <= 0) throw DomainMismatch("eta quotient multipliers must be positive");
    margin += (std::abs(m * r) + 23) / 24 * 2;
  }
  const Int work = order + margin;
  QSeries result = QSeries::constant(1, work);
  for (const auto& [m, r] : parts) {
    if (r == 0) continue;
    const QSeries base = eta_expansion(work / m + 1);
    std::vector<mpq_class> spread(static_cast<std::size_t>(work));
    for (Int n = 0; n * m < work; ++n) spread[static_cast<std::size_t>(n * m)] = base.coefficient(n);
    const QSeries factor(1, Fraction(m, 24), 0, std::move(spread));
    result = result * factor.pow(r);
  }
  if (result.order() < order)
    throw PrecisionLoss("eta quotient lost precision below the requested order");
  return result.truncated(std::max(order, result.start() + 1));
}

QSeries delta_power(Int w, Int order) {
  if (w % 2 != 0) throw DomainMismatch("delta_power needs an even weight");
  if (w == 0) return QSeries::constant(1, order);
  return eta_quotient({{1, 2 * w}}, order);
}

QSeries klein_j_series(Int order) {
  const Int work = order + 3;
  std::vector<mpq_class> e4(static_cast<std::size_t>(work));
  e4[0] = 1;
  for (Int n = 1; n < work; ++n) {
    Int sigma = 0;
    for (Int k = 1; k <= n; ++k)
      if (n % k == 0) sigma += k * k * k;
    e4[static_cast<std::size_t>(n)] = 240 * mpq_class(sigma);
  }
  const QSeries e4s(1, Fraction(0), 0, std::move(e4));
  return (e4s.pow(3) * delta_power(-12, work)).truncated(order);
}

const std::vector<mpq_class>& gamma2_reference() {
  static const std::vector<mpq_class> ref = [] {
    std::vector<mpq_class> r;
    for (Int c : {1, -8, 20, 0, -62, 0, 216}) r.push_back(mpq_class(-c, 16));
    for (auto& x : r) x.canonicalize();
    return r;
  }();
  return ref;
}

const std::vector<mpq_class>& gamma0_2_reference() {
  static const std::vector<mpq_class> ref = [] {
    std::vector<mpq_class> r;
    for (Int c : {1, -24, 276, -2048}) r.push_back(mpq_class(-c, 64));
    for (auto& x : r) x.canonicalize();
    return r;
  }();
  return ref;
}

namespace {

// 16 / lambda in q^(1/2), as a width-1 series in its own variable.
const EtaParts kInverseLambdaParts = {{2, 24}, {1, -8}, {4, -16}};
const EtaParts kGamma0TwoParts = {{1, 24}, {2, -24}};

void check_reference(const QSeries& f, const std::vector<mpq_class>& ref, const char* name) {
  for (std::size_t k = 0; k < ref.size(); ++k) {
    const Int n = static_cast<Int>(k) - 1;
    if (n >= f.order()) break;
    if (f.coefficient(n) != ref[k])
      throw OracleMismatch(std::string(name) + " coefficient " + std::to_string(n) + ": got " +
                           f.coefficient(n).get_str() + ", expected " + ref[k].get_str());
  }
}

}  // namespace

QSeries hauptmodul_gamma2(Int order) {
  if (order < 1) throw DomainMismatch("order must be positive");
  const QSeries inv_lambda = eta_quotient(kInverseLambdaParts, order);
  // Fit alpha + beta * (16/lambda) to the two leading tabulated coefficients,
  // then require every remaining tabulated coefficient to agree.
  const auto& ref = gamma2_reference();
  const mpq_class beta = ref[0] / inv_lambda.coefficient(-1);
  const mpq_class alpha = ref[1] - beta * inv_lambda.coefficient(0);
  const QSeries f = (QSeries::constant(alpha, order) + inv_lambda * beta).with_width(2);
  check_reference(f, ref, "Gamma(2) hauptmodul");
  return f;
}

QSeries hauptmodul_gamma0_2(Int order) {
  if (order < 1) throw DomainMismatch("order must be positive");
  const QSeries f = eta_quotient(kGamma0TwoParts, order) * mpq_class(-1, 64);
  check_reference(f, gamma0_2_reference(), "Gamma0(2) hauptmodul");
  return f;
}

Complex eta_value(Complex tau) {
  if (!(tau.imag() > 0)) throw DomainMismatch("eta needs Im tau > 0");
  const double logr = -kTwoPi * tau.imag();
  Complex sum = 1.0;
  for (Int k = 1;; ++k) {
    bool any = false;
    for (Int kk : {k, -k}) {
      const double n = static_cast<double>(kk * (3 * kk - 1) / 2);
      if (n * logr < std::log(1e-20)) continue;
      any = true;
      sum += (k % 2 == 0 ? 1.0 : -1.0) * e(tau * n);
    }
    if (!any) break;
  }
  return e(tau / 24.0) * sum;
}

Complex eta_squared(Complex tau) {
  if (!(tau.imag() > 0)) throw DomainMismatch("eta needs Im tau > 0");
  // Move tau into the fundamental domain, tracking z = g tau.
  Matrix2 g;
  Complex z = tau;
  for (int iter = 0; iter < 10000; ++iter) {
    const Int n = static_cast<Int>(std::llround(z.real()));
    if (n != 0) {
      z -= static_cast<double>(n);
      g = Matrix2{1, -n, 0, 1} * g;
    }
    if (std::norm(z) < 1.0 - 1e-12) {
      z = -1.0 / z;
      g = Matrix2{0, -1, 1, 0} * g;
    } else {
      break;
    }
  }
  // tau = g^-1 z with g^-1 = (d, -b; -c, a).
  const Matrix2 inv{g.d, -g.b, -g.c, g.a};
  const Complex e2 = eta_value(z);
  return nu_sl2(inv).value() * (static_cast<double>(inv.c) * z + static_cast<double>(inv.d)) *
         e2 * e2;
}

Complex eta_quotient_value(const EtaParts& parts, Complex tau, Int width) {
  Complex out = 1.0;
  for (const auto& [m, r] : parts) {
    const Complex arg = tau * static_cast<double>(m) / static_cast<double>(width);
    if (r % 2 == 0)
      out *= std::pow(eta_squared(arg), static_cast<int>(r / 2));
    else
      out *= std::pow(eta_value(arg), static_cast<int>(r));
  }
  return out;
}

Complex hauptmodul_gamma2_value(Complex tau) {
  return 1.0 - eta_quotient_value(kInverseLambdaParts, tau, 2) / 16.0;
}

Complex hauptmodul_gamma0_2_value(Complex tau) {
  return -eta_quotient_value(kGamma0TwoParts, tau) / 64.0;
}

Complex klein_j_value(Complex tau) {
  const Complex x = eta_quotient_value(kGamma0TwoParts, tau);
  const Complex y = x + 256.0;
  return y * y * y / (x * x);
}

Complex delta_value(Complex tau) { return std::pow(eta_squared(tau), 12); }

nlohmann::json to_json(const QSeries& f) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (Int n = f.start(); n < f.order(); ++n) coeffs.push_back({n, f.coefficient(n).get_str()});
  return {{"width", f.width()},
          {"offset", f.offset().to_string()},
          {"order", f.order()},
          {"coeffs", coeffs}};
}

QSeries qseries_from_json(const nlohmann::json& j) {
  try {
    const Int width = j.at("width").get<Int>();
    const Fraction offset = Fraction::parse(j.at("offset").get<std::string>());
    const Int order = j.at("order").get<Int>();
    const auto& coeffs = j.at("coeffs");
    Int start = coeffs.empty() ? order : coeffs.front().at(0).get<Int>();
    std::vector<mpq_class> c(static_cast<std::size_t>(order - start));
    for (const auto& item : coeffs) {
      const Int n = item.at(0).get<Int>();
      if (n < start || n >= order) throw ParseError("coefficient index out of range");
      mpq_class v(item.at(1).get<std::string>());
      v.canonicalize();
      c[static_cast<std::size_t>(n - start)] = v;
    }
    return {width, offset, start, std::move(c)};
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(std::string("series JSON: ") + ex.what());
  } catch (const std::invalid_argument& ex) {
    throw ParseError(std::string("series JSON: ") + ex.what());
  }
}

}  // namespace vvmf
