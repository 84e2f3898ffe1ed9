#pragma once

#include <utility>
#include <vector>

#include <gmpxx.h>

#include "json.hpp"
#include "vvmf/phase.hpp"

namespace vvmf {

// Truncated Laurent series  qt^offset * sum_{n=start}^{order-1} c_n qt^n  in
// qt = exp(2 pi i tau / width), with exact rational coefficients. Terms from
// `order` on are unknown.
class QSeries {
 public:
  QSeries() = default;
  QSeries(Int width, Fraction offset, Int start, std::vector<mpq_class> coeffs);

  static QSeries constant(const mpq_class& c, Int order, Int width = 1);
  static QSeries monomial(const mpq_class& c, Int n, Int order, Int width = 1);

  Int width() const { return width_; }
  const Fraction& offset() const { return offset_; }
  Int start() const { return start_; }
  Int order() const { return start_ + static_cast<Int>(coeffs_.size()); }
  // Zero below start; throws PrecisionLoss at or past order.
  mpq_class coefficient(Int n) const;
  // Index of the first nonzero coefficient; throws if all known ones vanish.
  Int valuation() const;

  QSeries operator+(const QSeries& o) const;
  QSeries operator-(const QSeries& o) const;
  QSeries operator-() const;
  QSeries operator*(const QSeries& o) const;
  QSeries operator*(const mpq_class& c) const;
  QSeries inverse() const;
  QSeries pow(Int k) const;
  QSeries truncated(Int order) const;
  // Same coefficients read in qt' with width w (series in tau/w relabelled).
  QSeries with_width(Int w) const { return {w, offset_, start_, coeffs_}; }

  bool operator==(const QSeries& o) const;

  // Sum of the series at tau. PrecisionLoss if the estimated first omitted
  // term exceeds 1e3 * tol.
  Complex evaluate(Complex tau, double tol = 1e-13) const;
  // Magnitude estimate of the first omitted term at tau.
  double truncation_estimate(Complex tau) const;

 private:
  void require_compatible(const QSeries& o) const;

  Int width_ = 1;
  Fraction offset_;  // in [0,1)
  Int start_ = 0;
  std::vector<mpq_class> coeffs_;
};

inline constexpr Int kDefaultOrder = 60;

// eta(tau) = q^(1/24) prod (1 - q^n), known to q^order in the product part.
QSeries eta_expansion(Int order);

// prod eta(m tau)^r over parts (m, r), as a width-1 series with fractional offset.
using EtaParts = std::vector<std::pair<Int, Int>>;
QSeries eta_quotient(const EtaParts& parts, Int order);

// eta^(2w) = Delta^(w/12) for even w.
QSeries delta_power(Int w, Int order);

// E4^3 / Delta.
QSeries klein_j_series(Int order);

// Hauptmodul of Gamma(2): width 2, checked against the tabulated leading
// coefficients; throws OracleMismatch on disagreement.
QSeries hauptmodul_gamma2(Int order = kDefaultOrder);
// Hauptmodul of Gamma0(2).
QSeries hauptmodul_gamma0_2(Int order = kDefaultOrder);

// Tabulated leading coefficients, from exponent -1 upward.
const std::vector<mpq_class>& gamma2_reference();
const std::vector<mpq_class>& gamma0_2_reference();

// Analytic evaluation, valid for any tau in the upper half plane: eta^2 is
// computed after reduction to the fundamental domain via the eta multiplier.
Complex eta_value(Complex tau);
Complex eta_squared(Complex tau);
// prod eta(m tau / width)^r.
Complex eta_quotient_value(const EtaParts& parts, Complex tau, Int width = 1);

Complex hauptmodul_gamma2_value(Complex tau);
Complex hauptmodul_gamma0_2_value(Complex tau);
Complex klein_j_value(Complex tau);
Complex delta_value(Complex tau);

nlohmann::json to_json(const QSeries& f);
QSeries qseries_from_json(const nlohmann::json& j);

}  // namespace vvmf
