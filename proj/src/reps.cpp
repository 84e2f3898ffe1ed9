#include "vvmf/reps.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include <gmpxx.h>

#include "vvmf/errors.hpp"

namespace vvmf {

Representation::Representation(CongruenceSubgroup domain, std::size_t rank, Evaluator eval,
                               bool finite_image, std::string name, bool homomorphic)
    : domain_(domain),
      rank_(rank),
      eval_(std::move(eval)),
      finite_image_(finite_image),
      name_(std::move(name)),
      homomorphic_(homomorphic) {}

RepMatrix Representation::operator()(const GroupElement& g) const {
  if (!domain_.contains(g))
    throw DomainMismatch(g.to_string() + " is not in " + domain_.name());
  return eval_(g);
}

RepMatrix evaluate_ext(const Representation& rho, const GroupElement& x) {
  if (!rho.domain().contains(x)) return RepMatrix::zero(rho.rank());
  return rho(x);
}

Representation trivial_rep(const CongruenceSubgroup& h, std::size_t rank) {
  return {h, rank, [rank](const GroupElement&) { return RepMatrix::identity(rank); }, true,
          "trivial"};
}

Representation restrict_rep(const Representation& rho, const CongruenceSubgroup& h) {
  if (!is_subgroup(h, rho.domain()))
    throw DomainMismatch(h.name() + " is not a subgroup of " + rho.domain().name());
  return {h, rho.rank(), [rho](const GroupElement& g) { return rho(g); }, rho.finite_image(),
          rho.name(), rho.homomorphic()};
}

Fraction dedekind_sum(Int d, Int c) {
  if (c <= 0) throw DomainMismatch("dedekind_sum needs c > 0");
  if (std::gcd(d, c) != 1) throw DomainMismatch("dedekind_sum needs gcd(d, c) = 1");
  // Reciprocity: s(d,c) + s(c,d) = (d/c + c/d + 1/(cd)) / 12 - 1/4. The
  // intermediate terms need more than 64 bits; the result has denominator
  // dividing 6c.
  mpq_class acc = 0;
  bool negate = false;
  mpz_class cc(static_cast<long>(c)), dd(static_cast<long>(mod_floor(d, c)));
  while (dd != 0) {
    mpq_class term(dd * dd + cc * cc + 1, 12 * cc * dd);
    term.canonicalize();
    term -= mpq_class(1, 4);
    if (negate)
      acc -= term;
    else
      acc += term;
    negate = !negate;
    const mpz_class r = cc % dd;
    cc = dd;
    dd = r;
  }
  acc.canonicalize();
  if (!acc.get_num().fits_slong_p() || !acc.get_den().fits_slong_p())
    throw ArithmeticOverflow("dedekind sum does not fit int64");
  return Fraction(acc.get_num().get_si(), acc.get_den().get_si());
}

Phase nu_sl2(const Matrix2& m) {
  if (m.c < 0 || (m.c == 0 && m.d < 0)) return nu_sl2(-m) * Phase(1, 2);
  if (m.c == 0) return Phase(m.b, 12);
  return Phase(Fraction(m.a + m.d, checked_mul(12, m.c)) - dedekind_sum(m.d, m.c) - Fraction(1, 4));
}

Phase nu_multiplier(const GroupElement& g) { return nu_sl2(g.matrix()); }

Representation nu_character(const CongruenceSubgroup& h) {
  if (h.has_sign_splitting()) {
    return {h, 1, [h](const GroupElement& g) { return RepMatrix::scalar(nu_sl2(h.split_lift(g))); },
            true, "nu"};
  }
  return {h, 1, [](const GroupElement& g) { return RepMatrix::scalar(nu_multiplier(g)); }, true,
          "nu", false};
}

Representation tensor_with_character(const Representation& rho, const Representation& chi, Int k) {
  if (chi.rank() != 1) throw DomainMismatch("character must have rank 1");
  if (!is_subgroup(rho.domain(), chi.domain()))
    throw DomainMismatch(chi.domain().name() + " does not contain " + rho.domain().name());
  if (k == 0) return rho;
  const bool chi_ok = chi.homomorphic() || k % 2 == 0;
  if (!chi_ok && !rho.domain().has_sign_splitting())
    throw NoCharacterLift("odd power of " + chi.name() + " on " + rho.domain().name());
  Representation base_chi = chi_ok ? chi : nu_character(rho.domain());
  std::string name = rho.name() + "(x)" + chi.name() + "^" + std::to_string(k);
  return {rho.domain(), rho.rank(),
          [rho, base_chi, k](const GroupElement& g) {
            RepMatrix c = base_chi(g);
            RepMatrix r = rho(g);
            if (c.is_exact() && c.at(0, 0)) return r.scaled(c.at(0, 0)->pow(k));
            ComplexMatrix m = r.to_complex() * std::pow(c.value(0, 0), static_cast<double>(k));
            return RepMatrix::numeric(m);
          },
          rho.finite_image() && chi.finite_image(), name, rho.homomorphic()};
}

std::vector<Phase> ExponentMatrix::eigenphases() const {
  std::vector<Phase> out;
  for (const auto& e : entries) {
    if (!e.exact) throw PrecisionLoss("exponent has no exact value");
    out.emplace_back(*e.exact);
  }
  return out;
}

bool ExponentMatrix::is_exact() const {
  for (const auto& e : entries)
    if (!e.exact) return false;
  return true;
}

namespace {

// Recognize p/q with small q; used to report numeric exponents exactly.
std::optional<Fraction> rationalize(double x) {
  for (Int q = 1; q <= 360; ++q) {
    const double p = std::round(x * static_cast<double>(q));
    if (std::abs(x * static_cast<double>(q) - p) < 1e-9 * static_cast<double>(q))
      return Fraction(static_cast<Int>(p), q).frac();
  }
  return std::nullopt;
}

ExponentMatrix diagonalize_monomial(const RepMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> target(n);
  std::vector<Phase> phi(n);
  for (std::size_t j = 0; j < n; ++j) {
    bool found = false;
    for (std::size_t i = 0; i < n; ++i)
      if (m.at(i, j)) {
        target[j] = i;
        phi[j] = *m.at(i, j);
        found = true;
      }
    if (!found) throw NotAdmissible("singular matrix");
  }
  ExponentMatrix out;
  out.conjugator = RepMatrix::zero(n);
  std::vector<bool> seen(n, false);
  std::size_t col = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> cycle;
    Phase prod;
    for (std::size_t j = start; !seen[j]; j = target[j]) {
      seen[j] = true;
      cycle.push_back(j);
      prod = prod * phi[j];
    }
    const Int len = static_cast<Int>(cycle.size());
    for (Int k = 0; k < len; ++k) {
      const Fraction r = (prod.exponent() + Fraction(k)) / Fraction(len);
      const Phase mu(r);
      out.entries.push_back({r, r.value()});
      Phase v;
      for (std::size_t idx = 0; idx < cycle.size(); ++idx) {
        out.conjugator.set(cycle[idx], col, v);
        v = v * phi[cycle[idx]] * mu.inverse();
      }
      ++col;
    }
  }
  return out;
}

}  // namespace

ExponentMatrix diagonalize(const RepMatrix& m) {
  if (m.rows() != m.cols()) throw LengthMismatch("diagonalize needs a square matrix");
  if (m.is_monomial()) return diagonalize_monomial(m);

  Eigen::ComplexEigenSolver<ComplexMatrix> solver(m.to_complex());
  if (solver.info() != Eigen::Success) throw NotAdmissible("eigensolver failed");
  const ComplexMatrix& v = solver.eigenvectors();
  Eigen::JacobiSVD<ComplexMatrix> svd(v);
  const auto& sv = svd.singularValues();
  const double cond = sv(sv.size() - 1) > 0 ? sv(0) / sv(sv.size() - 1) : INFINITY;
  if (!(cond <= 1e8)) throw NotAdmissible("matrix is not diagonalizable (condition " +
                                          std::to_string(cond) + ")");
  ExponentMatrix out;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    double x = std::arg(solver.eigenvalues()(k)) / (2.0 * std::numbers::pi);
    x -= std::floor(x);
    if (x >= 1.0) x = 0.0;
    auto exact = rationalize(x);
    out.entries.push_back({exact, exact ? exact->value() : x});
  }
  out.conjugator = RepMatrix::numeric(v);
  return out;
}

ExponentMatrix exponent_of(const Representation& rho, const GroupElement& tc) {
  return diagonalize(rho(tc));
}

void check_normal(const CosetTable& table) {
  const auto& h = table.subgroup();
  for (const auto& x : generators(table.ambient()))
    for (const auto& y : generators(h))
      if (!h.contains(x * y * x.inverse()))
        throw NotNormal(h.name() + " is not normal in " + table.ambient().name());
}

Representation finite_quotient_rep(const CosetTable& table, std::vector<RepMatrix> matrices,
                                   std::string name) {
  check_normal(table);
  const std::size_t m = table.size();
  if (matrices.size() != m) throw LengthMismatch("one matrix per coset required");
  const std::size_t d = matrices.front().rows();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t k = table.coset_index(table.reps()[i] * table.reps()[j]);
      if (!(matrices[i] * matrices[j]).equals(matrices[k], 1e-12))
        throw NotHomomorphism("cosets " + std::to_string(i) + " and " + std::to_string(j));
    }
  return {table.ambient(), d,
          [table, matrices](const GroupElement& g) { return matrices[table.coset_index(g)]; },
          true, std::move(name)};
}

}  // namespace vvmf
