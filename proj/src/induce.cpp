#include "vvmf/induce.hpp"

#include <cmath>
#include <numbers>

#include "vvmf/errors.hpp"

namespace vvmf {

InducedRep::InducedRep(Representation base, CosetTable table)
    : base_(std::move(base)), table_(std::move(table)) {
  if (!(base_.domain() == table_.subgroup()))
    throw DomainMismatch("representation lives on " + base_.domain().name() + ", table on " +
                         table_.subgroup().name());
}

RepMatrix InducedRep::operator()(const GroupElement& x) const {
  if (!table_.ambient().contains(x))
    throw DomainMismatch(x.to_string() + " is not in " + table_.ambient().name());
  const std::size_t m = table_.size(), d = base_.rank();
  const auto& reps = table_.reps();
  RepMatrix out = RepMatrix::zero(m * d);
  for (std::size_t j = 0; j < m; ++j) {
    const GroupElement xg = x * reps[j];
    const std::size_t i = table_.coset_index(xg);
    out.set_block(i, j, base_(reps[i].inverse() * xg));
  }
  return out;
}

Representation InducedRep::as_representation() const {
  InducedRep self = *this;
  return {table_.ambient(), rank(), [self](const GroupElement& g) { return self(g); },
          base_.finite_image(), "Ind(" + base_.name() + ")", base_.homomorphic()};
}

InducedRep induce(const Representation& rho, const CosetTable& table) { return {rho, table}; }

bool has_block_permutation_shape(const RepMatrix& m, std::size_t d) {
  if (d == 0 || m.rows() != m.cols() || m.rows() % d != 0) return false;
  const std::size_t n = m.rows() / d;
  std::vector<int> rows(n, 0), cols(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!m.block(i, j, d).is_zero()) {
        ++rows[i];
        ++cols[j];
      }
  for (std::size_t k = 0; k < n; ++k)
    if (rows[k] != 1 || cols[k] != 1) return false;
  return true;
}

namespace {

void check_system(const Representation& rho, const CuspSystem& system) {
  if (!(rho.domain() == system.subgroup))
    throw DomainMismatch("cusp system is for " + system.subgroup.name() + ", representation for " +
                         rho.domain().name());
}

}  // namespace

RepMatrix induced_cusp_blocks(const Representation& rho, const CuspSystem& system) {
  check_system(rho, system);
  const std::size_t d = rho.rank();
  const std::size_t m = static_cast<std::size_t>(system.total_width());
  RepMatrix out = RepMatrix::zero(m * d);
  std::size_t off = 0;
  for (const auto& cls : system.classes) {
    const std::size_t h = static_cast<std::size_t>(cls.width);
    for (std::size_t j = 1; j < h; ++j) out.set_block(off + j, off + j - 1, RepMatrix::identity(d));
    out.set_block(off, off + h - 1, rho(cls.stabilizer_generator));
    off += h;
  }
  return out;
}

Complex EigenPair::eigenvalue() const {
  if (omega.exact) return Phase(*omega.exact).value();
  return std::polar(1.0, 2.0 * std::numbers::pi * omega.value);
}

std::vector<EigenPair> induced_cusp_eigenvectors(const Representation& rho,
                                                 const CuspSystem& system) {
  check_system(rho, system);
  const std::size_t d = rho.rank();
  const std::size_t dm = d * static_cast<std::size_t>(system.total_width());
  std::vector<EigenPair> out;
  std::size_t off = 0;
  for (const auto& cls : system.classes) {
    const ExponentMatrix lam = exponent_of(rho, cls.stabilizer_generator);
    const Int h = cls.width;
    for (std::size_t k = 0; k < d; ++k) {
      const Exponent& e = lam.entries[k];
      for (Int j = 0; j < h; ++j) {
        EigenPair pair;
        if (e.exact && lam.conjugator.is_exact()) {
          const Fraction w = (*e.exact + Fraction(j)) / Fraction(h);
          pair.omega = {w, w.value()};
          const Phase mu(w);
          pair.vector = RepMatrix::zero(dm, 1);
          for (Int b = 0; b < h; ++b) {
            const Phase scale = mu.pow(-b);
            for (std::size_t r = 0; r < d; ++r) {
              const auto& v = lam.conjugator.at(r, k);
              if (v) pair.vector.set(off + static_cast<std::size_t>(b) * d + r, 0, *v * scale);
            }
          }
        } else {
          const double w = (e.value + static_cast<double>(j)) / static_cast<double>(h);
          pair.omega = {e.exact ? std::optional<Fraction>((*e.exact + Fraction(j)) / Fraction(h))
                                : std::nullopt,
                        w};
          ComplexMatrix v = ComplexMatrix::Zero(static_cast<Eigen::Index>(dm), 1);
          for (Int b = 0; b < h; ++b) {
            const Complex scale = std::polar(1.0, -2.0 * std::numbers::pi * w * static_cast<double>(b));
            for (std::size_t r = 0; r < d; ++r)
              v(static_cast<Eigen::Index>(off + static_cast<std::size_t>(b) * d + r), 0) =
                  scale * lam.conjugator.value(r, k);
          }
          pair.vector = RepMatrix::numeric(v);
        }
        out.push_back(std::move(pair));
      }
    }
    off += static_cast<std::size_t>(h) * d;
  }
  return out;
}

ExponentMatrix induced_exponent(const std::vector<ExponentMatrix>& exponents,
                                const std::vector<Int>& widths) {
  if (exponents.size() != widths.size())
    throw LengthMismatch(std::to_string(exponents.size()) + " exponent matrices for " +
                         std::to_string(widths.size()) + " widths");
  ExponentMatrix out;
  for (std::size_t i = 0; i < widths.size(); ++i) {
    const Int h = widths[i];
    for (const auto& e : exponents[i].entries)
      for (Int j = 0; j < h; ++j) {
        if (e.exact) {
          const Fraction w = ((*e.exact + Fraction(j)) / Fraction(h)).frac();
          out.entries.push_back({w, w.value()});
        } else {
          double w = (e.value + static_cast<double>(j)) / static_cast<double>(h);
          out.entries.push_back({std::nullopt, w - std::floor(w)});
        }
      }
  }
  return out;
}

RepMatrix coset_change_conjugator(const Representation& rho, const CongruenceSubgroup& ambient,
                                  const std::vector<GroupElement>& reps_tilde,
                                  const std::vector<GroupElement>& reps_hat) {
  const CongruenceSubgroup& h = rho.domain();
  const CosetTable tilde = transversal_table(h, ambient, reps_tilde);
  transversal_table(h, ambient, reps_hat);
  const std::size_t m = tilde.size(), d = rho.rank();
  RepMatrix out = RepMatrix::zero(m * d);
  for (std::size_t j = 0; j < m; ++j) {
    const std::size_t pj = tilde.coset_index(reps_hat[j]);
    out.set_block(pj, j, rho(reps_tilde[pj].inverse() * reps_hat[j]));
  }
  return out;
}

}  // namespace vvmf
