#include "vvmf/vvmf.hpp"

#include <cmath>
#include <random>

#include "vvmf/errors.hpp"

namespace vvmf {

VVMF::VVMF(Int weight, Representation multiplier, Evaluator eval,
           std::vector<std::string> descriptions, std::vector<std::optional<QSeries>> expansions)
    : weight_(weight),
      multiplier_(std::move(multiplier)),
      eval_(std::move(eval)),
      descriptions_(std::move(descriptions)),
      expansions_(std::move(expansions)) {
  if (weight % 2 != 0) throw DomainMismatch("only even weights are supported");
  if (descriptions_.size() != multiplier_.rank())
    throw LengthMismatch(std::to_string(descriptions_.size()) + " components for a rank " +
                         std::to_string(multiplier_.rank()) + " multiplier");
  expansions_.resize(descriptions_.size());
}

VVMF VVMF::with_induced(std::shared_ptr<const InducedRep> ind) const {
  VVMF out = *this;
  out.induced_ = std::move(ind);
  return out;
}

VVMF scalar_form(const CongruenceSubgroup& h, Int weight, ScalarFunction f) {
  auto eval = f.eval;
  return {weight,
          trivial_rep(h),
          [eval](Complex tau) {
            ComplexVector v(1);
            v(0) = eval(tau);
            return v;
          },
          {f.description},
          {f.expansion}};
}

ScalarFunction zk_function(Int order) {
  return {"zK", hauptmodul_gamma2_value, hauptmodul_gamma2(order)};
}

ScalarFunction zh_function(Int order) {
  return {"zH", hauptmodul_gamma0_2_value, hauptmodul_gamma0_2(order)};
}

ScalarFunction delta_function(Int order) { return {"Delta", delta_value, delta_power(12, order)}; }

ScalarFunction j_function(Int order) { return {"j", klein_j_value, klein_j_series(order)}; }

VVMF lift(const VVMF& x, const CosetTable& table) {
  if (!(x.multiplier().domain() == table.subgroup()))
    throw DomainMismatch("form lives on " + x.multiplier().domain().name() + ", table on " +
                         table.subgroup().name());
  auto ind = std::make_shared<const InducedRep>(x.multiplier(), table);
  std::vector<GroupElement> inv;
  for (const auto& g : table.reps()) inv.push_back(g.inverse());
  const std::size_t d = x.rank();
  std::vector<std::string> desc;
  std::vector<std::optional<QSeries>> exps;
  for (std::size_t i = 0; i < inv.size(); ++i)
    for (std::size_t k = 0; k < d; ++k) {
      desc.push_back(inv[i].is_identity() ? x.descriptions()[k]
                                          : x.descriptions()[k] + " o " + inv[i].to_string());
      exps.push_back(inv[i].is_identity() ? x.expansions()[k] : std::nullopt);
    }
  VVMF base = x;
  VVMF out(x.weight(), ind->as_representation(),
           [base, inv, d](Complex tau) {
             ComplexVector v(static_cast<Eigen::Index>(inv.size() * d));
             for (std::size_t i = 0; i < inv.size(); ++i)
               v.segment(static_cast<Eigen::Index>(i * d), static_cast<Eigen::Index>(d)) =
                   base(act(inv[i], tau));
             return v;
           },
           std::move(desc), std::move(exps));
  return out.with_induced(ind);
}

VVMF restrict(const VVMF& xt) {
  if (!xt.induced()) throw NotInduced("form was not produced by lift");
  const Representation& rho = xt.induced()->base();
  const std::size_t d = rho.rank();
  VVMF full = xt;
  std::vector<std::string> desc(xt.descriptions().begin(), xt.descriptions().begin() + d);
  std::vector<std::optional<QSeries>> exps(xt.expansions().begin(), xt.expansions().begin() + d);
  return {xt.weight(), rho,
          [full, d](Complex tau) -> ComplexVector { return full(tau).head(static_cast<Eigen::Index>(d)); },
          std::move(desc), std::move(exps)};
}

VVMF weight_shift(const VVMF& x, Int target, const CongruenceSubgroup& ambient) {
  if (!(ambient == CongruenceSubgroup::full()))
    throw UnsupportedAmbientGroup("weight shift is implemented for PSL(2,Z) only, not " +
                                  ambient.name());
  const Int k = target - x.weight();
  if (k % 2 != 0) throw DomainMismatch("weights must have equal parity");
  if (k == 0) return x;
  const Representation rho =
      tensor_with_character(x.multiplier(), nu_character(x.multiplier().domain()), k);
  std::vector<std::string> desc;
  std::vector<std::optional<QSeries>> exps;
  const std::string factor = "Delta^(" + std::to_string(k) + "/12)";
  for (std::size_t c = 0; c < x.rank(); ++c) {
    desc.push_back(factor + " * " + x.descriptions()[c]);
    const auto& e = x.expansions()[c];
    exps.push_back(e ? std::optional<QSeries>((*e) * delta_power(k, e->order()))
                     : std::nullopt);
  }
  VVMF base = x;
  return {target, rho,
          [base, k](Complex tau) -> ComplexVector {
            return base(tau) * std::pow(eta_squared(tau), static_cast<int>(k));
          },
          std::move(desc), std::move(exps)};
}

VVMF scaled_by(const VVMF& x, const ScalarFunction& j) {
  std::vector<std::string> desc;
  for (const auto& d : x.descriptions()) desc.push_back(j.description + " * " + d);
  VVMF base = x;
  auto f = j.eval;
  VVMF out(x.weight(), x.multiplier(),
           [base, f](Complex tau) -> ComplexVector { return base(tau) * f(tau); }, std::move(desc));
  return out.with_induced(x.induced());
}

std::vector<Complex> sample_points(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(-1.0, 1.0), im(1.2, 2.5);
  std::vector<Complex> out;
  for (std::size_t k = 0; k < count; ++k) {
    const double x = re(rng);
    out.emplace_back(x, im(rng));
  }
  return out;
}

double functional_equation_residual(const VVMF& x, const std::vector<GroupElement>& gens,
                                    const std::vector<Complex>& samples) {
  double worst = 0.0;
  for (const auto& g : gens) {
    const ComplexMatrix rho = x.multiplier()(g).to_complex();
    for (const Complex& tau : samples) {
      const ComplexVector at = x(tau);
      const ComplexVector moved = x(act(g, tau));
      const Complex factor = std::pow(automorphy_factor(g, tau), static_cast<int>(x.weight()));
      const ComplexVector diff = moved - factor * (rho * at);
      const double scale = std::max(1.0, at.cwiseAbs().maxCoeff());
      const double r = diff.cwiseAbs().maxCoeff() / scale;
      if (!(r <= worst)) worst = r;  // NaN propagates as failure
    }
  }
  return worst;
}

VerifyResult verify_functional_equation(const VVMF& x, const std::vector<GroupElement>& gens,
                                        const std::vector<Complex>& samples, double tol) {
  VerifyResult r;
  r.residual = functional_equation_residual(x, gens, samples);
  r.passed = r.residual <= tol;
  return r;
}

double independence_ratio(const std::vector<ComplexVector>& values) {
  if (values.empty()) return 0.0;
  const Eigen::Index d = values.front().size();
  if (static_cast<Eigen::Index>(values.size()) < d) return 0.0;
  ComplexMatrix m(d, static_cast<Eigen::Index>(values.size()));
  for (std::size_t j = 0; j < values.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = values[j];
  // Rank is invariant under row and column scaling; equilibrate both so that
  // the singular value ratio does not reflect the dynamic range of the values.
  for (int sweep = 0; sweep < 20; ++sweep) {
    for (Eigen::Index i = 0; i < d; ++i) {
      const double n = m.row(i).norm();
      if (!(n > 0.0) || !std::isfinite(n)) return 0.0;
      m.row(i) /= n;
    }
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const double n = m.col(j).norm();
      if (n > 0.0) m.col(j) /= n;
    }
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const auto& s = svd.singularValues();
  return s(s.size() - 1) / s(0);
}

double component_independence(const VVMF& x, const std::vector<Complex>& points) {
  std::vector<ComplexVector> values;
  for (const auto& tau : points) values.push_back(x(tau));
  return independence_ratio(values);
}

}  // namespace vvmf
