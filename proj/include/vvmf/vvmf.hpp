#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vvmf/induce.hpp"
#include "vvmf/qseries.hpp"

namespace vvmf {

using ComplexVector = Eigen::VectorXcd;

struct ScalarFunction {
  std::string description;
  std::function<Complex(Complex)> eval;
  std::optional<QSeries> expansion;  // at infinity, when known
};

// Vector-valued form of weight w: X(g tau) = rho(g) (c tau + d)^w X(tau) for g
// in the domain of rho. Components are evaluated jointly.
class VVMF {
 public:
  using Evaluator = std::function<ComplexVector(Complex)>;

  VVMF(Int weight, Representation multiplier, Evaluator eval, std::vector<std::string> descriptions,
       std::vector<std::optional<QSeries>> expansions = {});

  Int weight() const { return weight_; }
  const Representation& multiplier() const { return multiplier_; }
  std::size_t rank() const { return multiplier_.rank(); }
  const std::vector<std::string>& descriptions() const { return descriptions_; }
  const std::vector<std::optional<QSeries>>& expansions() const { return expansions_; }
  const std::shared_ptr<const InducedRep>& induced() const { return induced_; }

  ComplexVector operator()(Complex tau) const { return eval_(tau); }

  // Marks the multiplier as Ind(base) so that restrict() can undo a lift.
  VVMF with_induced(std::shared_ptr<const InducedRep> ind) const;

 private:
  Int weight_;
  Representation multiplier_;
  Evaluator eval_;
  std::vector<std::string> descriptions_;
  std::vector<std::optional<QSeries>> expansions_;
  std::shared_ptr<const InducedRep> induced_;
};

// Rank-1 form with trivial multiplier on h.
VVMF scalar_form(const CongruenceSubgroup& h, Int weight, ScalarFunction f);

ScalarFunction zk_function(Int order = kDefaultOrder);     // hauptmodul of Gamma(2)
ScalarFunction zh_function(Int order = kDefaultOrder);     // hauptmodul of Gamma0(2)
ScalarFunction delta_function(Int order = kDefaultOrder);  // eta^24
ScalarFunction j_function(Int order = kDefaultOrder);      // Klein j

// Component (i d + k) is X_k(g_i^-1 tau); multiplier Ind(rho).
VVMF lift(const VVMF& x, const CosetTable& table);
// First d components of a lifted form. Throws NotInduced.
VVMF restrict(const VVMF& xt);

// Multiplies by Delta^((target - w)/12) = eta^(2 (target - w)); the multiplier
// becomes rho (x) nu^(target - w). Only the full modular group is supported
// as ambient group.
VVMF weight_shift(const VVMF& x, Int target = 0,
                  const CongruenceSubgroup& ambient = CongruenceSubgroup::full());

// Componentwise product with a scalar function (for ambient-invariant j this
// preserves the transformation law).
VVMF scaled_by(const VVMF& x, const ScalarFunction& j);

// Points with 1.2 <= Im tau <= 2.5 and |Re tau| <= 1.
std::vector<Complex> sample_points(std::size_t count, std::uint64_t seed = 2024);

// max over g, tau of |X(g tau) - rho(g) j(g,tau)^w X(tau)|_inf / max(1, |X(tau)|_inf).
double functional_equation_residual(const VVMF& x, const std::vector<GroupElement>& gens,
                                    const std::vector<Complex>& samples);

struct VerifyResult {
  double residual = 0.0;
  bool passed = false;
};
VerifyResult verify_functional_equation(const VVMF& x, const std::vector<GroupElement>& gens,
                                        const std::vector<Complex>& samples, double tol = 1e-8);

// Smallest / largest singular value of the row-normalized matrix of component
// values at the given points.
double independence_ratio(const std::vector<ComplexVector>& values);
double component_independence(const VVMF& x, const std::vector<Complex>& points);

}  // namespace vvmf
