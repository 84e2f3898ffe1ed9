#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vvmf/phase.hpp"
#include "vvmf/rep_matrix.hpp"
#include "vvmf/subgroups.hpp"

namespace vvmf {

// Rank-d multiplier of a congruence subgroup. Evaluation outside the domain
// is the zero matrix (evaluate_ext).
class Representation {
 public:
  using Evaluator = std::function<RepMatrix(const GroupElement&)>;

  Representation() = default;
  Representation(CongruenceSubgroup domain, std::size_t rank, Evaluator eval, bool finite_image,
                 std::string name, bool homomorphic = true);

  const CongruenceSubgroup& domain() const { return domain_; }
  std::size_t rank() const { return rank_; }
  bool finite_image() const { return finite_image_; }
  // False only for the canonical-sign eta multiplier on groups containing
  // elliptic elements of order 2, where the odd SL(2,Z) character does not
  // descend to PSL(2,Z).
  bool homomorphic() const { return homomorphic_; }
  const std::string& name() const { return name_; }

  // Throws DomainMismatch if g is not in the domain.
  RepMatrix operator()(const GroupElement& g) const;

 private:
  CongruenceSubgroup domain_;
  std::size_t rank_ = 0;
  Evaluator eval_;
  bool finite_image_ = true;
  std::string name_;
  bool homomorphic_ = true;
};

RepMatrix evaluate_ext(const Representation& rho, const GroupElement& x);

Representation trivial_rep(const CongruenceSubgroup& h, std::size_t rank = 1);

// Restriction to a subgroup of the domain. Throws DomainMismatch.
Representation restrict_rep(const Representation& rho, const CongruenceSubgroup& h);

// s(d, c) = sum_{i=1}^{c-1} (i/c)((di/c)), exact.
Fraction dedekind_sum(Int d, Int c);

// Multiplier of eta^2 on an SL(2,Z) matrix: eta(M tau)^2 = nu(M) (c tau + d) eta(tau)^2.
Phase nu_sl2(const Matrix2& m);
// nu on the canonical representative of g.
Phase nu_multiplier(const GroupElement& g);

// nu as a rank-1 multiplier on h. Uses the sign-splitting lift when h admits
// one, so the result is a genuine character; otherwise the canonical-sign
// multiplier system, flagged non-homomorphic.
Representation nu_character(const CongruenceSubgroup& h);

// g -> chi(g)^k rho(g). chi must be defined on the domain of rho.
// Odd k with a non-homomorphic chi throws NoCharacterLift.
Representation tensor_with_character(const Representation& rho, const Representation& chi, Int k);

struct Exponent {
  std::optional<Fraction> exact;  // in [0,1)
  double value = 0.0;             // in [0,1)
};

// Diagonal of Lambda plus P with P^-1 rho(t) P = exp(2 pi i Lambda).
struct ExponentMatrix {
  std::vector<Exponent> entries;
  RepMatrix conjugator;

  std::vector<Phase> eigenphases() const;  // exact entries only
  bool is_exact() const;
};

// Diagonalizes a matrix. Phase-monomial input is handled exactly by cycle
// decomposition; other input goes through a complex eigensolver and throws
// NotAdmissible when the eigenvector matrix is ill-conditioned (> 1e8).
ExponentMatrix diagonalize(const RepMatrix& m);
ExponentMatrix exponent_of(const Representation& rho, const GroupElement& tc);

// Representation of the ambient group of `table` that factors through the
// finite quotient by table.subgroup(). matrices[i] is the value on coset i.
Representation finite_quotient_rep(const CosetTable& table, std::vector<RepMatrix> matrices,
                                   std::string name = "quotient");

// Throws NotNormal unless h is normal in the ambient group of `table`.
void check_normal(const CosetTable& table);

}  // namespace vvmf
