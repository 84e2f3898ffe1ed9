#pragma once

#include <vector>

#include "vvmf/reps.hpp"

namespace vvmf {

// Ind_H^G(rho) with respect to the transversal of `table`. Block (i, j) of
// the value at x is rho(g_i^-1 x g_j), nonzero for exactly one i per j.
class InducedRep {
 public:
  InducedRep(Representation base, CosetTable table);

  const Representation& base() const { return base_; }
  const CosetTable& table() const { return table_; }
  std::size_t rank() const { return base_.rank() * table_.size(); }

  // Throws DomainMismatch if x is not in the ambient group.
  RepMatrix operator()(const GroupElement& x) const;
  Representation as_representation() const;

 private:
  Representation base_;
  CosetTable table_;
};

InducedRep induce(const Representation& rho, const CosetTable& table);

// Each block row and each block column (blocks of size d) holds exactly one
// nonzero block.
bool has_block_permutation_shape(const RepMatrix& m, std::size_t d);

// rho~(t_c) assembled from the cusp block rule, in the g_ij order of `system`.
RepMatrix induced_cusp_blocks(const Representation& rho, const CuspSystem& system);

struct EigenPair {
  Exponent omega;   // eigenvalue is exp(2 pi i omega)
  RepMatrix vector; // dm x 1
  Complex eigenvalue() const;
};

// dm eigenpairs of rho~(t_c), ordered by (class i, eigenvector k of rho(t_i), j).
std::vector<EigenPair> induced_cusp_eigenvectors(const Representation& rho,
                                                 const CuspSystem& system);

// Entries (Lambda_i[k] + j) / h_i in the same order as the eigenpairs.
ExponentMatrix induced_exponent(const std::vector<ExponentMatrix>& exponents,
                                const std::vector<Int>& widths);

// D with rho_hat(g) = D^-1 rho_tilde(g) D, where rho_tilde and rho_hat are
// induced using reps_tilde and reps_hat. Throws NotTransversal.
RepMatrix coset_change_conjugator(const Representation& rho, const CongruenceSubgroup& ambient,
                                  const std::vector<GroupElement>& reps_tilde,
                                  const std::vector<GroupElement>& reps_hat);

}  // namespace vvmf
