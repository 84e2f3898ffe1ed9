#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "vvmf/vvmf.hpp"

namespace vvmf {

using RationalMatrix = std::vector<std::vector<mpq_class>>;

// K = G/H for H normal in G; element i is the coset reps[i] H.
struct FiniteQuotient {
  CosetTable table;
  std::vector<std::vector<std::size_t>> mult;  // mult[i][j] = index of g_i g_j

  std::size_t order() const { return mult.size(); }
  std::size_t inverse(std::size_t i) const;
};

// Throws NotNormal.
FiniteQuotient finite_quotient(const CongruenceSubgroup& h, const CongruenceSubgroup& g);

struct CharacterTable {
  std::vector<std::vector<std::size_t>> classes;  // conjugacy classes of element indices
  std::vector<std::string> labels;
  std::vector<std::size_t> dims;
  std::vector<std::vector<mpq_class>> values;  // values[irrep][class]

  // Character value on element index k.
  mpq_class value(std::size_t irrep, std::size_t k) const;
};

// Irreducible representations of K, pulled back to G. Implemented for
// Gamma(1)/Gamma(2) = S3 (trivial, sign, 2-dim) and Gamma0(2)/Gamma(2) = C2.
std::vector<Representation> quotient_irreps(const FiniteQuotient& q);
std::vector<Representation> s3_irreps();

// Characters of the given irreps (which must be rational-valued).
CharacterTable character_table(const FiniteQuotient& q, const std::vector<Representation>& irreps);

Representation regular_rep(const FiniteQuotient& q);
// reg(k) on coset indices, as exact 0/1 matrices.
RationalMatrix regular_matrix(const FiniteQuotient& q, std::size_t k);

// (d_i / |K|) sum_k conj(chi_i(k)) reg(k).
RationalMatrix irrep_projection(const FiniteQuotient& q, const CharacterTable& chars,
                                std::size_t irrep);

RationalMatrix rational_product(const RationalMatrix& a, const RationalMatrix& b);
std::size_t rational_rank(RationalMatrix m);

// g(tau) = prod_i (f(g_i^-1 tau) - f(g_i^-1 tau0))^(i+1) over the reps g_i of `table`.
// Throws NotSeparating if the values f(g_i tau0) are not pairwise distinct or
// the functions g(g_i tau) fail the independence check.
struct SeparatingFunction {
  std::function<Complex(Complex)> eval;
  Complex tau0;
  double independence = 0.0;
};
SeparatingFunction separating_function(const CosetTable& table,
                                       const std::function<Complex(Complex)>& f, Complex tau0);

struct Construction {
  VVMF form;
  RepMatrix basis_change;           // B with rho(g) B = B rho_block(g)
  std::vector<std::size_t> multiplicities;  // per irrep of K
  std::vector<std::string> irrep_labels;
  std::vector<std::string> block_components;  // entries of y in form = B y
  Complex tau0;
  std::string base_function;
  double separating_independence = 0.0;
};

// Weight-0 form with multiplier rho and linearly independent components.
// rho must be a finite-image representation of PSL(2,Z) or Gamma0(2) trivial
// on Gamma(2). Throws KernelOutOfScope, NotAdmissible, NotSeparating.
Construction construct_vvmf(const Representation& rho, std::uint64_t seed = 2024);

}  // namespace vvmf
