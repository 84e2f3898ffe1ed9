#include <random>
#include <set>

#include "doctest.h"
#include "vvmf/errors.hpp"
#include "vvmf/induce.hpp"

using namespace vvmf;

namespace {

using G = CongruenceSubgroup;

const std::vector<G>& table_groups() {
  static const std::vector<G> gs = {G::gamma0(2), G::gamma(2), G::gamma0(3), G::gamma(3),
                                    G::gamma0(4), G::gamma(4), G::gamma0(8)};
  return gs;
}

// nu restricted to h when it is a character there, nu^2 otherwise.
Representation nu_config(const G& h) {
  if (h.has_sign_splitting()) return nu_character(h);
  return tensor_with_character(trivial_rep(h), nu_character(h), 2);
}

GroupElement random_word(std::mt19937_64& rng, int max_len) {
  std::string w;
  for (int k = static_cast<int>(rng() % (max_len + 1)); k > 0; --k) w += "ts"[rng() % 2];
  return from_word(w);
}

RepMatrix perm2(bool swap) {
  return swap ? RepMatrix::exact(2, 2, {std::nullopt, Phase::one(), Phase::one(), std::nullopt})
              : RepMatrix::identity(2);
}

std::multiset<Fraction> exact_exponents(const ExponentMatrix& om) {
  std::multiset<Fraction> out;
  for (const auto& e : om.entries) out.insert(*e.exact);
  return out;
}

}  // namespace

TEST_CASE("rank-2 example") {
  const InducedRep ind(trivial_rep(G::gamma(2)), coset_table(G::gamma(2), G::gamma0(2)));
  const auto t = GroupElement::t(), s = GroupElement::s();
  CHECK(ind(t) == perm2(true));
  CHECK(ind(s * t.pow(2) * s) == perm2(false));
  CHECK(exact_exponents(diagonalize(ind(t))) == std::multiset<Fraction>{Fraction(0), Fraction(1, 2)});
  CHECK_THROWS_AS(ind(s), DomainMismatch);

  // Brute-force eigenvalues of the swap.
  Eigen::ComplexEigenSolver<ComplexMatrix> es(ind(t).to_complex());
  std::vector<double> ev{es.eigenvalues()(0).real(), es.eigenvalues()(1).real()};
  std::sort(ev.begin(), ev.end());
  CHECK(ev[0] == doctest::Approx(-1.0));
  CHECK(ev[1] == doctest::Approx(1.0));
}

TEST_CASE("rank-3 example under the transversal 1, s, ts") {
  const auto t = GroupElement::t(), s = GroupElement::s();
  const InducedRep ind(trivial_rep(G::gamma0(2)), transversal_table(G::gamma0(2), G::full(), {GroupElement(), s, t * s}));
  const RepMatrix expected = RepMatrix::exact(3, 3, {Phase::one(), std::nullopt, std::nullopt, std::nullopt, std::nullopt,
                                                     Phase::one(), std::nullopt, Phase::one(), std::nullopt});
  CHECK(ind(t) == expected);
  CHECK(exact_exponents(diagonalize(ind(t))) ==
        std::multiset<Fraction>{Fraction(0), Fraction(0), Fraction(1, 2)});
}

TEST_CASE("cusp blocks for Gamma(2) in Gamma(1)") {
  for (const auto& rho : {trivial_rep(G::gamma(2)), nu_character(G::gamma(2))}) {
    const CuspSystem sys = cusp_system(G::gamma(2), Cusp::infinity());
    const RepMatrix m = induced_cusp_blocks(rho, sys);
    REQUIRE(m.rows() == 6);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t k = 0; k < 3; ++k)
        if (k != i) {
          CHECK(m.block(2 * i, 2 * k, 1).is_zero());
          CHECK(m.block(2 * i + 1, 2 * k, 1).is_zero());
        }
      // (0 rho(t_i); I 0)
      CHECK(m.at(2 * i, 2 * i) == std::nullopt);
      CHECK(m.at(2 * i + 1, 2 * i + 1) == std::nullopt);
      CHECK(m.at(2 * i + 1, 2 * i) == Phase::one());
      CHECK(RepMatrix::scalar(*m.at(2 * i, 2 * i + 1)) == rho(sys.classes[i].stabilizer_generator));
    }
    if (rho.name() == "trivial") {
      Eigen::ComplexEigenSolver<ComplexMatrix> es(m.to_complex());
      int plus = 0, minus = 0;
      for (Eigen::Index k = 0; k < 6; ++k) {
        plus += std::abs(es.eigenvalues()(k) - 1.0) < 1e-12;
        minus += std::abs(es.eigenvalues()(k) + 1.0) < 1e-12;
      }
      CHECK(plus == 3);
      CHECK(minus == 3);
    }
  }
}

TEST_CASE("width-one classes give rho(t_i) on the diagonal") {
  const CuspSystem sys = cusp_system(G::gamma0(8), Cusp::infinity());
  const Representation rho = nu_config(G::gamma0(8));
  const RepMatrix m = induced_cusp_blocks(rho, sys);
  std::size_t off = 0;
  for (const auto& cls : sys.classes) {
    if (cls.width == 1) CHECK(m.block(off, off, 1) == rho(cls.stabilizer_generator));
    off += static_cast<std::size_t>(cls.width);
  }
}

TEST_CASE("Gamma0(8) cusp blocks form a permutation of cycle type 1,2,8,1") {
  const CuspSystem sys = cusp_system(G::gamma0(8), Cusp::infinity());
  const Representation triv = trivial_rep(G::gamma0(8));
  const RepMatrix m = induced_cusp_blocks(triv, sys);
  const InducedRep direct(triv, transversal_table(G::gamma0(8), G::full(), sys.transversal()));
  CHECK(m == direct(sys.generator));
  std::vector<std::size_t> perm(12);
  for (std::size_t j = 0; j < 12; ++j)
    for (std::size_t i = 0; i < 12; ++i)
      if (m.at(i, j)) perm[j] = i;
  std::multiset<std::size_t> cycles;
  std::vector<bool> seen(12, false);
  for (std::size_t j = 0; j < 12; ++j) {
    if (seen[j]) continue;
    std::size_t len = 0;
    for (std::size_t x = j; !seen[x]; x = perm[x]) {
      seen[x] = true;
      ++len;
    }
    cycles.insert(len);
  }
  CHECK(cycles == std::multiset<std::size_t>{1, 1, 2, 8});
}

TEST_CASE("block rule equals direct induction, with exact eigenpairs") {
  for (const auto& h : table_groups()) {
    for (const auto& rho : {trivial_rep(h), nu_config(h)}) {
      CAPTURE(h.name());
      CAPTURE(rho.name());
      const CuspSystem sys = cusp_system(h, Cusp::infinity());
      const RepMatrix blocks = induced_cusp_blocks(rho, sys);
      const InducedRep direct(rho, transversal_table(h, G::full(), sys.transversal()));
      REQUIRE(blocks == direct(sys.generator));

      const auto pairs = induced_cusp_eigenvectors(rho, sys);
      REQUIRE(pairs.size() == blocks.rows());
      ComplexMatrix v(static_cast<Eigen::Index>(pairs.size()), static_cast<Eigen::Index>(pairs.size()));
      std::multiset<Fraction> eigen;
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        const auto& p = pairs[k];
        REQUIRE(p.omega.exact);
        REQUIRE(p.vector.is_exact());
        REQUIRE(blocks * p.vector == p.vector.scaled(Phase(*p.omega.exact)));
        v.col(static_cast<Eigen::Index>(k)) = p.vector.to_complex();
        eigen.insert(*p.omega.exact);
      }
      CHECK(Eigen::FullPivLU<ComplexMatrix>(v).isInvertible());

      std::vector<ExponentMatrix> parts;
      std::vector<Int> widths;
      for (const auto& cls : sys.classes) {
        parts.push_back(exponent_of(rho, cls.stabilizer_generator));
        widths.push_back(cls.width);
      }
      const ExponentMatrix omega = induced_exponent(parts, widths);
      CHECK(exact_exponents(omega) == eigen);
      for (std::size_t k = 0; k < pairs.size(); ++k) CHECK(*omega.entries[k].exact == *pairs[k].omega.exact);
    }
  }
}

TEST_CASE("exponent matrix for Gamma(2) in Gamma(1)") {
  for (const auto& rho : {trivial_rep(G::gamma(2)), nu_character(G::gamma(2))}) {
    const CuspSystem sys = cusp_system(G::gamma(2), Cusp::infinity());
    std::vector<ExponentMatrix> parts;
    std::vector<Int> widths;
    for (const auto& cls : sys.classes) {
      parts.push_back(exponent_of(rho, cls.stabilizer_generator));
      widths.push_back(cls.width);
    }
    const ExponentMatrix omega = induced_exponent(parts, widths);
    REQUIRE(omega.entries.size() == 6);
    for (std::size_t i = 0; i < 3; ++i) {
      const Fraction lam = *parts[i].entries[0].exact;
      CHECK(*omega.entries[2 * i].exact == lam / Fraction(2));
      CHECK(*omega.entries[2 * i + 1].exact == (Fraction(1) + lam) / Fraction(2));
    }
  }
  const ExponentMatrix zero = induced_exponent({exponent_of(trivial_rep(G::full()), GroupElement::t())}, {1});
  CHECK(*zero.entries[0].exact == Fraction(0));
  CHECK_THROWS_AS(induced_exponent({}, {1}), LengthMismatch);
}

TEST_CASE("induced representations are homomorphisms with block-permutation values") {
  std::mt19937_64 rng(31);
  std::vector<std::pair<Representation, CosetTable>> configs;
  for (const auto& h : table_groups()) {
    configs.emplace_back(trivial_rep(h), coset_table(h));
    configs.emplace_back(nu_config(h), coset_table(h));
  }
  configs.emplace_back(nu_character(G::gamma(2)), coset_table(G::gamma(2), G::gamma0(2)));
  for (const auto& [rho, table] : configs) {
    CAPTURE(rho.domain().name());
    CAPTURE(rho.name());
    const InducedRep ind(rho, table);
    for (int k = 0; k < 200; ++k) {
      GroupElement a = random_word(rng, 12), b = random_word(rng, 12);
      if (!(table.ambient() == G::full())) {
        const auto gens = generators(table.ambient());
        a = gens[rng() % gens.size()] * gens[rng() % gens.size()];
        b = gens[rng() % gens.size()].inverse() * gens[rng() % gens.size()];
      }
      const RepMatrix ma = ind(a), mb = ind(b), mab = ind(a * b);
      REQUIRE(ma.is_exact());
      REQUIRE(mab == ma * mb);
      REQUIRE(has_block_permutation_shape(ma, rho.rank()));
      REQUIRE(has_block_permutation_shape(mab, rho.rank()));
    }
  }
}

TEST_CASE("block permutation shape detects dense matrices") {
  CHECK(has_block_permutation_shape(perm2(true), 1));
  CHECK(has_block_permutation_shape(RepMatrix::identity(4), 2));
  const RepMatrix dense = RepMatrix::exact(2, 2, {Phase::one(), Phase::one(), std::nullopt, Phase::one()});
  CHECK_FALSE(has_block_permutation_shape(dense, 1));
  CHECK(has_block_permutation_shape(dense, 2));
}

TEST_CASE("induction needs matching domains") {
  CHECK_THROWS_AS(InducedRep(trivial_rep(G::gamma0(2)), coset_table(G::gamma(2))), DomainMismatch);
}

TEST_CASE("coset change conjugators") {
  std::mt19937_64 rng(32);
  const G h = G::gamma(2);
  const auto base = coset_table(h).reps();
  const auto hgens = generators(h);
  auto random_h = [&] {
    GroupElement x;
    for (int n = 0; n < 3; ++n) x = x * hgens[rng() % hgens.size()];
    return x;
  };

  CHECK(coset_change_conjugator(trivial_rep(h), G::full(), base, base) == RepMatrix::identity(6));
  auto shifted = base;
  shifted[1] = shifted[1] * random_h();
  CHECK(coset_change_conjugator(trivial_rep(h), G::full(), base, shifted) == RepMatrix::identity(6));

  const Representation nu = nu_character(h);
  for (int config = 0; config < 3; ++config) {
    std::vector<GroupElement> hat;
    std::vector<GroupElement> xs;
    for (const auto& g : base) {
      xs.push_back(random_h());
      hat.push_back(g * xs.back());
    }
    const RepMatrix d = coset_change_conjugator(nu, G::full(), base, hat);
    for (std::size_t i = 0; i < 6; ++i) CHECK(d.block(i, i, 1) == nu(xs[i]));
    const InducedRep tilde(nu, transversal_table(h, G::full(), base));
    const InducedRep hat_rep(nu, transversal_table(h, G::full(), hat));
    const RepMatrix dinv = d.inverse();
    for (int k = 0; k < 50; ++k) {
      const GroupElement g = random_word(rng, 10);
      REQUIRE(hat_rep(g) == dinv * tilde(g) * d);
    }
  }

  // A reordered transversal gives a block permutation instead.
  std::vector<GroupElement> reordered(base.rbegin(), base.rend());
  const RepMatrix p = coset_change_conjugator(nu, G::full(), base, reordered);
  CHECK(has_block_permutation_shape(p, 1));
  const InducedRep a(nu, transversal_table(h, G::full(), base)), b(nu, transversal_table(h, G::full(), reordered));
  for (int k = 0; k < 50; ++k) {
    const GroupElement g = random_word(rng, 10);
    REQUIRE(b(g) == p.inverse() * a(g) * p);
  }
  CHECK_THROWS_AS(coset_change_conjugator(nu, G::full(), base, std::vector<GroupElement>(6)), NotTransversal);
}

TEST_CASE("induction in stages has the same character") {
  std::mt19937_64 rng(33);
  const InducedRep once(trivial_rep(G::gamma(2)), coset_table(G::gamma(2)));
  const InducedRep inner(trivial_rep(G::gamma(2)), coset_table(G::gamma(2), G::gamma0(2)));
  const InducedRep twice(inner.as_representation(), coset_table(G::gamma0(2)));
  for (int k = 0; k < 100; ++k) {
    const GroupElement g = random_word(rng, 12);
    REQUIRE(std::abs(once(g).trace() - twice(g).trace()) < 1e-12);
  }
}
