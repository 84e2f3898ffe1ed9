#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vvmf/psl2.hpp"

namespace vvmf {

enum class SubgroupKind { FullModularGroup, Gamma0, Gamma1, PrincipalGamma };

// Gamma(N), Gamma0(N), Gamma1(N) or PSL(2,Z), as subgroups of PSL(2,Z).
// Membership is decided by reducing the entries of +-g modulo N.
class CongruenceSubgroup {
 public:
  CongruenceSubgroup() = default;
  CongruenceSubgroup(SubgroupKind kind, Int level);

  static CongruenceSubgroup full() { return {}; }
  static CongruenceSubgroup gamma(Int n) { return {SubgroupKind::PrincipalGamma, n}; }
  static CongruenceSubgroup gamma0(Int n) { return {SubgroupKind::Gamma0, n}; }
  static CongruenceSubgroup gamma1(Int n) { return {SubgroupKind::Gamma1, n}; }

  // "Gamma(N)", "Gamma0(N)", "Gamma1(N)", "Gamma(1)", "PSL2Z".
  static CongruenceSubgroup parse(std::string_view spec);

  SubgroupKind kind() const { return kind_; }
  Int level() const { return level_; }
  std::string name() const;

  bool contains(const GroupElement& g) const;

  // Index in PSL(2,Z) from the closed formula; coset_table cross-checks it.
  Int index() const;

  // Key identifying the left coset g*H among all left cosets of H in PSL(2,Z).
  using CosetKey = std::array<Int, 4>;
  CosetKey coset_key(const GroupElement& g) const;

  // A homomorphism eps: (preimage of H in SL(2,Z)) -> {+-1} with eps(-I) = -1,
  // when one exists. Used to pick a sign for each element of H so that odd
  // multiplier systems restrict to honest characters.
  bool has_sign_splitting() const;
  // The lift of g (assumed in H) with eps = +1. Throws NoCharacterLift.
  Matrix2 split_lift(const GroupElement& g) const;

  bool operator==(const CongruenceSubgroup& o) const {
    return canonical_kind() == o.canonical_kind() && level_ == o.level_;
  }

 private:
  SubgroupKind canonical_kind() const;

  SubgroupKind kind_ = SubgroupKind::FullModularGroup;
  Int level_ = 1;
};

// Generators used for coset enumeration: {t, s} for PSL(2,Z), {t, s t^2 s}
// for Gamma0(2), Schreier generators otherwise.
std::vector<GroupElement> generators(const CongruenceSubgroup& g);

// H <= G, checked on generators of H.
bool is_subgroup(const CongruenceSubgroup& h, const CongruenceSubgroup& g);

// Left cosets G = reps[0] H u ... u reps[m-1] H.
class CosetTable {
 public:
  const CongruenceSubgroup& ambient() const { return ambient_; }
  const CongruenceSubgroup& subgroup() const { return subgroup_; }
  const std::vector<GroupElement>& reps() const { return reps_; }
  const std::vector<GroupElement>& generators() const { return generators_; }
  // action()[k][i] = j  <=>  generators()[k] * reps[i] H = reps[j] H.
  const std::vector<std::vector<std::size_t>>& action() const { return action_; }
  std::size_t size() const { return reps_.size(); }

  // i with g in reps[i] H. g must lie in the ambient group.
  std::size_t coset_index(const GroupElement& g) const;

  friend CosetTable coset_table(const CongruenceSubgroup&, const CongruenceSubgroup&, std::size_t);
  friend CosetTable transversal_table(const CongruenceSubgroup&, const CongruenceSubgroup&,
                                      std::vector<GroupElement>);

 private:
  void build_action();

  CongruenceSubgroup ambient_, subgroup_;
  std::vector<GroupElement> reps_, generators_;
  std::vector<std::vector<std::size_t>> action_;
  std::map<CongruenceSubgroup::CosetKey, std::size_t> index_;
};

inline constexpr std::size_t kDefaultCosetBound = 20000;

// Breadth-first closure of {1} under left multiplication by the ambient
// generators (in order), FIFO queue. Throws LevelTooLarge past `bound`.
CosetTable coset_table(const CongruenceSubgroup& h,
                       const CongruenceSubgroup& g = CongruenceSubgroup::full(),
                       std::size_t bound = kDefaultCosetBound);

// Table with caller-chosen representatives. Throws NotTransversal unless they
// hit every coset exactly once.
CosetTable transversal_table(const CongruenceSubgroup& h, const CongruenceSubgroup& g,
                             std::vector<GroupElement> reps);

bool cusps_equivalent(const CongruenceSubgroup& h, const Cusp& x, const Cusp& y);

// One representative per H-orbit on P^1(Q): infinity first, then by
// denominator and nonnegative numerator.
std::vector<Cusp> cusp_orbits(const CongruenceSubgroup& h);

// Smallest w >= 1 with sigma_c t^w sigma_c^-1 in H.
Int cusp_width(const CongruenceSubgroup& h, const Cusp& c);

struct CuspClass {
  Cusp cusp;           // c_i
  Int width;           // h_i, relative to the width of c in G
  GroupElement mover;  // A_i in G with A_i c = c_i
  GroupElement stabilizer_generator;  // t_i = A_i t_c^{h_i} A_i^-1, generates H_{c_i}
};

// Decomposition G.c = U_i H.c_i with the coset representatives
// g_ij = t_c^j A_i^-1 (0 <= j < h_i).
struct CuspSystem {
  CongruenceSubgroup ambient, subgroup;
  Cusp cusp;               // c
  Int ambient_width = 1;   // k_c
  GroupElement generator;  // t_c = sigma_c t^{k_c} sigma_c^-1
  std::vector<CuspClass> classes;

  std::vector<GroupElement> transversal() const;
  Int total_width() const;
};

CuspSystem cusp_system(const CongruenceSubgroup& h, const Cusp& c,
                       const CongruenceSubgroup& g = CongruenceSubgroup::full());

// Reference cusp representatives and widths for seven small-level groups.
struct CuspTableRow {
  std::string group;
  Int index;
  std::vector<std::string> cusps;
  std::vector<Int> widths;
};
const std::vector<CuspTableRow>& cusp_table_fixture();

}  // namespace vvmf
