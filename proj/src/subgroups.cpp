#include "vvmf/subgroups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

#include "vvmf/errors.hpp"

namespace vvmf {

namespace {

std::vector<Int> prime_divisors(Int n) {
  std::vector<Int> ps;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

bool congruent(Int x, Int y, Int n) { return mod_floor(x - y, n) == 0; }

Int legendre(Int d, Int p) {
  Int r = mod_floor(d, p);
  if (r == 0) return 0;
  Int acc = 1, base = r;
  for (Int e = (p - 1) / 2; e > 0; e >>= 1) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
  }
  return acc == 1 ? 1 : -1;
}

}  // namespace

CongruenceSubgroup::CongruenceSubgroup(SubgroupKind kind, Int level) : kind_(kind), level_(level) {
  if (level < 1) throw ParseError("level must be positive");
  if (kind == SubgroupKind::FullModularGroup) level_ = 1;
  if (level_ == 1) kind_ = SubgroupKind::FullModularGroup;
}

SubgroupKind CongruenceSubgroup::canonical_kind() const {
  // Gamma1(2) and Gamma0(2) coincide in PSL(2,Z).
  if (kind_ == SubgroupKind::Gamma1 && level_ == 2) return SubgroupKind::Gamma0;
  return kind_;
}

CongruenceSubgroup CongruenceSubgroup::parse(std::string_view spec) {
  std::string s(spec);
  if (s == "PSL2Z" || s == "SL2Z" || s == "Gamma(1)" || s == "G1") return full();
  auto open = s.find('('), close = s.rfind(')');
  if (open == std::string::npos || close != s.size() - 1 || close <= open + 1)
    throw ParseError("bad group spec '" + s + "' (expected Gamma(N), Gamma0(N) or Gamma1(N))");
  std::string head = s.substr(0, open), arg = s.substr(open + 1, close - open - 1);
  Int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoll(arg, &used);
    if (used != arg.size()) throw ParseError("bad level in '" + s + "'");
  } catch (const std::logic_error&) {
    throw ParseError("bad level in '" + s + "'");
  }
  if (n < 1) throw ParseError("level must be positive in '" + s + "'");
  if (head == "Gamma") return gamma(n);
  if (head == "Gamma0") return gamma0(n);
  if (head == "Gamma1") return gamma1(n);
  throw ParseError("unknown group family '" + head + "'");
}

std::string CongruenceSubgroup::name() const {
  switch (kind_) {
    case SubgroupKind::FullModularGroup: return "Gamma(1)";
    case SubgroupKind::Gamma0: return "Gamma0(" + std::to_string(level_) + ")";
    case SubgroupKind::Gamma1: return "Gamma1(" + std::to_string(level_) + ")";
    case SubgroupKind::PrincipalGamma: return "Gamma(" + std::to_string(level_) + ")";
  }
  return "?";
}

bool CongruenceSubgroup::contains(const GroupElement& g) const {
  const Int n = level_;
  switch (kind_) {
    case SubgroupKind::FullModularGroup: return true;
    case SubgroupKind::Gamma0: return congruent(g.c(), 0, n);
    case SubgroupKind::Gamma1:
      return congruent(g.c(), 0, n) &&
             ((congruent(g.a(), 1, n) && congruent(g.d(), 1, n)) ||
              (congruent(g.a(), -1, n) && congruent(g.d(), -1, n)));
    case SubgroupKind::PrincipalGamma:
      return congruent(g.b(), 0, n) && congruent(g.c(), 0, n) &&
             ((congruent(g.a(), 1, n) && congruent(g.d(), 1, n)) ||
              (congruent(g.a(), -1, n) && congruent(g.d(), -1, n)));
  }
  return false;
}

Int CongruenceSubgroup::index() const {
  const Int n = level_;
  if (n == 1) return 1;
  Int num = 1, den = 1;
  auto ps = prime_divisors(n);
  switch (canonical_kind()) {
    case SubgroupKind::FullModularGroup: return 1;
    case SubgroupKind::Gamma0:
      num = n;
      for (Int p : ps) {
        num *= p + 1;
        den *= p;
      }
      return num / den;
    case SubgroupKind::Gamma1:
      num = n * n;
      for (Int p : ps) {
        num *= p * p - 1;
        den *= p * p;
      }
      return num / den / 2;
    case SubgroupKind::PrincipalGamma:
      if (n == 2) return 6;
      num = n * n * n;
      for (Int p : ps) {
        num *= p * p - 1;
        den *= p * p;
      }
      return num / den / 2;
  }
  return 0;
}

CongruenceSubgroup::CosetKey CongruenceSubgroup::coset_key(const GroupElement& g) const {
  const Int n = level_;
  if (n == 1) return {0, 0, 0, 0};
  auto red = [n](Int x) { return mod_floor(x, n); };
  switch (canonical_kind()) {
    case SubgroupKind::FullModularGroup: return {0, 0, 0, 0};
    case SubgroupKind::PrincipalGamma: {
      CosetKey k1{red(g.a()), red(g.b()), red(g.c()), red(g.d())};
      CosetKey k2{red(-g.a()), red(-g.b()), red(-g.c()), red(-g.d())};
      return std::min(k1, k2);
    }
    case SubgroupKind::Gamma1: {
      CosetKey k1{red(g.a()), red(g.c()), 0, 0};
      CosetKey k2{red(-g.a()), red(-g.c()), 0, 0};
      return std::min(k1, k2);
    }
    case SubgroupKind::Gamma0: {
      CosetKey best{n, n, 0, 0};
      for (Int u = 1; u < n; ++u) {
        if (std::gcd(u, n) != 1) continue;
        CosetKey k{red(checked_mul(u, g.a())), red(checked_mul(u, g.c())), 0, 0};
        best = std::min(best, k);
      }
      return best;
    }
  }
  return {0, 0, 0, 0};
}

bool CongruenceSubgroup::has_sign_splitting() const {
  const Int n = level_;
  switch (canonical_kind()) {
    case SubgroupKind::FullModularGroup: return false;
    case SubgroupKind::PrincipalGamma: return true;
    case SubgroupKind::Gamma1: return n >= 3;
    case SubgroupKind::Gamma0:
      if (n % 4 == 0) return true;
      for (Int p : prime_divisors(n))
        if (p % 4 == 3) return true;
      return false;
  }
  return false;
}

Matrix2 CongruenceSubgroup::split_lift(const GroupElement& g) const {
  const Matrix2 m = g.matrix();
  const Int n = level_;
  auto choose = [&](bool keep) { return keep ? m : -m; };
  switch (canonical_kind()) {
    case SubgroupKind::FullModularGroup: break;
    case SubgroupKind::PrincipalGamma:
      if (n == 2) return choose(congruent(m.d, 1, 4));
      return choose(congruent(m.d, 1, n));
    case SubgroupKind::Gamma1:
      if (n >= 3) return choose(congruent(m.d, 1, n));
      break;
    case SubgroupKind::Gamma0:
      if (n % 4 == 0) return choose(congruent(m.d, 1, 4));
      for (Int p : prime_divisors(n))
        if (p % 4 == 3) return choose(legendre(m.d, p) == 1);
      break;
  }
  throw NoCharacterLift(name() + " contains an element of order 2 whose lifts square to -I");
}

std::vector<GroupElement> generators(const CongruenceSubgroup& g) {
  if (g == CongruenceSubgroup::full()) return {GroupElement::t(), GroupElement::s()};
  if (g == CongruenceSubgroup::gamma0(2)) return {GroupElement::t(), from_word("stts")};
  // Schreier generators rep_j^-1 x rep_i from the table in PSL(2,Z).
  CosetTable table = coset_table(g);
  std::set<GroupElement> seen;
  std::vector<GroupElement> out;
  for (std::size_t k = 0; k < table.generators().size(); ++k) {
    for (std::size_t i = 0; i < table.size(); ++i) {
      std::size_t j = table.action()[k][i];
      GroupElement h = table.reps()[j].inverse() * table.generators()[k] * table.reps()[i];
      if (h.is_identity() || seen.count(h) || seen.count(h.inverse())) continue;
      seen.insert(h);
      out.push_back(h);
    }
  }
  return out;
}

bool is_subgroup(const CongruenceSubgroup& h, const CongruenceSubgroup& g) {
  if (g == CongruenceSubgroup::full()) return true;
  for (const auto& x : generators(h))
    if (!g.contains(x)) return false;
  return true;
}

std::size_t CosetTable::coset_index(const GroupElement& g) const {
  auto it = index_.find(subgroup_.coset_key(g));
  if (it == index_.end() || !ambient_.contains(g))
    throw DomainMismatch(g.to_string() + " is not in " + ambient_.name());
  return it->second;
}

void CosetTable::build_action() {
  action_.assign(generators_.size(), std::vector<std::size_t>(reps_.size()));
  for (std::size_t k = 0; k < generators_.size(); ++k)
    for (std::size_t i = 0; i < reps_.size(); ++i)
      action_[k][i] = coset_index(generators_[k] * reps_[i]);
}

CosetTable coset_table(const CongruenceSubgroup& h, const CongruenceSubgroup& g, std::size_t bound) {
  if (!is_subgroup(h, g)) throw DomainMismatch(h.name() + " is not a subgroup of " + g.name());
  const Int expected = h.index() / g.index();
  if (expected > static_cast<Int>(bound))
    throw LevelTooLarge(h.name() + " has index " + std::to_string(expected) + " in " + g.name() +
                        ", above the bound " + std::to_string(bound));
  CosetTable t;
  t.ambient_ = g;
  t.subgroup_ = h;
  t.generators_ = generators(g);
  std::deque<std::size_t> queue;
  t.reps_.push_back(GroupElement::identity());
  t.index_.emplace(h.coset_key(GroupElement::identity()), 0);
  queue.push_back(0);
  while (!queue.empty()) {
    std::size_t i = queue.front();
    queue.pop_front();
    for (const auto& x : t.generators_) {
      GroupElement y = x * t.reps_[i];
      auto key = h.coset_key(y);
      if (t.index_.count(key)) continue;
      if (t.reps_.size() >= bound)
        throw LevelTooLarge("coset enumeration of " + h.name() + " exceeded " + std::to_string(bound));
      t.index_.emplace(key, t.reps_.size());
      queue.push_back(t.reps_.size());
      t.reps_.push_back(y);
    }
  }
  t.build_action();
  return t;
}

CosetTable transversal_table(const CongruenceSubgroup& h, const CongruenceSubgroup& g,
                             std::vector<GroupElement> reps) {
  if (!is_subgroup(h, g)) throw DomainMismatch(h.name() + " is not a subgroup of " + g.name());
  const Int expected = h.index() / g.index();
  if (static_cast<Int>(reps.size()) != expected)
    throw NotTransversal("expected " + std::to_string(expected) + " representatives, got " +
                         std::to_string(reps.size()));
  CosetTable t;
  t.ambient_ = g;
  t.subgroup_ = h;
  t.generators_ = generators(g);
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (!g.contains(reps[i])) throw NotTransversal(reps[i].to_string() + " is not in " + g.name());
    if (!t.index_.emplace(h.coset_key(reps[i]), i).second)
      throw NotTransversal("two representatives share the coset of " + reps[i].to_string());
  }
  t.reps_ = std::move(reps);
  t.build_action();
  return t;
}

bool cusps_equivalent(const CongruenceSubgroup& h, const Cusp& x, const Cusp& y) {
  // gamma x = y with gamma in H iff gamma = sigma_y t^k sigma_x^-1 for some k;
  // membership only depends on k modulo the level.
  const GroupElement sx_inv = scaling_matrix(x).inverse(), sy = scaling_matrix(y);
  const GroupElement tt = GroupElement::t();
  GroupElement g = sy;
  for (Int k = 0; k < h.level(); ++k) {
    if (h.contains(g * sx_inv)) return true;
    g = g * tt;
  }
  return false;
}

Int cusp_width(const CongruenceSubgroup& h, const Cusp& c) {
  const GroupElement sigma = scaling_matrix(c), sigma_inv = sigma.inverse();
  GroupElement p = GroupElement::t();
  for (Int w = 1; w <= h.level(); ++w) {
    if (h.contains(sigma * p * sigma_inv)) return w;
    p = p * GroupElement::t();
  }
  // t^N lies in Gamma(N) <= H, so this is unreachable.
  throw Error("cusp width search failed for " + c.to_string());
}

std::vector<Cusp> cusp_orbits(const CongruenceSubgroup& h) {
  const Int total = h.index();
  const Int period = cusp_width(h, Cusp::infinity());
  std::vector<Cusp> reps{Cusp::infinity()};
  Int covered = period;
  for (Int q = 1; covered < total; ++q) {
    for (Int p = 0; p < period * q && covered < total; ++p) {
      if (std::gcd(p, q) != 1) continue;
      Cusp c(p, q);
      bool fresh = std::none_of(reps.begin(), reps.end(),
                                [&](const Cusp& r) { return cusps_equivalent(h, r, c); });
      if (fresh) {
        reps.push_back(c);
        covered += cusp_width(h, c);
      }
    }
  }
  return reps;
}

std::vector<GroupElement> CuspSystem::transversal() const {
  std::vector<GroupElement> out;
  for (const auto& cls : classes) {
    GroupElement a_inv = cls.mover.inverse();
    GroupElement tj;
    for (Int j = 0; j < cls.width; ++j) {
      out.push_back(tj * a_inv);
      tj = tj * generator;
    }
  }
  return out;
}

Int CuspSystem::total_width() const {
  Int s = 0;
  for (const auto& cls : classes) s += cls.width;
  return s;
}

CuspSystem cusp_system(const CongruenceSubgroup& h, const Cusp& c, const CongruenceSubgroup& g) {
  if (!is_subgroup(h, g)) throw DomainMismatch(h.name() + " is not a subgroup of " + g.name());
  CuspSystem sys;
  sys.ambient = g;
  sys.subgroup = h;
  sys.cusp = c;
  sys.ambient_width = cusp_width(g, c);
  const GroupElement sigma = scaling_matrix(c), sigma_inv = sigma.inverse();
  sys.generator = sigma * GroupElement::t().pow(sys.ambient_width) * sigma_inv;

  auto add_class = [&](const Cusp& ci, const GroupElement& mover) {
    CuspClass cls{ci, 0, mover, {}};
    const GroupElement mover_inv = mover.inverse();
    GroupElement p = sys.generator;
    for (Int w = 1; w <= h.level(); ++w) {
      GroupElement cand = mover * p * mover_inv;
      if (h.contains(cand)) {
        cls.width = w;
        cls.stabilizer_generator = cand;
        break;
      }
      p = p * sys.generator;
    }
    if (cls.width == 0) throw Error("no stabilizer power of " + ci.to_string() + " lies in " + h.name());
    sys.classes.push_back(cls);
  };

  add_class(c, GroupElement::identity());
  for (const Cusp& ci : cusp_orbits(h)) {
    if (cusps_equivalent(h, ci, c)) continue;
    // A_i = sigma_{c_i} t^k sigma_c^-1 for the first k putting it in G.
    const GroupElement sci = scaling_matrix(ci);
    std::optional<GroupElement> mover;
    GroupElement tk;
    for (Int k = 0; k < std::max<Int>(g.level(), 1) && !mover; ++k) {
      GroupElement cand = sci * tk * sigma_inv;
      if (g.contains(cand)) mover = cand;
      tk = tk * GroupElement::t();
    }
    if (mover) add_class(ci, *mover);
  }
  const Int m = h.index() / g.index();
  if (sys.total_width() != m) {
    std::ostringstream os;
    os << "cusp widths over " << c.to_string() << " sum to " << sys.total_width() << ", index is " << m;
    throw Error(os.str());
  }
  return sys;
}

const std::vector<CuspTableRow>& cusp_table_fixture() {
  static const std::vector<CuspTableRow> rows = {
      {"Gamma0(2)", 3, {"0", "oo"}, {2, 1}},
      {"Gamma(2)", 6, {"0", "1", "oo"}, {2, 2, 2}},
      {"Gamma0(3)", 4, {"0", "oo"}, {3, 1}},
      {"Gamma(3)", 12, {"-1", "0", "1", "oo"}, {3, 3, 3, 3}},
      {"Gamma0(4)", 6, {"-1/2", "0", "oo"}, {1, 4, 1}},
      {"Gamma(4)", 24, {"-1", "-1/2", "0", "1", "2", "oo"}, {4, 4, 4, 4, 4, 4}},
      {"Gamma0(8)", 12, {"-1/4", "-1/2", "0", "oo"}, {1, 2, 8, 1}},
  };
  return rows;
}

}  // namespace vvmf
