#include <random>
#include <set>

#include "doctest.h"
#include "vvmf/errors.hpp"
#include "vvmf/subgroups.hpp"

using namespace vvmf;

namespace {

using G = CongruenceSubgroup;

const std::vector<G>& table_groups() {
  static const std::vector<G> gs = {G::gamma0(2), G::gamma(2), G::gamma0(3), G::gamma(3),
                                    G::gamma0(4), G::gamma(4), G::gamma0(8)};
  return gs;
}

// Oracle: H-equivalence of cusps by brute-force search over a box of matrices.
bool brute_equivalent(const G& h, const Cusp& x, const Cusp& y, Int box) {
  for (Int a = -box; a <= box; ++a)
    for (Int b = -box; b <= box; ++b)
      for (Int c = 0; c <= box; ++c)
        for (Int d = -box; d <= box; ++d) {
          if (a * d - b * c != 1) continue;
          const GroupElement g(a, b, c, d);
          if (h.contains(g) && act(g, x) == y) return true;
        }
  return false;
}

}  // namespace

TEST_CASE("membership examples") {
  const auto t = GroupElement::t(), s = GroupElement::s();
  CHECK(G::gamma0(2).contains(t));
  CHECK_FALSE(G::gamma(2).contains(t));
  CHECK(G::gamma(2).contains(t.pow(2)));
  CHECK(G::gamma(2).contains(s * t.pow(2) * s));
  CHECK_FALSE(G::gamma0(2).contains(s));
  CHECK(G::full().contains(s));
}

TEST_CASE("parse group specs") {
  CHECK(G::parse("Gamma0(8)") == G::gamma0(8));
  CHECK(G::parse("Gamma(1)") == G::full());
  CHECK(G::parse("Gamma1(2)") == G::gamma0(2));
  CHECK(G::parse("Gamma1(5)").name() == "Gamma1(5)");
  CHECK_THROWS_AS(G::parse("Gamma0(0)"), ParseError);
  CHECK_THROWS_AS(G::parse("Delta(3)"), ParseError);
  CHECK_THROWS_AS(G::parse("Gamma(3"), ParseError);
}

TEST_CASE("coset tables") {
  CHECK(coset_table(G::gamma0(2)).size() == 3);
  CHECK(coset_table(G::gamma(2)).size() == 6);
  const CosetTable k = coset_table(G::gamma(2), G::gamma0(2));
  REQUIRE(k.size() == 2);
  CHECK(k.reps()[0].is_identity());
  CHECK(k.reps()[1] == GroupElement::t());
  CHECK(k.coset_index(GroupElement()) == 0);

  std::mt19937_64 rng(3);
  const auto gens = generators(G::gamma(2));
  for (int trial = 0; trial < 50; ++trial) {
    GroupElement h;
    for (int n = 0; n < 6; ++n) h = h * gens[rng() % gens.size()];
    CHECK(k.coset_index(h) == 0);
    const GroupElement th = GroupElement::t() * h;
    const std::size_t i = k.coset_index(th);
    // Oracle: direct membership of reps[i]^-1 t h.
    CHECK(G::gamma(2).contains(k.reps()[i].inverse() * th));
    CHECK(i == 1);
  }
  CHECK_THROWS_AS(k.coset_index(GroupElement::s()), DomainMismatch);
}

TEST_CASE("index formula agrees with enumeration") {
  for (const auto& h : {G::gamma0(5), G::gamma1(5), G::gamma(5), G::gamma0(12), G::gamma1(4)})
    CHECK(static_cast<Int>(coset_table(h).size()) == h.index());
  CHECK_THROWS_AS(coset_table(G::gamma(9), G::full(), 100), LevelTooLarge);
}

TEST_CASE("coset action is a homomorphism to the symmetric group") {
  std::mt19937_64 rng(5);
  for (const auto& h : table_groups()) {
    const CosetTable tab = coset_table(h);
    for (int trial = 0; trial < 10; ++trial) {
      GroupElement w;
      std::vector<std::size_t> perm(tab.size());
      for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
      for (int step = 0; step < 50; ++step) {
        const std::size_t k = rng() % tab.generators().size();
        w = tab.generators()[k] * w;
        for (auto& p : perm) p = tab.action()[k][p];
      }
      for (std::size_t i = 0; i < tab.size(); ++i) CHECK(tab.coset_index(w * tab.reps()[i]) == perm[i]);
    }
  }
}

TEST_CASE("cusp orbits and widths") {
  CHECK(cusp_orbits(G::gamma0(2)).size() == 2);
  CHECK(cusp_width(G::gamma0(2), Cusp(0, 1)) == 2);
  CHECK(cusp_width(G::gamma0(2), Cusp::infinity()) == 1);
  CHECK(cusp_orbits(G::gamma(2)).size() == 3);
  CHECK(cusp_width(G::full(), Cusp::infinity()) == 1);
  for (const auto& c : cusp_orbits(G::gamma(4))) CHECK(cusp_width(G::gamma(4), c) == 4);
  CHECK(cusp_orbits(G::gamma(4)).size() == 6);
  const std::vector<Cusp> expected{Cusp(-1, 4), Cusp(-1, 2), Cusp(0, 1), Cusp::infinity()};
  const std::vector<Int> widths{1, 2, 8, 1};
  for (std::size_t k = 0; k < expected.size(); ++k) CHECK(cusp_width(G::gamma0(8), expected[k]) == widths[k]);
}

TEST_CASE("orbit representatives are inequivalent and exhaustive") {
  for (const auto& h : {G::gamma0(2), G::gamma(2), G::gamma0(3), G::gamma0(4)}) {
    const auto reps = cusp_orbits(h);
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t k = i + 1; k < reps.size(); ++k) {
        CHECK_FALSE(cusps_equivalent(h, reps[i], reps[k]));
        CHECK_FALSE(brute_equivalent(h, reps[i], reps[k], 6));
      }
    // Every small cusp falls into exactly one orbit.
    for (Int q = 0; q <= 6; ++q)
      for (Int p = -6; p <= 6; ++p) {
        if ((q == 0 && p != 1) || std::gcd(p, q) != 1) continue;
        int hits = 0;
        for (const auto& r : reps) hits += cusps_equivalent(h, Cusp(p, q), r);
        CHECK(hits == 1);
      }
  }
  // Oracle agreement on a known equivalence: -1/2 ~ 1/2 under Gamma0(4).
  CHECK(cusps_equivalent(G::gamma0(4), Cusp(-1, 2), Cusp(1, 2)));
  CHECK(brute_equivalent(G::gamma0(4), Cusp(-1, 2), Cusp(1, 2), 4));
}

TEST_CASE("table rows") {
  const auto& rows = cusp_table_fixture();
  REQUIRE(rows.size() == 7);
  for (const auto& row : rows) {
    const G h = G::parse(row.group);
    CAPTURE(row.group);
    CHECK(static_cast<Int>(coset_table(h).size()) == row.index);
    const auto orbits = cusp_orbits(h);
    REQUIRE(orbits.size() == row.cusps.size());
    Int sum = 0;
    std::set<std::size_t> hit;
    for (std::size_t k = 0; k < row.cusps.size(); ++k) {
      const Cusp c = Cusp::parse(row.cusps[k]);
      CHECK(cusp_width(h, c) == row.widths[k]);
      sum += row.widths[k];
      for (std::size_t o = 0; o < orbits.size(); ++o)
        if (cusps_equivalent(h, c, orbits[o])) hit.insert(o);
    }
    CHECK(hit.size() == orbits.size());
    CHECK(sum == row.index);
  }
}

TEST_CASE("cusp systems") {
  const CuspSystem a = cusp_system(G::gamma0(2), Cusp::infinity());
  REQUIRE(a.classes.size() == 2);
  CHECK(a.transversal().size() == 3);
  std::multiset<Int> wa;
  for (const auto& c : a.classes) wa.insert(c.width);
  CHECK(wa == std::multiset<Int>{1, 2});

  const CuspSystem b = cusp_system(G::gamma(2), Cusp::infinity());
  REQUIRE(b.classes.size() == 3);
  for (const auto& c : b.classes) CHECK(c.width == 2);
  CHECK(b.transversal().size() == 6);

  const CuspSystem c8 = cusp_system(G::gamma0(8), Cusp::infinity());
  std::multiset<Int> w8;
  for (const auto& c : c8.classes) w8.insert(c.width);
  CHECK(w8 == std::multiset<Int>{1, 1, 2, 8});
  CHECK(c8.total_width() == 12);
}

TEST_CASE("cusp system transversal property") {
  std::vector<std::pair<G, G>> pairs;
  for (const auto& h : table_groups()) pairs.emplace_back(h, G::full());
  pairs.emplace_back(G::gamma(2), G::gamma0(2));
  pairs.emplace_back(G::gamma0(4), G::gamma0(2));
  for (const auto& [h, g] : pairs) {
    CAPTURE(h.name());
    for (const Cusp& c : {Cusp::infinity(), Cusp(0, 1)}) {
      const CuspSystem sys = cusp_system(h, c, g);
      const auto tr = sys.transversal();
      CHECK(static_cast<std::size_t>(sys.total_width()) == coset_table(h, g).size());
      for (std::size_t i = 0; i < tr.size(); ++i)
        for (std::size_t k = 0; k < tr.size(); ++k)
          if (i != k) REQUIRE_FALSE(h.contains(tr[i].inverse() * tr[k]));
      for (const auto& cls : sys.classes) {
        CHECK(h.contains(cls.stabilizer_generator));
        CHECK(act(cls.stabilizer_generator, cls.cusp) == cls.cusp);
        CHECK(act(cls.mover, c) == cls.cusp);
      }
    }
  }
}

TEST_CASE("transversal tables reject non-transversals") {
  const auto t = GroupElement::t();
  CHECK_NOTHROW(transversal_table(G::gamma(2), G::gamma0(2), {GroupElement(), t}));
  CHECK_THROWS_AS(transversal_table(G::gamma(2), G::gamma0(2), {GroupElement(), t.pow(2)}), NotTransversal);
  CHECK_THROWS_AS(transversal_table(G::gamma(2), G::gamma0(2), {GroupElement()}), NotTransversal);
}
