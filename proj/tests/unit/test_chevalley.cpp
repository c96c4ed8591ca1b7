#include <map>

#include "doctest.h"
#include "liecoh/chevalley.hpp"
#include "liecoh/error.hpp"
#include "properties.hpp"

using namespace liecoh;

namespace {

std::map<std::size_t, long> br(const ChevalleyAlgebra& alg, std::size_t x, std::size_t y) {
  std::map<std::size_t, long> out;
  for (const auto& t : alg.bracket(x, y)) out[t.index] = t.coeff;
  return out;
}

std::size_t index_of(const ChevalleyAlgebra& alg, const std::string& label) {
  for (std::size_t i = 0; i < alg.dimension(); ++i)
    if (alg.labels()[i] == label) return i;
  FAIL("no basis vector " << label);
  return 0;
}

}  // namespace

TEST_SUITE("chevalley") {
  TEST_CASE("sl2 relations") {
    const auto alg = build_chevalley(RootSystem(LieType::parse("A1")));
    REQUIRE(alg.dimension() == 3);
    const std::size_t h = 0, e = 1, f = 2;
    CHECK(br(alg, h, e) == std::map<std::size_t, long>{{e, 2}});
    CHECK(br(alg, h, f) == std::map<std::size_t, long>{{f, -2}});
    CHECK(br(alg, e, f) == std::map<std::size_t, long>{{h, 1}});
    CHECK(br(alg, f, e) == std::map<std::size_t, long>{{h, -1}});
    CHECK(alg.bracket(e, e).empty());
  }

  TEST_CASE("A2 simple root vectors bracket to a unit multiple") {
    const auto alg = build_chevalley(RootSystem(LieType::parse("A2")));
    const auto a = index_of(alg, "e_10"), b = index_of(alg, "e_01"), ab = index_of(alg, "e_11");
    const auto v = br(alg, a, b);
    REQUIRE(v.size() == 1);
    CHECK(v.begin()->first == ab);
    CHECK(std::abs(v.begin()->second) == 1);
    CHECK(br(alg, b, a) == std::map<std::size_t, long>{{ab, -v.begin()->second}});
  }

  TEST_CASE("dimension is rank plus number of roots") {
    for (const auto& t : all_types_up_to_rank(6)) {
      const RootSystem rs(t);
      CHECK(build_chevalley(rs).dimension() == rs.dimension());
    }
    CHECK(build_chevalley(RootSystem(LieType::parse("G2"))).dimension() == 14);
  }

  TEST_CASE("structure constants are p+1 up to sign") {
    // |N_{a,b}| = p + 1 with b - p a the bottom of the a-string through b.
    for (const char* name : {"B3", "C3", "G2", "F4"}) {
      CAPTURE(name);
      const RootSystem rs(LieType::parse(name));
      std::vector<RootVector> roots = rs.positive_roots();
      for (const auto& r : rs.positive_roots()) {
        RootVector n = r;
        for (int& x : n) x = -x;
        roots.push_back(n);
      }
      for (const auto& a : roots)
        for (const auto& b : roots) {
          RootVector s(a.size());
          for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
          const long n = structure_constant(rs, a, b);
          if (!rs.is_root(s)) {
            CHECK(n == 0);
            continue;
          }
          int p = 0;
          RootVector down = b;
          for (;;) {
            for (std::size_t i = 0; i < a.size(); ++i) down[i] -= a[i];
            if (!rs.is_root(down)) break;
            ++p;
          }
          CHECK(std::abs(n) == p + 1);
        }
    }
  }

  TEST_CASE("reduction mod p") {
    const auto a1 = build_chevalley(RootSystem(LieType::parse("A1")));
    const auto m2 = reduce_mod(a1, 2);
    CHECK(m2.modulus() == 2);
    CHECK(m2.bracket(0, 1).empty());
    CHECK(m2.bracket(0, 2).empty());
    CHECK(br(m2, 1, 2) == std::map<std::size_t, long>{{0, 1}});

    const auto a2 = build_chevalley(RootSystem(LieType::parse("A2")));
    const auto m3 = reduce_mod(a2, 3);
    const auto a = index_of(a2, "e_10"), b = index_of(a2, "e_01");
    const long orig = br(a2, a, b).begin()->second;
    CHECK(br(m3, a, b).begin()->second == (orig + 3) % 3);

    const auto g2 = reduce_mod(build_chevalley(RootSystem(LieType::parse("G2"))), 5);
    CHECK(props::jacobi(g2) == "");
    CHECK_THROWS_AS(reduce_mod(a1, 4), Error);
  }

  TEST_CASE("custom algebras are verified") {
    // [x, y] = x but [y, x] = x violates antisymmetry.
    std::vector<std::vector<BracketTerm>> table(4);
    table[1] = {{0, 1}};
    table[2] = {{0, 1}};
    CHECK_THROWS_AS(ChevalleyAlgebra::from_structure_constants({"x", "y"}, {{0}, {0}}, table), Error);
    table[2] = {{0, -1}};
    CHECK_NOTHROW(ChevalleyAlgebra::from_structure_constants({"x", "y"}, {{0}, {0}}, table));
  }

  TEST_CASE("killing form of sl2") {
    const auto k = build_chevalley(RootSystem(LieType::parse("A1"))).killing_form();
    CHECK(k == std::vector<std::vector<long>>{{8, 0, 0}, {0, 0, 4}, {0, 4, 0}});
  }

  TEST_CASE("bracket table text") {
    const auto tsv = build_chevalley(RootSystem(LieType::parse("A1"))).bracket_tsv();
    CHECK(tsv.rfind("# basis\th1\te_1\tf_1\n", 0) == 0);
    CHECK(tsv.find("e_1\tf_1\t1,0,0\n") != std::string::npos);
  }
}
