#include "doctest.h"
#include "liecoh/cecohomology.hpp"
#include "liecoh/chevalley.hpp"
#include "liecoh/error.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace liecoh;

namespace {

ChevalleyAlgebra algebra(const char* name) { return build_chevalley(RootSystem(LieType::parse(name))); }

CochainComplex complex(const char* name, Domain d = Domain::rationals()) {
  auto alg = algebra(name);
  if (d.kind() == Domain::Kind::prime_field) alg = reduce_mod(alg, d.modulus());
  return build_ce_complex(alg, d, ComplexLimits{});
}

ChevalleyAlgebra abelian(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  return ChevalleyAlgebra::from_structure_constants(labels, std::vector<RootVector>(n, RootVector{0}),
                                                    std::vector<std::vector<BracketTerm>>(n * n));
}

oracle::Structure structure(const ChevalleyAlgebra& alg) {
  const std::size_t n = alg.dimension();
  oracle::Structure s(n, std::vector<std::vector<std::pair<int, long>>>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (const auto& t : alg.bracket(a, b)) s[a][b].push_back({static_cast<int>(t.index), t.coeff});
  return s;
}

std::vector<int> degrees_of(const std::vector<std::vector<GradedElement>>& graded) {
  std::vector<int> out;
  for (std::size_t n = 0; n < graded.size(); ++n)
    for (std::size_t k = 0; k < graded[n].size(); ++k) out.push_back(static_cast<int>(n));
  return out;
}

}  // namespace

TEST_SUITE("cecohomology") {
  TEST_CASE("abelian algebra has zero differential and free cohomology") {
    const auto cx = build_ce_complex(abelian(2), Domain::integers(), ComplexLimits{});
    for (std::size_t n = 0; n <= cx.top_degree(); ++n) CHECK(cx.differential(n).is_zero());
    const auto h = integral_cohomology(cx);
    CHECK(h.free_rank == std::vector<std::size_t>{1, 2, 1});
    for (const auto& t : h.torsion) CHECK(t.empty());
  }

  TEST_CASE("differentials match the antiderivation oracle entry by entry") {
    for (const char* name : {"A1", "A2", "B2", "G2"}) {
      CAPTURE(name);
      const auto alg = algebra(name);
      const auto cx = build_ce_complex(alg, Domain::rationals(), ComplexLimits{});
      const auto s = structure(alg);
      for (std::size_t n = 0; n < cx.top_degree(); ++n) {
        const auto dt = cx.differential(n).transpose();
        for (std::size_t j = 0; j < cx.dimension(n); ++j) {
          const std::uint64_t mask = cx.monomial(n, j);
          oracle::Monomial mono;
          for (int b = 0; b < 64; ++b)
            if (mask >> b & 1) mono.push_back(b);
          const auto expect = oracle::differential(s, mono);
          std::map<oracle::Monomial, mpq_class> got;
          for (const auto& e : dt.row(j)) {
            oracle::Monomial m;
            const std::uint64_t target = cx.monomial(n + 1, e.col);
            for (int b = 0; b < 64; ++b)
              if (target >> b & 1) m.push_back(b);
            got[m] = e.value;
          }
          if (got != expect) FAIL("column " << j << " of d" << n << " differs from the oracle");
        }
      }
    }
  }

  TEST_CASE("betti numbers") {
    CHECK(betti_numbers(complex("A1")) == std::vector<std::size_t>{1, 0, 0, 1});
    CHECK(betti_numbers(complex("A2")) == std::vector<std::size_t>{1, 0, 0, 1, 0, 1, 0, 0, 1});
    CHECK(betti_numbers(complex("A1", Domain::prime_field(2))) == std::vector<std::size_t>{1, 2, 2, 1});
    CHECK_THROWS_AS(betti_numbers(complex("A1", Domain::integers())), Error);
  }

  TEST_CASE("betti numbers agree with dense elimination") {
    for (const char* name : {"A1", "A2", "B2"}) {
      CAPTURE(name);
      const auto alg = algebra(name);
      const auto s = structure(alg);
      CHECK(betti_numbers(complex(name)) == oracle::betti(s));
      for (unsigned long p : {2ul, 3ul, 5ul}) {
        CAPTURE(p);
        CHECK(betti_numbers(complex(name, Domain::prime_field(p))) == oracle::betti(s, p));
      }
    }
  }

  TEST_CASE("integral cohomology") {
    const auto a1 = integral_cohomology(complex("A1", Domain::integers()));
    CHECK(a1.free_rank == std::vector<std::size_t>{1, 0, 0, 1});
    CHECK(a1.torsion[2] == std::vector<Integer>{2, 2});
    CHECK(a1.torsion[0].empty());
    CHECK(a1.torsion[1].empty());
    CHECK(a1.torsion[3].empty());

    const auto a2 = integral_cohomology(complex("A2", Domain::integers()));
    CHECK(a2.free_rank == betti_numbers(complex("A2")));
    for (const auto& level : a2.torsion)
      for (Integer t : level) {
        while (t % 2 == 0) t /= 2;
        while (t % 3 == 0) t /= 3;
        CHECK(t == 1);
      }
  }

  TEST_CASE("conversion and truncation are natural") {
    const auto z = complex("A2", Domain::integers());
    CHECK(betti_numbers(z.converted(Domain::prime_field(3))) == betti_numbers(complex("A2", Domain::prime_field(3))));
    const auto q = complex("A2");
    const auto t = q.truncated(4);
    CHECK(t.top_degree() == 4);
    for (std::size_t n = 0; n < 4; ++n) CHECK(t.differential(n) == q.differential(n));
    const auto full = betti_numbers(q), cut = betti_numbers(t);
    for (std::size_t n = 0; n < 4; ++n) CHECK(cut[n] == full[n]);
  }

  TEST_CASE("differential commutes with the coadjoint action") {
    for (const char* name : {"A1", "A2", "B2"}) {
      CAPTURE(name);
      const auto cx = complex(name);
      for (std::size_t x = 0; x < cx.generator_count(); ++x)
        for (std::size_t n = 0; n < cx.top_degree(); ++n)
          CHECK(cx.differential(n) * coadjoint_action(cx, x, n) == coadjoint_action(cx, x, n + 1) * cx.differential(n));
    }
  }

  TEST_CASE("weight blocks partition the differential") {
    const auto cx = complex("B2");
    for (std::size_t n = 0; n < cx.top_degree(); ++n) {
      std::size_t cols = 0;
      for (const auto& b : cx.blocks(n)) cols += b.cols.size();
      CHECK(cols == cx.dimension(n));
    }
  }

  TEST_CASE("invariants") {
    const auto a1 = invariant_subalgebra(complex("A1"));
    CHECK(a1[1].empty());
    REQUIRE(a1[3].size() == 1);
    CHECK(a1[3][0].terms.size() == 1);  // the top form
    CHECK(invariant_subalgebra(complex("A2"))[8].size() == 1);
    try {
      invariant_subalgebra(complex("A1", Domain::prime_field(5)));
      FAIL("accepted characteristic p");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::unsupported);
    }
  }

  TEST_CASE("primitives and exterior certification") {
    for (auto [name, degs] : std::vector<std::pair<const char*, std::vector<int>>>{
             {"A1", {3}}, {"A2", {3, 5}}, {"B2", {3, 7}}}) {
      CAPTURE(name);
      const auto cx = complex(name);
      const auto inv = invariant_subalgebra(cx);
      CHECK(degrees_of(primitives(cx, inv)) == degs);
    }
    const auto a2 = complex("A2");
    const auto inv = invariant_subalgebra(a2);
    const auto cert = verify_exterior_structure(a2, inv, primitives(a2, inv));
    CHECK(cert.verdict);
    CHECK(cert.witness == std::vector<std::string>{"1", "z3", "z5", "z3^z5"});

    const auto g2 = complex("G2");
    const auto ginv = invariant_subalgebra(g2);
    const auto gcert = verify_exterior_structure(g2, ginv, primitives(g2, ginv));
    CHECK(gcert.verdict);
    CHECK(gcert.witness_degrees == std::vector<int>{0, 3, 11, 14});
  }

  TEST_CASE("exterior certification rejects a wrong generator set") {
    const auto cx = complex("A2");
    const auto inv = invariant_subalgebra(cx);
    auto prim = primitives(cx, inv);
    prim[5].clear();
    CHECK_FALSE(verify_exterior_structure(cx, inv, prim).verdict);
  }

  TEST_CASE("reports") {
    const auto q = cohomology_report(LieType::parse("A2"), Domain::rationals(), ComplexLimits{});
    CHECK(q.exterior_match);
    CHECK(q.primitive_source == "computed");
    const auto f2 = cohomology_report(LieType::parse("A1"), Domain::prime_field(2), ComplexLimits{});
    CHECK(f2.betti == std::vector<std::size_t>{1, 2, 2, 1});
    CHECK_FALSE(f2.exterior_match);
  }

  TEST_CASE("characteristic p scan") {
    const auto a1 = charp_scan(LieType::parse("A1"), {2, 5}, ComplexLimits{});
    REQUIRE(a1.size() == 2);
    CHECK(a1[0].betti == std::vector<std::size_t>{1, 2, 2, 1});
    CHECK_FALSE(a1[0].exterior_match);
    CHECK(a1[1].betti == std::vector<std::size_t>{1, 0, 0, 1});
    CHECK(a1[1].exterior_match);
    CHECK(a1[1].above_coxeter);
    const auto g2 = charp_scan(LieType::parse("G2"), {7}, ComplexLimits{});
    CHECK(g2[0].above_coxeter);
    CHECK_FALSE(g2[0].above_threshold);
  }

  TEST_CASE("third cohomology is one-dimensional") {
    for (const char* name : {"A1", "B2", "A3"}) CHECK(h3_dimension(LieType::parse(name), ComplexLimits{}) == 1);
  }

  TEST_CASE("size guard") {
    try {
      cohomology_report(LieType::parse("B3"), Domain::rationals(), ComplexLimits{});
      FAIL("accepted dim 21");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::too_large);
    }
    ComplexLimits best;
    best.best_effort = true;
    try {
      check_size(248, best);
      FAIL("accepted E8");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::too_large);
    }
    CHECK_NOTHROW(check_size(21, best));
  }

  TEST_CASE("exterior expansion") {
    CHECK(exterior_expansion({3, 5}, 9) == oracle::exterior_series({3, 5}));
    CHECK(exterior_expansion({3, 11}, 15) == oracle::exterior_series({3, 11}));
    CHECK(exterior_expansion({3}, 6) == std::vector<std::size_t>{1, 0, 0, 1, 0, 0});
  }
}
