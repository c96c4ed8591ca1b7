#include "doctest.h"
#include "liecoh/chevalley.hpp"
#include "liecoh/error.hpp"
#include "liecoh/uct.hpp"

using namespace liecoh;

TEST_SUITE("uct") {
  TEST_CASE("multiplication by two") {
    const auto cx = CochainComplex::from_matrices(Domain::integers(), {1, 1},
                                                  {ExactMatrix::from_dense(Domain::integers(), {{2}})});
    const auto v = verify_uct(cx, Domain::prime_field(2));
    REQUIRE(v.rows.size() == 2);
    CHECK(v.rows[0].direct == 1);
    CHECK(v.rows[0].tensor == 0);
    CHECK(v.rows[0].tor == 1);
    CHECK(v.rows[1].direct == 1);
    CHECK(v.rows[1].tensor == 1);
    CHECK(v.rows[1].tor == 0);
    CHECK(v.pass);
  }

  TEST_CASE("rational coefficients have no Tor") {
    const auto cx = build_ce_complex(build_chevalley(RootSystem(LieType::parse("A2"))), Domain::integers(),
                                     ComplexLimits{});
    const auto v = verify_uct(cx, Domain::rationals());
    CHECK(v.pass);
    for (const auto& row : v.rows) CHECK(row.tor == 0);
  }

  TEST_CASE("sl2 over F_2") {
    const auto cx = build_ce_complex(build_chevalley(RootSystem(LieType::parse("A1"))), Domain::integers(),
                                     ComplexLimits{});
    const auto v = verify_uct(cx, Domain::prime_field(2));
    CHECK(v.pass);
    std::vector<std::size_t> direct, tensor, tor;
    for (const auto& row : v.rows) {
      direct.push_back(row.direct);
      tensor.push_back(row.tensor);
      tor.push_back(row.tor);
    }
    CHECK(direct == std::vector<std::size_t>{1, 2, 2, 1});
    CHECK(tensor == std::vector<std::size_t>{1, 0, 2, 1});
    CHECK(tor == std::vector<std::size_t>{0, 2, 0, 0});
    const auto data = IntegralComplexData::from(integral_cohomology(cx));
    CHECK(predicted_betti(data, Domain::prime_field(2)) == direct);
    CHECK(predicted_betti(data, Domain::prime_field(3)) == std::vector<std::size_t>{1, 0, 0, 1});
  }

  TEST_CASE("torsion counts") {
    CHECK(tor_b_torsion({3, {}}, 5) == 0);
    CHECK(tor_b_torsion({0, {2, 2}}, 2) == 2);
    CHECK(tor_b_torsion({0, {6}}, 2) == 1);
    CHECK(tor_b_torsion({0, {6}}, 5) == 0);
    CHECK_THROWS_AS(tor_b_torsion({0, {2}}, 0), Error);
  }

  TEST_CASE("freeness criterion") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) CHECK(freeness_criterion({2, {}}, p));
    CHECK_FALSE(freeness_criterion({0, {2}}, 2));
    CHECK(freeness_criterion({0, {9}}, 2));
    CHECK_FALSE(freeness_criterion({0, {9}}, 3));
    CHECK_THROWS_AS(freeness_criterion({0, {9}}, 4), Error);
  }

  TEST_CASE("integral input is required") {
    const auto cx = build_ce_complex(build_chevalley(RootSystem(LieType::parse("A1"))), Domain::rationals(),
                                     ComplexLimits{});
    CHECK_THROWS_AS(verify_uct(cx, Domain::prime_field(2)), Error);
  }
}
