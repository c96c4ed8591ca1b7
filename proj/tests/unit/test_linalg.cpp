#include "doctest.h"
#include "liecoh/error.hpp"
#include "liecoh/linalg.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace liecoh;

TEST_SUITE("linalg") {
  TEST_CASE("rank") {
    CHECK(rank(ExactMatrix::identity(Domain::rationals(), 2)) == 2);
    const auto m = ExactMatrix::from_dense(Domain::integers(), {{2, 4}, {4, 8}});
    CHECK(rank(m.converted(Domain::rationals())) == 1);
    CHECK(rank(m.converted(Domain::prime_field(2))) == 0);
    CHECK_THROWS_AS(rank(m), Error);
  }

  TEST_CASE("kernel") {
    CHECK(kernel_basis(ExactMatrix(Domain::rationals(), 3, 3)).size() == 3);
    const auto k = kernel_basis(ExactMatrix::from_dense(Domain::rationals(), {{1, 1}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == -k[0][1]);
    CHECK(k[0][0] != 0);
  }

  TEST_CASE("solve") {
    const auto m = ExactMatrix::from_dense(Domain::rationals(), {{1, 2}, {3, 4}});
    const auto x = solve(m, {Rational(5), Rational(6)});
    REQUIRE(x);
    CHECK(m.apply(*x) == std::vector<Rational>{5, 6});
    const auto singular = ExactMatrix::from_dense(Domain::rationals(), {{1, 1}, {1, 1}});
    CHECK_FALSE(solve(singular, {Rational(1), Rational(2)}));
  }

  TEST_CASE("smith normal form") {
    auto f = [](std::vector<std::vector<long>> rows) {
      return smith_normal_form(ExactMatrix::from_dense(Domain::integers(), rows)).invariant_factors;
    };
    CHECK(f({{2, 0}, {0, 3}}) == std::vector<Integer>{1, 6});
    CHECK(f({{2, 4}, {4, 8}}) == std::vector<Integer>{2});
    CHECK(f({{1, 0}, {0, 1}}) == std::vector<Integer>{1, 1});
    CHECK(f({{0, 0}, {0, 0}}).empty());
  }

  TEST_CASE("prime fields") {
    CHECK(is_prime(2));
    CHECK(is_prime(31));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK_THROWS_AS(Domain::prime_field(4), Error);
    CHECK(Domain::parse("Fp:7").modulus() == 7);
    CHECK(Domain::parse("Z").kind() == Domain::Kind::integer);
    CHECK_THROWS_AS(Domain::parse("R"), Error);
    CHECK(Domain::prime_field(5).normalize(Rational(1, 2)) == 3);
    CHECK_THROWS_AS(Domain::integers().normalize(Rational(1, 2)), Error);
  }

  TEST_CASE("matrix text round trip") {
    const auto m = ExactMatrix::from_dense(Domain::integers(), {{0, 2}, {-3, 0}});
    CHECK(parse_matrix(format_matrix(m), Domain::integers()) == m);
    CHECK_THROWS_AS(parse_matrix("", Domain::integers()), Error);
    CHECK_THROWS_AS(parse_matrix("2 2\n0 0 x\n", Domain::integers()), Error);
    CHECK_THROWS_AS(parse_matrix("2 2\n5 0 1\n", Domain::integers()), Error);
  }

  TEST_CASE("random matrices agree with dense oracles") {
    for (std::uint64_t seed : {1u, 2u, 3u}) CHECK(props::snf_rank_consistency(seed, 100) == "");
  }
}
