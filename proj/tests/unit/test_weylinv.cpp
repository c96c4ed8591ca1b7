#include "doctest.h"
#include "liecoh/error.hpp"
#include "liecoh/weylinv.hpp"

using namespace liecoh;

namespace {

Polynomial power_sum(std::size_t vars, unsigned k) {
  Polynomial p(vars);
  for (std::size_t i = 0; i < vars; ++i) p += Polynomial::variable(vars, i).pow(k);
  return p;
}

std::vector<int> degrees(const std::vector<InvariantPolynomial>& inv) {
  std::vector<int> out;
  for (const auto& p : inv) out.push_back(p.degree);
  return out;
}

// Applies an ambient linear map to a polynomial: x -> m x.
Polynomial act(const Polynomial& p, const RationalMatrix& m) { return p.substitute_linear(m); }

}  // namespace

TEST_SUITE("weylinv") {
  TEST_CASE("basic invariants") {
    const auto b2 = basic_invariants(LieType::parse("B2"));
    CHECK(degrees(b2) == std::vector<int>{2, 4});
    CHECK(b2[0].ambient == power_sum(2, 2));
    CHECK(b2[1].ambient == power_sum(2, 4));
    CHECK(b2[1].primitive_degree() == 7);

    const auto a1 = basic_invariants(LieType::parse("A1"));
    REQUIRE(a1.size() == 1);
    CHECK(a1[0].ambient == power_sum(2, 2));
    CHECK(a1[0].primitive_degree() == 3);

    const auto d4 = basic_invariants(LieType::parse("D4"));
    CHECK(degrees(d4) == std::vector<int>{2, 4, 4, 6});
    Polynomial e4(4);
    e4.add_term({1, 1, 1, 1}, 1);
    int tilde = 0;
    for (const auto& p : d4)
      if (p.tilde) {
        ++tilde;
        CHECK(p.ambient == e4);
      }
    CHECK(tilde == 1);

    try {
      basic_invariants(LieType::parse("E6"));
      FAIL("E6 accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::unsupported);
    }
  }

  TEST_CASE("invariants are fixed by every ambient reflection") {
    for (std::string name : {"A1", "A3", "B3", "C3", "D4", "D5", "G2"}) {
      CAPTURE(name);
      const auto type = LieType::parse(name);
      const auto model = cartan_model(type);
      const auto inv = basic_invariants(type);
      CHECK(inv.size() == static_cast<std::size_t>(type.rank));
      for (const auto& p : inv) {
        CHECK(p.ambient.is_homogeneous());
        // The G2 model only preserves its invariants on the sum-zero plane.
        if (name != "G2")
          for (const auto& s : model.reflections) CHECK(act(p.ambient, s) == p.ambient);
        CHECK(is_weyl_invariant(p.coroot, model));
      }
      CHECK(algebraically_independent(inv, model));
    }
  }

  TEST_CASE("non-invariant polynomials are rejected") {
    const auto model = cartan_model(LieType::parse("B2"));
    CHECK_FALSE(is_weyl_invariant(Polynomial::variable(2, 0), model));
    const auto inv = basic_invariants(LieType::parse("B2"));
    auto twice = inv;
    twice[1] = twice[0];
    CHECK_FALSE(algebraically_independent(twice, model));
  }

  TEST_CASE("weyl group generators") {
    const auto a1 = weyl_group_generators(LieType::parse("A1"));
    REQUIRE(a1.size() == 1);
    CHECK(a1[0] == RationalMatrix{{0, 1}, {1, 0}});
    const auto b2 = weyl_group_generators(LieType::parse("B2"));
    REQUIRE(b2.size() == 2);
    CHECK(b2[0] == RationalMatrix{{0, 1}, {1, 0}});
    CHECK(b2[1] == RationalMatrix{{1, 0}, {0, -1}});
    for (const auto& g : weyl_group_generators(LieType::parse("D4"))) {
      // signed permutations with an even number of sign changes
      int negatives = 0;
      for (const auto& row : g)
        for (const auto& x : row) negatives += x < 0;
      CHECK(negatives % 2 == 0);
    }
    CHECK_THROWS_AS(weyl_group_generators(LieType::parse("F4")), Error);
  }

  TEST_CASE("reduction modulo decomposables") {
    const auto p2 = power_sum(2, 2), p4 = power_sum(2, 4), p6 = power_sum(2, 6);
    const auto c = mod_decomposables(p6, {p2, p4});
    CHECK(c == std::vector<Rational>{0, 0});
    CHECK(mod_decomposables(p4, {p2, p4}) == std::vector<Rational>{0, 1});
    CHECK(mod_decomposables(p2 * Rational(3), {p2, p4}) == std::vector<Rational>{3, 0});

    // x4 = -(x1 + x2 + x3): e4 against the power sums of A3.
    RationalMatrix hyper{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}};
    Polynomial e4(4);
    e4.add_term({1, 1, 1, 1}, 1);
    std::vector<Polynomial> basis;
    for (unsigned k : {2u, 3u, 4u}) basis.push_back(power_sum(4, k).substitute_linear(hyper));
    CHECK(mod_decomposables(e4.substitute_linear(hyper), basis) == std::vector<Rational>{0, 0, Rational(-1, 4)});

    try {
      mod_decomposables(Polynomial::variable(2, 0).pow(3), {p2, p4});
      FAIL("non-invariant accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::inconsistent);
    }
  }

  TEST_CASE("subdiagram matching") {
    CHECK(match_subdiagram(LieType::parse("A2"), 1, LieType::parse("A1")) == std::vector<int>{2});
    CHECK(match_subdiagram(LieType::parse("B3"), 1, LieType::parse("B2")) == std::vector<int>{2, 3});
    CHECK(match_subdiagram(LieType::parse("D4"), 4, LieType::parse("A3")) == std::vector<int>{1, 2, 3});
    CHECK_THROWS_AS(match_subdiagram(LieType::parse("B3"), 3, LieType::parse("B2")), Error);
  }

  TEST_CASE("restriction patterns") {
    const auto a2 = restrict_invariants(LieType::parse("A2"), LieType::parse("A1"), 1);
    CHECK(a2.case_number == 1);
    CHECK(a2.mask == std::vector<std::vector<int>>{{1}, {0}});
    CHECK(a2.match);

    const auto b3 = restrict_invariants(LieType::parse("B3"), LieType::parse("B2"), 1);
    CHECK(b3.case_number == 2);
    CHECK(b3.mask == std::vector<std::vector<int>>{{1, 0}, {0, 1}, {0, 0}});
    CHECK(b3.match);

    const auto d4 = restrict_invariants(LieType::parse("D4"), LieType::parse("A3"), 4);
    CHECK(d4.case_number == 4);
    CHECK(d4.e_generators == std::vector<std::string>{"x3", "x7", "x~7", "x11"});
    CHECK(d4.mask == std::vector<std::vector<int>>{{1, 0, 0}, {0, 0, 1}, {0, 0, 1}, {0, 0, 0}});
    CHECK(d4.match);
    REQUIRE(d4.ratios.size() == 1);
    CHECK(d4.ratios[0].value == -4);

    const auto e6 = restrict_invariants(LieType::parse("E6"), LieType::parse("D5"), 6);
    CHECK(e6.case_number == 5);
    CHECK_FALSE(e6.computed);
    CHECK(e6.match);

    try {
      restrict_invariants(LieType::parse("A3"), LieType::parse("B2"), 1);
      FAIL("unsupported pair accepted");
    } catch (const Error& e) {
      CHECK(e.code() != Errc::internal);
    }
  }
}
