#pragma once

#include <string>
#include <vector>

#include "liecoh/polynomial.hpp"
#include "liecoh/rootdata.hpp"

namespace liecoh {

/// Realization of a Cartan subalgebra in ambient coordinates x_1..x_m:
///   A_r: x_1..x_{r+1}, alpha_i = e_i - e_{i+1} (the sum-zero hyperplane);
///   B_r, C_r, D_r: x_1..x_r with the usual signed-permutation roots;
///   G2: x_1..x_3, alpha_1 = e_1 - e_2, alpha_2 = -2e_1 + e_2 + e_3.
/// The pairing <alpha_i, alpha_j^v> is the dot product and is checked
/// against the Cartan matrix on construction.
struct CartanModel {
  LieType type;
  std::size_t ambient_dimension = 0;
  RationalMatrix roots;    // one ambient vector per simple root
  RationalMatrix coroots;  // one ambient vector per simple coroot
  /// Simple reflections x -> x - <alpha_i, x> alpha_i^v on ambient coordinates.
  std::vector<RationalMatrix> reflections;
  /// The same reflections on simple-coroot coordinates t, x = sum t_k alpha_k^v.
  std::vector<RationalMatrix> coroot_reflections;
};

/// Classical types and G2; Error(unsupported) for E6-E8 and F4.
CartanModel cartan_model(LieType type);

std::vector<RationalMatrix> weyl_group_generators(LieType type);

struct InvariantPolynomial {
  std::string name;  // "p4" (power sum) or "e4" (product of coordinates)
  int degree = 0;    // polynomial degree D
  bool tilde = false;  // the extra generator of type D
  Polynomial ambient;  // in x_1..x_m
  Polynomial coroot;   // pulled back to t_1..t_r

  int cohomological_degree() const { return 2 * degree; }
  int primitive_degree() const { return 2 * degree - 1; }
};

/// Basic invariants: power sums p_2..p_{r+1} (A_r); p_2, p_4, .., p_{2r}
/// (B_r, C_r); p_2, .., p_{2r-2} and x_1...x_r (D_r); p_2, p_6 (G2).
/// Invariance, homogeneity and independence are checked before returning.
std::vector<InvariantPolynomial> basic_invariants(LieType type);

/// True iff p (in simple-coroot coordinates) is fixed by every simple reflection.
bool is_weyl_invariant(const Polynomial& p, const CartanModel& model);

/// Rank of the Jacobian of the invariants at a regular rational point equals
/// their number.
bool algebraically_independent(const std::vector<InvariantPolynomial>& invariants, const CartanModel& model);

/// Coefficients c_j with p = sum_j c_j basis_j + (products of at least two
/// basis elements); c_j = 0 unless deg basis_j = deg p. Error(inconsistent)
/// when p is not in the algebra generated by `basis`.
std::vector<Rational> mod_decomposables(const Polynomial& p, const std::vector<Polynomial>& basis);

/// Index map j -> i (1-based) identifying the simple roots of F with the
/// simple roots of E that remain after removing `removed`. Identity order
/// is preferred; otherwise the first permutation matching the Cartan matrix.
std::vector<int> match_subdiagram(LieType e, int removed, LieType f);

/// Case number 1..6 of the restriction classification for (E, F, removed root), or 0.
int restriction_case(LieType e, LieType f, int removed);

struct CoefficientRatio {
  std::string row_a;
  std::string row_b;
  std::string column;
  Rational value;  // coefficient of row_a / coefficient of row_b
};

struct RestrictionPattern {
  int case_number = 0;
  LieType e;
  LieType f;
  int removed_root = 0;
  bool computed = true;  // false for the stored exceptional cases
  std::vector<int> embedding;
  std::vector<std::string> e_generators;  // "x3", "x~7"
  std::vector<std::string> f_generators;  // "y3", "y~9"
  std::vector<std::vector<Rational>> coefficients;
  std::vector<std::vector<int>> mask;
  std::vector<std::vector<int>> expected_mask;
  std::vector<CoefficientRatio> ratios;
  bool match = false;
};

RestrictionPattern restrict_invariants(LieType e, LieType f, int removed);

}  // namespace liecoh
