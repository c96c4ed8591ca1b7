#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "liecoh/linalg.hpp"

namespace liecoh {

using Exponents = std::vector<int>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Multivariate polynomial with rational coefficients in a fixed number of
/// variables. Terms are kept sparse and free of zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(std::size_t variables = 0) : vars_(variables) {}

  static Polynomial constant(std::size_t variables, const Rational& c);
  static Polynomial variable(std::size_t variables, std::size_t i);
  /// sum_i coeffs[i] x_i
  static Polynomial linear(const std::vector<Rational>& coeffs);

  std::size_t variables() const noexcept { return vars_; }
  const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  Rational coefficient(const Exponents& e) const;
  void add_term(const Exponents& e, const Rational& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  Polynomial pow(unsigned k) const;
  /// Substitutes x_i = sum_j m[i][j] y_j; `m` has one row per variable.
  Polynomial substitute_linear(const RationalMatrix& m) const;
  Rational evaluate(const std::vector<Rational>& point) const;
  Polynomial partial(std::size_t i) const;

  /// Terms in descending lexicographic exponent order, e.g. "x1^2 + 1/2*x2".
  std::string to_string(const std::string& var = "x") const;

 private:
  std::size_t vars_;
  std::map<Exponents, Rational> terms_;
};

/// All exponent vectors of total degree `degree` in `variables` variables.
std::vector<Exponents> monomials_of_degree(std::size_t variables, int degree);

}  // namespace liecoh
