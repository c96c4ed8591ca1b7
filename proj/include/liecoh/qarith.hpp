#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liecoh/linalg.hpp"
#include "liecoh/rootdata.hpp"

namespace liecoh {

/// Element of Z[q, q^-1], stored as exponent -> nonzero coefficient.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  /// c q^k
  static LaurentPolynomial monomial(long k, const Integer& c = 1);

  const std::map<long, Integer>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  long min_exponent() const;
  long max_exponent() const;
  Integer coefficient(long k) const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  LaurentPolynomial& operator-=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator-(const LaurentPolynomial& a);
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

  /// Multiplies by q^k.
  LaurentPolynomial shifted(long k) const;
  /// Exact quotient by a divisor with leading coefficient +-1, or nothing.
  std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& divisor) const;

  /// "c*q^k" terms by descending exponent joined with " + "; "0" when zero.
  std::string to_string() const;

 private:
  void add(long k, const Integer& c);
  std::map<long, Integer> coeffs_;
};

/// [n]_d = (q^{nd} - q^{-nd}) / (q^d - q^{-d}); Error(invalid_argument) for d < 1.
LaurentPolynomial quantum_integer(long n, long d);

/// The ell-th cyclotomic polynomial; cached, safe to call concurrently.
const LaurentPolynomial& cyclotomic(unsigned long ell);

unsigned long euler_phi(unsigned long n);

struct CyclotomicFactorization {
  long unit_exponent = 0;
  int sign = 1;
  std::vector<unsigned long> indices;  // ascending, with multiplicity

  LaurentPolynomial reassemble() const;
  /// e.g. "q^-6 * Phi9 * Phi18"
  std::string to_string() const;
};

/// Error(inconsistent) carrying the residual when p is not, up to sign and a
/// power of q, a product of cyclotomic polynomials.
CyclotomicFactorization factor_into_cyclotomics(const LaurentPolynomial& p);

/// Cyclotomic indices generating the denominator set S of a type, together
/// with the values 1 and 2 (epsilon = +-1) that are always excluded.
struct BadRootSet {
  LieType type;
  std::vector<unsigned long> indices;
  std::vector<unsigned long> always_bad{1, 2};
};

/// {} for ADE, {4, 8} for BCF, {3, 4, 6, 9, 12, 18} for G2.
BadRootSet denominator_set(LieType type);

struct QuantumFactorEvidence {
  int i = 0;  // 1-based simple roots of the Dynkin edge
  int j = 0;
  long n = 0;
  long d = 0;
  CyclotomicFactorization factors;
};

struct SCharacterization {
  bool verdict = false;
  std::vector<unsigned long> computed;
  std::vector<unsigned long> expected;
  /// Same union when n only runs up to |a_ij| with d = d_i for the ordered pair.
  std::vector<unsigned long> literal;
  std::vector<QuantumFactorEvidence> evidence;
};

/// Union of the cyclotomic factors of [n]_{d_i} and [n]_{d_j} for every
/// Dynkin edge {i, j} and 2 <= n <= max(|a_ij|, |a_ji|), compared with
/// denominator_set.
SCharacterization verify_S_characterization(LieType type);

/// Whether a primitive ell-th root of unity is bad for the type.
bool is_bad_root(LieType type, unsigned long ell);

}  // namespace liecoh
