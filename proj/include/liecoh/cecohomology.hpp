#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liecoh/chevalley.hpp"
#include "liecoh/linalg.hpp"
#include "liecoh/rootdata.hpp"

namespace liecoh {

/// Size guard for Chevalley-Eilenberg complexes. Algebras up to
/// `max_dimension` are always built; larger ones only with `best_effort`.
struct ComplexLimits {
  std::size_t max_dimension = 16;
  bool best_effort = false;

  /// Reads LIECOH_MAX_DIM when set.
  static ComplexLimits from_environment(bool best_effort = false);
};

/// Hard ceiling imposed by the bitmask encoding of wedge monomials.
inline constexpr std::size_t kMaxGenerators = 62;

/// Throws Error(too_large) when an algebra of this dimension is refused.
void check_size(std::size_t dimension, const ComplexLimits& limits);

/// An element of one exterior power, sparse in the wedge-monomial basis.
/// Keys are bitmasks of dual-basis indices.
struct GradedElement {
  std::size_t degree = 0;
  std::map<std::uint64_t, Rational> terms;

  bool is_zero() const noexcept { return terms.empty(); }
};

GradedElement wedge(const GradedElement& a, const GradedElement& b);

/// Rows and columns of one weight block of a differential.
struct DifferentialBlock {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

/// Cochain complex C^0 -> C^1 -> ... -> C^N with d_n : C^n -> C^{n+1}.
///
/// Complexes built from a Lie algebra use the n-element wedge monomials in
/// the dual basis as the basis of C^n, ordered colexicographically, and
/// remember the weight of every monomial so that differentials split into
/// blocks.
class CochainComplex {
 public:
  /// `differentials[n]` is d_n; it may stop before the top degree, missing
  /// maps are zero. Verifies shapes and d^2 = 0.
  static CochainComplex from_matrices(Domain domain, std::vector<std::size_t> dims,
                                      std::vector<ExactMatrix> differentials);

  const Domain& domain() const noexcept { return domain_; }
  std::size_t top_degree() const noexcept { return dims_.size() - 1; }
  std::size_t dimension(std::size_t n) const { return n < dims_.size() ? dims_[n] : 0; }
  const std::vector<std::size_t>& dimensions() const noexcept { return dims_; }
  const ExactMatrix& differential(std::size_t n) const { return differentials_.at(n); }

  /// Number of degree-one generators for a Chevalley-Eilenberg complex, else 0.
  std::size_t generator_count() const noexcept { return generators_; }
  const ChevalleyAlgebra* algebra() const noexcept {
    return algebra_ ? &*algebra_ : nullptr;
  }

  std::uint64_t monomial(std::size_t n, std::size_t index) const;
  std::size_t monomial_index(std::uint64_t mask) const;
  std::string monomial_label(std::uint64_t mask) const;

  /// Weight blocks of d_n, in order of first appearance. A complex without weights
  /// has one block per degree.
  std::vector<DifferentialBlock> blocks(std::size_t n) const;
  /// Basis indices of C^n whose weight is zero.
  std::vector<std::size_t> weight_zero(std::size_t n) const;

  CochainComplex converted(Domain target) const;
  /// Drops all degrees above `top`.
  CochainComplex truncated(std::size_t top) const;

  /// Throws Error(inconsistent) naming the first degree where d_{n+1} d_n != 0.
  void verify() const;

 private:
  friend CochainComplex build_ce_complex(const ChevalleyAlgebra&, Domain, const ComplexLimits&);
  CochainComplex() : domain_(Domain::rationals()) {}

  Domain domain_;
  std::vector<std::size_t> dims_;
  std::vector<ExactMatrix> differentials_;  // one per degree, the last one is 0 x dims.back()
  std::vector<std::vector<std::uint64_t>> monomials_;  // empty unless built from an algebra
  std::vector<std::vector<std::uint32_t>> block_ids_;
  std::optional<std::uint32_t> zero_block_;
  std::size_t generators_ = 0;
  std::optional<ChevalleyAlgebra> algebra_;
};

/// Chevalley-Eilenberg complex of `alg` with coefficients in `domain`, using
/// (d xi)(x_0..x_n) = sum_{i<j} (-1)^{i+j} xi([x_i,x_j], x_0..^i..^j..x_n).
/// A reduced algebra needs the matching prime field.
CochainComplex build_ce_complex(const ChevalleyAlgebra& alg, Domain domain,
                                const ComplexLimits& limits = ComplexLimits::from_environment());

/// Ranks of d_0..d_N over the complex's field.
std::vector<std::size_t> differential_ranks(const CochainComplex& cx);

std::vector<std::size_t> betti_numbers(const CochainComplex& cx);

struct IntegralCohomology {
  std::vector<std::size_t> free_rank;
  std::vector<std::vector<Integer>> torsion;  // invariant factors > 1
  std::vector<SmithForm> smith;               // of d_0..d_N
};

IntegralCohomology integral_cohomology(const CochainComplex& cx);

/// Matrix of the coadjoint action of basis vector x on C^n (square).
ExactMatrix coadjoint_action(const CochainComplex& cx, std::size_t x, std::size_t n);

/// Basis of the invariants in every degree, over Q.
std::vector<std::vector<GradedElement>> invariant_subalgebra(const CochainComplex& cx);

/// Invariants orthogonal, under the pairing induced by the Killing form, to
/// the products of invariants of positive degree.
std::vector<std::vector<GradedElement>> primitives(
    const CochainComplex& cx, const std::vector<std::vector<GradedElement>>& invariants);

struct ExteriorCertificate {
  bool verdict = false;
  std::vector<int> primitive_degrees;
  /// One entry per square-free product: label like "z3^z5" and its degree.
  std::vector<std::string> witness;
  std::vector<int> witness_degrees;
  std::string reason;
};

ExteriorCertificate verify_exterior_structure(
    const CochainComplex& cx, const std::vector<std::vector<GradedElement>>& invariants,
    const std::vector<std::vector<GradedElement>>& primitive_basis);

/// Coefficients of prod (1 + t^d) padded to `length`.
std::vector<std::size_t> exterior_expansion(const std::vector<int>& degrees, std::size_t length);

struct CohomologyReport {
  LieType type;
  Domain domain = Domain::rationals();
  std::vector<std::size_t> betti;                // free ranks over Z
  std::vector<std::vector<Integer>> torsion;     // Z only
  std::vector<int> primitive_degrees;
  std::string primitive_source;                  // "computed" or "table"
  std::vector<int> table_degrees;
  bool exterior_match = false;
  std::optional<ExteriorCertificate> certificate;  // Q only
};

CohomologyReport cohomology_report(LieType type, Domain domain, const ComplexLimits& limits,
                                   bool certify = true);

struct CharpResult {
  std::uint32_t p = 0;
  std::vector<std::size_t> betti;
  bool exterior_match = false;
  bool above_coxeter = false;    // p > h
  bool above_threshold = false;  // p > 3(h - 1)
};

std::vector<CharpResult> charp_scan(LieType type, const std::vector<std::uint32_t>& primes,
                                    const ComplexLimits& limits);

std::size_t h3_dimension(LieType type, const ComplexLimits& limits);

}  // namespace liecoh
