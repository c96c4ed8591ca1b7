#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace liecoh {

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// A simple Lie type such as A2, D4 or E8.
struct LieType {
  Series series = Series::A;
  int rank = 1;

  /// Parses "A2", "d4", "E8"; throws Error(parse) on malformed text and
  /// Error(invalid_argument) on an out-of-range rank.
  static LieType parse(std::string_view text);

  std::string name() const;
  bool valid() const noexcept;

  friend auto operator<=>(const LieType&, const LieType&) = default;
};

/// Throws Error(invalid_argument) naming the allowed range when `type` is not
/// a simple type (A>=1, B>=2, C>=2, D>=4, E6-8, F4, G2).
void validate(LieType type);

using IntMatrix = std::vector<std::vector<int>>;
using RootVector = std::vector<int>;  // coordinates in the simple-root basis

/// Root-system combinatorics for one simple type, Bourbaki labeling.
///
/// The Cartan matrix follows the Bourbaki plates: a_ij = <alpha_i, alpha_j^v>,
/// so for G2 (alpha_1 short) it reads [[2,-1],[-3,2]]. Symmetrizers are the
/// half squared lengths d_i = (alpha_i, alpha_i)/2 normalized to gcd 1, which
/// makes (a_ij d_j) symmetric. Positive roots are generated by simple
/// reflections and stored sorted by height, then lexicographically.
class RootSystem {
 public:
  explicit RootSystem(LieType type);

  LieType type() const noexcept { return type_; }
  int rank() const noexcept { return type_.rank; }
  const IntMatrix& cartan() const noexcept { return cartan_; }
  const std::vector<int>& symmetrizers() const noexcept { return symmetrizers_; }
  const std::vector<RootVector>& positive_roots() const noexcept { return positive_; }
  int coxeter_number() const noexcept { return coxeter_; }
  /// Exponents from the dual partition of the root-height distribution.
  const std::vector<int>& exponents() const noexcept { return exponents_; }

  /// dim g = rank + |Phi|.
  std::size_t dimension() const noexcept {
    return static_cast<std::size_t>(rank()) + 2 * positive_.size();
  }

  static int height(const RootVector& root);
  /// <beta, alpha_i^v>
  int pairing(const RootVector& beta, int i) const;
  /// Invariant form normalized so that short roots have squared length 2.
  int inner_product(const RootVector& a, const RootVector& b) const;
  /// Index into positive_roots(), or -1.
  int positive_index(const RootVector& root) const;
  bool is_root(const RootVector& v) const;

 private:
  LieType type_;
  IntMatrix cartan_;
  std::vector<int> symmetrizers_;
  std::vector<RootVector> positive_;
  int coxeter_ = 0;
  std::vector<int> exponents_;
};

inline RootSystem build_root_system(LieType type) { return RootSystem(type); }

/// Bourbaki Cartan matrix for a valid type.
IntMatrix cartan_matrix(LieType type);

/// Degrees of the exterior generators of H(g, C), ascending. Transcribed from
/// the classical degree table, independent of the root data.
std::vector<int> generator_degrees(LieType type);

struct CoxeterThreshold {
  int coxeter_number;
  int prime_bound;  // 3(h - 1)
};

CoxeterThreshold coxeter_threshold(LieType type);

/// Coefficients of prod_i (1 + t^{deg_i}); index n holds the coefficient of t^n.
std::vector<std::size_t> exterior_poincare_series(const std::vector<int>& degrees);

/// All valid simple types with rank <= max_rank, in a fixed order.
std::vector<LieType> all_types_up_to_rank(int max_rank);

}  // namespace liecoh
