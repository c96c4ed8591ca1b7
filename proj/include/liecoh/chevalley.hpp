#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "liecoh/rootdata.hpp"

namespace liecoh {

struct BracketTerm {
  std::size_t index;
  long coeff;
};

/// A finite-dimensional Lie algebra given by integer structure constants in a
/// fixed basis, optionally reduced modulo a prime.
///
/// For a simple type the basis is a Chevalley basis ordered as
/// h_1..h_r, e_beta (positive roots in RootSystem order), e_-beta (same order).
/// Every basis vector carries a weight in the simple-root lattice (zero for
/// the Cartan part); brackets add weights.
class ChevalleyAlgebra {
 public:
  /// Any algebra given by structure constants; `table[x * dim + y]` holds
  /// [x_x, x_y]. Antisymmetry and the Jacobi identity are verified.
  static ChevalleyAlgebra from_structure_constants(std::vector<std::string> labels,
                                                   std::vector<RootVector> weights,
                                                   std::vector<std::vector<BracketTerm>> table,
                                                   std::uint32_t modulus = 0);

  /// Null for algebras not built from a root system.
  const RootSystem* root_system() const noexcept { return roots_.get(); }
  std::size_t dimension() const noexcept { return labels_.size(); }
  /// 0 for the integral algebra, p after reduction.
  std::uint32_t modulus() const noexcept { return modulus_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<RootVector>& weights() const noexcept { return weights_; }
  std::span<const BracketTerm> bracket(std::size_t x, std::size_t y) const {
    return table_[x * dimension() + y];
  }

  /// Basis index of e_alpha for a (positive or negative) root, or of h_i.
  std::size_t root_vector_index(const RootVector& root) const;
  std::size_t cartan_index(int i) const { return static_cast<std::size_t>(i); }

  /// Throws Error(internal) naming the first violating pair or triple.
  void verify() const;
  /// Dense tab-separated bracket table; see README for the layout.
  std::string bracket_tsv() const;

  /// Killing form tr(ad x ad y), computed from the structure constants.
  std::vector<std::vector<long>> killing_form() const;

 private:
  friend ChevalleyAlgebra build_chevalley(const RootSystem& rs);
  friend ChevalleyAlgebra reduce_mod(const ChevalleyAlgebra& alg, std::uint32_t p);

  ChevalleyAlgebra() = default;
  long normalize(long c) const;

  std::shared_ptr<const RootSystem> roots_;
  std::vector<std::string> labels_;
  std::vector<RootVector> weights_;
  std::vector<std::vector<BracketTerm>> table_;
  std::uint32_t modulus_ = 0;
};

/// Chevalley basis of the simple Lie algebra of `rs`. Signs: for every
/// non-simple positive root gamma, with alpha the lexicographically least
/// positive root such that gamma - alpha is a positive root,
/// N_{alpha, gamma-alpha} = +(p+1); all other constants follow.
ChevalleyAlgebra build_chevalley(const RootSystem& rs);

/// Entry-wise reduction modulo a prime; the result is re-verified.
ChevalleyAlgebra reduce_mod(const ChevalleyAlgebra& alg, std::uint32_t p);

/// Structure constant N_{alpha, beta} of the Chevalley basis built above, for
/// roots alpha, beta with alpha + beta a root (0 otherwise).
long structure_constant(const RootSystem& rs, const RootVector& alpha, const RootVector& beta);

}  // namespace liecoh
