#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "liecoh/cecohomology.hpp"
#include "liecoh/linalg.hpp"

namespace liecoh {

/// A finitely generated abelian group Z^free_rank + sum Z/t_i with t_i >= 2.
struct GroupEntry {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;
};

struct IntegralComplexData {
  std::vector<GroupEntry> degrees;

  static IntegralComplexData from(const IntegralCohomology& h);
};

/// Dimension over F_p of {m : b m = 0} modulo the free part, i.e. the number
/// of invariant factors divisible by b. Error(invalid_argument) for b = 0.
std::size_t tor_b_torsion(const GroupEntry& entry, const Integer& b);

/// True iff Tor_1(M, F_p) = 0, i.e. no invariant factor is divisible by p.
bool freeness_criterion(const GroupEntry& entry, std::uint32_t p);

/// One degree of the cochain form of the universal coefficient sequence
///   0 -> H^n(K) (x) A -> H^n(K (x) A) -> Tor_1(H^{n+1}(K), A) -> 0.
struct UctRow {
  std::size_t degree = 0;
  std::size_t direct = 0;  // dim H^n(K (x) A)
  std::size_t tensor = 0;  // dim H^n(K) (x) A
  std::size_t tor = 0;     // dim Tor_1(H^{n+1}(K), A)
  bool pass = false;
};

struct UctVerdict {
  Domain coefficients = Domain::rationals();
  std::vector<UctRow> rows;
  bool pass = false;
};

/// Compares ranks computed directly over `coefficients` (Q or F_p) with the
/// prediction from the integral invariant factors.
UctVerdict verify_uct(const CochainComplex& integral, Domain coefficients);
UctVerdict verify_uct(const CochainComplex& integral, const IntegralComplexData& data, Domain coefficients);

/// Betti numbers over `coefficients` predicted from integral data alone.
std::vector<std::size_t> predicted_betti(const IntegralComplexData& data, Domain coefficients);

}  // namespace liecoh
