#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace liecoh {

using Integer = mpz_class;
using Rational = mpq_class;

/// Coefficient domain shared by all entries of a matrix or complex:
/// the integers, the rationals, or a prime field F_p.
class Domain {
 public:
  enum class Kind { integer, rational, prime_field };

  static Domain integers() { return Domain(Kind::integer, 0); }
  static Domain rationals() { return Domain(Kind::rational, 0); }
  /// Throws Error(invalid_argument) unless p is prime and below 2^31.
  static Domain prime_field(std::uint64_t p);
  /// "Z", "Q", or "Fp:<p>".
  static Domain parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  bool is_field() const noexcept { return kind_ != Kind::integer; }
  std::string label() const;

  /// Canonical representative: integers must have denominator 1, F_p values
  /// land in [0, p). Throws Error(domain) if the value does not belong.
  Rational normalize(const Rational& value) const;

  friend bool operator==(const Domain&, const Domain&) = default;

 private:
  Domain(Kind kind, std::uint32_t modulus) : kind_(kind), modulus_(modulus) {}
  Kind kind_;
  std::uint32_t modulus_;
};

bool is_prime(std::uint64_t n);

struct Triplet {
  std::size_t row;
  std::size_t col;
  Rational value;
};

struct MatrixEntry {
  std::size_t col;
  Rational value;
};

/// Sparse row-major matrix over one Domain. No explicit zeros are stored and
/// entries within a row are sorted by column.
class ExactMatrix {
 public:
  ExactMatrix() : ExactMatrix(Domain::rationals(), 0, 0) {}
  ExactMatrix(Domain domain, std::size_t rows, std::size_t cols);
  /// Duplicate positions are summed; values are normalized into the domain.
  ExactMatrix(Domain domain, std::size_t rows, std::size_t cols, std::vector<Triplet> entries);

  static ExactMatrix identity(Domain domain, std::size_t n);
  static ExactMatrix from_dense(Domain domain, const std::vector<std::vector<long>>& rows);

  const Domain& domain() const noexcept { return domain_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nnz() const noexcept;
  bool is_zero() const noexcept { return nnz() == 0; }

  std::span<const MatrixEntry> row(std::size_t r) const { return data_[r]; }
  Rational at(std::size_t r, std::size_t c) const;

  ExactMatrix transpose() const;
  /// Re-reads the entries in another domain (Z -> Q, Z -> F_p, ...).
  ExactMatrix converted(Domain target) const;
  ExactMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

 private:
  Domain domain_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::vector<MatrixEntry>> data_;
};

/// Invariant factors d_1 | d_2 | ... | d_k (all >= 1) of an integer matrix.
struct SmithForm {
  std::vector<Integer> invariant_factors;
  std::size_t rows = 0;
  std::size_t cols = 0;

  std::size_t rank() const noexcept { return invariant_factors.size(); }
  /// Invariant factors > 1.
  std::vector<Integer> torsion() const;
};

/// Rank over a field domain; Error(domain) for integer matrices.
std::size_t rank(const ExactMatrix& m);

/// Basis of the right kernel over a field domain, one vector per free column
/// of the reduced row echelon form, in ascending column order.
std::vector<std::vector<Rational>> kernel_basis(const ExactMatrix& m);

/// Some solution of m x = rhs with free variables set to zero, or nullopt.
std::optional<std::vector<Rational>> solve(const ExactMatrix& m, const std::vector<Rational>& rhs);

/// Rank of the span of the given vectors (all of one length) over a field.
std::size_t vector_rank(Domain domain, const std::vector<std::vector<Rational>>& vectors);

/// Smith normal form invariant factors of an integer matrix.
SmithForm smith_normal_form(const ExactMatrix& m);

/// Turns a list of nonzero diagonal entries into the divisibility chain of
/// the same abelian group (gcd/lcm exchange), sorted ascending.
std::vector<Integer> normalize_invariant_factors(std::vector<Integer> diagonal);

/// Text format: first line "rows cols", then one "r c value" line per entry.
std::string format_matrix(const ExactMatrix& m);
ExactMatrix parse_matrix(std::string_view text, Domain domain);

}  // namespace liecoh
