#pragma once

// Field arithmetic and the sparse row-echelon engine shared by the rank,
// kernel and solve routines.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <queue>
#include <utility>
#include <vector>

#include "liecoh/linalg.hpp"

namespace liecoh::detail {

struct ModPField {
  using Value = std::uint32_t;
  std::uint32_t p;

  Value from(const Rational& x) const {
    const Value num = static_cast<Value>(mpz_fdiv_ui(x.get_num_mpz_t(), p));
    if (mpz_cmp_ui(x.get_den_mpz_t(), 1) == 0) return num;
    const Value den = static_cast<Value>(mpz_fdiv_ui(x.get_den_mpz_t(), p));
    return mul(num, inv(den));
  }
  Rational to_rational(Value v) const { return Rational(static_cast<unsigned long>(v)); }
  static bool is_zero(Value v) { return v == 0; }
  static Value zero() { return 0; }
  Value sub_mul(Value acc, Value f, Value v) const {
    const std::uint64_t prod = static_cast<std::uint64_t>(f) * v % p;
    return static_cast<Value>((acc + p - prod) % p);
  }
  Value mul(Value a, Value b) const {
    return static_cast<Value>(static_cast<std::uint64_t>(a) * b % p);
  }
  Value neg(Value a) const { return a == 0 ? 0 : p - a; }
  Value inv(Value a) const {
    // Fermat
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<Value>(result);
  }
};

struct RationalField {
  using Value = Rational;
  Value from(const Rational& x) const { return x; }
  Rational to_rational(const Value& v) const { return v; }
  static bool is_zero(const Value& v) { return sgn(v) == 0; }
  static Value zero() { return Rational(0); }
  Value sub_mul(const Value& acc, const Value& f, const Value& v) const { return acc - f * v; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value neg(const Value& a) const { return -a; }
  Value inv(const Value& a) const { return 1 / a; }
};

/// Row echelon form built one sparse row at a time. Each stored pivot row has
/// leading coefficient 1 in its pivot column and no entries to its left.
template <class Field>
class SparseEchelon {
 public:
  using Value = typename Field::Value;
  using Row = std::vector<std::pair<std::size_t, Value>>;

  SparseEchelon(Field field, std::size_t cols)
      : field_(std::move(field)),
        cols_(cols),
        pivot_of_col_(cols, -1),
        acc_(cols, Field::zero()),
        queued_(cols, 0) {}

  /// Reduces `row` against the current pivots; returns true and stores the
  /// remainder if it is nonzero.
  bool insert(const Row& row) {
    for (const auto& [c, v] : row) {
      if (Field::is_zero(v)) continue;
      acc_[c] = v;
      push(c);
    }
    while (!heap_.empty()) {
      const std::size_t c = heap_.top();
      heap_.pop();
      queued_[c] = 0;
      if (Field::is_zero(acc_[c])) continue;
      const int p = pivot_of_col_[c];
      if (p >= 0) {
        const Value f = acc_[c];
        for (const auto& [c2, v2] : pivots_[p]) {
          if (c2 == c) {
            acc_[c] = Field::zero();
            continue;
          }
          acc_[c2] = field_.sub_mul(acc_[c2], f, v2);
          push(c2);
        }
        continue;
      }
      Row fresh;
      fresh.emplace_back(c, acc_[c]);
      acc_[c] = Field::zero();
      while (!heap_.empty()) {
        const std::size_t c2 = heap_.top();
        heap_.pop();
        queued_[c2] = 0;
        if (!Field::is_zero(acc_[c2])) fresh.emplace_back(c2, acc_[c2]);
        acc_[c2] = Field::zero();
      }
      const Value scale = field_.inv(fresh.front().second);
      for (auto& entry : fresh) entry.second = field_.mul(entry.second, scale);
      pivot_of_col_[c] = static_cast<int>(pivots_.size());
      pivot_cols_.push_back(c);
      pivots_.push_back(std::move(fresh));
      return true;
    }
    return false;
  }

  std::size_t rank() const { return pivots_.size(); }

  /// Clears every pivot row at the other pivot columns (reduced echelon form).
  void reduce() {
    std::vector<std::size_t> order(pivots_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return pivot_cols_[a] > pivot_cols_[b]; });
    for (std::size_t idx : order) {
      const std::size_t own = pivot_cols_[idx];
      for (const auto& [c, v] : pivots_[idx]) {
        acc_[c] = v;
        push(c);
      }
      Row out;
      while (!heap_.empty()) {
        const std::size_t c = heap_.top();
        heap_.pop();
        queued_[c] = 0;
        if (Field::is_zero(acc_[c])) continue;
        const int p = pivot_of_col_[c];
        if (p >= 0 && c != own) {
          const Value f = acc_[c];
          for (const auto& [c2, v2] : pivots_[p]) {
            if (c2 == c) {
              acc_[c] = Field::zero();
              continue;
            }
            acc_[c2] = field_.sub_mul(acc_[c2], f, v2);
            push(c2);
          }
          continue;
        }
        out.emplace_back(c, acc_[c]);
        acc_[c] = Field::zero();
      }
      pivots_[idx] = std::move(out);
    }
  }

  const std::vector<Row>& pivot_rows() const { return pivots_; }
  const std::vector<std::size_t>& pivot_cols() const { return pivot_cols_; }
  int pivot_of_col(std::size_t c) const { return pivot_of_col_[c]; }
  const Field& field() const { return field_; }
  std::size_t cols() const { return cols_; }

 private:
  void push(std::size_t c) {
    if (!queued_[c]) {
      queued_[c] = 1;
      heap_.push(c);
    }
  }

  Field field_;
  std::size_t cols_;
  std::vector<int> pivot_of_col_;
  std::vector<std::size_t> pivot_cols_;
  std::vector<Row> pivots_;
  std::vector<Value> acc_;
  std::vector<char> queued_;
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> heap_;
};

}  // namespace liecoh::detail
