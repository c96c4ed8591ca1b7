#pragma once

// Independent reference implementations used only by tests. Nothing here
// calls into the elimination, Smith or complex-building code under test.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Dense = std::vector<std::vector<mpq_class>>;
using DenseZ = std::vector<std::vector<mpz_class>>;

// Plain Gaussian elimination. p = 0 means Q, otherwise entries are reduced mod p.
inline std::size_t rank(Dense m, unsigned long p = 0) {
  auto reduce = [p](mpq_class& x) {
    if (p == 0) return;
    mpz_class num = x.get_num() % p, den = x.get_den() % p, inv;
    if (num < 0) num += p;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p).get_mpz_t());
    x = mpq_class(mpz_class((num * inv) % p));
  };
  for (auto& row : m)
    for (auto& x : row) reduce(x);
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      mpq_class f = m[i][c] / m[r][c];
      if (p) reduce(f);
      for (std::size_t j = c; j < cols; ++j) {
        m[i][j] -= f * m[r][j];
        reduce(m[i][j]);
      }
    }
    ++r;
  }
  return r;
}

// Invariant factors by the textbook algorithm: move a smallest nonzero entry
// to the corner, clear its row and column by division with remainder,
// enforce divisibility of the rest, recurse.
inline std::vector<mpz_class> smith(DenseZ m) {
  std::vector<mpz_class> out;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (m[i][j] != 0 && (bi == rows || abs(m[i][j]) < abs(m[bi][bj]))) bi = i, bj = j;
      if (bi == rows) return out;
      std::swap(m[t], m[bi]);
      for (auto& row : m) std::swap(row[t], row[bj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        mpz_class q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        clean = clean && m[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        mpz_class q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        clean = clean && m[t][j] == 0;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols && divides; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            divides = false;
          }
      if (divides) break;
    }
    out.push_back(abs(m[t][t]));
  }
  return out;
}

// Sparse alternating form keyed by sorted index lists.
using Monomial = std::vector<int>;
using Form = std::map<Monomial, mpq_class>;

// Sign of the permutation sorting `v`, or 0 if an index repeats.
inline int sort_sign(Monomial& v) {
  int sign = 1;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j + 1 < v.size() - i; ++j) {
      if (v[j] == v[j + 1]) return 0;
      if (v[j] > v[j + 1]) {
        std::swap(v[j], v[j + 1]);
        sign = -sign;
      }
    }
  for (std::size_t j = 0; j + 1 < v.size(); ++j)
    if (v[j] == v[j + 1]) return 0;
  return sign;
}

// structure[a][b] lists (k, c) with [x_a, x_b] = sum c x_k.
using Structure = std::vector<std::vector<std::vector<std::pair<int, long>>>>;

// d on one monomial, extended as an antiderivation from
// d xi_k = -sum_{a<b} c^k_ab xi_a ^ xi_b.
inline Form differential(const Structure& s, const Monomial& mono) {
  const int n = static_cast<int>(s.size());
  Form out;
  for (std::size_t pos = 0; pos < mono.size(); ++pos) {
    const int k = mono[pos];
    const mpq_class slot_sign = (pos % 2) ? -1 : 1;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (const auto& [idx, c] : s[a][b]) {
          if (idx != k) continue;
          Monomial m;
          m.insert(m.end(), mono.begin(), mono.begin() + pos);
          m.push_back(a);
          m.push_back(b);
          m.insert(m.end(), mono.begin() + pos + 1, mono.end());
          const int sg = sort_sign(m);
          if (!sg) continue;
          out[m] += slot_sign * sg * -c;
        }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// All k-subsets of {0..n-1} in lexicographic order.
inline std::vector<Monomial> subsets(int n, int k) {
  std::vector<Monomial> out;
  Monomial cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Betti numbers of the complex built above, by dense elimination.
inline std::vector<std::size_t> betti(const Structure& s, unsigned long p = 0) {
  const int n = static_cast<int>(s.size());
  std::vector<std::size_t> ranks(n + 2, 0);
  for (int k = 0; k < n; ++k) {
    const auto src = subsets(n, k), dst = subsets(n, k + 1);
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < dst.size(); ++i) index[dst[i]] = i;
    Dense m(dst.size(), std::vector<mpq_class>(src.size()));
    for (std::size_t j = 0; j < src.size(); ++j)
      for (const auto& [mono, c] : differential(s, src[j])) m[index.at(mono)][j] = c;
    ranks[k + 1] = rank(std::move(m), p);
  }
  std::vector<std::size_t> out;
  for (int k = 0; k <= n; ++k) {
    const auto dim = subsets(n, k).size();
    out.push_back(dim - ranks[k + 1] - ranks[k]);
  }
  return out;
}

// Coefficients of prod (1 + t^d), by explicit subset enumeration.
inline std::vector<std::size_t> exterior_series(const std::vector<int>& degrees) {
  int total = 0;
  for (int d : degrees) total += d;
  std::vector<std::size_t> out(total + 1, 0);
  for (std::uint32_t mask = 0; mask < (1u << degrees.size()); ++mask) {
    int deg = 0;
    for (std::size_t i = 0; i < degrees.size(); ++i)
      if (mask >> i & 1) deg += degrees[i];
    ++out[deg];
  }
  return out;
}

// Small random integer matrices for property tests.
struct MatrixGen {
  std::mt19937_64 rng;
  explicit MatrixGen(std::uint64_t seed) : rng(seed) {}

  DenseZ next(std::size_t max_side = 6, long bound = 6) {
    std::uniform_int_distribution<std::size_t> side(1, max_side);
    std::uniform_int_distribution<long> val(-bound, bound);
    std::bernoulli_distribution sparse(0.4);
    const std::size_t r = side(rng), c = side(rng);
    DenseZ m(r, std::vector<mpz_class>(c));
    for (auto& row : m)
      for (auto& x : row) x = sparse(rng) ? 0 : val(rng);
    // Occasionally force a rank drop.
    if (r > 1 && std::bernoulli_distribution(0.3)(rng)) {
      const long k = val(rng);
      for (std::size_t j = 0; j < c; ++j) m[r - 1][j] = k * m[0][j];
    }
    return m;
  }
};

}  // namespace oracle
