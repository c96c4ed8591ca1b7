// Smith normal form invariant factors over Z.
//
// Phase one eliminates, on the sparse structure, every pivot whose value
// divides its whole row and column (units first, lowest Markowitz cost
// first). Such a pivot splits off a cyclic summand without touching the
// remaining entries beyond ordinary row operations. Whatever is left is small
// and goes through a dense gcd-based diagonalization; the diagonal is then
// normalized into a divisibility chain.

#include <algorithm>
#include <map>
#include <set>

#include "liecoh/error.hpp"
#include "liecoh/linalg.hpp"

namespace liecoh {

namespace {

class SparseIntegerMatrix {
 public:
  explicit SparseIntegerMatrix(const ExactMatrix& m) : rows_(m.rows()), cols_(m.cols()) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (const auto& e : m.row(r)) {
        rows_[r].emplace(e.col, e.value.get_num());
        cols_[e.col].insert(r);
      }
  }

  // Returns the number of pivots eliminated in one sweep.
  std::size_t sweep(bool units_only, std::vector<Integer>& diagonal) {
    std::vector<std::size_t> order;
    for (std::size_t c = 0; c < cols_.size(); ++c)
      if (!cols_[c].empty()) order.push_back(c);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return cols_[a].size() < cols_[b].size(); });
    std::size_t done = 0;
    for (std::size_t c : order) {
      if (cols_[c].empty()) continue;
      long best = -1;
      std::size_t best_cost = 0;
      Integer best_abs;
      for (std::size_t r : cols_[c]) {
        const Integer& v = rows_[r].at(c);
        const Integer a = abs(v);
        if (units_only ? a != 1 : !divides_row_and_column(r, c, v)) continue;
        const std::size_t cost = (rows_[r].size() - 1) * (cols_[c].size() - 1);
        if (best < 0 || a < best_abs || (a == best_abs && cost < best_cost)) {
          best = static_cast<long>(r);
          best_cost = cost;
          best_abs = a;
        }
      }
      if (best < 0) continue;
      diagonal.push_back(best_abs);
      eliminate(static_cast<std::size_t>(best), c);
      ++done;
    }
    return done;
  }

  std::vector<std::vector<Integer>> dense_remainder() const {
    std::vector<std::size_t> live_rows, live_cols;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (!rows_[r].empty()) live_rows.push_back(r);
    std::vector<long> col_index(cols_.size(), -1);
    for (std::size_t c = 0; c < cols_.size(); ++c)
      if (!cols_[c].empty()) {
        col_index[c] = static_cast<long>(live_cols.size());
        live_cols.push_back(c);
      }
    std::vector<std::vector<Integer>> dense(live_rows.size(),
                                            std::vector<Integer>(live_cols.size(), Integer(0)));
    for (std::size_t i = 0; i < live_rows.size(); ++i)
      for (const auto& [c, v] : rows_[live_rows[i]]) dense[i][col_index[c]] = v;
    return dense;
  }

 private:
  bool divides_row_and_column(std::size_t r, std::size_t c, const Integer& v) const {
    for (const auto& [c2, w] : rows_[r])
      if (!mpz_divisible_p(w.get_mpz_t(), v.get_mpz_t())) return false;
    for (std::size_t r2 : cols_[c])
      if (!mpz_divisible_p(rows_[r2].at(c).get_mpz_t(), v.get_mpz_t())) return false;
    return true;
  }

  void eliminate(std::size_t r, std::size_t c) {
    const Integer pivot = rows_[r].at(c);
    const std::vector<std::size_t> others(cols_[c].begin(), cols_[c].end());
    for (std::size_t r2 : others) {
      if (r2 == r) continue;
      const Integer f = rows_[r2].at(c) / pivot;  // exact
      auto& target = rows_[r2];
      for (const auto& [c2, v] : rows_[r]) {
        auto it = target.find(c2);
        if (it == target.end()) {
          target.emplace(c2, -f * v);
          cols_[c2].insert(r2);
        } else {
          it->second -= f * v;
          if (sgn(it->second) == 0) {
            target.erase(it);
            cols_[c2].erase(r2);
          }
        }
      }
    }
    // Column operations now clear the rest of row r without side effects.
    for (const auto& [c2, v] : rows_[r]) cols_[c2].erase(r);
    rows_[r].clear();
  }

  std::vector<std::map<std::size_t, Integer>> rows_;
  std::vector<std::set<std::size_t>> cols_;
};

void dense_diagonalize(std::vector<std::vector<Integer>> a, std::vector<Integer>& diagonal) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    auto find_min = [&](bool whole_block, std::size_t& pi, std::size_t& pj) {
      bool found = false;
      Integer best;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (!whole_block && i != t && j != t) continue;
          if (sgn(a[i][j]) == 0) continue;
          Integer v = abs(a[i][j]);
          if (!found || v < best) {
            best = v;
            pi = i;
            pj = j;
            found = true;
          }
        }
      return found;
    };
    std::size_t pi = 0, pj = 0;
    if (!find_min(true, pi, pj)) break;
    for (;;) {
      std::swap(a[t], a[pi]);
      if (pj != t)
        for (std::size_t i = 0; i < m; ++i) std::swap(a[i][t], a[i][pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(a[i][t]) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
        if (sgn(q) != 0)
          for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        if (sgn(a[i][t]) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(a[t][j]) == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
        if (sgn(q) != 0)
          for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        if (sgn(a[t][j]) != 0) clean = false;
      }
      if (clean) break;
      find_min(false, pi, pj);
    }
    diagonal.push_back(abs(a[t][t]));
  }
}

}  // namespace

std::vector<Integer> normalize_invariant_factors(std::vector<Integer> diagonal) {
  std::vector<Integer> units, rest;
  for (auto& d : diagonal) {
    d = abs(d);
    if (sgn(d) == 0) throw Error(Errc::invalid_argument, "zero is not an invariant factor");
    (d == 1 ? units : rest).push_back(d);
  }
  for (std::size_t i = 0; i < rest.size(); ++i)
    for (std::size_t j = i + 1; j < rest.size(); ++j) {
      Integer g, l;
      mpz_gcd(g.get_mpz_t(), rest[i].get_mpz_t(), rest[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), rest[i].get_mpz_t(), rest[j].get_mpz_t());
      rest[i] = g;
      rest[j] = l;
    }
  std::vector<Integer> out;
  out.reserve(diagonal.size());
  for (auto& u : units) out.push_back(u);
  for (auto& d : rest) out.push_back(d);
  std::stable_sort(out.begin(), out.end());
  return out;
}

SmithForm smith_normal_form(const ExactMatrix& m) {
  if (m.domain().kind() != Domain::Kind::integer) {
    throw Error(Errc::domain, "smith_normal_form needs integer coefficients, got " + m.domain().label());
  }
  SparseIntegerMatrix work(m);
  std::vector<Integer> diagonal;
  for (;;) {
    if (work.sweep(true, diagonal) > 0) continue;
    if (work.sweep(false, diagonal) > 0) continue;
    break;
  }
  dense_diagonalize(work.dense_remainder(), diagonal);
  SmithForm out;
  out.rows = m.rows();
  out.cols = m.cols();
  out.invariant_factors = normalize_invariant_factors(std::move(diagonal));
  return out;
}

}  // namespace liecoh
