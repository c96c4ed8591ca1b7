#include "liecoh/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <numeric>
#include <set>

#include "liecoh/error.hpp"

namespace liecoh {

namespace {

// Bourbaki plates V-IX. Entry (i, j) = <alpha_i, alpha_j^v>.
constexpr int kE8[8][8] = {
    {2, 0, -1, 0, 0, 0, 0, 0},  {0, 2, 0, -1, 0, 0, 0, 0},
    {-1, 0, 2, -1, 0, 0, 0, 0}, {0, -1, -1, 2, -1, 0, 0, 0},
    {0, 0, 0, -1, 2, -1, 0, 0}, {0, 0, 0, 0, -1, 2, -1, 0},
    {0, 0, 0, 0, 0, -1, 2, -1}, {0, 0, 0, 0, 0, 0, -1, 2},
};

constexpr int kF4[4][4] = {
    {2, -1, 0, 0},
    {-1, 2, -2, 0},
    {0, -1, 2, -1},
    {0, 0, -1, 2},
};

constexpr int kG2[2][2] = {
    {2, -1},
    {-3, 2},
};

int known_coxeter_number(LieType t) {
  switch (t.series) {
    case Series::A: return t.rank + 1;
    case Series::B:
    case Series::C: return 2 * t.rank;
    case Series::D: return 2 * t.rank - 2;
    case Series::E: return t.rank == 6 ? 12 : (t.rank == 7 ? 18 : 30);
    case Series::F: return 12;
    case Series::G: return 6;
  }
  return 0;
}

std::vector<int> symmetrize(const IntMatrix& a) {
  const std::size_t r = a.size();
  // d_j / d_i = a_ji / a_ij along edges; store as fractions over a common
  // positive denominator via BFS.
  std::vector<long> num(r, 0), den(r, 1);
  num[0] = 1;
  std::deque<std::size_t> queue{0};
  std::vector<bool> seen(r, false);
  seen[0] = true;
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j || a[i][j] == 0 || seen[j]) continue;
      // a_ij d_j = a_ji d_i
      num[j] = num[i] * a[j][i];
      den[j] = den[i] * a[i][j];
      if (den[j] < 0) {
        num[j] = -num[j];
        den[j] = -den[j];
      }
      seen[j] = true;
      queue.push_back(j);
    }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool s) { return s; })) {
    throw Error(Errc::internal, "Cartan matrix is not connected");
  }
  long common = 1;
  for (long d : den) common = std::lcm(common, d);
  std::vector<long> scaled(r);
  long g = 0;
  for (std::size_t i = 0; i < r; ++i) {
    scaled[i] = num[i] * (common / den[i]);
    g = std::gcd(g, scaled[i]);
  }
  std::vector<int> d(r);
  for (std::size_t i = 0; i < r; ++i) d[i] = static_cast<int>(scaled[i] / g);
  return d;
}

}  // namespace

LieType LieType::parse(std::string_view text) {
  if (text.size() < 2) {
    throw Error(Errc::parse, "malformed Lie type '" + std::string(text) + "'");
  }
  const char s = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  if (s < 'A' || s > 'G') {
    throw Error(Errc::parse, "unknown series '" + std::string(1, text[0]) +
                                 "' (expected one of A,B,C,D,E,F,G)");
  }
  int rank = 0;
  const auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw Error(Errc::parse, "malformed rank in Lie type '" + std::string(text) + "'");
  }
  LieType t{static_cast<Series>(s), rank};
  validate(t);
  return t;
}

std::string LieType::name() const {
  return std::string(1, static_cast<char>(series)) + std::to_string(rank);
}

bool LieType::valid() const noexcept {
  switch (series) {
    case Series::A: return rank >= 1;
    case Series::B:
    case Series::C: return rank >= 2;
    case Series::D: return rank >= 4;
    case Series::E: return rank >= 6 && rank <= 8;
    case Series::F: return rank == 4;
    case Series::G: return rank == 2;
  }
  return false;
}

void validate(LieType type) {
  if (type.valid()) return;
  std::string range;
  switch (type.series) {
    case Series::A: range = "rank >= 1"; break;
    case Series::B:
    case Series::C: range = "rank >= 2"; break;
    case Series::D: range = "rank >= 4"; break;
    case Series::E: range = "rank 6, 7 or 8"; break;
    case Series::F: range = "rank 4"; break;
    case Series::G: range = "rank 2"; break;
  }
  throw Error(Errc::invalid_argument, "invalid rank for series " +
                                          std::string(1, static_cast<char>(type.series)) +
                                          ": " + std::to_string(type.rank) + " (requires " +
                                          range + ")");
}

IntMatrix cartan_matrix(LieType t) {
  validate(t);
  const int r = t.rank;
  IntMatrix a(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) {  // 1-based simple edge
    a[i - 1][j - 1] = -1;
    a[j - 1][i - 1] = -1;
  };
  switch (t.series) {
    case Series::A:
      for (int i = 1; i < r; ++i) link(i, i + 1);
      break;
    case Series::B:
      for (int i = 1; i < r - 1; ++i) link(i, i + 1);
      a[r - 2][r - 1] = -2;  // alpha_r short
      a[r - 1][r - 2] = -1;
      break;
    case Series::C:
      for (int i = 1; i < r - 1; ++i) link(i, i + 1);
      a[r - 2][r - 1] = -1;  // alpha_r long
      a[r - 1][r - 2] = -2;
      break;
    case Series::D:
      for (int i = 1; i < r - 1; ++i) link(i, i + 1);
      link(r - 2, r);
      break;
    case Series::E:
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) a[i][j] = kE8[i][j];
      break;
    case Series::F:
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) a[i][j] = kF4[i][j];
      break;
    case Series::G:
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) a[i][j] = kG2[i][j];
      break;
  }
  return a;
}

RootSystem::RootSystem(LieType type) : type_(type) {
  validate(type);
  cartan_ = cartan_matrix(type);
  const int r = type.rank;
  for (int i = 0; i < r; ++i) {
    if (cartan_[i][i] != 2) throw Error(Errc::internal, "Cartan diagonal must be 2");
    for (int j = 0; j < r; ++j) {
      if (i != j && cartan_[i][j] > 0)
        throw Error(Errc::internal, "Cartan off-diagonal entries must be <= 0");
      if ((cartan_[i][j] == 0) != (cartan_[j][i] == 0))
        throw Error(Errc::internal, "Cartan matrix zero pattern is not symmetric");
    }
  }
  symmetrizers_ = symmetrize(cartan_);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (cartan_[i][j] * symmetrizers_[j] != cartan_[j][i] * symmetrizers_[i])
        throw Error(Errc::internal, "Cartan matrix is not symmetrizable");

  // Reflection closure starting from the simple roots.
  std::set<RootVector> found;
  std::deque<RootVector> queue;
  for (int i = 0; i < r; ++i) {
    RootVector e(r, 0);
    e[i] = 1;
    found.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    RootVector beta = queue.front();
    queue.pop_front();
    for (int i = 0; i < r; ++i) {
      const int c = pairing(beta, i);
      if (c == 0) continue;
      RootVector img = beta;
      img[i] -= c;
      if (std::any_of(img.begin(), img.end(), [](int x) { return x < 0; })) continue;
      if (found.insert(img).second) queue.push_back(img);
    }
  }
  positive_.assign(found.begin(), found.end());
  std::stable_sort(positive_.begin(), positive_.end(), [](const RootVector& a, const RootVector& b) {
    const int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });

  coxeter_ = known_coxeter_number(type);
  const int top = height(positive_.back());
  if (coxeter_ != top + 1 ||
      2 * static_cast<int>(positive_.size()) != r * coxeter_) {
    throw Error(Errc::internal, "root closure for " + type.name() +
                                    " disagrees with the Coxeter number");
  }

  // Exponents: multiplicity of m is (#roots of height m) - (#roots of height m+1).
  std::vector<int> count(top + 2, 0);
  for (const auto& root : positive_) ++count[height(root)];
  for (int m = 1; m <= top; ++m)
    for (int k = 0; k < count[m] - count[m + 1]; ++k) exponents_.push_back(m);
  if (static_cast<int>(exponents_.size()) != r)
    throw Error(Errc::internal, "height partition does not yield rank-many exponents");
}

int RootSystem::height(const RootVector& root) {
  return std::accumulate(root.begin(), root.end(), 0);
}

int RootSystem::pairing(const RootVector& beta, int i) const {
  int s = 0;
  for (int k = 0; k < rank(); ++k) s += beta[k] * cartan_[k][i];
  return s;
}

int RootSystem::inner_product(const RootVector& a, const RootVector& b) const {
  // (alpha_i, alpha_j) = a_ij d_j
  int s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) s += a[i] * b[j] * cartan_[i][j] * symmetrizers_[j];
  }
  return s;
}

int RootSystem::positive_index(const RootVector& root) const {
  const int h = height(root);
  if (h <= 0) return -1;
  auto it = std::lower_bound(positive_.begin(), positive_.end(), root,
                             [](const RootVector& a, const RootVector& b) {
                               const int ha = height(a), hb = height(b);
                               if (ha != hb) return ha < hb;
                               return a < b;
                             });
  if (it == positive_.end() || *it != root) return -1;
  return static_cast<int>(it - positive_.begin());
}

bool RootSystem::is_root(const RootVector& v) const {
  if (positive_index(v) >= 0) return true;
  RootVector neg(v.size());
  std::transform(v.begin(), v.end(), neg.begin(), [](int x) { return -x; });
  return positive_index(neg) >= 0;
}

std::vector<int> generator_degrees(LieType t) {
  validate(t);
  const int r = t.rank;
  std::vector<int> d;
  switch (t.series) {
    case Series::A:
      for (int k = 3; k <= 2 * r + 1; k += 2) d.push_back(k);
      break;
    case Series::B:
    case Series::C:
      for (int k = 3; k <= 4 * r - 1; k += 4) d.push_back(k);
      break;
    case Series::D:
      for (int k = 3; k <= 4 * r - 5; k += 4) d.push_back(k);
      d.push_back(2 * r - 1);
      break;
    case Series::E:
      if (r == 6) d = {3, 9, 11, 15, 17, 23};
      if (r == 7) d = {3, 11, 15, 19, 23, 27, 35};
      if (r == 8) d = {3, 15, 23, 27, 35, 39, 47, 59};
      break;
    case Series::F: d = {3, 11, 15, 23}; break;
    case Series::G: d = {3, 11}; break;
  }
  std::sort(d.begin(), d.end());
  return d;
}

CoxeterThreshold coxeter_threshold(LieType t) {
  validate(t);
  const int h = known_coxeter_number(t);
  return {h, 3 * (h - 1)};
}

std::vector<std::size_t> exterior_poincare_series(const std::vector<int>& degrees) {
  std::vector<std::size_t> c{1};
  for (int d : degrees) {
    std::vector<std::size_t> next(c.size() + d, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] += c[i];
      next[i + d] += c[i];
    }
    c = std::move(next);
  }
  return c;
}

std::vector<LieType> all_types_up_to_rank(int max_rank) {
  std::vector<LieType> out;
  for (Series s : {Series::A, Series::B, Series::C, Series::D, Series::E, Series::F, Series::G}) {
    for (int r = 1; r <= max_rank; ++r) {
      LieType t{s, r};
      if (t.valid()) out.push_back(t);
    }
  }
  return out;
}

}  // namespace liecoh
