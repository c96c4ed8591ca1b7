#include "liecoh/chevalley.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include <gmpxx.h>

#include "liecoh/error.hpp"
#include "liecoh/linalg.hpp"

namespace liecoh {

namespace {

RootVector negate(const RootVector& v) {
  RootVector out(v.size());
  std::transform(v.begin(), v.end(), out.begin(), [](int x) { return -x; });
  return out;
}

RootVector add(const RootVector& a, const RootVector& b) {
  RootVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

bool is_positive(const RootVector& v) {
  return std::any_of(v.begin(), v.end(), [](int x) { return x > 0; });
}

bool is_zero(const RootVector& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

std::string root_label(char prefix, const RootVector& root) {
  std::string s(1, prefix);
  s += '_';
  for (int c : root) s += std::to_string(c < 0 ? -c : c);
  return s;
}

// Structure constants N_{a,b} derived from the extraspecial pairs through the
// standard identities for a Chevalley basis:
//   N_{-a,-b} = -N_{a,b},
//   N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b)          when a + b + c = 0,
//   sum over the three pairings of N N / (sum, sum) = 0     when a + b + c + d = 0.
class StructureConstants {
 public:
  explicit StructureConstants(const RootSystem& rs) : rs_(rs) {
    for (const auto& gamma : rs.positive_roots()) {
      if (RootSystem::height(gamma) == 1) continue;
      const RootVector* best = nullptr;
      for (const auto& alpha : rs.positive_roots()) {
        RootVector rest = add(gamma, negate(alpha));
        if (rs.positive_index(rest) < 0) continue;
        if (!best || alpha < *best) best = &alpha;
      }
      extraspecial_.emplace(gamma, std::make_pair(*best, add(gamma, negate(*best))));
    }
  }

  long operator()(const RootVector& a, const RootVector& b) {
    const RootVector sum = add(a, b);
    if (is_zero(sum) || !rs_.is_root(sum)) return 0;
    auto key = std::make_pair(a, b);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const long value = compute(a, b, sum);
    memo_.emplace(std::move(key), value);
    return value;
  }

  // Largest p with b - p a a root.
  int string_length(const RootVector& a, const RootVector& b) const {
    int p = 0;
    RootVector v = b;
    for (;;) {
      v = add(v, negate(a));
      if (is_zero(v) || !rs_.is_root(v)) return p;
      ++p;
    }
  }

 private:
  long norm(const RootVector& v) const { return rs_.inner_product(v, v); }

  long compute(const RootVector& a, const RootVector& b, const RootVector& sum) {
    const bool pa = is_positive(a), pb = is_positive(b);
    if (pa && pb) return positive_pair(a, b, sum);
    if (!pa && !pb) return -(*this)(negate(a), negate(b));
    if (!pa) return -(*this)(b, a);
    // a positive, b negative, a + b = sum.
    mpq_class v;
    if (is_positive(sum)) {
      // N_{a,b} = (sum,sum)/(a,a) N_{b,-sum}
      v = mpq_class(norm(sum), norm(a)) * (*this)(b, negate(sum));
    } else {
      // N_{a,b} = (sum,sum)/(b,b) N_{-sum,a}
      v = mpq_class(norm(sum), norm(b)) * (*this)(negate(sum), a);
    }
    v.canonicalize();
    return checked(v, a, b);
  }

  long positive_pair(const RootVector& a, const RootVector& b, const RootVector& gamma) {
    const auto& [ea, eb] = extraspecial_.at(gamma);
    if (a == ea && b == eb) return string_length(ea, eb) + 1;
    if (a == eb && b == ea) return -(string_length(ea, eb) + 1);
    const long top = string_length(ea, eb) + 1;
    const RootVector na = negate(ea), nb = negate(eb);
    mpq_class t = 0;
    const RootVector b_minus = add(b, na);
    if (!is_zero(b_minus) && rs_.is_root(b_minus)) {
      t += mpq_class((*this)(b, na) * (*this)(a, nb), norm(b_minus));
    }
    const RootVector a_minus = add(a, na);
    if (!is_zero(a_minus) && rs_.is_root(a_minus)) {
      t += mpq_class((*this)(na, a) * (*this)(b, nb), norm(a_minus));
    }
    mpq_class v = t * norm(gamma) / top;
    v.canonicalize();
    return checked(v, a, b);
  }

  long checked(const mpq_class& v, const RootVector& a, const RootVector& b) const {
    if (v.get_den() != 1) {
      throw Error(Errc::internal, "non-integral structure constant for " + root_label('e', a) +
                                      ", " + root_label('e', b));
    }
    return v.get_num().get_si();
  }

  const RootSystem& rs_;
  std::map<RootVector, std::pair<RootVector, RootVector>> extraspecial_;
  std::map<std::pair<RootVector, RootVector>, long> memo_;
};

}  // namespace

long structure_constant(const RootSystem& rs, const RootVector& alpha, const RootVector& beta) {
  StructureConstants n(rs);
  return n(alpha, beta);
}

long ChevalleyAlgebra::normalize(long c) const {
  if (modulus_ == 0) return c;
  const long p = modulus_;
  return ((c % p) + p) % p;
}

ChevalleyAlgebra ChevalleyAlgebra::from_structure_constants(std::vector<std::string> labels,
                                                           std::vector<RootVector> weights,
                                                           std::vector<std::vector<BracketTerm>> table,
                                                           std::uint32_t modulus) {
  const std::size_t n = labels.size();
  if (weights.size() != n || table.size() != n * n) {
    throw Error(Errc::invalid_argument, "structure-constant table does not match the basis size");
  }
  ChevalleyAlgebra alg;
  alg.labels_ = std::move(labels);
  alg.weights_ = std::move(weights);
  alg.modulus_ = modulus;
  alg.table_.resize(n * n);
  for (std::size_t k = 0; k < n * n; ++k) {
    std::map<std::size_t, long> merged;
    for (const auto& t : table[k]) {
      if (t.index >= n) throw Error(Errc::invalid_argument, "bracket term index out of range");
      merged[t.index] += t.coeff;
    }
    for (const auto& [i, c] : merged) {
      const long v = alg.normalize(c);
      if (v != 0) alg.table_[k].push_back({i, v});
    }
  }
  alg.verify();
  return alg;
}

ChevalleyAlgebra build_chevalley(const RootSystem& rs) {
  ChevalleyAlgebra alg;
  alg.roots_ = std::make_shared<const RootSystem>(rs);
  const int r = rs.rank();
  const auto& pos = rs.positive_roots();
  const std::size_t np = pos.size();
  const std::size_t dim = r + 2 * np;

  for (int i = 0; i < r; ++i) {
    alg.labels_.push_back("h" + std::to_string(i + 1));
    alg.weights_.push_back(RootVector(r, 0));
  }
  for (const auto& beta : pos) {
    alg.labels_.push_back(root_label('e', beta));
    alg.weights_.push_back(beta);
  }
  for (const auto& beta : pos) {
    alg.labels_.push_back(root_label('f', beta));
    alg.weights_.push_back(negate(beta));
  }

  StructureConstants nconst(rs);
  alg.table_.assign(dim * dim, {});
  auto set = [&](std::size_t x, std::size_t y, std::vector<BracketTerm> terms) {
    alg.table_[x * dim + y] = terms;
    for (auto& t : terms) t.coeff = -t.coeff;
    alg.table_[y * dim + x] = std::move(terms);
  };

  for (int i = 0; i < r; ++i) {
    for (std::size_t k = r; k < dim; ++k) {
      const int c = rs.pairing(alg.weights_[k], i);
      if (c != 0) set(i, k, {{k, c}});
    }
  }
  for (std::size_t x = r; x < dim; ++x) {
    for (std::size_t y = x + 1; y < dim; ++y) {
      const RootVector& a = alg.weights_[x];
      const RootVector& b = alg.weights_[y];
      const RootVector s = add(a, b);
      if (is_zero(s)) {
        // [e_a, e_-a] = h_a, the coroot in the basis of simple coroots.
        std::vector<BracketTerm> h;
        const int na = rs.inner_product(a, a);
        for (int i = 0; i < r; ++i) {
          if (a[i] == 0) continue;
          const int num = a[i] * 2 * rs.symmetrizers()[i];
          if (num % na != 0) throw Error(Errc::internal, "non-integral coroot");
          h.push_back({static_cast<std::size_t>(i), num / na});
        }
        set(x, y, std::move(h));
        continue;
      }
      const long n = nconst(a, b);
      if (n == 0) continue;
      if (std::abs(n) != nconst.string_length(a, b) + 1) {
        throw Error(Errc::internal, "structure constant magnitude mismatch at " +
                                        alg.labels_[x] + ", " + alg.labels_[y]);
      }
      set(x, y, {{alg.root_vector_index(s), n}});
    }
  }
  alg.verify();
  return alg;
}

ChevalleyAlgebra reduce_mod(const ChevalleyAlgebra& alg, std::uint32_t p) {
  if (!is_prime(p)) {
    throw Error(Errc::invalid_argument, "reduce_mod needs a prime, got " + std::to_string(p));
  }
  ChevalleyAlgebra out = alg;
  out.modulus_ = p;
  for (auto& entry : out.table_) {
    std::vector<BracketTerm> kept;
    for (const auto& t : entry) {
      const long v = out.normalize(t.coeff);
      if (v != 0) kept.push_back({t.index, v});
    }
    entry = std::move(kept);
  }
  out.verify();
  return out;
}

std::size_t ChevalleyAlgebra::root_vector_index(const RootVector& root) const {
  for (std::size_t k = 0; k < weights_.size(); ++k) {
    if (weights_[k] == root && !is_zero(root)) return k;
  }
  throw Error(Errc::invalid_argument, "no basis vector for the given root");
}

void ChevalleyAlgebra::verify() const {
  const std::size_t n = dimension();
  for (std::size_t x = 0; x < n; ++x) {
    if (!bracket(x, x).empty()) throw Error(Errc::internal, "[" + labels_[x] + "," + labels_[x] + "] != 0");
    for (std::size_t y = x + 1; y < n; ++y) {
      auto a = bracket(x, y), b = bracket(y, x);
      bool ok = a.size() == b.size();
      for (std::size_t k = 0; ok && k < a.size(); ++k)
        ok = a[k].index == b[k].index && normalize(a[k].coeff + b[k].coeff) == 0;
      if (!ok) {
        throw Error(Errc::internal, "antisymmetry fails for (" + labels_[x] + ", " + labels_[y] + ")");
      }
    }
  }
  std::vector<long> acc(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z) {
        std::fill(acc.begin(), acc.end(), 0);
        auto accumulate = [&](std::size_t u, std::size_t v, std::size_t w) {
          for (const auto& t : bracket(u, v))
            for (const auto& s : bracket(t.index, w)) acc[s.index] += t.coeff * s.coeff;
        };
        accumulate(x, y, z);
        accumulate(y, z, x);
        accumulate(z, x, y);
        for (std::size_t k = 0; k < n; ++k)
          if (normalize(acc[k]) != 0) {
            throw Error(Errc::internal, "Jacobi identity fails for (" + labels_[x] + ", " +
                                            labels_[y] + ", " + labels_[z] + ")");
          }
      }
}

std::vector<std::vector<long>> ChevalleyAlgebra::killing_form() const {
  const std::size_t n = dimension();
  std::vector<std::vector<long>> k(n, std::vector<long>(n, 0));
  // tr(ad x ad y) = sum_z coefficient of z in [x, [y, z]]
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      long tr = 0;
      for (std::size_t z = 0; z < n; ++z)
        for (const auto& t : bracket(y, z))
          for (const auto& s : bracket(x, t.index))
            if (s.index == z) tr += t.coeff * s.coeff;
      k[x][y] = normalize(tr);
    }
  return k;
}

std::string ChevalleyAlgebra::bracket_tsv() const {
  std::ostringstream out;
  const std::size_t n = dimension();
  out << "# basis";
  for (const auto& l : labels_) out << '\t' << l;
  out << '\n';
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      auto terms = bracket(x, y);
      if (terms.empty()) continue;
      std::vector<long> dense(n, 0);
      for (const auto& t : terms) dense[t.index] = t.coeff;
      out << labels_[x] << '\t' << labels_[y] << '\t';
      for (std::size_t k = 0; k < n; ++k) out << (k ? "," : "") << dense[k];
      out << '\n';
    }
  return out.str();
}

}  // namespace liecoh
