#include "liecoh/cecohomology.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <future>
#include <thread>

#include "liecoh/error.hpp"

namespace liecoh {

namespace {

using Mask = std::uint64_t;

const std::vector<std::vector<std::uint64_t>>& binomials() {
  static const auto table = [] {
    std::vector<std::vector<std::uint64_t>> c(kMaxGenerators + 2,
                                              std::vector<std::uint64_t>(kMaxGenerators + 2, 0));
    for (std::size_t n = 0; n < c.size(); ++n) {
      c[n][0] = 1;
      for (std::size_t k = 1; k <= n; ++k) c[n][k] = c[n - 1][k - 1] + c[n - 1][k];
    }
    return c;
  }();
  return table;
}

std::size_t colex_index(Mask m) {
  const auto& c = binomials();
  std::size_t idx = 0, k = 1;
  while (m) {
    const int b = std::countr_zero(m);
    idx += c[b][k++];
    m &= m - 1;
  }
  return idx;
}

std::vector<Mask> subsets(std::size_t n, std::size_t k) {
  std::vector<Mask> out;
  out.reserve(binomials()[n][k]);
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  const Mask end = Mask(1) << n;
  for (Mask m = (Mask(1) << k) - 1; m < end;) {
    out.push_back(m);
    // Gosper's hack: next integer with the same popcount, which is colex order.
    const Mask low = m & -m;
    const Mask ripple = m + low;
    m = ripple | (((m ^ ripple) >> 2) / low);
  }
  return out;
}

int below(Mask m, int bit) { return std::popcount(m & ((Mask(1) << bit) - 1)); }

std::vector<int> bits_of(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

template <class Fn>
auto parallel_map(std::size_t count, Fn fn) {
  using R = decltype(fn(std::size_t{0}));
  std::vector<R> out(count);
  if (std::thread::hardware_concurrency() > 1 && count > 1) {
    std::vector<std::future<R>> jobs;
    for (std::size_t i = 0; i < count; ++i) jobs.push_back(std::async(std::launch::async, fn, i));
    for (std::size_t i = 0; i < count; ++i) out[i] = jobs[i].get();
  } else {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
  }
  return out;
}

void require_ce(const CochainComplex& cx, const char* what) {
  if (!cx.algebra()) {
    throw Error(Errc::unsupported, std::string(what) + " needs a complex built from a Lie algebra");
  }
}

void require_rational(const CochainComplex& cx, const char* what) {
  require_ce(cx, what);
  // Positive characteristic is a missing feature, Z is a wrong input.
  if (cx.domain().kind() == Domain::Kind::prime_field) {
    throw Error(Errc::unsupported, std::string(what) + " is characteristic zero only, got " + cx.domain().label());
  }
  if (cx.domain().kind() != Domain::Kind::rational) {
    throw Error(Errc::domain, std::string(what) + " is computed over Q only, got " + cx.domain().label());
  }
}

// Triplets of x acting on the listed basis vectors of C^n; row indices refer
// to the full basis of C^n shifted by row_offset.
void action_triplets(const CochainComplex& cx, std::size_t x, std::size_t n,
                     const std::vector<std::size_t>& cols, std::size_t row_offset,
                     std::vector<Triplet>& out) {
  const ChevalleyAlgebra& alg = *cx.algebra();
  const std::size_t dim = alg.dimension();
  // [x, x_m] = sum_j c^j x_j gives x . xi^j = -sum_m c^j xi^m.
  std::vector<std::vector<std::pair<int, long>>> preimages(dim);
  for (std::size_t m = 0; m < dim; ++m)
    for (const auto& t : alg.bracket(x, m)) preimages[t.index].emplace_back(static_cast<int>(m), t.coeff);
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Mask s = cx.monomial(n, cols[c]);
    const auto bits = bits_of(s);
    for (std::size_t p = 0; p < bits.size(); ++p) {
      const Mask rest = s & ~(Mask(1) << bits[p]);
      for (const auto& [m, coeff] : preimages[bits[p]]) {
        if (rest >> m & 1) continue;
        const int sign = ((p + below(rest, m)) % 2) ? -1 : 1;
        out.push_back({row_offset + cx.monomial_index(rest | (Mask(1) << m)), c,
                       Rational(-coeff * sign)});
      }
    }
  }
}

ExactMatrix element_matrix(const CochainComplex& cx, const std::vector<GradedElement>& elems,
                           std::size_t degree) {
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& [mask, v] : elems[i].terms) t.push_back({i, cx.monomial_index(mask), v});
  return ExactMatrix(Domain::rationals(), elems.size(), cx.dimension(degree), std::move(t));
}

// Scales to a primitive integer vector with positive leading coefficient.
void make_primitive(GradedElement& e) {
  if (e.terms.empty()) return;
  Integer l = 1, g = 0;
  for (const auto& [m, v] : e.terms) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  for (auto& [m, v] : e.terms) {
    v *= l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
  }
  if (sgn(e.terms.begin()->second) < 0) g = -g;
  for (auto& [m, v] : e.terms) v /= g;
}

GradedElement combine(const std::vector<GradedElement>& basis, const std::vector<Rational>& coeffs,
                      std::size_t degree) {
  GradedElement out;
  out.degree = degree;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (sgn(coeffs[i]) == 0) continue;
    for (const auto& [m, v] : basis[i].terms) out.terms[m] += coeffs[i] * v;
  }
  std::erase_if(out.terms, [](const auto& kv) { return sgn(kv.second) == 0; });
  make_primitive(out);
  return out;
}

}  // namespace

ComplexLimits ComplexLimits::from_environment(bool best_effort) {
  ComplexLimits out;
  out.best_effort = best_effort;
  if (const char* env = std::getenv("LIECOH_MAX_DIM"); env && *env) {
    std::string_view text(env);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
      throw Error(Errc::parse, "LIECOH_MAX_DIM must be a positive integer, got '" + std::string(text) + "'");
    }
    out.max_dimension = value;
  }
  return out;
}

void check_size(std::size_t dimension, const ComplexLimits& limits) {
  if (dimension > kMaxGenerators) {
    throw Error(Errc::too_large, "dim g = " + std::to_string(dimension) + " exceeds the hard limit " +
                                     std::to_string(kMaxGenerators));
  }
  if (dimension > limits.max_dimension && !limits.best_effort) {
    throw Error(Errc::too_large, "dim g = " + std::to_string(dimension) + " exceeds the supported size " +
                                     std::to_string(limits.max_dimension) +
                                     "; use --best-effort or raise LIECOH_MAX_DIM");
  }
}

GradedElement wedge(const GradedElement& a, const GradedElement& b) {
  GradedElement out;
  out.degree = a.degree + b.degree;
  for (const auto& [ma, va] : a.terms)
    for (const auto& [mb, vb] : b.terms) {
      if (ma & mb) continue;
      // sign of the shuffle: pairs (s in a, t in b) with s > t
      int inversions = 0;
      for (Mask m = mb; m; m &= m - 1) inversions += std::popcount(ma >> std::countr_zero(m));
      Rational v = va * vb;
      if (inversions % 2) v = -v;
      out.terms[ma | mb] += v;
    }
  std::erase_if(out.terms, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

CochainComplex CochainComplex::from_matrices(Domain domain, std::vector<std::size_t> dims,
                                             std::vector<ExactMatrix> differentials) {
  if (dims.empty()) throw Error(Errc::invalid_argument, "a complex needs at least one degree");
  const std::size_t top = dims.size() - 1;
  if (differentials.size() > dims.size()) {
    throw Error(Errc::invalid_argument, "more differentials than degrees");
  }
  CochainComplex cx;
  cx.domain_ = domain;
  cx.dims_ = dims;
  for (std::size_t n = 0; n <= top; ++n) {
    const std::size_t target = n < top ? dims[n + 1] : 0;
    if (n >= differentials.size()) {
      cx.differentials_.emplace_back(domain, target, dims[n]);
      continue;
    }
    ExactMatrix& d = differentials[n];
    if (d.rows() != target || d.cols() != dims[n]) {
      throw Error(Errc::invalid_argument, "d_" + std::to_string(n) + " has shape " +
                                              std::to_string(d.rows()) + "x" + std::to_string(d.cols()) +
                                              ", expected " + std::to_string(target) + "x" +
                                              std::to_string(dims[n]));
    }
    if (!(d.domain() == domain)) throw Error(Errc::domain, "differential domain differs from the complex");
    cx.differentials_.push_back(std::move(d));
  }
  for (std::size_t n = 0; n <= top; ++n) cx.block_ids_.emplace_back(dims[n], 0);
  cx.verify();
  return cx;
}

std::uint64_t CochainComplex::monomial(std::size_t n, std::size_t index) const {
  if (monomials_.empty()) throw Error(Errc::unsupported, "complex has no wedge-monomial basis");
  return monomials_.at(n).at(index);
}

std::size_t CochainComplex::monomial_index(std::uint64_t mask) const { return colex_index(mask); }

std::string CochainComplex::monomial_label(std::uint64_t mask) const {
  if (!algebra_) throw Error(Errc::unsupported, "complex has no wedge-monomial basis");
  if (mask == 0) return "1";
  std::string out;
  for (int b : bits_of(mask)) {
    if (!out.empty()) out += '^';
    out += algebra_->labels()[b] + "*";
  }
  return out;
}

std::vector<DifferentialBlock> CochainComplex::blocks(std::size_t n) const {
  std::vector<DifferentialBlock> out;
  std::map<std::uint32_t, std::size_t> slot;
  auto get = [&](std::uint32_t id) -> DifferentialBlock& {
    auto [it, fresh] = slot.emplace(id, out.size());
    if (fresh) out.emplace_back();
    return out[it->second];
  };
  for (std::size_t c = 0; c < dims_.at(n); ++c) get(block_ids_[n][c]).cols.push_back(c);
  if (n + 1 < dims_.size())
    for (std::size_t r = 0; r < dims_[n + 1]; ++r) get(block_ids_[n + 1][r]).rows.push_back(r);
  return out;
}

std::vector<std::size_t> CochainComplex::weight_zero(std::size_t n) const {
  require_ce(*this, "weight_zero");
  std::vector<std::size_t> out;
  if (!zero_block_) return out;
  for (std::size_t i = 0; i < dims_.at(n); ++i)
    if (block_ids_[n][i] == *zero_block_) out.push_back(i);
  return out;
}

CochainComplex CochainComplex::converted(Domain target) const {
  CochainComplex out = *this;
  out.domain_ = target;
  for (auto& d : out.differentials_) d = d.converted(target);
  out.verify();
  return out;
}

CochainComplex CochainComplex::truncated(std::size_t top) const {
  if (top > top_degree()) throw Error(Errc::invalid_argument, "truncation above the top degree");
  CochainComplex out = *this;
  out.dims_.resize(top + 1);
  out.differentials_.resize(top + 1);
  out.differentials_[top] = ExactMatrix(domain_, 0, dims_[top]);
  out.block_ids_.resize(top + 1);
  if (!out.monomials_.empty()) out.monomials_.resize(top + 1);
  return out;
}

void CochainComplex::verify() const {
  for (std::size_t n = 0; n + 1 < differentials_.size(); ++n) {
    if (!(differentials_[n + 1] * differentials_[n]).is_zero()) {
      throw Error(Errc::inconsistent, "d_" + std::to_string(n + 1) + " d_" + std::to_string(n) + " != 0");
    }
  }
}

CochainComplex build_ce_complex(const ChevalleyAlgebra& alg, Domain domain, const ComplexLimits& limits) {
  const std::size_t dim = alg.dimension();
  check_size(dim, limits);
  if (alg.modulus() != 0 &&
      !(domain.kind() == Domain::Kind::prime_field && domain.modulus() == alg.modulus())) {
    throw Error(Errc::domain, "algebra reduced mod " + std::to_string(alg.modulus()) +
                                  " needs coefficients Fp:" + std::to_string(alg.modulus()));
  }
  CochainComplex cx;
  cx.domain_ = domain;
  cx.generators_ = dim;
  cx.algebra_ = alg;

  std::map<RootVector, std::uint32_t> block_of_weight;
  const std::size_t r = alg.weights().empty() ? 0 : alg.weights()[0].size();
  for (std::size_t n = 0; n <= dim; ++n) {
    cx.monomials_.push_back(subsets(dim, n));
    cx.dims_.push_back(cx.monomials_.back().size());
    std::vector<std::uint32_t> ids;
    ids.reserve(cx.dims_.back());
    for (Mask m : cx.monomials_.back()) {
      RootVector w(r, 0);
      for (Mask b = m; b; b &= b - 1) {
        const auto& wb = alg.weights()[std::countr_zero(b)];
        for (std::size_t k = 0; k < r; ++k) w[k] += wb[k];
      }
      auto [it, fresh] = block_of_weight.emplace(std::move(w), block_of_weight.size());
      ids.push_back(it->second);
    }
    cx.block_ids_.push_back(std::move(ids));
  }
  if (auto it = block_of_weight.find(RootVector(r, 0)); it != block_of_weight.end()) cx.zero_block_ = it->second;

  cx.differentials_ = parallel_map(dim + 1, [&](std::size_t n) {
    if (n == dim) return ExactMatrix(domain, 0, cx.dims_[n]);
    std::vector<Triplet> t;
    const auto& targets = cx.monomials_[n + 1];
    for (std::size_t row = 0; row < targets.size(); ++row) {
      const Mask tm = targets[row];
      const auto bits = bits_of(tm);
      for (std::size_t i = 0; i < bits.size(); ++i)
        for (std::size_t j = i + 1; j < bits.size(); ++j) {
          const Mask rest = tm & ~(Mask(1) << bits[i]) & ~(Mask(1) << bits[j]);
          for (const auto& term : alg.bracket(bits[i], bits[j])) {
            const int k = static_cast<int>(term.index);
            if (rest >> k & 1) continue;
            const Mask source = rest | (Mask(1) << k);
            const bool negative = (i + j + below(rest, k)) % 2;
            const std::size_t col = colex_index(source);
            if (cx.block_ids_[n][col] != cx.block_ids_[n + 1][row]) {
              throw Error(Errc::internal, "differential does not preserve weights");
            }
            t.push_back({row, col, Rational(negative ? -term.coeff : term.coeff)});
          }
        }
    }
    return ExactMatrix(domain, cx.dims_[n + 1], cx.dims_[n], std::move(t));
  });
  cx.verify();
  return cx;
}

std::vector<std::size_t> differential_ranks(const CochainComplex& cx) {
  if (!cx.domain().is_field()) {
    throw Error(Errc::domain, "ranks need field coefficients; use integral_cohomology over Z");
  }
  return parallel_map(cx.top_degree() + 1, [&](std::size_t n) {
    std::size_t total = 0;
    const ExactMatrix& d = cx.differential(n);
    if (d.is_zero()) return total;
    for (const auto& b : cx.blocks(n)) {
      if (b.rows.empty() || b.cols.empty()) continue;
      total += rank(d.submatrix(b.rows, b.cols));
    }
    return total;
  });
}

std::vector<std::size_t> betti_numbers(const CochainComplex& cx) {
  const auto ranks = differential_ranks(cx);
  std::vector<std::size_t> betti(cx.top_degree() + 1);
  for (std::size_t n = 0; n < betti.size(); ++n)
    betti[n] = cx.dimension(n) - ranks[n] - (n ? ranks[n - 1] : 0);
  return betti;
}

IntegralCohomology integral_cohomology(const CochainComplex& cx) {
  if (cx.domain().kind() != Domain::Kind::integer) {
    throw Error(Errc::domain, "integral cohomology needs Z coefficients, got " + cx.domain().label());
  }
  IntegralCohomology out;
  out.smith = parallel_map(cx.top_degree() + 1, [&](std::size_t n) {
    const ExactMatrix& d = cx.differential(n);
    std::vector<Integer> diagonal;
    if (!d.is_zero())
      for (const auto& b : cx.blocks(n)) {
        if (b.rows.empty() || b.cols.empty()) continue;
        auto f = smith_normal_form(d.submatrix(b.rows, b.cols)).invariant_factors;
        diagonal.insert(diagonal.end(), f.begin(), f.end());
      }
    SmithForm s;
    s.rows = d.rows();
    s.cols = d.cols();
    s.invariant_factors = normalize_invariant_factors(std::move(diagonal));
    return s;
  });
  const std::size_t top = cx.top_degree();
  for (std::size_t n = 0; n <= top; ++n) {
    const std::size_t prev = n ? out.smith[n - 1].rank() : 0;
    out.free_rank.push_back(cx.dimension(n) - out.smith[n].rank() - prev);
    out.torsion.push_back(n ? out.smith[n - 1].torsion() : std::vector<Integer>{});
  }
  return out;
}

ExactMatrix coadjoint_action(const CochainComplex& cx, std::size_t x, std::size_t n) {
  require_ce(cx, "coadjoint_action");
  if (x >= cx.generator_count()) throw Error(Errc::invalid_argument, "basis index out of range");
  std::vector<std::size_t> cols(cx.dimension(n));
  for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
  std::vector<Triplet> t;
  action_triplets(cx, x, n, cols, 0, t);
  return ExactMatrix(cx.domain(), cx.dimension(n), cx.dimension(n), std::move(t));
}

std::vector<std::vector<GradedElement>> invariant_subalgebra(const CochainComplex& cx) {
  require_rational(cx, "invariant_subalgebra");
  const ChevalleyAlgebra& alg = *cx.algebra();
  const RootSystem* rs = alg.root_system();
  if (!rs) throw Error(Errc::unsupported, "invariants need an algebra built from a root system");
  std::vector<std::size_t> actors;
  for (int i = 0; i < rs->rank(); ++i) {
    RootVector a(rs->rank(), 0);
    a[i] = 1;
    actors.push_back(alg.root_vector_index(a));
    a[i] = -1;
    actors.push_back(alg.root_vector_index(a));
  }
  return parallel_map(cx.top_degree() + 1, [&](std::size_t n) {
    const auto cols = cx.weight_zero(n);
    std::vector<Triplet> t;
    for (std::size_t k = 0; k < actors.size(); ++k) action_triplets(cx, actors[k], n, cols, k * cx.dimension(n), t);
    ExactMatrix stacked(Domain::rationals(), actors.size() * cx.dimension(n), cols.size(), std::move(t));
    std::vector<GradedElement> out;
    for (const auto& v : kernel_basis(stacked)) {
      GradedElement e;
      e.degree = n;
      for (std::size_t c = 0; c < cols.size(); ++c)
        if (sgn(v[c]) != 0) e.terms.emplace(cx.monomial(n, cols[c]), v[c]);
      make_primitive(e);
      out.push_back(std::move(e));
    }
    return out;
  });
}

std::vector<std::vector<GradedElement>> primitives(
    const CochainComplex& cx, const std::vector<std::vector<GradedElement>>& invariants) {
  require_rational(cx, "primitives");
  const ChevalleyAlgebra& alg = *cx.algebra();
  const std::size_t dim = alg.dimension();
  const std::size_t top = cx.top_degree();
  if (invariants.size() != top + 1) throw Error(Errc::invalid_argument, "invariants must cover every degree");

  // Form on the dual space: inverse of the Killing form.
  const auto killing = alg.killing_form();
  std::vector<std::vector<long>> kl(killing.begin(), killing.end());
  const ExactMatrix k = ExactMatrix::from_dense(Domain::rationals(), kl);
  std::vector<GradedElement> dual_image(dim);
  for (std::size_t t = 0; t < dim; ++t) {
    std::vector<Rational> unit(dim, Rational(0));
    unit[t] = 1;
    auto col = solve(k, unit);
    if (!col) throw Error(Errc::inconsistent, "Killing form is degenerate");
    dual_image[t].degree = 1;
    for (std::size_t s = 0; s < dim; ++s)
      if (sgn((*col)[s]) != 0) dual_image[t].terms.emplace(Mask(1) << s, (*col)[s]);
  }
  auto transported = [&](const GradedElement& v) {
    GradedElement out;
    out.degree = v.degree;
    for (const auto& [mask, coeff] : v.terms) {
      GradedElement acc;
      acc.terms.emplace(0, coeff);
      for (int b : bits_of(mask)) acc = wedge(acc, dual_image[b]);
      for (auto& [m, c] : acc.terms) out.terms[m] += c;
    }
    return out;
  };

  std::vector<std::vector<GradedElement>> out(top + 1);
  for (std::size_t n = 1; n <= top; ++n) {
    const auto& basis = invariants[n];
    if (basis.empty()) continue;
    std::vector<GradedElement> decomposables;
    for (std::size_t a = 1; 2 * a <= n; ++a)
      for (const auto& x : invariants[a])
        for (const auto& y : invariants[n - a]) {
          auto p = wedge(x, y);
          if (!p.is_zero()) decomposables.push_back(std::move(p));
        }
    if (decomposables.empty()) {
      out[n] = basis;
      continue;
    }
    std::vector<Triplet> t;
    for (std::size_t i = 0; i < decomposables.size(); ++i) {
      const auto image = transported(decomposables[i]);
      for (std::size_t j = 0; j < basis.size(); ++j) {
        Rational s = 0;
        for (const auto& [m, c] : basis[j].terms)
          if (auto it = image.terms.find(m); it != image.terms.end()) s += c * it->second;
        if (sgn(s) != 0) t.push_back({i, j, s});
      }
    }
    ExactMatrix pairing(Domain::rationals(), decomposables.size(), basis.size(), std::move(t));
    for (const auto& v : kernel_basis(pairing)) out[n].push_back(combine(basis, v, n));
  }
  return out;
}

ExteriorCertificate verify_exterior_structure(
    const CochainComplex& cx, const std::vector<std::vector<GradedElement>>& invariants,
    const std::vector<std::vector<GradedElement>>& primitive_basis) {
  require_rational(cx, "verify_exterior_structure");
  ExteriorCertificate cert;
  std::vector<const GradedElement*> gens;
  std::vector<std::string> names;
  for (std::size_t n = 0; n < primitive_basis.size(); ++n) {
    const auto& level = primitive_basis[n];
    for (std::size_t i = 0; i < level.size(); ++i) {
      gens.push_back(&level[i]);
      cert.primitive_degrees.push_back(static_cast<int>(n));
      names.push_back("z" + std::to_string(n) + (level.size() > 1 ? "_" + std::to_string(i + 1) : ""));
    }
  }
  const std::size_t g = gens.size();
  if (g > 20) {
    cert.reason = "too many primitive generators to enumerate products";
    return cert;
  }
  for (int d : cert.primitive_degrees)
    if (d % 2 == 0) {
      cert.reason = "primitive generator in even degree " + std::to_string(d);
      return cert;
    }

  struct Product {
    std::size_t subset;
    std::size_t degree;
    GradedElement value;
  };
  std::vector<Product> products;
  products.push_back({0, 0, GradedElement{0, {{0, Rational(1)}}}});
  for (std::size_t s = 1; s < (std::size_t(1) << g); ++s) {
    const int last = 63 - std::countl_zero(static_cast<std::uint64_t>(s));
    const std::size_t rest = s & ~(std::size_t(1) << last);
    const Product& base = products[rest];
    products.push_back({s, base.degree + gens[last]->degree, wedge(base.value, *gens[last])});
  }
  std::vector<std::size_t> order(products.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return products[a].degree < products[b].degree; });
  for (std::size_t i : order) {
    std::string label;
    for (std::size_t k = 0; k < g; ++k)
      if (products[i].subset >> k & 1) label += (label.empty() ? "" : "^") + names[k];
    cert.witness.push_back(label.empty() ? "1" : label);
    cert.witness_degrees.push_back(static_cast<int>(products[i].degree));
  }

  for (std::size_t n = 0; n <= cx.top_degree(); ++n) {
    std::vector<GradedElement> level;
    for (const auto& p : products)
      if (p.degree == n) level.push_back(p.value);
    const std::size_t expected = n < invariants.size() ? invariants[n].size() : 0;
    if (level.size() != expected) {
      cert.reason = "degree " + std::to_string(n) + ": " + std::to_string(level.size()) +
                    " square-free products but " + std::to_string(expected) + " invariants";
      return cert;
    }
    if (!level.empty() && rank(element_matrix(cx, level, n)) != level.size()) {
      cert.reason = "degree " + std::to_string(n) + ": products are linearly dependent";
      return cert;
    }
  }
  for (const auto& p : products)
    if (p.degree > cx.top_degree()) {
      cert.reason = "product of primitives beyond the top degree";
      return cert;
    }
  cert.verdict = true;
  return cert;
}

std::vector<std::size_t> exterior_expansion(const std::vector<int>& degrees, std::size_t length) {
  auto series = exterior_poincare_series(degrees);
  series.resize(std::max(length, series.size()), 0);
  return series;
}

CohomologyReport cohomology_report(LieType type, Domain domain, const ComplexLimits& limits, bool certify) {
  validate(type);
  const RootSystem rs(type);
  check_size(rs.dimension(), limits);
  ChevalleyAlgebra alg = build_chevalley(rs);
  if (domain.kind() == Domain::Kind::prime_field) alg = reduce_mod(alg, domain.modulus());
  const CochainComplex cx = build_ce_complex(alg, domain, limits);

  CohomologyReport rep;
  rep.type = type;
  rep.domain = domain;
  rep.table_degrees = generator_degrees(type);
  const std::size_t len = cx.top_degree() + 1;
  if (domain.kind() == Domain::Kind::integer) {
    auto ic = integral_cohomology(cx);
    rep.betti = ic.free_rank;
    rep.torsion = ic.torsion;
  } else {
    rep.betti = betti_numbers(cx);
  }
  if (domain.kind() == Domain::Kind::rational && certify) {
    const auto inv = invariant_subalgebra(cx);
    const auto prim = primitives(cx, inv);
    auto cert = verify_exterior_structure(cx, inv, prim);
    rep.primitive_degrees = cert.primitive_degrees;
    rep.primitive_source = "computed";
    rep.exterior_match = cert.verdict && rep.betti == exterior_expansion(rep.primitive_degrees, len);
    rep.certificate = std::move(cert);
  } else {
    rep.primitive_degrees = rep.table_degrees;
    rep.primitive_source = "table";
    rep.exterior_match = rep.betti == exterior_expansion(rep.table_degrees, len);
  }
  return rep;
}

std::vector<CharpResult> charp_scan(LieType type, const std::vector<std::uint32_t>& primes,
                                    const ComplexLimits& limits) {
  validate(type);
  const RootSystem rs(type);
  check_size(rs.dimension(), limits);
  const ChevalleyAlgebra alg = build_chevalley(rs);
  const auto table = generator_degrees(type);
  const int h = rs.coxeter_number();
  std::vector<CharpResult> out;
  for (std::uint32_t p : primes) {
    const Domain field = Domain::prime_field(p);
    const CochainComplex cx = build_ce_complex(reduce_mod(alg, p), field, limits);
    CharpResult res;
    res.p = p;
    res.betti = betti_numbers(cx);
    res.exterior_match = res.betti == exterior_expansion(table, res.betti.size());
    res.above_coxeter = static_cast<int>(p) > h;
    res.above_threshold = static_cast<int>(p) > 3 * (h - 1);
    out.push_back(std::move(res));
  }
  return out;
}

std::size_t h3_dimension(LieType type, const ComplexLimits& limits) {
  validate(type);
  const RootSystem rs(type);
  check_size(rs.dimension(), limits);
  const CochainComplex cx = build_ce_complex(build_chevalley(rs), Domain::rationals(), limits);
  const auto betti = betti_numbers(cx);
  return betti.size() > 3 ? betti[3] : 0;
}

}  // namespace liecoh
