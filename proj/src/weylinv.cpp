#include "liecoh/weylinv.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "liecoh/error.hpp"

namespace liecoh {

namespace {

using Vec = std::vector<Rational>;

Vec unit(std::size_t m, std::size_t i, long scale = 1) {
  Vec v(m, Rational(0));
  v[i] = scale;
  return v;
}

Vec diff(std::size_t m, std::size_t i, std::size_t j) {
  Vec v(m, Rational(0));
  v[i] = 1;
  v[j] = -1;
  return v;
}

Rational dot(const Vec& a, const Vec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

struct Generator {
  int degree;  // cohomological primitive degree
  bool tilde;
};

bool before(const Generator& a, const Generator& b) {
  return a.degree != b.degree ? a.degree < b.degree : (!a.tilde && b.tilde);
}

std::string label(char prefix, const Generator& g) {
  return std::string(1, prefix) + (g.tilde ? "~" : "") + std::to_string(g.degree);
}

// Table generators of a type, with the type-D extra generator marked.
std::vector<Generator> table_generators(LieType t) {
  std::vector<Generator> out;
  for (int d : generator_degrees(t)) out.push_back({d, false});
  if (t.series == Series::D) {
    const int extra = 2 * t.rank - 1;
    for (auto it = out.rbegin(); it != out.rend(); ++it)
      if (it->degree == extra) {
        it->tilde = true;
        break;
      }
    std::sort(out.begin(), out.end(), before);
  }
  return out;
}

bool is(LieType t, Series s) { return t.series == s; }

// The images each case prescribes, as a predicate on (E generator, F generator).
std::function<bool(const Generator&, const Generator&)> case_rule(int c, LieType e) {
  const int r = e.rank;
  switch (c) {
    case 1:
      return [r](const Generator& x, const Generator& y) {
        return x.degree <= 2 * r - 1 && y.degree == x.degree;
      };
    case 2:
      return [r](const Generator& x, const Generator& y) {
        return x.degree <= 4 * r - 5 && y.degree == x.degree;
      };
    case 3:
      return [r](const Generator& x, const Generator& y) {
        return !x.tilde && !y.tilde && x.degree <= 4 * r - 9 && y.degree == x.degree;
      };
    case 4:
      return [r](const Generator& x, const Generator& y) {
        if (y.degree != x.degree) return false;
        if (x.tilde) return x.degree == 2 * r - 1;
        return (x.degree + 1) % 4 == 0 && (x.degree + 1) / 2 <= r;
      };
    case 5:
      return [](const Generator& x, const Generator& y) {
        if (x.degree == 9) return y.degree == 9 && y.tilde;
        return (x.degree == 3 || x.degree == 11 || x.degree == 15) && y.degree == x.degree && !y.tilde;
      };
    case 6:
      return [](const Generator& x, const Generator& y) {
        return (x.degree == 3 || x.degree == 11 || x.degree == 15 || x.degree == 23) && y.degree == x.degree;
      };
    default:
      throw Error(Errc::unsupported, "no restriction rule for this case");
  }
}

// Coefficients recorded for the exceptional cases, keyed by E degree.
std::vector<std::pair<int, const char*>> stored_coefficients(int c) {
  if (c == 5) return {{3, "1"}, {9, "1"}, {11, "1"}, {15, "1"}};
  return {{3, "2"}, {11, "2"}, {15, "2"}, {23, "2"}};
}

RationalMatrix identity(std::size_t n) {
  RationalMatrix m(n, Vec(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RationalMatrix compose(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.size(), Vec(b[0].size(), Rational(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      if (sgn(a[i][k]) != 0)
        for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

}  // namespace

CartanModel cartan_model(LieType type) {
  validate(type);
  const int r = type.rank;
  CartanModel m;
  m.type = type;
  switch (type.series) {
    case Series::A:
      m.ambient_dimension = r + 1;
      for (int i = 0; i < r; ++i) m.roots.push_back(diff(r + 1, i, i + 1));
      m.coroots = m.roots;
      break;
    case Series::B:
    case Series::C:
    case Series::D:
      m.ambient_dimension = r;
      for (int i = 0; i + 1 < r; ++i) m.roots.push_back(diff(r, i, i + 1));
      m.coroots = m.roots;
      if (type.series == Series::B) {
        m.roots.push_back(unit(r, r - 1));
        m.coroots.push_back(unit(r, r - 1, 2));
      } else if (type.series == Series::C) {
        m.roots.push_back(unit(r, r - 1, 2));
        m.coroots.push_back(unit(r, r - 1));
      } else {
        Vec last(r, Rational(0));
        last[r - 2] = 1;
        last[r - 1] = 1;
        m.roots.push_back(last);
        m.coroots.push_back(last);
      }
      break;
    case Series::G:
      m.ambient_dimension = 3;
      m.roots = {{1, -1, 0}, {-2, 1, 1}};
      m.coroots = {{1, -1, 0}, {Rational(-2, 3), Rational(1, 3), Rational(1, 3)}};
      break;
    default:
      throw Error(Errc::unsupported, "no invariant-theory model for " + type.name() +
                                         "; its restriction data is stored, not computed");
  }
  const IntMatrix a = cartan_matrix(type);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (dot(m.roots[i], m.coroots[j]) != a[i][j]) {
        throw Error(Errc::internal, "Cartan model of " + type.name() + " disagrees with the Cartan matrix at (" +
                                        std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
  const std::size_t n = m.ambient_dimension;
  for (int i = 0; i < r; ++i) {
    RationalMatrix s = identity(n);
    for (std::size_t row = 0; row < n; ++row)
      for (std::size_t col = 0; col < n; ++col) s[row][col] -= m.coroots[i][row] * m.roots[i][col];
    if (compose(s, s) != identity(n)) throw Error(Errc::internal, "simple reflection is not an involution");
    m.reflections.push_back(std::move(s));
    // s_i(alpha_k^v) = alpha_k^v - a_ik alpha_i^v
    RationalMatrix t = identity(r);
    for (int k = 0; k < r; ++k) t[i][k] -= a[i][k];
    m.coroot_reflections.push_back(std::move(t));
  }
  // The ambient reflections restrict to the coroot-coordinate ones.
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      Vec image(n, Rational(0));
      for (std::size_t row = 0; row < n; ++row)
        for (std::size_t col = 0; col < n; ++col) image[row] += m.reflections[i][row][col] * m.coroots[k][col];
      Vec expected(n, Rational(0));
      for (int l = 0; l < r; ++l)
        for (std::size_t row = 0; row < n; ++row) expected[row] += m.coroot_reflections[i][l][k] * m.coroots[l][row];
      if (image != expected) throw Error(Errc::internal, "ambient and coroot reflections disagree");
    }
  return m;
}

std::vector<RationalMatrix> weyl_group_generators(LieType type) { return cartan_model(type).reflections; }

bool is_weyl_invariant(const Polynomial& p, const CartanModel& model) {
  return std::all_of(model.coroot_reflections.begin(), model.coroot_reflections.end(),
                     [&](const RationalMatrix& s) { return p.substitute_linear(s) == p; });
}

bool algebraically_independent(const std::vector<InvariantPolynomial>& invariants, const CartanModel& model) {
  const std::size_t r = model.roots.size();
  // A point with <alpha_i, x> = 1 for every simple root lies in no reflecting hyperplane.
  std::vector<std::vector<long>> cartan;
  for (const auto& row : cartan_matrix(model.type)) cartan.emplace_back(row.begin(), row.end());
  const auto t = solve(ExactMatrix::from_dense(Domain::rationals(), cartan), Vec(r, Rational(1)));
  if (!t) throw Error(Errc::internal, "Cartan matrix is singular");
  std::vector<Triplet> jac;
  for (std::size_t i = 0; i < invariants.size(); ++i)
    for (std::size_t k = 0; k < r; ++k) jac.push_back({i, k, invariants[i].coroot.partial(k).evaluate(*t)});
  return rank(ExactMatrix(Domain::rationals(), invariants.size(), r, std::move(jac))) == invariants.size();
}

std::vector<InvariantPolynomial> basic_invariants(LieType type) {
  const CartanModel model = cartan_model(type);
  const int r = type.rank;
  const std::size_t m = model.ambient_dimension;
  std::vector<InvariantPolynomial> out;
  auto power_sum = [&](int k) {
    InvariantPolynomial inv;
    inv.name = "p" + std::to_string(k);
    inv.degree = k;
    inv.ambient = Polynomial(m);
    for (std::size_t a = 0; a < m; ++a) {
      Exponents e(m, 0);
      e[a] = k;
      inv.ambient.add_term(e, 1);
    }
    return inv;
  };
  switch (type.series) {
    case Series::A:
      for (int k = 2; k <= r + 1; ++k) out.push_back(power_sum(k));
      break;
    case Series::B:
    case Series::C:
      for (int k = 1; k <= r; ++k) out.push_back(power_sum(2 * k));
      break;
    case Series::D: {
      for (int k = 1; k <= r - 1; ++k) out.push_back(power_sum(2 * k));
      InvariantPolynomial e;
      e.name = "e" + std::to_string(r);
      e.degree = r;
      e.tilde = true;
      e.ambient = Polynomial(m);
      e.ambient.add_term(Exponents(m, 1), 1);
      out.push_back(std::move(e));
      break;
    }
    case Series::G:
      out.push_back(power_sum(2));
      out.push_back(power_sum(6));
      break;
    default:
      break;
  }
  // x_a = sum_k t_k (alpha_k^v)_a
  RationalMatrix pull(m, Vec(r, Rational(0)));
  for (std::size_t a = 0; a < m; ++a)
    for (int k = 0; k < r; ++k) pull[a][k] = model.coroots[k][a];
  for (auto& inv : out) {
    inv.coroot = inv.ambient.substitute_linear(pull);
    if (!inv.coroot.is_homogeneous() || inv.coroot.degree() != inv.degree) {
      throw Error(Errc::internal, inv.name + " is not homogeneous of degree " + std::to_string(inv.degree));
    }
    if (!is_weyl_invariant(inv.coroot, model)) {
      throw Error(Errc::internal, inv.name + " is not invariant under W(" + type.name() + ")");
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const InvariantPolynomial& a, const InvariantPolynomial& b) {
    return before({a.primitive_degree(), a.tilde}, {b.primitive_degree(), b.tilde});
  });
  if (!algebraically_independent(out, model)) {
    throw Error(Errc::internal, "basic invariants of " + type.name() + " are dependent");
  }
  return out;
}

std::vector<Rational> mod_decomposables(const Polynomial& p, const std::vector<Polynomial>& basis) {
  std::vector<Rational> coeffs(basis.size(), Rational(0));
  if (p.is_zero()) return coeffs;
  if (!p.is_homogeneous()) throw Error(Errc::invalid_argument, "mod_decomposables needs a homogeneous polynomial");
  const int deg = p.degree();
  const std::size_t vars = p.variables();
  std::vector<int> degs;
  for (const auto& b : basis) {
    if (b.variables() != vars || b.is_zero() || !b.is_homogeneous() || b.degree() <= 0) {
      throw Error(Errc::invalid_argument, "basis elements must be homogeneous of positive degree");
    }
    degs.push_back(b.degree());
  }
  std::vector<std::size_t> linear;
  for (std::size_t j = 0; j < basis.size(); ++j)
    if (degs[j] == deg) linear.push_back(j);
  // Products of at least two basis elements with total degree deg.
  std::vector<Polynomial> products;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, int, Polynomial)> extend = [&](std::size_t start, int remaining, Polynomial acc) {
    if (remaining == 0) {
      if (chosen.size() >= 2) products.push_back(acc);
      return;
    }
    for (std::size_t j = start; j < basis.size(); ++j) {
      if (degs[j] > remaining) continue;
      chosen.push_back(j);
      extend(j, remaining - degs[j], acc * basis[j]);
      chosen.pop_back();
    }
  };
  extend(0, deg, Polynomial::constant(vars, 1));

  const auto monomials = monomials_of_degree(vars, deg);
  std::map<Exponents, std::size_t> row_of;
  for (std::size_t i = 0; i < monomials.size(); ++i) row_of.emplace(monomials[i], i);
  std::vector<Triplet> t;
  auto add_column = [&](const Polynomial& q, std::size_t col) {
    for (const auto& [e, c] : q.terms()) t.push_back({row_of.at(e), col, c});
  };
  for (std::size_t k = 0; k < linear.size(); ++k) add_column(basis[linear[k]], k);
  for (std::size_t k = 0; k < products.size(); ++k) add_column(products[k], linear.size() + k);
  const std::size_t cols = linear.size() + products.size();
  ExactMatrix system(Domain::rationals(), monomials.size(), cols, t);
  Vec rhs(monomials.size(), Rational(0));
  for (const auto& [e, c] : p.terms()) rhs[row_of.at(e)] = c;
  const auto x = solve(system, rhs);
  if (!x) throw Error(Errc::inconsistent, "polynomial is not in the algebra generated by the basis");

  std::vector<Triplet> only_products;
  for (const auto& tr : t)
    if (tr.col >= linear.size()) only_products.push_back({tr.row, tr.col - linear.size(), tr.value});
  const std::size_t rank_products =
      rank(ExactMatrix(Domain::rationals(), monomials.size(), products.size(), std::move(only_products)));
  if (rank(system) != rank_products + linear.size()) {
    throw Error(Errc::inconsistent, "basis is not independent modulo decomposables in degree " + std::to_string(deg));
  }
  for (std::size_t k = 0; k < linear.size(); ++k) coeffs[linear[k]] = (*x)[k];
  return coeffs;
}

std::vector<int> match_subdiagram(LieType e, int removed, LieType f) {
  validate(e);
  validate(f);
  if (removed < 1 || removed > e.rank) {
    throw Error(Errc::invalid_argument, "removed root must be in 1.." + std::to_string(e.rank));
  }
  if (f.rank != e.rank - 1) throw Error(Errc::invalid_argument, f.name() + " does not have rank " + std::to_string(e.rank - 1));
  const IntMatrix ce = cartan_matrix(e), cf = cartan_matrix(f);
  std::vector<int> kept;
  for (int i = 1; i <= e.rank; ++i)
    if (i != removed) kept.push_back(i);
  std::vector<int> perm = kept;
  do {
    bool ok = true;
    for (int a = 0; ok && a < f.rank; ++a)
      for (int b = 0; ok && b < f.rank; ++b) ok = ce[perm[a] - 1][perm[b] - 1] == cf[a][b];
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  throw Error(Errc::inconsistent, "removing alpha_" + std::to_string(removed) + " from " + e.name() +
                                      " does not leave a diagram of type " + f.name());
}

int restriction_case(LieType e, LieType f, int removed) {
  const int r = e.rank;
  if (f.rank != r - 1) return 0;
  if (is(e, Series::A) && is(f, Series::A) && removed == 1) return 1;
  if (((is(e, Series::B) && is(f, Series::B)) || (is(e, Series::C) && is(f, Series::C))) && r >= 3 && removed == 1)
    return 2;
  if (is(e, Series::D) && is(f, Series::D) && r >= 5 && removed == 1) return 3;
  if (is(e, Series::D) && is(f, Series::A) && removed == r) return 4;
  if (is(e, Series::E) && r == 6 && is(f, Series::D) && removed == 6) return 5;
  if (is(e, Series::E) && r == 7 && is(f, Series::E) && removed == 7) return 6;
  return 0;
}

RestrictionPattern restrict_invariants(LieType e, LieType f, int removed) {
  validate(e);
  validate(f);
  RestrictionPattern pat;
  pat.e = e;
  pat.f = f;
  pat.removed_root = removed;
  pat.case_number = restriction_case(e, f, removed);
  if (pat.case_number == 0) {
    throw Error(Errc::unsupported, "(" + e.name() + ", " + f.name() + ", alpha_" + std::to_string(removed) +
                                       ") is not one of the tabulated restriction cases");
  }
  pat.embedding = match_subdiagram(e, removed, f);

  std::vector<Generator> xs, ys;
  if (pat.case_number <= 4) {
    const auto ei = basic_invariants(e);
    const auto fi = basic_invariants(f);
    for (const auto& inv : ei) xs.push_back({inv.primitive_degree(), inv.tilde});
    for (const auto& inv : fi) ys.push_back({inv.primitive_degree(), inv.tilde});
    if (xs.size() != table_generators(e).size() || ys.size() != table_generators(f).size()) {
      throw Error(Errc::internal, "invariant count disagrees with the degree table");
    }
    // t^E_{embedding[j]} = u_j, the removed coordinate is 0.
    RationalMatrix pull(e.rank, Vec(f.rank, Rational(0)));
    for (int j = 0; j < f.rank; ++j) pull[pat.embedding[j] - 1][j] = 1;
    std::vector<Polynomial> fbasis;
    for (const auto& inv : fi) fbasis.push_back(inv.coroot);
    const CartanModel fmodel = cartan_model(f);
    for (const auto& inv : ei) {
      const Polynomial restricted = inv.coroot.substitute_linear(pull);
      if (!is_weyl_invariant(restricted, fmodel)) {
        throw Error(Errc::internal, "restriction of " + inv.name + " is not W(" + f.name() + ")-invariant");
      }
      pat.coefficients.push_back(mod_decomposables(restricted, fbasis));
    }
  } else {
    pat.computed = false;
    xs = table_generators(e);
    ys = table_generators(f);
    const auto rule = case_rule(pat.case_number, e);
    const auto stored = stored_coefficients(pat.case_number);
    for (const auto& x : xs) {
      std::vector<Rational> row(ys.size(), Rational(0));
      for (const auto& [deg, value] : stored)
        if (deg == x.degree)
          for (std::size_t j = 0; j < ys.size(); ++j)
            if (rule(x, ys[j])) row[j] = Rational(value);
      pat.coefficients.push_back(std::move(row));
    }
  }
  for (const auto& x : xs) pat.e_generators.push_back(label('x', x));
  for (const auto& y : ys) pat.f_generators.push_back(label('y', y));

  const auto rule = case_rule(pat.case_number, e);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    std::vector<int> row, expected;
    for (std::size_t j = 0; j < ys.size(); ++j) {
      if (sgn(pat.coefficients[i][j]) != 0 && xs[i].degree != ys[j].degree) {
        throw Error(Errc::internal, "restriction mixes degrees " + std::to_string(xs[i].degree) + " and " +
                                        std::to_string(ys[j].degree));
      }
      row.push_back(sgn(pat.coefficients[i][j]) != 0);
      expected.push_back(rule(xs[i], ys[j]));
    }
    pat.mask.push_back(std::move(row));
    pat.expected_mask.push_back(std::move(expected));
  }
  pat.match = pat.mask == pat.expected_mask;

  for (std::size_t j = 0; j < ys.size(); ++j) {
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (pat.mask[i][j]) hits.push_back(i);
    for (std::size_t k = 1; k < hits.size(); ++k) {
      pat.ratios.push_back({pat.e_generators[hits[0]], pat.e_generators[hits[k]], pat.f_generators[j],
                            pat.coefficients[hits[0]][j] / pat.coefficients[hits[k]][j]});
    }
  }
  return pat;
}

}  // namespace liecoh
