#include "liecoh/polynomial.hpp"

#include <numeric>

#include "liecoh/error.hpp"

namespace liecoh {

namespace {

void check_same(const Polynomial& a, const Polynomial& b) {
  if (a.variables() != b.variables()) {
    throw Error(Errc::invalid_argument, "polynomials live in different numbers of variables");
  }
}

void enumerate(std::size_t vars, int remaining, std::size_t pos, Exponents& cur, std::vector<Exponents>& out) {
  if (pos + 1 == vars) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (int k = remaining; k >= 0; --k) {
    cur[pos] = k;
    enumerate(vars, remaining - k, pos + 1, cur, out);
  }
}

}  // namespace

Polynomial Polynomial::constant(std::size_t variables, const Rational& c) {
  Polynomial p(variables);
  p.add_term(Exponents(variables, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t variables, std::size_t i) {
  if (i >= variables) throw Error(Errc::invalid_argument, "variable index out of range");
  Polynomial p(variables);
  Exponents e(variables, 0);
  e[i] = 1;
  p.add_term(e, 1);
  return p;
}

Polynomial Polynomial::linear(const std::vector<Rational>& coeffs) {
  Polynomial p(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Exponents e(coeffs.size(), 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

bool Polynomial::is_homogeneous() const {
  const int d = degree();
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) != d) return false;
  return true;
}

Rational Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
  if (e.size() != vars_) throw Error(Errc::invalid_argument, "exponent vector has the wrong length");
  if (sgn(c) == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  check_same(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  check_same(*this, o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same(a, b);
  Polynomial out(a.vars_);
  Exponents e(a.vars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(vars_, 1);
  Polynomial base = *this;
  while (k) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

Polynomial Polynomial::substitute_linear(const RationalMatrix& m) const {
  if (m.size() != vars_) throw Error(Errc::invalid_argument, "substitution needs one row per variable");
  const std::size_t target = vars_ ? m[0].size() : 0;
  std::vector<Polynomial> images;
  for (const auto& row : m) {
    if (row.size() != target) throw Error(Errc::invalid_argument, "ragged substitution matrix");
    images.push_back(linear(row));
  }
  // Powers of each image are reused across terms.
  std::vector<std::vector<Polynomial>> powers(vars_);
  Polynomial out(target);
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(target, c);
    for (std::size_t i = 0; i < vars_; ++i) {
      if (e[i] == 0) continue;
      auto& cache = powers[i];
      if (cache.empty()) cache.push_back(constant(target, 1));
      while (static_cast<int>(cache.size()) <= e[i]) cache.push_back(cache.back() * images[i]);
      term = term * cache[e[i]];
    }
    out += term;
  }
  return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != vars_) throw Error(Errc::invalid_argument, "point has the wrong dimension");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < vars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    sum += t;
  }
  return sum;
}

Polynomial Polynomial::partial(std::size_t i) const {
  if (i >= vars_) throw Error(Errc::invalid_argument, "variable index out of range");
  Polynomial out(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponents f = e;
    --f[i];
    out.add_term(f, c * e[i]);
  }
  return out;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    out += out.empty() ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + ");
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += var + std::to_string(i + 1);
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + '*';
      out += mono;
    }
  }
  return out;
}

std::vector<Exponents> monomials_of_degree(std::size_t variables, int degree) {
  std::vector<Exponents> out;
  if (variables == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponents cur(variables, 0);
  enumerate(variables, degree, 0, cur, out);
  return out;
}

}  // namespace liecoh
