#include "liecoh/qarith.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <set>

#include "liecoh/error.hpp"

namespace liecoh {

LaurentPolynomial LaurentPolynomial::monomial(long k, const Integer& c) {
  LaurentPolynomial p;
  p.add(k, c);
  return p;
}

void LaurentPolynomial::add(long k, const Integer& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = coeffs_.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (sgn(it->second) == 0) coeffs_.erase(it);
  }
}

long LaurentPolynomial::min_exponent() const {
  if (coeffs_.empty()) throw Error(Errc::invalid_argument, "zero polynomial has no exponents");
  return coeffs_.begin()->first;
}

long LaurentPolynomial::max_exponent() const {
  if (coeffs_.empty()) throw Error(Errc::invalid_argument, "zero polynomial has no exponents");
  return coeffs_.rbegin()->first;
}

Integer LaurentPolynomial::coefficient(long k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? Integer(0) : it->second;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [k, c] : o.coeffs_) add(k, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (const auto& [k, c] : o.coeffs_) add(k, -c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [ka, ca] : a.coeffs_)
    for (const auto& [kb, cb] : b.coeffs_) out.add(ka + kb, ca * cb);
  return out;
}

LaurentPolynomial operator-(const LaurentPolynomial& a) {
  LaurentPolynomial out;
  for (const auto& [k, c] : a.coeffs_) out.coeffs_.emplace(k, -c);
  return out;
}

LaurentPolynomial LaurentPolynomial::shifted(long k) const {
  LaurentPolynomial out;
  for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e + k, c);
  return out;
}

std::optional<LaurentPolynomial> LaurentPolynomial::divide_exact(const LaurentPolynomial& divisor) const {
  if (divisor.is_zero()) throw Error(Errc::invalid_argument, "division by zero polynomial");
  const Integer lead = divisor.coeffs_.rbegin()->second;
  if (abs(lead) != 1) throw Error(Errc::invalid_argument, "divisor must have leading coefficient +-1");
  const long dtop = divisor.max_exponent(), dlow = divisor.min_exponent();
  LaurentPolynomial rem = *this, quotient;
  while (!rem.is_zero()) {
    const long top = rem.max_exponent();
    if (top - dtop < rem.min_exponent() - dlow) return std::nullopt;
    const Integer c = rem.coeffs_.rbegin()->second * lead;  // lead = +-1 is its own inverse
    const long shift = top - dtop;
    quotient.add(shift, c);
    for (const auto& [k, v] : divisor.coeffs_) rem.add(k + shift, -c * v);
  }
  return quotient;
}

std::string LaurentPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += it->second.get_str() + "*q^" + std::to_string(it->first);
  }
  return out;
}

LaurentPolynomial quantum_integer(long n, long d) {
  if (d < 1) throw Error(Errc::invalid_argument, "quantum integer needs d >= 1, got " + std::to_string(d));
  if (n < 0) return -quantum_integer(-n, d);
  LaurentPolynomial out;
  for (long k = 0; k < n; ++k) out += LaurentPolynomial::monomial(d * (n - 1 - 2 * k));
  return out;
}

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const LaurentPolynomial& cyclotomic(unsigned long ell) {
  if (ell == 0) throw Error(Errc::invalid_argument, "cyclotomic index must be positive");
  static std::mutex mutex;
  static std::map<unsigned long, std::unique_ptr<LaurentPolynomial>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(ell); it != cache.end()) return *it->second;
  }
  // (q^ell - 1) / prod_{d | ell, d < ell} Phi_d
  LaurentPolynomial value = LaurentPolynomial::monomial(static_cast<long>(ell)) - LaurentPolynomial::monomial(0);
  for (unsigned long d = 1; d < ell; ++d) {
    if (ell % d) continue;
    auto q = value.divide_exact(cyclotomic(d));
    if (!q) throw Error(Errc::internal, "cyclotomic recursion failed at " + std::to_string(ell));
    value = std::move(*q);
  }
  std::lock_guard lock(mutex);
  auto [it, fresh] = cache.emplace(ell, std::make_unique<LaurentPolynomial>(std::move(value)));
  return *it->second;
}

LaurentPolynomial CyclotomicFactorization::reassemble() const {
  LaurentPolynomial out = LaurentPolynomial::monomial(unit_exponent, sign);
  for (unsigned long ell : indices) out = out * cyclotomic(ell);
  return out;
}

std::string CyclotomicFactorization::to_string() const {
  std::vector<std::string> parts;
  if (unit_exponent != 0) parts.push_back("q^" + std::to_string(unit_exponent));
  for (unsigned long ell : indices) parts.push_back("Phi" + std::to_string(ell));
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " * ") + p;
  if (out.empty()) out = "1";
  return sign < 0 ? "-" + out : out;
}

CyclotomicFactorization factor_into_cyclotomics(const LaurentPolynomial& p) {
  if (p.is_zero()) throw Error(Errc::inconsistent, "zero is not a product of cyclotomic polynomials");
  CyclotomicFactorization f;
  f.unit_exponent = p.min_exponent();
  LaurentPolynomial rest = p.shifted(-f.unit_exponent);
  if (sgn(rest.coefficients().rbegin()->second) < 0) {
    f.sign = -1;
    rest = -rest;
  }
  const unsigned long span = static_cast<unsigned long>(rest.max_exponent());
  // phi(ell) >= sqrt(ell / 2), so larger indices cannot divide.
  const unsigned long bound = 2 * span * span + 2;
  for (unsigned long ell = 1; ell <= bound && rest.max_exponent() > 0; ++ell) {
    if (euler_phi(ell) > static_cast<unsigned long>(rest.max_exponent())) continue;
    while (rest.max_exponent() > 0) {
      auto q = rest.divide_exact(cyclotomic(ell));
      if (!q) break;
      rest = std::move(*q);
      f.indices.push_back(ell);
    }
  }
  if (!(rest == LaurentPolynomial::monomial(0))) {
    throw Error(Errc::inconsistent, "non-cyclotomic residual " + rest.to_string());
  }
  return f;
}

BadRootSet denominator_set(LieType type) {
  validate(type);
  BadRootSet s;
  s.type = type;
  switch (type.series) {
    case Series::B:
    case Series::C:
    case Series::F:
      s.indices = {4, 8};
      break;
    case Series::G:
      s.indices = {3, 4, 6, 9, 12, 18};
      break;
    default:
      break;
  }
  return s;
}

SCharacterization verify_S_characterization(LieType type) {
  validate(type);
  const RootSystem rs(type);
  const auto& a = rs.cartan();
  const auto& d = rs.symmetrizers();
  std::set<unsigned long> computed, literal;
  SCharacterization out;
  const int r = rs.rank();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (i == j || a[i][j] == 0) continue;
      for (long n = 2; n <= -a[i][j]; ++n) {
        const auto f = factor_into_cyclotomics(quantum_integer(n, d[i]));
        literal.insert(f.indices.begin(), f.indices.end());
      }
      if (j < i) continue;
      const long m = std::max(-a[i][j], -a[j][i]);
      for (int end : {i, j})
        for (long n = 2; n <= m; ++n) {
          QuantumFactorEvidence ev{i + 1, j + 1, n, d[end], factor_into_cyclotomics(quantum_integer(n, d[end]))};
          computed.insert(ev.factors.indices.begin(), ev.factors.indices.end());
          out.evidence.push_back(std::move(ev));
        }
    }
  out.computed.assign(computed.begin(), computed.end());
  out.literal.assign(literal.begin(), literal.end());
  out.expected = denominator_set(type).indices;
  out.verdict = out.computed == out.expected;
  return out;
}

bool is_bad_root(LieType type, unsigned long ell) {
  if (ell == 0) throw Error(Errc::invalid_argument, "root-of-unity order must be positive");
  if (ell <= 2) return true;
  const auto s = denominator_set(type);
  return std::find(s.indices.begin(), s.indices.end(), ell) != s.indices.end();
}

}  // namespace liecoh
