#include "liecoh/uct.hpp"

#include "liecoh/error.hpp"

namespace liecoh {

namespace {

std::size_t tensor_dim(const GroupEntry& e, const Domain& a) {
  if (a.kind() == Domain::Kind::rational) return e.free_rank;
  return e.free_rank + tor_b_torsion(e, Integer(a.modulus()));
}

std::size_t tor_dim(const IntegralComplexData& data, std::size_t n, const Domain& a) {
  if (a.kind() == Domain::Kind::rational || n >= data.degrees.size()) return 0;
  return tor_b_torsion(data.degrees[n], Integer(a.modulus()));
}

void require_field(const Domain& a) {
  if (!a.is_field()) throw Error(Errc::domain, "coefficients must be Q or Fp:<p>, got " + a.label());
}

}  // namespace

IntegralComplexData IntegralComplexData::from(const IntegralCohomology& h) {
  IntegralComplexData out;
  for (std::size_t n = 0; n < h.free_rank.size(); ++n) out.degrees.push_back({h.free_rank[n], h.torsion[n]});
  return out;
}

std::size_t tor_b_torsion(const GroupEntry& entry, const Integer& b) {
  if (sgn(b) == 0) throw Error(Errc::invalid_argument, "b must be nonzero");
  std::size_t count = 0;
  for (const auto& t : entry.torsion)
    if (mpz_divisible_p(t.get_mpz_t(), b.get_mpz_t())) ++count;
  return count;
}

bool freeness_criterion(const GroupEntry& entry, std::uint32_t p) {
  if (!is_prime(p)) throw Error(Errc::invalid_argument, std::to_string(p) + " is not prime");
  return tor_b_torsion(entry, Integer(p)) == 0;
}

std::vector<std::size_t> predicted_betti(const IntegralComplexData& data, Domain coefficients) {
  require_field(coefficients);
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n < data.degrees.size(); ++n)
    out.push_back(tensor_dim(data.degrees[n], coefficients) + tor_dim(data, n + 1, coefficients));
  return out;
}

UctVerdict verify_uct(const CochainComplex& integral, Domain coefficients) {
  return verify_uct(integral, IntegralComplexData::from(integral_cohomology(integral)), coefficients);
}

UctVerdict verify_uct(const CochainComplex& integral, const IntegralComplexData& data, Domain coefficients) {
  require_field(coefficients);
  if (integral.domain().kind() != Domain::Kind::integer) {
    throw Error(Errc::domain, "the universal coefficient check starts from a complex over Z");
  }
  if (data.degrees.size() != integral.top_degree() + 1) {
    throw Error(Errc::invalid_argument, "integral data does not match the complex");
  }
  const auto direct = betti_numbers(integral.converted(coefficients));
  UctVerdict v;
  v.coefficients = coefficients;
  v.pass = true;
  for (std::size_t n = 0; n < direct.size(); ++n) {
    UctRow row;
    row.degree = n;
    row.direct = direct[n];
    row.tensor = tensor_dim(data.degrees[n], coefficients);
    row.tor = tor_dim(data, n + 1, coefficients);
    row.pass = row.direct == row.tensor + row.tor;
    v.pass = v.pass && row.pass;
    v.rows.push_back(row);
  }
  return v;
}

}  // namespace liecoh
