#include "report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "liecoh/chevalley.hpp"
#include "liecoh/error.hpp"
#include "liecoh/qarith.hpp"
#include "liecoh/uct.hpp"
#include "liecoh/weylinv.hpp"

namespace liecoh::report {

namespace {

template <class T>
std::string join(const std::vector<T>& v, const char* sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? sep : "") << v[i];
  return out.str();
}

Json strings(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

Json finding(const std::string& check, const std::string& detail) {
  return Json{{"check", check}, {"detail", detail}};
}

const char* yes(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string Result::render(Format f) const {
  switch (f) {
    case Format::json: return json.dump() + "\n";
    case Format::tsv: return tsv;
    case Format::table: return table;
  }
  return table;
}

Result degrees(LieType type) {
  const auto d = generator_degrees(type);
  Result r;
  r.json = Json{{"type", type.name()}, {"degrees", d}};
  r.table = join(d, " ") + "\n";
  r.tsv = "type\tdegree\n";
  for (int x : d) r.tsv += type.name() + "\t" + std::to_string(x) + "\n";
  return r;
}

Result betti(LieType type, Domain field, const ComplexLimits& limits) {
  const auto rep = cohomology_report(type, field, limits);
  const RootSystem rs(type);
  const bool integral = field.kind() == Domain::Kind::integer;
  Result r;
  r.pass = rep.exterior_match;
  r.json = Json{{"type", type.name()}, {"field", field.label()}, {"dimension", rs.dimension()}, {"betti", rep.betti}};
  if (integral) {
    Json t = Json::array();
    for (const auto& level : rep.torsion) t.push_back(strings(level));
    r.json["torsion"] = t;
  }
  r.json["primitive_degrees"] = rep.primitive_degrees;
  r.json["primitive_source"] = rep.primitive_source;
  r.json["table_degrees"] = rep.table_degrees;
  r.json["exterior_match"] = rep.exterior_match;
  Json findings = Json::array();
  if (!rep.exterior_match) {
    findings.push_back(finding("exterior_match", std::string(integral ? "free ranks" : "Betti numbers") +
                                                     " differ from the exterior algebra on degrees " +
                                                     join(rep.table_degrees, ",")));
  }
  r.json["findings"] = findings;

  std::ostringstream tab, tsv;
  tab << type.name() << " over " << field.label() << ", dim g = " << rs.dimension() << "\n";
  tab << "degree\tdim C^n\t" << (integral ? "free rank\ttorsion" : "betti") << "\n";
  tsv << "degree\tcochains\t" << (integral ? "free_rank\ttorsion" : "betti") << "\n";
  for (std::size_t n = 0; n < rep.betti.size(); ++n) {
    Integer cochains;
    mpz_bin_uiui(cochains.get_mpz_t(), rs.dimension(), n);
    std::string tors = integral ? join(rep.torsion[n], ",") : "";
    tab << n << "\t" << cochains << "\t" << rep.betti[n] << (integral ? "\t" + tors : "") << "\n";
    tsv << n << "\t" << cochains << "\t" << rep.betti[n] << (integral ? "\t" + tors : "") << "\n";
  }
  tab << "exterior_match " << yes(rep.exterior_match) << " (degrees " << join(rep.primitive_degrees, " ") << ", "
      << rep.primitive_source << ")\n";
  r.table = tab.str();
  r.tsv = tsv.str();
  return r;
}

Result ring(LieType type, const ComplexLimits& limits) {
  validate(type);
  const RootSystem rs(type);
  check_size(rs.dimension(), limits);
  const CochainComplex cx = build_ce_complex(build_chevalley(rs), Domain::rationals(), limits);
  const auto betti = betti_numbers(cx);
  const auto inv = invariant_subalgebra(cx);
  const auto prim = primitives(cx, inv);
  const auto cert = verify_exterior_structure(cx, inv, prim);
  const auto table = generator_degrees(type);
  std::vector<std::size_t> inv_dims;
  for (const auto& level : inv) inv_dims.push_back(level.size());
  const bool degrees_ok = cert.primitive_degrees == table;
  const bool dims_ok = inv_dims == betti;

  Result r;
  r.pass = cert.verdict && degrees_ok && dims_ok;
  Json witness = Json::array();
  for (std::size_t i = 0; i < cert.witness.size(); ++i)
    witness.push_back(Json{{"element", cert.witness[i]}, {"degree", cert.witness_degrees[i]}});
  r.json = Json{{"type", type.name()},
                {"field", "Q"},
                {"betti", betti},
                {"invariant_dimensions", inv_dims},
                {"primitive_degrees", cert.primitive_degrees},
                {"table_degrees", table},
                {"degrees_match_table", degrees_ok},
                {"exterior_verdict", cert.verdict},
                {"witness", witness}};
  Json findings = Json::array();
  if (!cert.verdict) findings.push_back(finding("exterior_verdict", cert.reason));
  if (!degrees_ok) findings.push_back(finding("degrees_match_table", "primitive degrees differ from the table"));
  if (!dims_ok) findings.push_back(finding("invariant_dimensions", "invariant dimensions differ from Betti numbers"));
  r.json["findings"] = findings;

  std::ostringstream tab, tsv;
  tab << type.name() << " cohomology ring over Q\n";
  tab << "primitive degrees " << join(cert.primitive_degrees, " ") << " (table " << join(table, " ") << ")\n";
  tab << "exterior " << yes(cert.verdict) << (cert.reason.empty() ? "" : ": " + cert.reason) << "\n";
  tab << "witness";
  tsv << "element\tdegree\n";
  for (std::size_t i = 0; i < cert.witness.size(); ++i) {
    tab << " " << cert.witness[i];
    tsv << cert.witness[i] << "\t" << cert.witness_degrees[i] << "\n";
  }
  tab << "\n";
  r.table = tab.str();
  r.tsv = tsv.str();
  return r;
}

Result restrict(LieType e, LieType f, int removed) {
  const auto pat = restrict_invariants(e, f, removed);
  Result r;
  r.pass = pat.match;
  Json coeffs = Json::array();
  for (const auto& row : pat.coefficients) {
    Json jr = Json::array();
    for (const auto& c : row) jr.push_back(c.get_str());
    coeffs.push_back(jr);
  }
  Json ratios = Json::array();
  for (const auto& q : pat.ratios)
    ratios.push_back(Json{{"rows", {q.row_a, q.row_b}}, {"column", q.column}, {"value", q.value.get_str()}});
  r.json = Json{{"case", pat.case_number},
                {"E", e.name()},
                {"F", f.name()},
                {"removed_root", removed},
                {"embedding", pat.embedding},
                {"e_generators", pat.e_generators},
                {"f_generators", pat.f_generators},
                {"mask", pat.mask},
                {"canonical_coefficients", coeffs},
                {"expected_mask", pat.expected_mask},
                {"match", pat.match},
                {"computed", pat.computed}};
  if (!pat.computed) r.json["note"] = "not independently computed";
  r.json["ratios"] = ratios;
  Json findings = Json::array();
  if (!pat.match) findings.push_back(finding("mask", "restriction mask differs from the expected pattern"));
  r.json["findings"] = findings;

  std::ostringstream tab, tsv;
  tab << e.name() << " -> " << f.name() << " removing alpha_" << removed << " (case " << pat.case_number << ")"
      << (pat.computed ? "" : ", not independently computed") << "\n";
  tab << "generator";
  tsv << "generator";
  for (const auto& y : pat.f_generators) {
    tab << "\t" << y;
    tsv << "\t" << y;
  }
  tab << "\n";
  tsv << "\n";
  for (std::size_t i = 0; i < pat.e_generators.size(); ++i) {
    tab << pat.e_generators[i];
    tsv << pat.e_generators[i];
    for (const auto& c : pat.coefficients[i]) {
      tab << "\t" << c.get_str();
      tsv << "\t" << c.get_str();
    }
    tab << "\n";
    tsv << "\n";
  }
  for (const auto& q : pat.ratios)
    tab << "ratio " << q.row_a << "/" << q.row_b << " on " << q.column << " = " << q.value.get_str() << "\n";
  tab << "match " << yes(pat.match) << "\n";
  r.table = tab.str();
  r.tsv = tsv.str();
  return r;
}

Result scan(LieType type, const std::vector<std::uint32_t>& primes, const ComplexLimits& limits) {
  const auto results = charp_scan(type, primes, limits);
  const auto th = coxeter_threshold(type);
  const auto table = generator_degrees(type);
  const RootSystem rs(type);
  Result r;
  Json rows = Json::array(), findings = Json::array();
  std::ostringstream tab, tsv;
  tab << type.name() << " h = " << th.coxeter_number << ", 3(h-1) = " << th.prime_bound << ", degrees "
      << join(table, " ") << "\n";
  tab << "p\tp>h\tp>3(h-1)\tmatch\tbetti\n";
  tsv << "p\tabove_coxeter\tabove_threshold\texterior_match\tbetti\n";
  for (const auto& res : results) {
    rows.push_back(Json{{"p", res.p},
                        {"betti", res.betti},
                        {"exterior_match", res.exterior_match},
                        {"above_coxeter", res.above_coxeter},
                        {"above_threshold", res.above_threshold}});
    if (!res.exterior_match) {
      r.pass = false;
      findings.push_back(Json{{"check", "exterior_match"},
                              {"p", res.p},
                              {"detail", "Betti numbers over Fp:" + std::to_string(res.p) +
                                             " differ from the exterior algebra"}});
    }
    const std::string line = std::to_string(res.p) + "\t" + yes(res.above_coxeter) + "\t" +
                             yes(res.above_threshold) + "\t" + yes(res.exterior_match) + "\t" +
                             join(res.betti, ",") + "\n";
    tab << line;
    tsv << line;
  }
  r.json = Json{{"type", type.name()},
                {"coxeter_number", th.coxeter_number},
                {"threshold", th.prime_bound},
                {"table_degrees", table},
                {"expected_betti", exterior_expansion(table, rs.dimension() + 1)},
                {"results", rows},
                {"findings", findings}};
  r.table = tab.str();
  r.tsv = tsv.str();
  return r;
}

Result badroots(LieType type) {
  const auto set = denominator_set(type);
  const auto sc = verify_S_characterization(type);
  std::set<unsigned long> orders(set.always_bad.begin(), set.always_bad.end());
  orders.insert(set.indices.begin(), set.indices.end());
  const std::vector<unsigned long> bad(orders.begin(), orders.end());
  Result r;
  r.pass = sc.verdict;
  Json evidence = Json::array();
  for (const auto& ev : sc.evidence)
    evidence.push_back(Json{{"edge", {ev.i, ev.j}}, {"n", ev.n}, {"d", ev.d}, {"factorization", ev.factors.to_string()}});
  r.json = Json{{"type", type.name()},
                {"always_bad", set.always_bad},
                {"cyclotomic_indices", set.indices},
                {"bad_orders", bad},
                {"s_characterization",
                 Json{{"verdict", sc.verdict},
                      {"computed", sc.computed},
                      {"expected", sc.expected},
                      {"literal_reading", sc.literal},
                      {"evidence", evidence}}}};
  Json findings = Json::array();
  if (!sc.verdict) findings.push_back(finding("s_characterization", "quantum-integer factors differ from the stored set"));
  r.json["findings"] = findings;
  std::ostringstream tab, tsv;
  tab << "bad root orders for " << type.name() << ": " << join(bad, " ") << "\n";
  tab << "S generators:";
  for (auto ell : set.indices) tab << " Phi" << ell;
  if (set.indices.empty()) tab << " (none)";
  tab << "\ncharacterization " << yes(sc.verdict) << " (computed " << join(sc.computed, " ") << ")\n";
  tsv << "order\tsource\n";
  for (auto ell : bad)
    tsv << ell << "\t" << (ell <= 2 ? "unit" : "cyclotomic") << "\n";
  r.table = tab.str();
  r.tsv = tsv.str();
  return r;
}

Result qint(long n, long d, bool factor) {
  const auto p = quantum_integer(n, d);
  Result r;
  Json poly = Json::array();
  for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it)
    poly.push_back(Json::array({it->first, it->second.get_str()}));
  r.json = Json{{"n", n}, {"d", d}, {"polynomial", poly}, {"text", p.to_string()}};
  std::ostringstream tsv;
  tsv << "exponent\tcoefficient\n";
  for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it)
    tsv << it->first << "\t" << it->second.get_str() << "\n";
  r.table = p.to_string() + "\n";
  if (factor && !p.is_zero()) {
    const auto f = factor_into_cyclotomics(p);
    r.json["factorization"] =
        Json{{"unit_exponent", f.unit_exponent}, {"sign", f.sign}, {"indices", f.indices}, {"text", f.to_string()}};
    r.table = f.to_string() + "\n";
  }
  r.tsv = tsv.str();
  return r;
}

Result uct(LieType type, const std::vector<std::uint32_t>& primes, const ComplexLimits& limits) {
  validate(type);
  const RootSystem rs(type);
  check_size(rs.dimension(), limits);
  const CochainComplex cx = build_ce_complex(build_chevalley(rs), Domain::integers(), limits);
  const auto data = IntegralComplexData::from(integral_cohomology(cx));
  std::vector<Domain> fields{Domain::rationals()};
  for (auto p : primes) fields.push_back(Domain::prime_field(p));

  Result r;
  Json verdicts = Json::array(), findings = Json::array();
  std::ostringstream tab, tsv;
  std::vector<std::size_t> free;
  Json torsion = Json::array();
  for (const auto& e : data.degrees) {
    free.push_back(e.free_rank);
    torsion.push_back(strings(e.torsion));
  }
  tab << type.name() << " integral free ranks " << join(free, " ") << "\n";
  tab << "field\tpass\ttriples (direct, tensor, tor)\n";
  tsv << "field\tdegree\tdirect\ttensor\ttor\tpass\n";
  bool freeness_ok = true;
  for (const auto& field : fields) {
    const auto v = verify_uct(cx, data, field);
    Json triples = Json::array();
    tab << field.label() << "\t" << yes(v.pass) << "\t";
    for (const auto& row : v.rows) {
      triples.push_back(Json::array({row.direct, row.tensor, row.tor}));
      tab << "(" << row.direct << "," << row.tensor << "," << row.tor << ")" << (row.degree + 1 < v.rows.size() ? " " : "");
      tsv << field.label() << "\t" << row.degree << "\t" << row.direct << "\t" << row.tensor << "\t" << row.tor << "\t"
          << yes(row.pass) << "\n";
    }
    tab << "\n";
    if (field.kind() == Domain::Kind::prime_field)
      for (const auto& e : data.degrees)
        freeness_ok = freeness_ok && freeness_criterion(e, field.modulus()) == (tor_b_torsion(e, Integer(field.modulus())) == 0);
    verdicts.push_back(Json{{"field", field.label()}, {"triples", triples}, {"pass", v.pass}});
    if (!v.pass) {
      r.pass = false;
      findings.push_back(Json{{"check", "uct"}, {"field", field.label()}, {"detail", "dimension identity fails"}});
    }
  }
  if (!freeness_ok) {
    r.pass = false;
    findings.push_back(finding("freeness", "freeness criterion disagrees with the torsion count"));
  }
  r.json = Json{{"type", type.name()},
                {"integral", Json{{"free_rank", free}, {"torsion", torsion}}},
                {"uct", verdicts},
                {"freeness_consistent", freeness_ok},
                {"pass", r.pass},
                {"findings", findings}};
  r.table = tab.str();
  r.tsv = tsv.str();
  return r;
}

Result brackets(LieType type) {
  validate(type);
  const RootSystem rs(type);
  const ChevalleyAlgebra alg = build_chevalley(rs);
  Result r;
  Json list = Json::array();
  const std::size_t n = alg.dimension();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y) {
      auto terms = alg.bracket(x, y);
      if (terms.empty()) continue;
      std::vector<long> dense(n, 0);
      for (const auto& t : terms) dense[t.index] = t.coeff;
      list.push_back(Json{{"x", alg.labels()[x]}, {"y", alg.labels()[y]}, {"result", dense}});
    }
  r.json = Json{{"type", type.name()}, {"dimension", n}, {"basis", alg.labels()}, {"brackets", list}};
  r.tsv = alg.bracket_tsv();
  r.table = r.tsv;
  return r;
}

Result snf(std::string_view matrix_text) {
  const ExactMatrix m = parse_matrix(matrix_text, Domain::integers());
  const SmithForm s = smith_normal_form(m);
  Result r;
  r.json = Json{{"rows", s.rows}, {"cols", s.cols}, {"rank", s.rank()}, {"invariant_factors", strings(s.invariant_factors)}};
  r.table = "rank " + std::to_string(s.rank()) + "\ninvariant factors " + join(s.invariant_factors, " ") + "\n";
  r.tsv = "index\tfactor\n";
  for (std::size_t i = 0; i < s.invariant_factors.size(); ++i)
    r.tsv += std::to_string(i + 1) + "\t" + s.invariant_factors[i].get_str() + "\n";
  return r;
}

}  // namespace liecoh::report
