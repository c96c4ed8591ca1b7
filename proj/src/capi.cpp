#include "liecoh/liecoh.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>

#include "liecoh/cecohomology.hpp"
#include "liecoh/chevalley.hpp"
#include "liecoh/error.hpp"
#include "liecoh/linalg.hpp"
#include "liecoh/qarith.hpp"
#include "liecoh/rootdata.hpp"
#include "report.hpp"

struct liecoh_root_system {
  liecoh::RootSystem rs;
};

struct liecoh_algebra {
  liecoh::ChevalleyAlgebra alg;
};

struct liecoh_complex {
  liecoh::CochainComplex cx;
};

struct liecoh_matrix {
  liecoh::ExactMatrix m;
};

namespace {

thread_local std::string last_error;

liecoh_status status_of(liecoh::Errc code) {
  switch (code) {
    case liecoh::Errc::parse: return LIECOH_ERR_PARSE;
    case liecoh::Errc::invalid_argument: return LIECOH_ERR_INVALID_ARGUMENT;
    case liecoh::Errc::domain: return LIECOH_ERR_DOMAIN;
    case liecoh::Errc::unsupported: return LIECOH_ERR_UNSUPPORTED;
    case liecoh::Errc::too_large: return LIECOH_ERR_TOO_LARGE;
    case liecoh::Errc::inconsistent: return LIECOH_ERR_INCONSISTENT;
    case liecoh::Errc::io: return LIECOH_ERR_IO;
    case liecoh::Errc::internal: return LIECOH_ERR_INTERNAL;
  }
  return LIECOH_ERR_INTERNAL;
}

liecoh_status fail(liecoh_status s, std::string msg) {
  last_error = std::move(msg);
  return s;
}

// Runs f, translating exceptions into status codes. No exception crosses the
// C boundary.
template <class F>
liecoh_status guarded(F&& f) {
  last_error.clear();
  try {
    f();
    return LIECOH_OK;
  } catch (const liecoh::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(LIECOH_ERR_TOO_LARGE, "out of memory");
  } catch (const std::exception& e) {
    return fail(LIECOH_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LIECOH_ERR_INTERNAL, "unknown exception");
  }
}

void require(const void* p, const char* what) {
  if (!p) throw liecoh::Error(liecoh::Errc::invalid_argument, std::string(what) + " must not be NULL");
}

liecoh::LieType type_arg(const char* text) {
  require(text, "type");
  const auto t = liecoh::LieType::parse(text);
  liecoh::validate(t);
  return t;
}

liecoh::ComplexLimits limits_arg(const liecoh_limits* limits) {
  if (!limits) return liecoh::ComplexLimits::from_environment();
  liecoh::ComplexLimits out;
  out.max_dimension = limits->max_dimension;
  out.best_effort = limits->best_effort != 0;
  return out;
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

liecoh::report::Format format_arg(liecoh_format fmt) {
  switch (fmt) {
    case LIECOH_FORMAT_TABLE: return liecoh::report::Format::table;
    case LIECOH_FORMAT_JSON: return liecoh::report::Format::json;
    case LIECOH_FORMAT_TSV: return liecoh::report::Format::tsv;
  }
  throw liecoh::Error(liecoh::Errc::invalid_argument, "unknown output format " + std::to_string(fmt));
}

std::vector<std::uint32_t> primes_arg(const uint32_t* primes, size_t count) {
  if (count) require(primes, "primes");
  std::vector<std::uint32_t> out(primes, primes + count);
  for (auto p : out)
    if (!liecoh::is_prime(p)) throw liecoh::Error(liecoh::Errc::invalid_argument, std::to_string(p) + " is not prime");
  return out;
}

template <class F>
liecoh_status emit(liecoh_format fmt, char** out, int* verdict, F&& make) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    const auto format = format_arg(fmt);
    const liecoh::report::Result r = make();
    *out = duplicate(r.render(format));
    if (verdict) *verdict = r.pass ? 1 : 0;
  });
}

template <class T>
liecoh_status copy_out(const std::vector<T>& src, T* buffer, size_t capacity, size_t* count) {
  if (!count) return fail(LIECOH_ERR_INVALID_ARGUMENT, "count must not be NULL");
  if (capacity && !buffer) return fail(LIECOH_ERR_INVALID_ARGUMENT, "buffer must not be NULL");
  *count = src.size();
  for (size_t i = 0; i < src.size() && i < capacity; ++i) buffer[i] = src[i];
  return LIECOH_OK;
}

}  // namespace

extern "C" {

const char* liecoh_version(void) { return "0.1.0"; }

const char* liecoh_last_error(void) { return last_error.c_str(); }

const char* liecoh_status_name(liecoh_status status) {
  switch (status) {
    case LIECOH_OK: return "ok";
    case LIECOH_ERR_PARSE: return "parse";
    case LIECOH_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case LIECOH_ERR_DOMAIN: return "domain";
    case LIECOH_ERR_UNSUPPORTED: return "unsupported";
    case LIECOH_ERR_TOO_LARGE: return "too_large";
    case LIECOH_ERR_INCONSISTENT: return "inconsistent";
    case LIECOH_ERR_IO: return "io";
    case LIECOH_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

void liecoh_free_string(char* s) { std::free(s); }

void liecoh_limits_default(liecoh_limits* out) {
  last_error.clear();
  if (!out) return;
  liecoh::ComplexLimits l;
  try {
    l = liecoh::ComplexLimits::from_environment();
  } catch (const liecoh::Error& e) {
    last_error = e.what();
  }
  out->max_dimension = l.max_dimension;
  out->best_effort = l.best_effort ? 1 : 0;
}

int liecoh_is_prime(uint64_t n) { return liecoh::is_prime(n) ? 1 : 0; }

liecoh_status liecoh_root_system_create(const char* type, liecoh_root_system** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    *out = new liecoh_root_system{liecoh::RootSystem(type_arg(type))};
  });
}

void liecoh_root_system_destroy(liecoh_root_system* rs) { delete rs; }

int liecoh_root_system_rank(const liecoh_root_system* rs) { return rs ? rs->rs.rank() : 0; }

size_t liecoh_root_system_dimension(const liecoh_root_system* rs) { return rs ? rs->rs.dimension() : 0; }

int liecoh_root_system_coxeter_number(const liecoh_root_system* rs) { return rs ? rs->rs.coxeter_number() : 0; }

size_t liecoh_root_system_positive_root_count(const liecoh_root_system* rs) {
  return rs ? rs->rs.positive_roots().size() : 0;
}

liecoh_status liecoh_root_system_cartan_entry(const liecoh_root_system* rs, int i, int j, int* out) {
  return guarded([&] {
    require(rs, "root system");
    require(out, "out");
    const int r = rs->rs.rank();
    if (i < 0 || j < 0 || i >= r || j >= r)
      throw liecoh::Error(liecoh::Errc::invalid_argument, "Cartan index out of range for rank " + std::to_string(r));
    *out = rs->rs.cartan()[i][j];
  });
}

liecoh_status liecoh_root_system_degrees(const liecoh_root_system* rs, int* buffer, size_t capacity, size_t* count) {
  if (!rs) return fail(LIECOH_ERR_INVALID_ARGUMENT, "root system must not be NULL");
  return copy_out(liecoh::generator_degrees(rs->rs.type()), buffer, capacity, count);
}

liecoh_status liecoh_algebra_create(const liecoh_root_system* rs, uint32_t modulus, liecoh_algebra** out) {
  return guarded([&] {
    require(rs, "root system");
    require(out, "out");
    *out = nullptr;
    auto alg = liecoh::build_chevalley(rs->rs);
    if (modulus != 0) alg = liecoh::reduce_mod(alg, modulus);
    *out = new liecoh_algebra{std::move(alg)};
  });
}

void liecoh_algebra_destroy(liecoh_algebra* alg) { delete alg; }

size_t liecoh_algebra_dimension(const liecoh_algebra* alg) { return alg ? alg->alg.dimension() : 0; }

const char* liecoh_algebra_label(const liecoh_algebra* alg, size_t index) {
  if (!alg || index >= alg->alg.dimension()) return nullptr;
  return alg->alg.labels()[index].c_str();
}

liecoh_status liecoh_algebra_bracket_tsv(const liecoh_algebra* alg, char** out) {
  return guarded([&] {
    require(alg, "algebra");
    require(out, "out");
    *out = duplicate(alg->alg.bracket_tsv());
  });
}

liecoh_status liecoh_complex_create(const liecoh_algebra* alg, const char* domain, const liecoh_limits* limits,
                                    liecoh_complex** out) {
  return guarded([&] {
    require(alg, "algebra");
    require(domain, "domain");
    require(out, "out");
    *out = nullptr;
    const auto d = liecoh::Domain::parse(domain);
    *out = new liecoh_complex{liecoh::build_ce_complex(alg->alg, d, limits_arg(limits))};
  });
}

void liecoh_complex_destroy(liecoh_complex* cx) { delete cx; }

size_t liecoh_complex_top_degree(const liecoh_complex* cx) { return cx ? cx->cx.top_degree() : 0; }

size_t liecoh_complex_dimension(const liecoh_complex* cx, size_t degree) {
  return cx ? cx->cx.dimension(degree) : 0;
}

liecoh_status liecoh_complex_betti(const liecoh_complex* cx, size_t* buffer, size_t capacity, size_t* count) {
  std::vector<std::size_t> betti;
  const auto s = guarded([&] {
    require(cx, "complex");
    betti = cx->cx.domain().is_field() ? liecoh::betti_numbers(cx->cx) : liecoh::integral_cohomology(cx->cx).free_rank;
  });
  if (s != LIECOH_OK) return s;
  return copy_out(betti, buffer, capacity, count);
}

liecoh_status liecoh_matrix_parse(const char* text, const char* domain, liecoh_matrix** out) {
  return guarded([&] {
    require(text, "text");
    require(domain, "domain");
    require(out, "out");
    *out = nullptr;
    *out = new liecoh_matrix{liecoh::parse_matrix(text, liecoh::Domain::parse(domain))};
  });
}

void liecoh_matrix_destroy(liecoh_matrix* m) { delete m; }

size_t liecoh_matrix_rows(const liecoh_matrix* m) { return m ? m->m.rows() : 0; }

size_t liecoh_matrix_cols(const liecoh_matrix* m) { return m ? m->m.cols() : 0; }

liecoh_status liecoh_matrix_rank(const liecoh_matrix* m, size_t* out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "out");
    *out = m->m.domain().is_field() ? liecoh::rank(m->m) : liecoh::smith_normal_form(m->m).rank();
  });
}

liecoh_status liecoh_matrix_invariant_factors(const liecoh_matrix* m, char** out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "out");
    std::string text;
    for (const auto& f : liecoh::smith_normal_form(m->m).invariant_factors)
      text += (text.empty() ? "" : " ") + f.get_str();
    *out = duplicate(text);
  });
}

liecoh_status liecoh_is_bad_root(const char* type, unsigned long order, int* out) {
  return guarded([&] {
    require(out, "out");
    *out = liecoh::is_bad_root(type_arg(type), order) ? 1 : 0;
  });
}

liecoh_status liecoh_report_degrees(const char* type, liecoh_format fmt, char** out, int* verdict) {
  return emit(fmt, out, verdict, [&] { return liecoh::report::degrees(type_arg(type)); });
}

liecoh_status liecoh_report_betti(const char* type, const char* domain, const liecoh_limits* limits, liecoh_format fmt,
                                  char** out, int* verdict) {
  return emit(fmt, out, verdict, [&] {
    require(domain, "domain");
    return liecoh::report::betti(type_arg(type), liecoh::Domain::parse(domain), limits_arg(limits));
  });
}

liecoh_status liecoh_report_ring(const char* type, const liecoh_limits* limits, liecoh_format fmt, char** out,
                                 int* verdict) {
  return emit(fmt, out, verdict, [&] { return liecoh::report::ring(type_arg(type), limits_arg(limits)); });
}

liecoh_status liecoh_report_restrict(const char* e, const char* f, int removed, liecoh_format fmt, char** out,
                                     int* verdict) {
  return emit(fmt, out, verdict, [&] { return liecoh::report::restrict(type_arg(e), type_arg(f), removed); });
}

liecoh_status liecoh_report_scan(const char* type, const uint32_t* primes, size_t count, const liecoh_limits* limits,
                                 liecoh_format fmt, char** out, int* verdict) {
  return emit(fmt, out, verdict, [&] {
    return liecoh::report::scan(type_arg(type), primes_arg(primes, count), limits_arg(limits));
  });
}

liecoh_status liecoh_report_badroots(const char* type, liecoh_format fmt, char** out, int* verdict) {
  return emit(fmt, out, verdict, [&] { return liecoh::report::badroots(type_arg(type)); });
}

liecoh_status liecoh_report_qint(long n, long d, int factor, liecoh_format fmt, char** out, int* verdict) {
  return emit(fmt, out, verdict, [&] { return liecoh::report::qint(n, d, factor != 0); });
}

liecoh_status liecoh_report_uct(const char* type, const uint32_t* primes, size_t count, const liecoh_limits* limits,
                                liecoh_format fmt, char** out, int* verdict) {
  return emit(fmt, out, verdict, [&] {
    return liecoh::report::uct(type_arg(type), primes_arg(primes, count), limits_arg(limits));
  });
}

liecoh_status liecoh_report_brackets(const char* type, liecoh_format fmt, char** out, int* verdict) {
  return emit(fmt, out, verdict, [&] { return liecoh::report::brackets(type_arg(type)); });
}

liecoh_status liecoh_report_snf(const char* matrix, liecoh_format fmt, char** out, int* verdict) {
  return emit(fmt, out, verdict, [&] {
    require(matrix, "matrix");
    return liecoh::report::snf(matrix);
  });
}

}  // extern "C"
