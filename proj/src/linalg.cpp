#include "liecoh/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

#include "liecoh/error.hpp"
#include "linalg_detail.hpp"

namespace liecoh {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Domain Domain::prime_field(std::uint64_t p) {
  if (p >= (1ULL << 31) || !is_prime(p)) {
    throw Error(Errc::invalid_argument, "field modulus " + std::to_string(p) +
                                            " is not a prime below 2^31");
  }
  return Domain(Kind::prime_field, static_cast<std::uint32_t>(p));
}

Domain Domain::parse(std::string_view text) {
  if (text == "Q" || text == "q") return rationals();
  if (text == "Z" || text == "z") return integers();
  if (text.size() > 3 && (text[0] == 'F' || text[0] == 'f') && (text[1] == 'p' || text[1] == 'P') &&
      text[2] == ':') {
    std::uint64_t p = 0;
    const auto digits = text.substr(3);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc{} && ptr == digits.data() + digits.size()) return prime_field(p);
  }
  throw Error(Errc::parse, "field selector must be Q, Z or Fp:<p>, got '" + std::string(text) + "'");
}

std::string Domain::label() const {
  switch (kind_) {
    case Kind::integer: return "Z";
    case Kind::rational: return "Q";
    case Kind::prime_field: return "Fp:" + std::to_string(modulus_);
  }
  return "?";
}

Rational Domain::normalize(const Rational& value) const {
  switch (kind_) {
    case Kind::rational: return value;
    case Kind::integer:
      if (value.get_den() != 1) {
        throw Error(Errc::domain, "non-integral value " + value.get_str() + " in integer domain");
      }
      return value;
    case Kind::prime_field: {
      if (mpz_divisible_ui_p(value.get_den_mpz_t(), modulus_)) {
        throw Error(Errc::domain, "denominator of " + value.get_str() + " vanishes mod " +
                                      std::to_string(modulus_));
      }
      detail::ModPField f{modulus_};
      return Rational(static_cast<unsigned long>(f.from(value)));
    }
  }
  return value;
}

ExactMatrix::ExactMatrix(Domain domain, std::size_t rows, std::size_t cols)
    : domain_(domain), rows_(rows), cols_(cols), data_(rows) {}

ExactMatrix::ExactMatrix(Domain domain, std::size_t rows, std::size_t cols,
                         std::vector<Triplet> entries)
    : ExactMatrix(domain, rows, cols) {
  std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  for (std::size_t i = 0; i < entries.size();) {
    const std::size_t r = entries[i].row, c = entries[i].col;
    if (r >= rows || c >= cols) {
      throw Error(Errc::invalid_argument, "matrix entry (" + std::to_string(r) + "," +
                                              std::to_string(c) + ") out of bounds");
    }
    Rational sum = entries[i].value;
    std::size_t j = i + 1;
    for (; j < entries.size() && entries[j].row == r && entries[j].col == c; ++j) sum += entries[j].value;
    sum = domain_.normalize(sum);
    if (sgn(sum) != 0) data_[r].push_back({c, std::move(sum)});
    i = j;
  }
}

ExactMatrix ExactMatrix::identity(Domain domain, std::size_t n) {
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < n; ++i) t.push_back({i, i, Rational(1)});
  return ExactMatrix(domain, n, n, std::move(t));
}

ExactMatrix ExactMatrix::from_dense(Domain domain, const std::vector<std::vector<long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error(Errc::invalid_argument, "ragged dense matrix");
    for (std::size_t j = 0; j < c; ++j)
      if (rows[i][j] != 0) t.push_back({i, j, Rational(rows[i][j])});
  }
  return ExactMatrix(domain, r, c, std::move(t));
}

std::size_t ExactMatrix::nnz() const noexcept {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

Rational ExactMatrix::at(std::size_t r, std::size_t c) const {
  const auto& row = data_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const MatrixEntry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) return it->value;
  return Rational(0);
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(domain_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& e : data_[r]) t.data_[e.col].push_back({r, e.value});
  return t;
}

ExactMatrix ExactMatrix::converted(Domain target) const {
  ExactMatrix out(target, rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& e : data_[r]) {
      Rational v = target.normalize(e.value);
      if (sgn(v) != 0) out.data_[r].push_back({e.col, std::move(v)});
    }
  return out;
}

ExactMatrix ExactMatrix::submatrix(std::span<const std::size_t> rows,
                                   std::span<const std::size_t> cols) const {
  std::vector<long> col_map(cols_, -1);
  for (std::size_t j = 0; j < cols.size(); ++j) col_map.at(cols[j]) = static_cast<long>(j);
  ExactMatrix out(domain_, rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& e : data_.at(rows[i])) {
      const long j = col_map[e.col];
      if (j >= 0) out.data_[i].push_back({static_cast<std::size_t>(j), e.value});
    }
    std::sort(out.data_[i].begin(), out.data_[i].end(),
              [](const MatrixEntry& a, const MatrixEntry& b) { return a.col < b.col; });
  }
  return out;
}

std::vector<Rational> ExactMatrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw Error(Errc::invalid_argument, "vector length does not match matrix");
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational s = 0;
    for (const auto& e : data_[r]) s += e.value * v[e.col];
    out[r] = domain_.normalize(s);
  }
  return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(Errc::invalid_argument, "matrix shapes do not compose");
  if (!(a.domain_ == b.domain_)) throw Error(Errc::domain, "matrix domains differ");
  ExactMatrix out(a.domain_, a.rows_, b.cols_);
  std::map<std::size_t, Rational> acc;
  for (std::size_t r = 0; r < a.rows_; ++r) {
    acc.clear();
    for (const auto& e : a.data_[r])
      for (const auto& f : b.data_[e.col]) acc[f.col] += e.value * f.value;
    for (auto& [c, v] : acc) {
      Rational n = a.domain_.normalize(v);
      if (sgn(n) != 0) out.data_[r].push_back({c, std::move(n)});
    }
  }
  return out;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  if (!(a.domain_ == b.domain_) || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t r = 0; r < a.rows_; ++r) {
    if (a.data_[r].size() != b.data_[r].size()) return false;
    for (std::size_t k = 0; k < a.data_[r].size(); ++k)
      if (a.data_[r][k].col != b.data_[r][k].col || a.data_[r][k].value != b.data_[r][k].value)
        return false;
  }
  return true;
}

std::vector<Integer> SmithForm::torsion() const {
  std::vector<Integer> out;
  for (const auto& d : invariant_factors)
    if (d > 1) out.push_back(d);
  return out;
}

namespace {

void require_field(const ExactMatrix& m, const char* what) {
  if (!m.domain().is_field()) {
    throw Error(Errc::domain, std::string(what) +
                                  " needs field coefficients (Q or Fp); use smith_normal_form over Z");
  }
}

template <class Field>
typename detail::SparseEchelon<Field>::Row to_row(const Field& f, std::span<const MatrixEntry> row) {
  typename detail::SparseEchelon<Field>::Row out;
  out.reserve(row.size());
  for (const auto& e : row) out.emplace_back(e.col, f.from(e.value));
  return out;
}

template <class Field>
detail::SparseEchelon<Field> echelon_of(const Field& f, const ExactMatrix& m) {
  detail::SparseEchelon<Field> ech(f, m.cols());
  // Sparse rows first keeps fill-in low.
  std::vector<std::size_t> order(m.rows());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return m.row(a).size() < m.row(b).size();
  });
  for (std::size_t r : order) {
    if (m.row(r).empty()) continue;
    ech.insert(to_row(f, m.row(r)));
    if (ech.rank() == m.cols()) break;
  }
  return ech;
}

template <class Field>
std::vector<std::vector<Rational>> kernel_impl(const Field& f, const ExactMatrix& m) {
  auto ech = echelon_of(f, m);
  ech.reduce();
  std::vector<long> free_index(m.cols(), -1);
  std::size_t nfree = 0;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (ech.pivot_of_col(c) < 0) free_index[c] = static_cast<long>(nfree++);
  std::vector<std::vector<Rational>> basis(nfree, std::vector<Rational>(m.cols(), Rational(0)));
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (free_index[c] >= 0) basis[free_index[c]][c] = 1;
  const auto& rows = ech.pivot_rows();
  const auto& pcols = ech.pivot_cols();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& [c, v] : rows[i]) {
      if (c == pcols[i]) continue;
      basis[free_index[c]][pcols[i]] = f.to_rational(f.neg(v));
    }
  }
  return basis;
}

template <class Field>
std::optional<std::vector<Rational>> solve_impl(const Field& f, const ExactMatrix& m,
                                                const std::vector<Rational>& rhs) {
  const std::size_t n = m.cols();
  detail::SparseEchelon<Field> ech(f, n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = to_row(f, m.row(r));
    auto b = f.from(rhs[r]);
    if (!Field::is_zero(b)) row.emplace_back(n, b);
    if (!row.empty()) ech.insert(row);
  }
  if (ech.pivot_of_col(n) >= 0) return std::nullopt;
  ech.reduce();
  std::vector<Rational> x(n, Rational(0));
  const auto& rows = ech.pivot_rows();
  const auto& pcols = ech.pivot_cols();
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [c, v] : rows[i])
      if (c == n) x[pcols[i]] = f.to_rational(v);
  return x;
}

}  // namespace

std::size_t rank(const ExactMatrix& m) {
  require_field(m, "rank");
  if (m.domain().kind() == Domain::Kind::prime_field)
    return echelon_of(detail::ModPField{m.domain().modulus()}, m).rank();
  return echelon_of(detail::RationalField{}, m).rank();
}

std::vector<std::vector<Rational>> kernel_basis(const ExactMatrix& m) {
  require_field(m, "kernel_basis");
  if (m.domain().kind() == Domain::Kind::prime_field)
    return kernel_impl(detail::ModPField{m.domain().modulus()}, m);
  return kernel_impl(detail::RationalField{}, m);
}

std::optional<std::vector<Rational>> solve(const ExactMatrix& m, const std::vector<Rational>& rhs) {
  require_field(m, "solve");
  if (rhs.size() != m.rows()) throw Error(Errc::invalid_argument, "right-hand side has wrong length");
  if (m.domain().kind() == Domain::Kind::prime_field)
    return solve_impl(detail::ModPField{m.domain().modulus()}, m, rhs);
  return solve_impl(detail::RationalField{}, m, rhs);
}

std::size_t vector_rank(Domain domain, const std::vector<std::vector<Rational>>& vectors) {
  if (vectors.empty()) return 0;
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < vectors[i].size(); ++j)
      if (sgn(vectors[i][j]) != 0) t.push_back({i, j, vectors[i][j]});
  return rank(ExactMatrix(domain, vectors.size(), vectors.front().size(), std::move(t)));
}

std::string format_matrix(const ExactMatrix& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& e : m.row(r)) out << r << ' ' << e.col << ' ' << e.value.get_str() << '\n';
  return out.str();
}

ExactMatrix parse_matrix(std::string_view text, Domain domain) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t rows = 0, cols = 0;
  bool have_header = false;
  std::vector<Triplet> entries;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (!have_header) {
      if (!(ls >> rows >> cols)) throw Error(Errc::parse, "matrix header must be 'rows cols'");
      have_header = true;
      continue;
    }
    std::size_t r = 0, c = 0;
    std::string value;
    if (!(ls >> r >> c >> value)) {
      throw Error(Errc::parse, "malformed matrix entry on line " + std::to_string(lineno));
    }
    Rational v;
    if (v.set_str(value, 10) != 0 || sgn(v.get_den()) == 0) {
      throw Error(Errc::parse, "malformed matrix value '" + value + "' on line " + std::to_string(lineno));
    }
    v.canonicalize();
    entries.push_back({r, c, std::move(v)});
  }
  if (!have_header) throw Error(Errc::parse, "empty matrix text");
  return ExactMatrix(domain, rows, cols, std::move(entries));
}

}  // namespace liecoh
