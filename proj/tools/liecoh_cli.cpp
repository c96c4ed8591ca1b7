// Command-line front end. Everything goes through the C interface.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "liecoh/liecoh.h"

namespace {

enum Exit { kPass = 0, kFinding = 1, kUsage = 2, kRuntime = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string type;
  std::string second_type;
  std::string field = "Q";
  std::string primes;
  std::string out;
  std::string matrix_path;
  int remove = 0;
  long n = 0;
  long d = 1;
  bool json = false;
  bool tsv = false;
  bool best_effort = false;
  bool factor = false;
};

int exit_for(liecoh_status s) {
  switch (s) {
    case LIECOH_OK: return kPass;
    case LIECOH_ERR_PARSE:
    case LIECOH_ERR_INVALID_ARGUMENT:
    case LIECOH_ERR_UNSUPPORTED:
    case LIECOH_ERR_TOO_LARGE: return kUsage;
    default: return kRuntime;
  }
}

unsigned long parse_number(const std::string& text) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || text[0] == '-') throw UsageError("not a number: '" + text + "'");
  return v;
}

// "2,3,5" or "2..31" (every prime in the range).
std::vector<uint32_t> parse_primes(const std::string& text) {
  std::vector<uint32_t> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    const unsigned long lo = parse_number(text.substr(0, dots)), hi = parse_number(text.substr(dots + 2));
    if (lo > hi) throw UsageError("empty prime range " + text);
    if (hi > 100000) throw UsageError("prime range too large: " + text);
    for (unsigned long p = lo; p <= hi; ++p)
      if (liecoh_is_prime(p)) out.push_back(static_cast<uint32_t>(p));
    if (out.empty()) throw UsageError("no primes in range " + text);
    return out;
  }
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const unsigned long p = parse_number(item);
    if (p > 0x7fffffffUL || !liecoh_is_prime(p)) throw UsageError(item + " is not a prime");
    out.push_back(static_cast<uint32_t>(p));
  }
  if (out.empty()) throw UsageError("empty prime list");
  return out;
}

std::vector<uint32_t> primes_up_to(uint32_t hi, uint32_t above = 1) {
  std::vector<uint32_t> out;
  for (uint32_t p = above + 1; p <= hi; ++p)
    if (liecoh_is_prime(p)) out.push_back(p);
  return out;
}

// Primes h < p <= 3(h - 1) for the type.
std::vector<uint32_t> default_scan_primes(const std::string& type) {
  liecoh_root_system* rs = nullptr;
  if (liecoh_root_system_create(type.c_str(), &rs) != LIECOH_OK) return {};
  const int h = liecoh_root_system_coxeter_number(rs);
  liecoh_root_system_destroy(rs);
  auto out = primes_up_to(static_cast<uint32_t>(3 * (h - 1)), static_cast<uint32_t>(h));
  return out;
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) return {};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int run(const std::string& command, const Options& o) {
  if (o.json && o.tsv) throw UsageError("--json and --tsv are mutually exclusive");
  const liecoh_format fmt = o.json ? LIECOH_FORMAT_JSON : o.tsv ? LIECOH_FORMAT_TSV : LIECOH_FORMAT_TABLE;
  liecoh_limits limits;
  liecoh_limits_default(&limits);
  if (*liecoh_last_error()) {
    std::cerr << "error: " << liecoh_last_error() << "\n";
    return kUsage;
  }
  limits.best_effort = o.best_effort ? 1 : 0;

  char* text = nullptr;
  int verdict = 1;
  liecoh_status s = LIECOH_OK;
  const char* t = o.type.c_str();
  if (command == "degrees") {
    s = liecoh_report_degrees(t, fmt, &text, &verdict);
  } else if (command == "betti") {
    s = liecoh_report_betti(t, o.field.c_str(), &limits, fmt, &text, &verdict);
  } else if (command == "ring") {
    s = liecoh_report_ring(t, &limits, fmt, &text, &verdict);
  } else if (command == "restrict") {
    s = liecoh_report_restrict(t, o.second_type.c_str(), o.remove, fmt, &text, &verdict);
  } else if (command == "scan" || command == "uct") {
    std::vector<uint32_t> primes;
    if (!o.primes.empty()) {
      primes = parse_primes(o.primes);
    } else if (command == "scan") {
      primes = default_scan_primes(o.type);
    } else {
      primes = primes_up_to(31);
    }
    s = command == "scan" ? liecoh_report_scan(t, primes.data(), primes.size(), &limits, fmt, &text, &verdict)
                          : liecoh_report_uct(t, primes.data(), primes.size(), &limits, fmt, &text, &verdict);
  } else if (command == "badroots") {
    s = liecoh_report_badroots(t, fmt, &text, &verdict);
  } else if (command == "qint") {
    s = liecoh_report_qint(o.n, o.d, o.factor ? 1 : 0, fmt, &text, &verdict);
  } else if (command == "brackets") {
    s = liecoh_report_brackets(t, fmt, &text, &verdict);
  } else if (command == "snf") {
    std::ifstream probe(o.matrix_path);
    if (o.matrix_path != "-" && !probe) {
      std::cerr << "error: io: cannot read " << o.matrix_path << "\n";
      return kRuntime;
    }
    const std::string input = read_input(o.matrix_path);
    s = liecoh_report_snf(input.c_str(), fmt, &text, &verdict);
  }

  if (s != LIECOH_OK) {
    std::cerr << "error: " << liecoh_status_name(s) << ": " << liecoh_last_error() << "\n";
    return exit_for(s);
  }
  std::unique_ptr<char, decltype(&liecoh_free_string)> owned(text, &liecoh_free_string);
  if (o.out.empty()) {
    std::cout << owned.get();
    std::cout.flush();
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!(file << owned.get()) || !file.flush()) {
      std::cerr << "error: io: cannot write " << o.out << "\n";
      return kRuntime;
    }
  }
  return verdict ? kPass : kFinding;
}

void common(CLI::App* sub, Options& o) {
  sub->add_flag("--json", o.json, "JSON output");
  sub->add_flag("--tsv", o.tsv, "tab-separated output");
  sub->add_option("--out", o.out, "write output to this path");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie algebra cohomology and root-data checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", liecoh_version());
  Options o;

  auto* degrees = app.add_subcommand("degrees", "degrees of the exterior generators");
  degrees->add_option("type", o.type, "simple type, e.g. G2")->required();

  auto* betti = app.add_subcommand("betti", "Betti numbers of the Chevalley-Eilenberg complex");
  betti->add_option("type", o.type)->required();
  betti->add_option("--field", o.field, "Q, Z or Fp:<p>");

  auto* ring = app.add_subcommand("ring", "exterior certification of H(g, Q) with witness basis");
  ring->add_option("type", o.type)->required();

  auto* restrict = app.add_subcommand("restrict", "restriction of basic invariants to a subdiagram");
  restrict->add_option("E", o.type)->required();
  restrict->add_option("F", o.second_type)->required();
  restrict->add_option("--remove", o.remove, "1-based simple root of E to delete")->required();

  auto* scan = app.add_subcommand("scan", "Betti numbers over F_p against the exterior expansion");
  scan->add_option("type", o.type)->required();
  scan->add_option("--primes", o.primes, "comma list or a..b range (default h < p <= 3(h-1))");

  auto* badroots = app.add_subcommand("badroots", "bad roots of unity and the denominator set");
  badroots->add_option("type", o.type)->required();

  auto* qint = app.add_subcommand("qint", "quantum integer [n]_d");
  qint->add_option("n", o.n)->required();
  qint->add_option("d", o.d)->required();
  qint->add_flag("--factor", o.factor, "print the cyclotomic factorization");

  auto* uct = app.add_subcommand("uct", "universal coefficient check against integral cohomology");
  uct->add_option("type", o.type)->required();
  uct->add_option("--primes", o.primes, "comma list or a..b range (default p <= 31)");

  auto* brackets = app.add_subcommand("brackets", "Chevalley basis bracket table");
  brackets->add_option("type", o.type)->required();

  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf->add_option("matrix", o.matrix_path, "matrix file, or - for standard input")->required();

  for (auto* sub : {degrees, betti, ring, restrict, scan, badroots, qint, uct, brackets, snf}) common(sub, o);
  for (auto* sub : {betti, ring, scan, uct}) sub->add_flag("--best-effort", o.best_effort, "allow dim g > limit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    return run(app.get_subcommands().front()->get_name(), o);
  } catch (const UsageError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kRuntime;
  }
}
