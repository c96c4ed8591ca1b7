#pragma once

// Report assembly shared by the C API: every command produces one JSON
// document plus table and TSV renderings of the same data.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "liecoh/cecohomology.hpp"
#include "liecoh/rootdata.hpp"

namespace liecoh::report {

using Json = nlohmann::ordered_json;

enum class Format { table, json, tsv };

struct Result {
  Json json;
  std::string table;
  std::string tsv;
  bool pass = true;

  std::string render(Format f) const;
};

Result degrees(LieType type);
Result betti(LieType type, Domain field, const ComplexLimits& limits);
Result ring(LieType type, const ComplexLimits& limits);
Result restrict(LieType e, LieType f, int removed);
Result scan(LieType type, const std::vector<std::uint32_t>& primes, const ComplexLimits& limits);
Result badroots(LieType type);
Result qint(long n, long d, bool factor);
Result uct(LieType type, const std::vector<std::uint32_t>& primes, const ComplexLimits& limits);
Result brackets(LieType type);
Result snf(std::string_view matrix_text);

}  // namespace liecoh::report
