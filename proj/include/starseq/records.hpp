#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "json.hpp"
#include "starseq/graph.hpp"
#include "starseq/oracle.hpp"
#include "starseq/zagreb.hpp"

namespace starseq {

using Json = nlohmann::ordered_json;

// Output records. Every big integer is a decimal string; small counts
// (vertex/edge counts, degrees, frequencies) are JSON numbers.

Json info_record(const std::string& id, const Graph& g);

struct ZagrebValues {
  std::uint64_t p = 0;
  std::optional<BigInt> direct;
  std::optional<BigInt> star;
  std::optional<BigInt> recurrence;

  bool agree() const;
};

Json zagreb_record(const std::string& id, const Graph& g,
                             const ZagrebValues& values);
Json genfunc_record(const std::string& id, const ZagrebGenFunc& gf);
Json report_record(const TheoremReport& report);
Json error_record(const std::string& id, const std::string& message);

/// Human-readable rendering of a record: one aligned "key  value" row per
/// field; reports get a table of identity checks.
void write_text(std::ostream& out, const Json& record);

}  // namespace starseq
