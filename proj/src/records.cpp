#include "starseq/records.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "starseq/star.hpp"

namespace starseq {

using json = Json;

namespace {

json big_array(const std::vector<BigInt>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

json identity_header(const std::string& id, const Graph& g) {
  json out;
  out["id"] = id;
  if (g.vertex_count() <= 62) out["graph6"] = to_graph6(g);
  out["n"] = g.vertex_count();
  out["m"] = g.edge_count();
  return out;
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_array()) {
    std::string s;
    for (const auto& item : v) {
      if (!s.empty()) s += ' ';
      s += scalar_text(item);
    }
    return s.empty() ? "(empty)" : s;
  }
  return v.dump();
}

void flatten(const json& obj, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& rows) {
  for (const auto& [key, value] : obj.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object())
      flatten(value, name, rows);
    else
      rows.emplace_back(name, scalar_text(value));
  }
}

void write_rows(std::ostream& out,
                const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  for (const auto& [key, value] : rows)
    out << std::left << std::setw(static_cast<int>(width + 2)) << key << value
        << '\n';
}

void write_report_text(std::ostream& out, const json& record) {
  std::vector<std::pair<std::string, std::string>> rows;
  for (const char* key : {"id", "graph6", "n", "m", "p_max", "m_max", "pass"})
    if (record.contains(key)) rows.emplace_back(key, scalar_text(record[key]));
  write_rows(out, rows);

  std::size_t width = 5;
  for (const auto& c : record["checks"])
    width = std::max(width, c["name"].get<std::string>().size());
  out << "  " << std::left << std::setw(static_cast<int>(width + 2)) << "check"
      << std::setw(8) << "status" << std::setw(8) << "cases"
      << "max|residual|\n";
  for (const auto& c : record["checks"]) {
    out << "  " << std::setw(static_cast<int>(width + 2))
        << c["name"].get<std::string>() << std::setw(8)
        << (c["pass"].get<bool>() ? "pass" : "FAIL") << std::setw(8)
        << c["cases"].get<std::uint64_t>()
        << c["max_abs_residual"].get<std::string>();
    if (!c["first_failure"].is_null())
      out << "  (first at " << c["first_failure"].get<std::string>() << ")";
    out << '\n';
  }
  for (const auto& e : record["errata"]) {
    out << "  erratum " << e["id"].get<std::string>() << " at "
        << e["witness"].get<std::string>() << ": printed form gives "
        << e["printed"].get<std::string>() << ", expected "
        << e["expected"].get<std::string>() << " ("
        << e["description"].get<std::string>() << ")\n";
  }
}

}  // namespace

bool ZagrebValues::agree() const {
  std::optional<BigInt> first;
  for (const auto* v : {&direct, &star, &recurrence}) {
    if (!v->has_value()) continue;
    if (!first)
      first = **v;
    else if (**v != *first)
      return false;
  }
  return true;
}

json info_record(const std::string& id, const Graph& g) {
  json out = identity_header(id, g);
  out["degrees"] = degrees(g);
  out["frequency"] = frequency_sequence(g).counts();
  const auto stars = star_sequence(g);
  out["stars"] = {{"s1", stars.s1().get_str()},
                  {"two_s1", stars.adjusted_first().get_str()},
                  {"sequence", big_array(stars.adjusted_sequence())}};
  out["classification"] = classify(stars).to_string();
  return out;
}

json zagreb_record(const std::string& id, const Graph& g,
                   const ZagrebValues& values) {
  json out = identity_header(id, g);
  out["p"] = values.p;
  json z = json::object();
  if (values.direct) z["direct"] = values.direct->get_str();
  if (values.star) z["star"] = values.star->get_str();
  if (values.recurrence) z["recurrence"] = values.recurrence->get_str();
  out["zagreb"] = std::move(z);
  out["agree"] = values.agree();
  return out;
}

json genfunc_record(const std::string& id, const ZagrebGenFunc& gf) {
  json out;
  out["id"] = id;
  out["n"] = gf.n;
  out["numerator"] = big_array(gf.numerator);
  json factors = json::array();
  for (std::size_t j = 1; j <= gf.n; ++j)
    factors.push_back(j == 1 ? std::string("1-t")
                             : "1-" + std::to_string(j) + "t");
  out["denominator_factors"] = std::move(factors);
  out["denominator"] = big_array(gf.denominator());
  out["paper_form_exact"] = gf.degree_below_n();
  return out;
}

json report_record(const TheoremReport& report) {
  json out;
  out["id"] = report.graph_id;
  out["n"] = report.n;
  out["m"] = report.m;
  out["p_max"] = report.p_max;
  out["m_max"] = report.m_max;
  out["pass"] = report.passed();
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"statement", c.statement},
                      {"cases", c.cases},
                      {"failures", c.failures},
                      {"max_abs_residual", c.max_abs_residual.get_str()},
                      {"first_failure", c.first_failure.empty()
                                            ? json(nullptr)
                                            : json(c.first_failure)},
                      {"pass", c.passed()}});
  }
  out["checks"] = std::move(checks);
  json errata = json::array();
  for (const auto& e : report.errata) {
    errata.push_back({{"id", e.id},
                      {"description", e.description},
                      {"witness", e.witness},
                      {"printed", e.printed_value},
                      {"expected", e.expected_value}});
  }
  out["errata"] = std::move(errata);
  return out;
}

json error_record(const std::string& id, const std::string& message) {
  return {{"id", id}, {"error", message}};
}

void write_text(std::ostream& out, const json& record) {
  if (record.contains("checks")) {
    write_report_text(out, record);
  } else {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(record, "", rows);
    write_rows(out, rows);
  }
  out << '\n';
}

}  // namespace starseq
