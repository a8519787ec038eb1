#include "starseq/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "starseq/error.hpp"

namespace starseq {

namespace {

constexpr std::size_t kMaxGraph6Vertices = 62;
constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Splits on blanks; fails on anything that is not a non-negative integer.
bool parse_unsigned_fields(std::string_view line,
                           std::vector<std::size_t>& out) {
  out.clear();
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos == line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    std::size_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(line.data() + pos, line.data() + end, value);
    if (ec != std::errc{} || ptr != line.data() + end) return false;
    out.push_back(value);
    pos = end;
  }
  return true;
}

}  // namespace

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n) {
  if (n == 0) throw DomainError("graph must have at least one vertex");
  for (auto& e : edges) {
    if (e.u >= n || e.v >= n)
      throw DomainError("edge {" + std::to_string(e.u) + ", " +
                        std::to_string(e.v) + "} has an endpoint outside [0, " +
                        std::to_string(n) + ")");
    if (e.u == e.v)
      throw DomainError("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end());
      dup != edges.end())
    throw DomainError("duplicate edge {" + std::to_string(dup->u) + ", " +
                      std::to_string(dup->v) + "}");
  edges_ = std::move(edges);

  adjacency_.resize(n);
  for (const auto& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
  if (u >= n_ || v >= n_) return false;
  const auto& row = adjacency_[u];
  return std::binary_search(row.begin(), row.end(), v);
}

std::uint64_t FrequencySequence::total() const noexcept {
  std::uint64_t sum = 0;
  for (auto c : counts_) sum += c;
  return sum;
}

std::uint64_t FrequencySequence::degree_sum() const noexcept {
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < counts_.size(); ++i) sum += i * counts_[i];
  return sum;
}

Graph parse_edge_list(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  std::size_t n = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  std::vector<std::size_t> fields;
  // line of first appearance, indexed by normalized edge
  std::vector<std::pair<Edge, std::size_t>> seen;

  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (!parse_unsigned_fields(line, fields))
      throw ParseError(line_no, "expected non-negative integers, got '" +
                                    std::string(line) + "'");
    if (!have_header) {
      if (fields.size() != 1)
        throw ParseError(line_no, "expected the vertex count on its own line");
      n = fields[0];
      if (n == 0) throw ParseError(line_no, "vertex count must be positive");
      have_header = true;
      continue;
    }
    if (fields.size() != 2)
      throw ParseError(line_no, "expected an edge 'u v', got '" +
                                    std::string(line) + "'");
    const std::size_t u = fields[0];
    const std::size_t v = fields[1];
    if (u >= n || v >= n)
      throw ParseError(line_no, "endpoint out of range [0, " +
                                    std::to_string(n) + ")");
    if (u == v)
      throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    edges.push_back({std::min(u, v), std::max(u, v)});
    seen.emplace_back(edges.back(), line_no);
  }
  if (!have_header) throw ParseError(line_no, "missing vertex count");

  std::stable_sort(seen.begin(), seen.end(), [](const auto& a, const auto& b) {
    return a.first < b.first;
  });
  for (std::size_t i = 1; i < seen.size(); ++i) {
    if (seen[i].first == seen[i - 1].first)
      throw ParseError(seen[i].second,
                       "duplicate edge {" + std::to_string(seen[i].first.u) +
                           ", " + std::to_string(seen[i].first.v) +
                           "} (first listed on line " +
                           std::to_string(seen[i - 1].second) + ")");
  }
  return Graph(n, std::move(edges));
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

Graph parse_graph6(std::string_view line) {
  line = trim(line);
  if (line.starts_with(kGraph6Header)) line.remove_prefix(kGraph6Header.size());
  if (line.empty()) throw ParseError(0, "empty graph6 string");
  for (char c : line) {
    if (c < 63 || c > 126)
      throw ParseError(0, "invalid graph6 character '" + std::string(1, c) +
                              "'");
  }
  if (line.front() == 126)
    throw ParseError(0, "graph6 sizes above " +
                            std::to_string(kMaxGraph6Vertices) +
                            " vertices are not supported");
  const std::size_t n = static_cast<std::size_t>(line.front() - 63);
  if (n == 0) throw ParseError(0, "graph6 string encodes the empty graph");

  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t expected = (bits + 5) / 6;
  const auto body = line.substr(1);
  if (body.size() < expected)
    throw ParseError(0, "truncated graph6 adjacency: expected " +
                            std::to_string(expected) + " characters, got " +
                            std::to_string(body.size()));
  if (body.size() > expected)
    throw ParseError(0, "trailing characters after graph6 adjacency");

  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      const int chunk = body[bit / 6] - 63;
      if (chunk & (1 << (5 - bit % 6))) edges.push_back({i, j});
    }
  }
  return Graph(n, std::move(edges));
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxGraph6Vertices)
    throw DomainError("graph6 encoding supports at most 62 vertices");
  std::string out(1, static_cast<char>(63 + n));
  int chunk = 0;
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      if (g.adjacent(i, j)) chunk |= 1 << (5 - bit % 6);
      if (bit % 6 == 5) {
        out.push_back(static_cast<char>(63 + chunk));
        chunk = 0;
      }
    }
  }
  if (bit % 6 != 0) out.push_back(static_cast<char>(63 + chunk));
  return out;
}

std::vector<std::size_t> degrees(const Graph& g) {
  std::vector<std::size_t> out(g.vertex_count());
  for (std::size_t v = 0; v < out.size(); ++v) out[v] = g.neighbors(v).size();
  return out;
}

FrequencySequence frequency_sequence(const Graph& g) {
  // Graph construction already rejects n = 0.
  std::vector<std::uint64_t> counts(g.vertex_count(), 0);
  for (auto d : degrees(g)) ++counts[d];
  return FrequencySequence(std::move(counts));
}

}  // namespace starseq
