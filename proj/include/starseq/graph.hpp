#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace starseq {

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected labeled graph on vertices 0..n-1.
///
/// Immutable after construction. Edges are stored normalized (u < v) and
/// sorted. The constructor rejects n = 0, self-loops, out-of-range endpoints
/// and duplicate edges with DomainError.
class Graph {
 public:
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<std::size_t>& neighbors(std::size_t v) const {
    return adjacency_.at(v);
  }
  bool adjacent(std::size_t u, std::size_t v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// f_i = number of vertices of degree i, for i in [0, n).
class FrequencySequence {
 public:
  FrequencySequence() = default;
  explicit FrequencySequence(std::vector<std::uint64_t> counts)
      : counts_(std::move(counts)) {}

  // The vertex count n is the length of the sequence.
  std::size_t size() const noexcept { return counts_.size(); }
  // f_i, zero past the end.
  std::uint64_t operator[](std::size_t i) const noexcept {
    return i < counts_.size() ? counts_[i] : 0;
  }
  const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }

  std::uint64_t total() const noexcept;
  std::uint64_t degree_sum() const noexcept;

  friend bool operator==(const FrequencySequence&,
                         const FrequencySequence&) = default;

 private:
  std::vector<std::uint64_t> counts_;
};

/// Edge-list text: first non-comment line holds n, then one "u v" pair per
/// line. Blank lines and lines whose first non-blank character is '#' are
/// skipped.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);

/// Decodes one graph6 line (n <= 62). A leading ">>graph6<<" header and
/// trailing whitespace are ignored.
Graph parse_graph6(std::string_view line);

std::string to_graph6(const Graph& g);

std::vector<std::size_t> degrees(const Graph& g);
FrequencySequence frequency_sequence(const Graph& g);

}  // namespace starseq
