#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "starseq/combinatorics.hpp"
#include "starseq/graph.hpp"

namespace starseq {

/// Star-subgraph counts S_1..S_{n-1} of a graph on n vertices, where S_k
/// counts subgraphs isomorphic to K_{1,k}.
///
/// S_1 is stored as the raw edge count. The conventional sequence starts
/// with 2 S_1 instead; adjusted() and adjusted_sequence() expose that form.
/// S_k is zero for k >= n.
class StarSequence {
 public:
  StarSequence() = default;
  // `higher` holds S_2, S_3, ...; it is resized to n - 2 entries (entries
  // past S_{n-1} must be zero).
  StarSequence(std::size_t n, BigInt s1, std::vector<BigInt> higher);

  std::size_t vertex_count() const noexcept { return n_; }

  // S_k for k >= 1; zero for k >= n.
  BigInt operator[](std::size_t k) const;
  const BigInt& s1() const noexcept { return s1_; }
  BigInt adjusted_first() const { return 2 * s1_; }
  // Entry k of (2 S_1, S_2, ..., S_{n-1}).
  BigInt adjusted(std::size_t k) const;
  std::vector<BigInt> adjusted_sequence() const;

  friend bool operator==(const StarSequence& a, const StarSequence& b) {
    return a.n_ == b.n_ && a.s1_ == b.s1_ && a.higher_ == b.higher_;
  }

 private:
  std::size_t n_ = 0;
  BigInt s1_ = 0;
  std::vector<BigInt> higher_;
};

struct Classification {
  enum class Kind { path, regular, other };

  Kind kind = Kind::other;
  std::size_t degree = 0;  // set for Kind::regular

  std::string to_string() const;
  friend bool operator==(const Classification&,
                         const Classification&) = default;
};

/// S_1 = |E| and S_k = sum over v of C(deg v, k) for k >= 2.
StarSequence star_sequence(const Graph& g);

/// Binomial transform of the frequency sequence:
/// 2 S_1 = sum i f_i, S_k = sum_{i >= k} C(i, k) f_i.
/// Throws InconsistentSequence when sum i f_i is odd.
StarSequence star_from_frequency(const FrequencySequence& f);

/// Inverse transform. f_i = sum_{k >= i} (-1)^{k-i} C(k, i) S_k for i >= 2,
/// f_1 = 2 S_1 + sum_{k >= 2} (-1)^{k-1} k S_k, f_0 = n - sum_{i >= 1} f_i.
/// Throws InconsistentSequence if any f_i comes out negative.
FrequencySequence frequency_from_star(const StarSequence& s);

/// 2 S_1 + sum_{i=2}^{n-1} (-1)^{i-1} i^m S_i. For m = 0 this counts the
/// non-isolated vertices.
BigInt alternating_moment(const StarSequence& s, std::uint64_t m);

/// sum_{k=1}^{m} (-1)^{k-1} k! {m, k} f_k, which equals
/// alternating_moment(s, m) for the same graph. Requires m >= 1.
BigInt moment_identity_rhs(const FrequencySequence& f, std::uint64_t m);

/// The same sum with the overall sign (-1)^k, as it is sometimes printed.
/// Kept so verification can show that this variant disagrees.
BigInt moment_identity_rhs_negated(const FrequencySequence& f, std::uint64_t m);

/// sum over edges uv of 1/deg(u) + 1/deg(v); equals n - f_0.
Rational inverse_degree_edge_sum(const Graph& g);

/// f_0 = n - alternating_moment(s, 0). Throws InconsistentSequence when the
/// result is negative.
std::uint64_t isolated_count_from_star(const StarSequence& s);

/// Recognizes paths and k-regular graphs from the star sequence alone.
///
/// path: S_1 = n-1, S_2 = n-2, S_i = 0 for i > 2. These counts are shared
/// by P_n and by a shorter path plus disjoint cycles, which the star
/// sequence cannot tell apart; both report path.
/// regular(k): k is the largest index with S_k != 0, S_i = C(k, i) S_k for
/// 2 <= i <= k, 2 S_1 = k S_k, and S_k = n (no isolated vertices).
/// P_2 is both a path and 1-regular and reports path. Graphs with fewer than
/// two vertices report other.
Classification classify(const StarSequence& s);

}  // namespace starseq
