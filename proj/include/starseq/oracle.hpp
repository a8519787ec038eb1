#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include "starseq/combinatorics.hpp"
#include "starseq/graph.hpp"

namespace starseq {

/// Counts subgraphs isomorphic to K_{1,k} by trying every (k+1)-subset of
/// vertices and every member of it as the center. For k = 1 both endpoints
/// of an edge qualify as the center, so the ordered count is halved.
/// Requires 1 <= k <= n-1.
BigInt count_stars_bruteforce(const Graph& g, std::size_t k);

inline constexpr std::size_t kMaxEnumerationVertices = 7;

/// Graph whose edge set is the bitmask over vertex pairs in lexicographic
/// order (0,1), (0,2), ..., (0,n-1), (1,2), ...; bit i selects pair i.
Graph graph_from_mask(std::size_t n, std::uint64_t mask);

/// All 2^(n(n-1)/2) labeled simple graphs on n vertices, in increasing
/// bitmask order (see graph_from_mask). 1 <= n <= 7.
class LabeledGraphs {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Graph;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(std::size_t n, std::uint64_t mask) : n_(n), mask_(mask) {}

    Graph operator*() const { return graph_from_mask(n_, mask_); }
    std::uint64_t mask() const noexcept { return mask_; }
    iterator& operator++() {
      ++mask_;
      return *this;
    }
    iterator operator++(int) {
      auto copy = *this;
      ++mask_;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.mask_ == b.mask_;
    }

   private:
    std::size_t n_ = 0;
    std::uint64_t mask_ = 0;
  };

  explicit LabeledGraphs(std::size_t n);

  std::size_t vertex_count() const noexcept { return n_; }
  std::uint64_t size() const noexcept { return count_; }
  iterator begin() const { return {n_, 0}; }
  iterator end() const { return {n_, count_}; }

 private:
  std::size_t n_;
  std::uint64_t count_;
};

inline LabeledGraphs all_labeled_graphs(std::size_t n) {
  return LabeledGraphs(n);
}

/// First `terms` coefficients of numerator(t) / ((1 - t)(1 - 2t)...(1 - nt))
/// by exact long division. The denominator is multiplied out factor by
/// factor, independently of the Stirling tables.
std::vector<BigInt> series_expand_rational(std::span<const BigInt> numerator,
                                           std::size_t n, std::size_t terms);

// One identity evaluated over a parameter range. Residuals are exact; the
// check passes only if every residual is zero.
struct IdentityCheck {
  std::string name;
  std::string statement;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  Rational max_abs_residual = 0;
  std::string first_failure;

  bool passed() const noexcept { return failures == 0; }
};

// A commonly printed form of an identity that disagrees with direct
// evaluation. printed_value is what that form evaluates to at the witness,
// expected_value what it would have to equal for the identity to hold.
struct ErratumObservation {
  std::string id;
  std::string description;
  std::string witness;
  std::string printed_value;
  std::string expected_value;
};

struct TheoremReport {
  std::string graph_id;
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t p_max = 0;
  std::uint64_t m_max = 0;
  std::vector<IdentityCheck> checks;
  std::vector<ErratumObservation> errata;

  bool passed() const;
  std::uint64_t cases() const;
  std::uint64_t failures() const;
  const IdentityCheck* find(std::string_view name) const;
  const ErratumObservation* find_erratum(std::string_view id) const;
};

/// Evaluates every star, moment, edge-sum, Zagreb, generating-function and
/// recurrence identity on g against brute-force or direct values, for Zagreb
/// orders p <= p_max and moment orders 1 <= m <= m_max. Failures are report
/// content; nothing is thrown for a failing identity.
TheoremReport verify_all_identities(const Graph& g, std::uint64_t p_max,
                                    std::uint64_t m_max,
                                    std::string graph_id = {});

}  // namespace starseq
