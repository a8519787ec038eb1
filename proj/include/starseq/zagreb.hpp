#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "starseq/combinatorics.hpp"
#include "starseq/graph.hpp"
#include "starseq/star.hpp"

namespace starseq {

/// Numerator of sum_p Z_p t^p written over (1 - t)(1 - 2t)...(1 - nt).
///
/// The numerator is kept through a_n. a_n = (-1)^n n! f_0, so it has degree
/// at most n - 1 exactly when the graph has no isolated vertices.
struct ZagrebGenFunc {
  std::size_t n = 0;
  std::vector<BigInt> numerator;  // a_0..a_n

  // c_0..c_n of the denominator.
  std::vector<BigInt> denominator() const { return falling_factorial_coeffs(n); }
  // True when a_n = 0, i.e. the degree n - 1 numerator is exact.
  bool degree_below_n() const { return numerator.empty() || numerator.back() == 0; }
};

/// sum over v of deg(v)^p, with 0^0 = 1 so Z_0 = n.
BigInt zagreb_direct(const Graph& g, std::uint64_t p);

/// 2 S_1 + sum_{i=2}^{min(p, n-1)} i! {p, i} S_i. Undefined for p = 0
/// (the formula yields 2m, not n) and throws DomainError there.
BigInt zagreb_from_stars(const StarSequence& s, std::uint64_t p);

/// a_k = sum_{i=0}^{k} s(n+1, n+1-(k-i)) Z_i for k = 0..n.
ZagrebGenFunc genfunc_numerator(const Graph& g);

/// Z_p via the order-n linear recurrence
///   Z_p = -sum_{i=1}^{n} s(n+1, n+1-i) Z_{p-i},   p > n,
/// seeded with the direct values Z_0..Z_n.
BigInt zagreb_by_recurrence(const Graph& g, std::uint64_t p);

struct RecurrenceResidual {
  std::uint64_t p = 0;
  BigInt residual;
  // The recurrence must hold here: p >= n + 1, or p = n with f_0 = 0.
  bool guaranteed = false;

  bool zero() const { return residual == 0; }
};

struct RecurrenceReport {
  std::size_t n = 0;
  std::uint64_t isolated = 0;
  std::vector<RecurrenceResidual> residuals;

  // Every guaranteed p has a zero residual.
  bool holds() const;
};

/// Residual Z_p + sum_{i=1}^{n} s(n+1, n+1-i) Z_{p-i} from direct values for
/// p in [p_min, p_max]. Requires p_min >= n. At p = n the residual equals
/// a_n, so it vanishes only without isolated vertices.
RecurrenceReport verify_recurrence(const Graph& g, std::uint64_t p_min,
                                   std::uint64_t p_max);

}  // namespace starseq
