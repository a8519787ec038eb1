#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <shared_mutex>
#include <vector>

namespace starseq {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Binomial coefficient C(n, k); zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);

BigInt factorial(std::uint64_t n);

/// Memoized Stirling numbers of the second kind {p, k} and signed Stirling
/// numbers of the first kind s(n, k).
///
/// Rows are built by the recurrences
///   {p, k} = {p-1, k-1} + k {p-1, k}
///   s(n, k) = s(n-1, k-1) - (n-1) s(n-1, k)
/// and grown on demand. Lookups may run concurrently; growth takes an
/// exclusive lock. Values are returned by copy since growth may reallocate.
class StirlingTables {
 public:
  StirlingTables() = default;
  StirlingTables(const StirlingTables&) = delete;
  StirlingTables& operator=(const StirlingTables&) = delete;

  BigInt second_kind(std::size_t p, std::size_t k) const;
  BigInt first_kind_signed(std::size_t n, std::size_t k) const;

  // Number of rows currently materialized (rows 0..size-1).
  std::size_t second_kind_rows() const;
  std::size_t first_kind_rows() const;

 private:
  static void grow(std::vector<std::vector<BigInt>>& rows, std::size_t upto,
                   bool first_kind);

  mutable std::shared_mutex mutex_;
  mutable std::vector<std::vector<BigInt>> second_;
  mutable std::vector<std::vector<BigInt>> first_;
};

/// Process-wide table used by the free functions below.
const StirlingTables& shared_stirling_tables();

BigInt stirling2(std::size_t p, std::size_t k);
BigInt stirling1_signed(std::size_t n, std::size_t k);

/// Coefficients c_0..c_n of (1 - t)(1 - 2t)...(1 - nt), i.e.
/// c_i = s(n+1, n+1-i).
std::vector<BigInt> falling_factorial_coeffs(std::size_t n);

}  // namespace starseq
