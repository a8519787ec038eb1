#include "starseq/combinatorics.hpp"

#include <mutex>

namespace starseq {

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt factorial(std::uint64_t n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

void StirlingTables::grow(std::vector<std::vector<BigInt>>& rows,
                          std::size_t upto, bool first_kind) {
  if (rows.empty()) rows.push_back({BigInt(1)});
  while (rows.size() <= upto) {
    const std::size_t n = rows.size();
    const auto& prev = rows.back();
    std::vector<BigInt> row(n + 1);
    // row[0] stays 0 for n >= 1
    for (std::size_t k = 1; k <= n; ++k) {
      BigInt carry = prev[k - 1];
      if (k < n) {
        if (first_kind)
          carry -= BigInt(static_cast<unsigned long>(n - 1)) * prev[k];
        else
          carry += BigInt(static_cast<unsigned long>(k)) * prev[k];
      }
      row[k] = std::move(carry);
    }
    rows.push_back(std::move(row));
  }
}

BigInt StirlingTables::second_kind(std::size_t p, std::size_t k) const {
  if (k > p) return 0;
  {
    std::shared_lock lock(mutex_);
    if (p < second_.size()) return second_[p][k];
  }
  std::unique_lock lock(mutex_);
  grow(second_, p, false);
  return second_[p][k];
}

BigInt StirlingTables::first_kind_signed(std::size_t n, std::size_t k) const {
  if (k > n) return 0;
  {
    std::shared_lock lock(mutex_);
    if (n < first_.size()) return first_[n][k];
  }
  std::unique_lock lock(mutex_);
  grow(first_, n, true);
  return first_[n][k];
}

std::size_t StirlingTables::second_kind_rows() const {
  std::shared_lock lock(mutex_);
  return second_.size();
}

std::size_t StirlingTables::first_kind_rows() const {
  std::shared_lock lock(mutex_);
  return first_.size();
}

const StirlingTables& shared_stirling_tables() {
  static const StirlingTables tables;
  return tables;
}

BigInt stirling2(std::size_t p, std::size_t k) {
  return shared_stirling_tables().second_kind(p, k);
}

BigInt stirling1_signed(std::size_t n, std::size_t k) {
  return shared_stirling_tables().first_kind_signed(n, k);
}

std::vector<BigInt> falling_factorial_coeffs(std::size_t n) {
  std::vector<BigInt> coeffs(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    coeffs[i] = stirling1_signed(n + 1, n + 1 - i);
  return coeffs;
}

}  // namespace starseq
