#include "starseq/zagreb.hpp"

#include <algorithm>
#include <deque>

#include "starseq/error.hpp"

namespace starseq {

namespace {

// Z_0..Z_last from the frequency sequence.
std::vector<BigInt> direct_prefix(const FrequencySequence& f,
                                  std::uint64_t last) {
  std::vector<BigInt> out(last + 1);
  std::vector<BigInt> powers(f.size(), 1);
  for (std::uint64_t p = 0; p <= last; ++p) {
    BigInt sum = 0;
    for (std::size_t d = 0; d < f.size(); ++d) {
      if (p > 0) powers[d] *= static_cast<unsigned long>(d);
      if (f[d] != 0) sum += powers[d] * f[d];
    }
    out[p] = std::move(sum);
  }
  return out;
}

}  // namespace

bool RecurrenceReport::holds() const {
  return std::all_of(residuals.begin(), residuals.end(),
                     [](const auto& r) { return !r.guaranteed || r.zero(); });
}

BigInt zagreb_direct(const Graph& g, std::uint64_t p) {
  const auto f = frequency_sequence(g);
  BigInt sum = 0;
  BigInt term;
  for (std::size_t d = 0; d < f.size(); ++d) {
    if (f[d] == 0) continue;
    mpz_ui_pow_ui(term.get_mpz_t(), d, p);
    sum += term * f[d];
  }
  return sum;
}

BigInt zagreb_from_stars(const StarSequence& s, std::uint64_t p) {
  if (p == 0)
    throw DomainError(
        "the star formula needs p >= 1; use the direct route for Z_0 = n");
  BigInt sum = s.adjusted_first();
  const std::uint64_t top =
      std::min<std::uint64_t>(p, s.vertex_count() ? s.vertex_count() - 1 : 0);
  for (std::size_t i = 2; i <= top; ++i) {
    const BigInt si = s[i];
    if (si == 0) continue;
    sum += factorial(i) * stirling2(p, i) * si;
  }
  return sum;
}

ZagrebGenFunc genfunc_numerator(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const auto z = direct_prefix(frequency_sequence(g), n);
  const auto c = falling_factorial_coeffs(n);
  ZagrebGenFunc out{n, std::vector<BigInt>(n + 1)};
  for (std::size_t k = 0; k <= n; ++k) {
    BigInt a = 0;
    for (std::size_t i = 0; i <= k; ++i) a += c[k - i] * z[i];
    out.numerator[k] = std::move(a);
  }
  return out;
}

BigInt zagreb_by_recurrence(const Graph& g, std::uint64_t p) {
  const std::size_t n = g.vertex_count();
  const auto f = frequency_sequence(g);
  if (p <= n) return direct_prefix(f, p).back();

  const auto c = falling_factorial_coeffs(n);
  auto seed = direct_prefix(f, n);
  // holds Z_{q-n}..Z_{q-1}
  std::deque<BigInt> window(seed.begin() + 1, seed.end());
  BigInt next;
  for (std::uint64_t q = n + 1; q <= p; ++q) {
    next = 0;
    // Z_{q-i} sits at window[n - i]
    for (std::size_t i = 1; i <= n; ++i) next -= c[i] * window[n - i];
    window.pop_front();
    window.push_back(next);
  }
  return window.back();
}

RecurrenceReport verify_recurrence(const Graph& g, std::uint64_t p_min,
                                   std::uint64_t p_max) {
  const std::size_t n = g.vertex_count();
  if (p_min < n)
    throw DomainError("recurrence check needs p_min >= n = " +
                      std::to_string(n));
  const auto f = frequency_sequence(g);
  RecurrenceReport report{n, f[0], {}};
  if (p_max < p_min) return report;
  const auto z = direct_prefix(f, p_max);
  const auto c = falling_factorial_coeffs(n);
  for (std::uint64_t p = p_min; p <= p_max; ++p) {
    BigInt r = 0;
    for (std::size_t i = 0; i <= n; ++i) r += c[i] * z[p - i];
    const bool guaranteed = p >= n + 1 || f[0] == 0;
    report.residuals.push_back({p, std::move(r), guaranteed});
  }
  return report;
}

}  // namespace starseq
