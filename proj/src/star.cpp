#include "starseq/star.hpp"

#include <algorithm>

#include "starseq/error.hpp"

namespace starseq {

namespace {

BigInt power(std::uint64_t base, std::uint64_t exp) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exp);
  return out;
}

std::uint64_t to_u64(const BigInt& x) {
  if (!x.fits_ulong_p()) throw InconsistentSequence("count exceeds 64 bits");
  return x.get_ui();
}

}  // namespace

StarSequence::StarSequence(std::size_t n, BigInt s1, std::vector<BigInt> higher)
    : n_(n), s1_(std::move(s1)), higher_(std::move(higher)) {
  const std::size_t len = n >= 2 ? n - 2 : 0;
  for (std::size_t i = len; i < higher_.size(); ++i) {
    if (higher_[i] != 0)
      throw InconsistentSequence("S_" + std::to_string(i + 2) +
                                 " must be zero on " + std::to_string(n) +
                                 " vertices");
  }
  if (n < 2 && s1_ != 0)
    throw InconsistentSequence("S_1 must be zero on fewer than two vertices");
  higher_.resize(len);
}

BigInt StarSequence::operator[](std::size_t k) const {
  if (k == 0) throw DomainError("star index starts at 1");
  if (k == 1) return s1_;
  if (k - 2 < higher_.size()) return higher_[k - 2];
  return 0;
}

BigInt StarSequence::adjusted(std::size_t k) const {
  return k == 1 ? adjusted_first() : (*this)[k];
}

std::vector<BigInt> StarSequence::adjusted_sequence() const {
  std::vector<BigInt> out;
  if (n_ < 2) return out;
  out.reserve(n_ - 1);
  out.push_back(adjusted_first());
  out.insert(out.end(), higher_.begin(), higher_.end());
  return out;
}

std::string Classification::to_string() const {
  switch (kind) {
    case Kind::path:
      return "path";
    case Kind::regular:
      return "regular(" + std::to_string(degree) + ")";
    case Kind::other:
      break;
  }
  return "other";
}

StarSequence star_sequence(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const auto deg = degrees(g);
  std::vector<BigInt> higher(n >= 2 ? n - 2 : 0);
  for (std::size_t k = 2; k < n; ++k) {
    BigInt sum = 0;
    for (auto d : deg) sum += binomial(d, k);
    higher[k - 2] = std::move(sum);
  }
  return StarSequence(n, BigInt(static_cast<unsigned long>(g.edge_count())),
                      std::move(higher));
}

StarSequence star_from_frequency(const FrequencySequence& f) {
  const std::size_t n = f.size();
  if (n == 0) throw DomainError("frequency sequence of the empty graph");
  BigInt degree_sum = 0;
  for (std::size_t i = 1; i < n; ++i)
    degree_sum += BigInt(static_cast<unsigned long>(i)) * f[i];
  if (degree_sum % 2 != 0)
    throw InconsistentSequence("degree sum " + degree_sum.get_str() +
                               " is odd");
  std::vector<BigInt> higher(n >= 2 ? n - 2 : 0);
  for (std::size_t k = 2; k < n; ++k) {
    BigInt sum = 0;
    for (std::size_t i = k; i < n; ++i) sum += binomial(i, k) * f[i];
    higher[k - 2] = std::move(sum);
  }
  return StarSequence(n, degree_sum / 2, std::move(higher));
}

FrequencySequence frequency_from_star(const StarSequence& s) {
  const std::size_t n = s.vertex_count();
  if (n == 0) throw DomainError("star sequence of the empty graph");
  std::vector<BigInt> f(n);
  for (std::size_t i = 2; i < n; ++i) {
    for (std::size_t k = i; k < n; ++k) {
      const BigInt term = binomial(k, i) * s[k];
      if ((k - i) % 2 == 0)
        f[i] += term;
      else
        f[i] -= term;
    }
  }
  if (n >= 2) {
    f[1] = s.adjusted_first();
    for (std::size_t k = 2; k < n; ++k) {
      const BigInt term = BigInt(static_cast<unsigned long>(k)) * s[k];
      if ((k - 1) % 2 == 0)
        f[1] += term;
      else
        f[1] -= term;
    }
  }
  BigInt non_isolated = 0;
  for (std::size_t i = 1; i < n; ++i) non_isolated += f[i];
  f[0] = BigInt(static_cast<unsigned long>(n)) - non_isolated;

  std::vector<std::uint64_t> counts(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (f[i] < 0)
      throw InconsistentSequence("star sequence yields f_" + std::to_string(i) +
                                 " = " + f[i].get_str());
    counts[i] = to_u64(f[i]);
  }
  return FrequencySequence(std::move(counts));
}

BigInt alternating_moment(const StarSequence& s, std::uint64_t m) {
  const std::size_t n = s.vertex_count();
  BigInt sum = s.adjusted_first();
  for (std::size_t i = 2; i < n; ++i) {
    const BigInt term = power(i, m) * s[i];
    if ((i - 1) % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

namespace {

BigInt moment_sum(const FrequencySequence& f, std::uint64_t m, bool negated) {
  if (m == 0)
    throw DomainError(
        "moment identity needs m >= 1; for m = 0 the sum of f_i over i >= 1 "
        "applies");
  BigInt sum = 0;
  const std::size_t top = std::min<std::uint64_t>(m, f.size() ? f.size() - 1 : 0);
  for (std::size_t k = 1; k <= top; ++k) {
    if (f[k] == 0) continue;
    const BigInt term = factorial(k) * stirling2(m, k) * f[k];
    const bool positive = ((k - 1) % 2 == 0) != negated;
    if (positive)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

}  // namespace

BigInt moment_identity_rhs(const FrequencySequence& f, std::uint64_t m) {
  return moment_sum(f, m, false);
}

BigInt moment_identity_rhs_negated(const FrequencySequence& f,
                                   std::uint64_t m) {
  return moment_sum(f, m, true);
}

Rational inverse_degree_edge_sum(const Graph& g) {
  const auto deg = degrees(g);
  Rational sum = 0;
  for (const auto& e : g.edges()) {
    sum += Rational(1, static_cast<unsigned long>(deg[e.u]));
    sum += Rational(1, static_cast<unsigned long>(deg[e.v]));
  }
  sum.canonicalize();
  return sum;
}

std::uint64_t isolated_count_from_star(const StarSequence& s) {
  const BigInt f0 = BigInt(static_cast<unsigned long>(s.vertex_count())) -
                    alternating_moment(s, 0);
  if (f0 < 0)
    throw InconsistentSequence("star sequence yields f_0 = " + f0.get_str());
  return to_u64(f0);
}

Classification classify(const StarSequence& s) {
  const std::size_t n = s.vertex_count();
  if (n < 2) return {};
  const BigInt nn = static_cast<unsigned long>(n);

  bool path = s.s1() == nn - 1 && s[2] == nn - 2;
  for (std::size_t i = 3; path && i < n; ++i) path = s[i] == 0;
  if (path) return {Classification::Kind::path, 0};

  std::size_t k = 0;
  for (std::size_t i = n - 1; i >= 1; --i) {
    if (s[i] != 0) {
      k = i;
      break;
    }
  }
  if (k == 0) return {};
  if (k == 1) {
    if (s.adjusted_first() == nn) return {Classification::Kind::regular, 1};
    return {};
  }
  const BigInt top = s[k];
  bool regular = top == nn && s.adjusted_first() ==
                                  BigInt(static_cast<unsigned long>(k)) * top;
  for (std::size_t i = 2; regular && i <= k; ++i)
    regular = s[i] == binomial(k, i) * top;
  if (regular) return {Classification::Kind::regular, k};
  return {};
}

}  // namespace starseq
