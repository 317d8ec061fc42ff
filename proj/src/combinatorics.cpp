#include "grassmann/combinatorics.hpp"

#include <stdexcept>

namespace grassmann {

std::uint64_t MultiIndex::sum() const {
  std::uint64_t s = 0;
  for (auto e : entries_) s += e;
  return s;
}

std::uint64_t MultiIndex::weighted_sum() const {
  std::uint64_t s = 0;
  for (std::size_t pos = 0; pos < entries_.size(); ++pos) s += (pos + 1) * std::uint64_t{entries_[pos]};
  return s;
}

MultiIndex MultiIndex::raised(int s, std::uint32_t by) const {
  if (s < 1) return *this;
  if (static_cast<std::size_t>(s) > entries_.size())
    throw std::out_of_range("MultiIndex::raised: position out of range");
  Storage e = entries_;
  e[s - 1] += by;
  return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::lowered(int s, std::uint32_t by) const {
  if (s < 1) return *this;
  if (static_cast<std::size_t>(s) > entries_.size())
    throw std::out_of_range("MultiIndex::lowered: position out of range");
  if (entries_[s - 1] < by)
    throw std::domain_error("MultiIndex::lowered: entry would become negative");
  Storage e = entries_;
  e[s - 1] -= by;
  return MultiIndex(std::move(e));
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (std::size_t pos = a.size(); pos-- > 0;) {
    if (a[pos] != b[pos]) return a[pos] <=> b[pos];
  }
  return std::strong_ordering::equal;
}

BigInt binom_int(std::int64_t alpha, std::int64_t beta) {
  if (beta < 0) return 0;
  BigInt num = 1;
  BigInt den = 1;
  for (std::int64_t i = 0; i < beta; ++i) {
    num *= BigInt(alpha) - i;
    den *= i + 1;
  }
  return num / den;
}

bool multinomial_parity(std::span<const std::int64_t> a) {
  std::int64_t tail = 0;
  for (auto e : a) {
    if (e < 0) throw std::invalid_argument("multinomial_parity: negative entry");
    tail += e;
  }
  // prod_{t=2}^k binom(a_{t-1} + ... + a_k, a_{t-1})
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    if (!binom_parity(tail, a[i])) return false;
    tail -= a[i];
  }
  return true;
}

bool p_factor(std::size_t t, std::span<const std::int64_t> a, const MultiIndex& m) {
  const std::size_t k = a.size();
  if (m.num_vars() != k) throw std::invalid_argument("p_factor: A and M disagree on k");
  if (t < 2 || t > k) throw std::out_of_range("p_factor: t must lie in 2..k");
  std::int64_t top = 0;
  for (std::size_t j = t - 1; j <= k; ++j) top += a[j - 1];
  for (std::size_t j = t; j <= k; ++j) top -= m.m(j);
  return binom_parity(top, a[t - 2]);
}

bool p_product(std::span<const std::int64_t> a, const MultiIndex& m) {
  const std::size_t k = a.size();
  if (m.num_vars() != k) throw std::invalid_argument("p_product: A and M disagree on k");
  // Walk t = k down to 2 keeping suffix sums of A (from t-1) and M (from t).
  std::int64_t a_tail = a[k - 1];
  std::int64_t m_tail = 0;
  for (std::size_t t = k; t >= 2; --t) {
    a_tail += a[t - 2];
    m_tail += m.m(t);
    if (!binom_parity(a_tail - m_tail, a[t - 2])) return false;
  }
  return true;
}

} // namespace grassmann
