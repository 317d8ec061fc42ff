#include "grassmann/dual_classes.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace grassmann {

namespace {

struct ParitySumWalker {
  std::size_t k;
  std::vector<std::int64_t> m_suffix; // m_suffix[j] = sum_{i >= j} m_i, j = 2..k+1
  Monomial::Storage exps;
  std::vector<Monomial> out;

  // Choose a_j given the remaining weighted degree and sum_{i > j} a_i.
  void walk(std::size_t j, std::uint64_t remaining, std::int64_t a_tail) {
    if (j == 1) {
      const auto a1 = static_cast<std::int64_t>(remaining);
      if (k >= 2 && !binom_parity(a_tail + a1 - m_suffix[2], a1)) return;
      exps[0] = static_cast<std::uint32_t>(a1);
      out.emplace_back(exps);
      return;
    }
    for (std::uint64_t a = 0; a * j <= remaining; ++a) {
      const auto aj = static_cast<std::int64_t>(a);
      // P_{j+1} is fixed once a_j, ..., a_k are.
      if (j < k && !binom_parity(a_tail + aj - m_suffix[j + 1], aj)) continue;
      exps[j - 1] = static_cast<std::uint32_t>(a);
      walk(j - 1, remaining - a * j, a_tail + aj);
    }
    exps[j - 1] = 0;
  }
};

} // namespace

Polynomial weighted_parity_sum(std::uint64_t degree, const MultiIndex& m) {
  const std::size_t k = m.num_vars();
  if (k < 2) throw std::invalid_argument("weighted_parity_sum: k must be at least 2");
  ParitySumWalker w{k, std::vector<std::int64_t>(k + 2, 0), Monomial::Storage(k, 0), {}};
  for (std::size_t j = k; j >= 2; --j) w.m_suffix[j] = w.m_suffix[j + 1] + m.m(j);
  w.walk(k, degree, 0);
  return Polynomial::from_terms(k, std::move(w.out));
}

Polynomial wbar_recurrence(std::uint64_t r, std::size_t k) {
  if (k < 2) throw std::invalid_argument("wbar_recurrence: k must be at least 2");
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<Polynomial>> memo;

  std::lock_guard lock(mutex);
  auto& table = memo[k];
  if (table.empty()) table.push_back(Polynomial::one(k));
  while (table.size() <= r) {
    const std::uint64_t s = table.size();
    Polynomial next(k);
    for (std::size_t i = 1; i <= k && i <= s; ++i) {
      next += table[s - i] * Monomial::variable(k, i);
    }
    table.push_back(std::move(next));
  }
  return table[r];
}

Polynomial wbar_explicit(std::uint64_t r, std::size_t k) {
  if (k < 2) throw std::invalid_argument("wbar_explicit: k must be at least 2");
  static std::mutex mutex;
  static std::map<std::pair<std::uint64_t, std::size_t>, Polynomial> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find({r, k}); it != memo.end()) return it->second;
  }
  Polynomial p = weighted_parity_sum(r, MultiIndex::zero(k));
  std::lock_guard lock(mutex);
  return memo.emplace(std::pair{r, k}, std::move(p)).first->second;
}

} // namespace grassmann
