#include "grassmann/steenrod.hpp"

#include <bit>
#include <mutex>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace grassmann {

namespace {

// parts[d] = Sq^d(x) for d = 0..i, the truncated total square of x.
using GradedParts = std::vector<Polynomial>;

GradedParts multiply_truncated(const GradedParts& a, const GradedParts& b, std::size_t k) {
  const std::size_t top = a.size() - 1;
  GradedParts out(top + 1, Polynomial(k));
  for (std::size_t d = 0; d <= top; ++d) {
    for (std::size_t s = 0; s <= d; ++s) {
      if (a[s].is_zero() || b[d - s].is_zero()) continue;
      out[d] += a[s] * b[d - s];
    }
  }
  return out;
}

// Truncated total square of w_j^m, by binary expansion of m: the total
// square is multiplicative and commutes with squaring, so
// Sq(w_j^{2^e}) = sum_d (Sq^d w_j)^{2^e}, concentrated in degrees d 2^e.
const GradedParts& power_parts(std::size_t k, std::size_t j, std::uint64_t m, std::uint64_t i) {
  static std::mutex mutex;
  static std::map<std::tuple<std::size_t, std::size_t, std::uint64_t, std::uint64_t>, GradedParts> memo;
  const auto key = std::make_tuple(k, j, m, i);
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }

  GradedParts result(i + 1, Polynomial(k));
  result[0] = Polynomial::one(k);
  std::vector<Polynomial> generator_parts; // Sq^d(w_j)^{2^e}
  for (std::uint64_t d = 0; d <= std::min<std::uint64_t>(i, j); ++d)
    generator_parts.push_back(sq_on_generator(d, j, k));
  for (std::uint64_t e = 0; (m >> e) != 0; ++e) {
    if ((m >> e) & 1) {
      GradedParts factor(i + 1, Polynomial(k));
      for (std::uint64_t d = 0; d < generator_parts.size(); ++d) {
        const std::uint64_t deg = d << e;
        if (deg <= i) factor[deg] = generator_parts[d];
      }
      result = multiply_truncated(result, factor, k);
    }
    for (auto& p : generator_parts) p = p.frobenius();
  }

  std::lock_guard lock(mutex);
  return memo.emplace(key, std::move(result)).first->second;
}

Polynomial sq_monomial(std::uint64_t i, const Monomial& t) {
  const std::size_t k = t.num_vars();
  GradedParts total(i + 1, Polynomial(k));
  total[0] = Polynomial::one(k);
  for (std::size_t j = 1; j <= k; ++j) {
    if (t[j - 1] == 0) continue;
    total = multiply_truncated(total, power_parts(k, j, t[j - 1], i), k);
  }
  return total[i];
}

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.num_vars(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

struct LexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return lex_compare(a, b) > 0; }
};

void require_g5n(std::uint64_t n, const GroebnerFamily& family) {
  if (n < 8 || n % 8 != 0) throw std::invalid_argument("n must be a positive multiple of 8");
  if (family.context().k() != 5 || family.context().n() != n)
    throw std::invalid_argument("family must be the Groebner basis for G_{5,n}");
}

} // namespace

Polynomial sq_on_generator(std::uint64_t i, std::size_t j, std::size_t k) {
  if (j < 1 || j > k) throw std::out_of_range("sq_on_generator: j must lie in 1..k");
  Polynomial out(k);
  if (i > j) return out;
  std::vector<Monomial> terms;
  for (std::uint64_t t = 0; t <= i; ++t) {
    if (j + t > k) break;
    const auto top = static_cast<std::int64_t>(j) - static_cast<std::int64_t>(i) + static_cast<std::int64_t>(t) - 1;
    if (!binom_parity(top, static_cast<std::int64_t>(t))) continue;
    Monomial m = Monomial::variable(k, j + t);
    if (i - t > 0) m = m * Monomial::variable(k, i - t);
    terms.push_back(std::move(m));
  }
  return Polynomial::from_terms(k, std::move(terms));
}

Polynomial sq(std::uint64_t i, const Polynomial& f) {
  const std::size_t k = f.num_vars();
  Polynomial out(k);
  if (i == 0) return f;
  for (const auto& t : f) {
    if (i > t.weighted_degree()) continue;
    out += sq_monomial(i, t);
  }
  return out;
}

Polynomial elementary_symmetric(std::size_t j, std::size_t k) {
  if (j > k) return Polynomial(k);
  std::vector<Monomial> terms;
  Monomial::Storage cur(k, 0);
  const auto pick = [&](auto&& self, std::size_t from, std::size_t left) -> void {
    if (left == 0) {
      terms.emplace_back(cur);
      return;
    }
    for (std::size_t v = from; v + left <= k; ++v) {
      cur[v] = 1;
      self(self, v + 1, left - 1);
      cur[v] = 0;
    }
  };
  pick(pick, 0, j);
  return Polynomial::from_terms(k, std::move(terms));
}

Polynomial symmetric_to_elementary(const Polynomial& symmetric) {
  const std::size_t k = symmetric.num_vars();
  std::vector<Polynomial> e;
  for (std::size_t j = 1; j <= k; ++j) e.push_back(elementary_symmetric(j, k));

  std::set<Monomial, LexGreater> work(symmetric.begin(), symmetric.end());
  std::vector<Monomial> result;
  while (!work.empty()) {
    const Monomial lead = *work.begin();
    Monomial::Storage c(k);
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint32_t next = i + 1 < k ? lead[i + 1] : 0;
      if (lead[i] < next) throw std::domain_error("symmetric_to_elementary: input is not symmetric");
      c[i] = lead[i] - next;
    }
    // e_1^{c_1} ... e_k^{c_k} has lex-leading term x^lead.
    Polynomial product = Polynomial::one(k);
    for (std::size_t i = 0; i < k; ++i) {
      if (c[i] > 0) product *= e[i].pow(c[i]);
    }
    for (const auto& t : product) {
      auto [it, inserted] = work.insert(t);
      if (!inserted) work.erase(it);
    }
    result.emplace_back(std::move(c));
  }
  return Polynomial::from_terms(k, std::move(result));
}

Polynomial truncate_weighted(const Polynomial& f, std::uint64_t d) {
  std::vector<Monomial> kept;
  for (const auto& t : f) {
    if (t.weighted_degree() <= d) kept.push_back(t);
  }
  return Polynomial::from_sorted_unchecked(f.num_vars(), std::move(kept));
}

Polynomial tensor_square_sw(std::size_t k, std::uint64_t max_degree) {
  if (k < 1) throw std::invalid_argument("tensor_square_sw: k must be positive");
  if (max_degree > k * k) throw std::invalid_argument("tensor_square_sw: degree exceeds k^2");
  // Root variables x_1..x_k share the Monomial type; their degree is the
  // exponent sum.
  Polynomial roots_product = Polynomial::one(k);
  for (std::size_t i = 1; i <= k; ++i) {
    for (std::size_t j = 1; j <= k; ++j) {
      const Polynomial factor = Polynomial::from_terms(
          k, {Monomial::one(k), Monomial::variable(k, i), Monomial::variable(k, j)});
      std::vector<Monomial> kept;
      for (const auto& t : roots_product * factor) {
        if (t.total_degree() <= max_degree) kept.push_back(t);
      }
      roots_product = Polynomial::from_sorted_unchecked(k, std::move(kept));
    }
  }
  return symmetric_to_elementary(roots_product);
}

std::uint64_t normal_bundle_exponent(std::uint64_t n) {
  const std::uint64_t upper = std::bit_ceil(n + 5); // 2^{r+1}
  return upper - n - 5;
}

Polynomial normal_bundle_total(std::uint64_t n, std::optional<std::uint64_t> max_degree) {
  constexpr std::size_t k = 5;
  const std::uint64_t e = normal_bundle_exponent(n);
  const std::uint64_t top = max_degree.value_or(k * k + k * e);
  Polynomial total_w = Polynomial::one(k);
  for (std::size_t j = 1; j <= k; ++j) total_w += Polynomial::variable(k, j);
  Polynomial result = tensor_square_sw(k, std::min<std::uint64_t>(top, k * k));
  for (std::uint64_t step = 0; step < e; ++step) result = truncate_weighted(result * total_w, top);
  return result;
}

std::map<std::uint64_t, CohomologyClass> normal_bundle_sw(std::uint64_t n, const GroebnerFamily& family,
                                                          std::optional<std::uint64_t> max_degree) {
  require_g5n(n, family);
  const std::uint64_t top = max_degree.value_or(5 * n);
  const Polynomial total = normal_bundle_total(n, top);
  std::map<std::uint64_t, CohomologyClass> out;
  for (std::uint64_t d = 0; d <= top; ++d) out.emplace(d, normal_form(total.weighted_component(d), family));
  return out;
}

ObstructionReport immersion_obstruction_check(std::uint64_t n, const GroebnerFamily& family) {
  require_g5n(n, family);
  constexpr std::size_t k = 5;
  const auto w = [](std::size_t j, std::uint32_t e = 1) { return Monomial::variable(k, j, e); };
  const auto top_power = static_cast<std::uint32_t>(n - 1);

  CohomologyClass w2_normal = normal_bundle_sw(n, family, 2).at(2);

  const Polynomial x1(w(4) * w(5, top_power));
  CohomologyClass sq1_value = normal_form(sq(1, x1), family);

  const Polynomial x2(w(2) * w(5, top_power));
  CohomologyClass k1_value = normal_form(sq(2, x2) + w2_normal.value() * x2, family);

  const bool lift = !sq1_value.is_zero() && !k1_value.is_zero();
  return {n, std::move(sq1_value), std::move(w2_normal), std::move(k1_value), lift};
}

int alpha(std::uint64_t m) { return std::popcount(m); }

} // namespace grassmann
