#include "grassmann/groebner_family.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "grassmann/dual_classes.hpp"

namespace grassmann {

GrassmannContext::GrassmannContext(std::size_t k, std::size_t n) : k_(k), n_(n) {
  if (k < 2) throw std::invalid_argument("GrassmannContext: k must be at least 2");
  if (n < k) throw std::invalid_argument("GrassmannContext: n must be at least k");
}

namespace {

void require_matching(const GrassmannContext& ctx, const MultiIndex& m) {
  if (m.num_vars() != ctx.k())
    throw std::invalid_argument("multi-index length does not match k - 1");
}

} // namespace

Polynomial g_direct(const GrassmannContext& ctx, const MultiIndex& m) {
  require_matching(ctx, m);
  return weighted_parity_sum(ctx.n() + 1 + m.weighted_sum(), m);
}

Monomial leading_term_of(const GrassmannContext& ctx, const MultiIndex& m) {
  require_matching(ctx, m);
  const std::uint64_t s = m.sum();
  if (s > ctx.n() + 1) throw std::domain_error("leading_term_of: S_M exceeds n + 1");
  Monomial::Storage e(ctx.k());
  e[0] = static_cast<std::uint32_t>(ctx.n() + 1 - s);
  for (std::size_t pos = 0; pos < m.size(); ++pos) e[pos + 1] = m[pos];
  return Monomial(std::move(e));
}

MultiIndex index_of_leading_term(const GrassmannContext& ctx, const Monomial& lead) {
  if (lead.num_vars() != ctx.k() || lead.total_degree() != ctx.n() + 1)
    throw std::domain_error("index_of_leading_term: exponent sum must be n + 1");
  MultiIndex::Storage e(lead.exponents().begin() + 1, lead.exponents().end());
  return MultiIndex(std::move(e));
}

std::optional<Polynomial> g_closed_form(const GrassmannContext& ctx, const MultiIndex& m) {
  require_matching(ctx, m);
  const std::size_t k = ctx.k();
  const std::size_t n = ctx.n();
  if (m.sum() > n + 1) return std::nullopt;

  // Every non-leading term W^A has S_A <= n, so S'_A <= kn; when
  // n + 1 + S'_M exceeds kn only the leading term survives.
  if (m.weighted_sum() + 1 > (k - 1) * n) return Polynomial(leading_term_of(ctx, m));

  if (m.m(k) != n - 1) return std::nullopt;
  std::vector<std::size_t> raised_positions;
  for (std::size_t pos = 1; pos + 1 < k; ++pos) {
    const auto e = m[pos - 1];
    if (e > 1) return std::nullopt;
    if (e == 1) raised_positions.push_back(pos);
  }
  const Monomial wk_power = Monomial::variable(k, k, static_cast<std::uint32_t>(n - 1));
  const auto w = [k](std::size_t j, std::uint32_t e = 1) { return Monomial::variable(k, j, e); };
  if (raised_positions.empty()) {
    // w_1^2 w_k^{n-1} + w_2 w_k^{n-1}
    return Polynomial::from_terms(k, {w(1, 2) * wk_power, w(2) * wk_power});
  }
  if (raised_positions.size() == 1) {
    // w_1 w_{s+1} w_k^{n-1} + w_{s+2} w_k^{n-1}
    const std::size_t s = raised_positions.front();
    return Polynomial::from_terms(k, {w(1) * w(s + 1) * wk_power, w(s + 2) * wk_power});
  }
  return std::nullopt;
}

MultiIndex raised_pair(const MultiIndex& m, int i, int j) { return m.raised(i).raised(j); }

Polynomial g_recurrence_step(const GrassmannContext& ctx, const MultiIndex& m, int i, int j,
                             const FamilyLookup& lookup) {
  require_matching(ctx, m);
  const int k = static_cast<int>(ctx.k());
  if (i < 1 || i > j || j > k - 1)
    throw std::out_of_range("g_recurrence_step: need 1 <= i <= j <= k - 1");
  Polynomial result = lookup(m.raised(j)) * Monomial::variable(ctx.k(), i);
  result += lookup(m.raised(i - 1)) * Monomial::variable(ctx.k(), j + 1);
  if (j < k - 1) result += lookup(raised_pair(m, i - 1, j + 1));
  return result;
}

std::vector<MultiIndex> multi_indices_up_to(std::size_t k, std::uint64_t bound) {
  std::vector<MultiIndex> out;
  MultiIndex::Storage cur(k - 1, 0);
  // Odometer over the positions, smallest position fastest.
  const auto fill = [&](auto&& self, std::size_t pos, std::uint64_t left) -> void {
    if (pos == 0) {
      out.emplace_back(cur);
      return;
    }
    for (std::uint64_t v = 0; v <= left; ++v) {
      cur[pos - 1] = static_cast<std::uint32_t>(v);
      self(self, pos - 1, left - v);
    }
    cur[pos - 1] = 0;
  };
  fill(fill, k - 1, bound);
  std::sort(out.begin(), out.end());
  return out;
}

const Polynomial& GroebnerFamily::element(const MultiIndex& m) const {
  require_matching(ctx_, m);
  if (m.sum() > ctx_.n() + 1) throw std::domain_error("GroebnerFamily: S_M exceeds n + 1");
  {
    std::shared_lock lock(mutex_);
    if (auto it = cache_.find(m); it != cache_.end()) return *it->second;
  }
  auto poly = std::make_unique<const Polynomial>(g_direct(ctx_, m));
  std::unique_lock lock(mutex_);
  auto [it, inserted] = cache_.try_emplace(m, std::move(poly));
  return *it->second;
}

const Polynomial& GroebnerFamily::element_with_leading_term(const Monomial& lead) const {
  return element(index_of_leading_term(ctx_, lead));
}

std::uint64_t GroebnerFamily::size() const {
  return static_cast<std::uint64_t>(binom_int(static_cast<std::int64_t>(ctx_.n() + ctx_.k()),
                                              static_cast<std::int64_t>(ctx_.k() - 1)));
}

std::vector<MultiIndex> GroebnerFamily::indices() const {
  return multi_indices_up_to(ctx_.k(), ctx_.n() + 1);
}

void GroebnerFamily::materialize(unsigned threads) const {
  const auto all = indices();
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, all.size()));
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < all.size(); i = next++) element(all[i]);
  };
  if (threads <= 1) {
    work();
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
}

std::size_t GroebnerFamily::cached_count() const {
  std::shared_lock lock(mutex_);
  return cache_.size();
}

std::unique_ptr<GroebnerFamily> build_family(const GrassmannContext& ctx, unsigned threads) {
  auto family = std::make_unique<GroebnerFamily>(ctx);
  family->materialize(threads);
  return family;
}

namespace {

nlohmann::json exponents_json(const Monomial& m) {
  return nlohmann::json(std::vector<std::uint32_t>(m.exponents().begin(), m.exponents().end()));
}

Monomial monomial_from_json(const nlohmann::json& j, std::size_t k) {
  if (!j.is_array() || j.size() != k) throw std::invalid_argument("monomial must be an array of k exponents");
  Monomial::Storage e;
  for (const auto& x : j) {
    if (!x.is_number_unsigned()) throw std::invalid_argument("exponents must be nonnegative integers");
    e.push_back(x.get<std::uint32_t>());
  }
  return Monomial(std::move(e));
}

} // namespace

nlohmann::json family_records_to_json(const std::vector<FamilyRecord>& records) {
  auto out = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json poly = nlohmann::json::array();
    for (const auto& t : r.poly) poly.push_back(exponents_json(t));
    out.push_back({{"M", std::vector<std::uint32_t>(r.m.entries().begin(), r.m.entries().end())},
                   {"lt", exponents_json(r.lead)},
                   {"poly", std::move(poly)}});
  }
  return out;
}

nlohmann::json family_to_json(const GroebnerFamily& family) {
  std::vector<FamilyRecord> records;
  for (const auto& m : family.indices()) {
    const Polynomial& g = family.element(m);
    records.push_back({m, g.leading_term(), g});
  }
  return family_records_to_json(records);
}

std::vector<FamilyRecord> family_records_from_json(const nlohmann::json& j, std::size_t k) {
  if (!j.is_array()) throw std::invalid_argument("family JSON must be an array");
  std::vector<FamilyRecord> out;
  for (const auto& rec : j) {
    if (!rec.is_object() || !rec.contains("M") || !rec.contains("lt") || !rec.contains("poly"))
      throw std::invalid_argument("family record needs M, lt and poly");
    const auto& mj = rec.at("M");
    if (!mj.is_array() || mj.size() != k - 1) throw std::invalid_argument("M must have k - 1 entries");
    MultiIndex::Storage me;
    for (const auto& x : mj) {
      if (!x.is_number_unsigned()) throw std::invalid_argument("M entries must be nonnegative integers");
      me.push_back(x.get<std::uint32_t>());
    }
    std::vector<Monomial> terms;
    for (const auto& t : rec.at("poly")) terms.push_back(monomial_from_json(t, k));
    out.push_back({MultiIndex(std::move(me)), monomial_from_json(rec.at("lt"), k),
                   Polynomial::from_terms(k, std::move(terms))});
  }
  return out;
}

} // namespace grassmann
