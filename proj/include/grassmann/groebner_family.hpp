#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "grassmann/combinatorics.hpp"
#include "grassmann/f2poly.hpp"

namespace grassmann {

/// The pair (k, n) describing G_{k,n}, the k-planes in R^{n+k}.
class GrassmannContext {
public:
  /// Throws std::invalid_argument unless n >= k >= 2.
  GrassmannContext(std::size_t k, std::size_t n);

  std::size_t k() const { return k_; }
  std::size_t n() const { return n_; }

  friend bool operator==(const GrassmannContext&, const GrassmannContext&) = default;

private:
  std::size_t k_;
  std::size_t n_;
};

/// g_M as a sum of P(A, M) W^A over A of weighted degree n + 1 + S'_M.
/// Defined for every nonnegative M, including S_M > n + 1.
Polynomial g_direct(const GrassmannContext& ctx, const MultiIndex& m);

/// g_M in closed form when M has one of the shapes with m_k close to n:
/// a single monomial W^{Mbar} whenever S'_M > (k-1)n - 1, and the
/// two-term elements at m_k = n - 1 with at most one other unit entry.
/// Returns nullopt for every other M.
std::optional<Polynomial> g_closed_form(const GrassmannContext& ctx, const MultiIndex& m);

using FamilyLookup = std::function<Polynomial(const MultiIndex&)>;

/// g_{M^{i,j}} assembled as w_i g_{M^j} + w_{j+1} g_{M^{i-1}} + g_{M^{i-1,j+1}},
/// the last summand dropped when j = k - 1.  `lookup` supplies the
/// right-hand elements.  Requires 1 <= i <= j <= k - 1.
Polynomial g_recurrence_step(const GrassmannContext& ctx, const MultiIndex& m, int i, int j,
                             const FamilyLookup& lookup);

/// The index M^{i,j} produced by g_recurrence_step.
MultiIndex raised_pair(const MultiIndex& m, int i, int j);

/// Mbar = (n + 1 - S_M, m_2, ..., m_k).  Throws std::domain_error if S_M > n + 1.
Monomial leading_term_of(const GrassmannContext& ctx, const MultiIndex& m);

/// Inverse of leading_term_of on monomials of exponent sum n + 1.
MultiIndex index_of_leading_term(const GrassmannContext& ctx, const Monomial& lead);

/// All M with S_M <= bound, in increasing right-lexicographic order.
std::vector<MultiIndex> multi_indices_up_to(std::size_t k, std::uint64_t bound);

/// The reduced Groebner basis {g_M : S_M <= n + 1} of I_{k,n}.
///
/// Elements are produced on demand and cached; materialize() fills in the
/// whole family.  Lookups are safe from several threads.
class GroebnerFamily {
public:
  explicit GroebnerFamily(GrassmannContext ctx) : ctx_(ctx) {}

  GroebnerFamily(const GroebnerFamily&) = delete;
  GroebnerFamily& operator=(const GroebnerFamily&) = delete;

  const GrassmannContext& context() const { return ctx_; }

  /// g_M; throws std::domain_error if S_M > n + 1.
  const Polynomial& element(const MultiIndex& m) const;
  /// The element whose leading term is `lead` (exponent sum n + 1).
  const Polynomial& element_with_leading_term(const Monomial& lead) const;

  /// binom(n + k, k - 1), the number of M with S_M <= n + 1.
  std::uint64_t size() const;
  std::vector<MultiIndex> indices() const;

  /// Computes every element, using up to `threads` workers.
  void materialize(unsigned threads = 0) const;
  std::size_t cached_count() const;

private:
  GrassmannContext ctx_;
  mutable std::shared_mutex mutex_;
  mutable std::map<MultiIndex, std::unique_ptr<const Polynomial>> cache_;
};

/// A fully materialized family.
std::unique_ptr<GroebnerFamily> build_family(const GrassmannContext& ctx, unsigned threads = 0);

/// JSON array of {"M": [...], "lt": [...], "poly": [[...], ...]} records in
/// family order; monomials listed in decreasing grlex order.
nlohmann::json family_to_json(const GroebnerFamily& family);

struct FamilyRecord {
  MultiIndex m;
  Monomial lead;
  Polynomial poly;
};

/// Parses the format written by family_to_json.  Throws std::invalid_argument
/// on malformed records.
std::vector<FamilyRecord> family_records_from_json(const nlohmann::json& j, std::size_t k);
nlohmann::json family_records_to_json(const std::vector<FamilyRecord>& records);

} // namespace grassmann
