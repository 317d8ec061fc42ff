#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace grassmann {

using BigInt = boost::multiprecision::cpp_int;

/// An index M = (m_2, ..., m_k) naming a Groebner basis element.
///
/// Coordinates are addressed by position s = 1..k-1, so that position s
/// holds m_{s+1}.  The raising/lowering helpers follow the same positional
/// convention: raised(s) adds one to m_{s+1}, and any s < 1 leaves the
/// index unchanged.
class MultiIndex {
public:
  using Storage = boost::container::small_vector<std::uint32_t, 8>;

  MultiIndex() = default;
  explicit MultiIndex(Storage entries) : entries_(std::move(entries)) {}
  MultiIndex(std::initializer_list<std::uint32_t> entries)
      : entries_(entries.begin(), entries.end()) {}

  static MultiIndex zero(std::size_t k) { return MultiIndex(Storage(k - 1, 0)); }

  /// Number of variables k of the ambient ring (the index has k-1 entries).
  std::size_t num_vars() const { return entries_.size() + 1; }
  std::size_t size() const { return entries_.size(); }

  /// m_j for j in 2..k.
  std::uint32_t m(std::size_t j) const { return entries_.at(j - 2); }
  std::uint32_t operator[](std::size_t pos) const { return entries_[pos]; }
  std::span<const std::uint32_t> entries() const { return {entries_.data(), entries_.size()}; }

  /// S_M = sum of the entries.
  std::uint64_t sum() const;
  /// S'_M = sum over j of (j-1) m_j.
  std::uint64_t weighted_sum() const;

  MultiIndex raised(int s, std::uint32_t by = 1) const;
  MultiIndex lowered(int s, std::uint32_t by = 1) const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  /// Right-lexicographic order: the last differing coordinate decides.
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);

private:
  Storage entries_;
};

/// Exact binomial coefficient for arbitrary integer arguments, using the
/// falling-factorial extension to negative upper index and zero for a
/// negative lower index.
BigInt binom_int(std::int64_t alpha, std::int64_t beta);

/// binom_int(alpha, beta) mod 2 without big-integer arithmetic.
/// Valid for |alpha|, |beta| < 2^62.
constexpr bool binom_parity(std::int64_t alpha, std::int64_t beta) {
  if (beta < 0) return false;
  if (beta == 0) return true;
  if (alpha < 0) {
    // binom(alpha, beta) = (-1)^beta binom(beta - alpha - 1, beta)
    alpha = beta - alpha - 1;
  }
  if (beta > alpha) return false;
  // Lucas: odd iff every bit of beta is set in alpha.
  return (alpha & beta) == beta;
}

/// [a_1, ..., a_k] mod 2.  Throws std::invalid_argument on a negative entry.
bool multinomial_parity(std::span<const std::int64_t> a);

/// P_t(A, M) mod 2 for 2 <= t <= k.  A may contain negative entries.
bool p_factor(std::size_t t, std::span<const std::int64_t> a, const MultiIndex& m);

/// P(A, M) mod 2, the product of p_factor over t = 2..k.
bool p_product(std::span<const std::int64_t> a, const MultiIndex& m);

} // namespace grassmann
