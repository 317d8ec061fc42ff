#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "grassmann/f2poly.hpp"
#include "grassmann/groebner_family.hpp"

namespace grassmann {

// A plain Buchberger engine over F2 with the grlex order.  It shares only
// the polynomial arithmetic with the rest of the library: divisors are
// found by searching, and the basis is built from the dual classes alone.

/// (lcm / LT(f)) f + (lcm / LT(g)) g.  Throws std::domain_error on zero input.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Full reduction of f by `divisors`: the remainder has no term divisible
/// by any divisor's leading term.  The first divisor found is used.
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& divisors);

/// A polynomial together with cofactors h_i such that value = sum h_i f_i
/// over the original generators f_i.
struct TracedPolynomial {
  Polynomial value;
  std::vector<Polynomial> cofactors;
};

/// A Groebner basis of the ideal generated by `generators` (all nonzero,
/// common k).  Pairs are processed smallest lcm first and pairs with
/// coprime leading terms are skipped.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& generators);

/// buchberger() that also records how each element is built from the generators.
std::vector<TracedPolynomial> buchberger_traced(const std::vector<Polynomial>& generators);

/// The reduced Groebner basis of the ideal spanned by a Groebner basis,
/// sorted by increasing leading term.
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> gb);

class OracleCapExceeded : public std::length_error {
public:
  using std::length_error::length_error;
};

inline constexpr std::uint64_t kDefaultOracleCap = 1000;

/// Reduced Groebner basis of (wbar_{n+1}, ..., wbar_{n+k}) computed from
/// scratch.  Throws OracleCapExceeded if binom(n + k, k - 1) > cap.
std::vector<Polynomial> oracle_basis(const GrassmannContext& ctx,
                                     std::uint64_t cap = kDefaultOracleCap);

/// Whether oracle_basis(ctx) and the closed-form family agree as sets.
bool oracle_equals_family(const GrassmannContext& ctx, std::uint64_t cap = kDefaultOracleCap);

} // namespace grassmann
