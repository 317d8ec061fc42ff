#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "grassmann/cohomology.hpp"
#include "grassmann/f2poly.hpp"
#include "grassmann/groebner_family.hpp"

namespace grassmann {

/// Sq^i(w_j) in F2[w_1..w_k] by Wu's formula
///   Sq^i(w_j) = sum_{t=0}^{i} binom(j - i + t - 1, t) w_{i-t} w_{j+t},
/// with w_0 = 1 and w_m = 0 for m > k.  Zero when i > j.
/// Throws std::out_of_range unless 1 <= j <= k.
Polynomial sq_on_generator(std::uint64_t i, std::size_t j, std::size_t k);

/// Sq^i(f) on H*(BO(k)) = F2[w_1..w_k], extended from the generators by the
/// Cartan formula.  No reduction modulo I_{k,n} is applied.
Polynomial sq(std::uint64_t i, const Polynomial& f);

/// e_j(x_1, ..., x_k) as a polynomial in k root variables.
Polynomial elementary_symmetric(std::size_t j, std::size_t k);

/// Rewrites a symmetric polynomial in k root variables as a polynomial in
/// the elementary symmetric functions, returned with w_j standing for e_j.
/// Throws std::domain_error if the input is not symmetric.
Polynomial symmetric_to_elementary(const Polynomial& symmetric);

/// Total Stiefel-Whitney class of gamma_k (x) gamma_k through weighted
/// degree max_degree, via the splitting principle: the product of
/// (1 + x_i + x_j) over all 1 <= i, j <= k, rewritten in w_1..w_k.
/// Requires max_degree <= k^2.
Polynomial tensor_square_sw(std::size_t k, std::uint64_t max_degree);

/// Terms of weighted degree <= d.
Polynomial truncate_weighted(const Polynomial& f, std::uint64_t d);

/// 2^{r+1} - n - 5 where 2^r < n + 5 <= 2^{r+1}.
std::uint64_t normal_bundle_exponent(std::uint64_t n);

/// w(gamma_5 (x) gamma_5) (1 + w_1 + ... + w_5)^{2^{r+1}-n-5} before
/// reduction, truncated to weighted degree max_degree when given.
Polynomial normal_bundle_total(std::uint64_t n, std::optional<std::uint64_t> max_degree = std::nullopt);

/// Stiefel-Whitney classes w_d(nu) of the stable normal bundle of G_{5,n},
/// for d = 0..max_degree (default 5n), each reduced to normal form.
/// Requires n to be a positive multiple of 8 and family over (5, n).
std::map<std::uint64_t, CohomologyClass> normal_bundle_sw(std::uint64_t n, const GroebnerFamily& family,
                                                          std::optional<std::uint64_t> max_degree = std::nullopt);

struct ObstructionReport {
  std::uint64_t n;
  /// Normal form of Sq^1(w_4 w_5^{n-1}).
  CohomologyClass sq1_value;
  /// w_2(nu), as used in the k-invariant below.
  CohomologyClass w2_normal;
  /// Normal form of (Sq^2 + w_2(nu))(w_2 w_5^{n-1}).
  CohomologyClass k1_obstruction_value;
  /// Both values above are nonzero.
  bool lift_possible;
};

/// Evaluates the two top-dimensional cohomology computations that decide
/// whether the normal bundle of G_{5,n} lifts past the k-invariants
/// k_2^1 and k_1^1 of the 5n-MPT for BO(5n-3) -> BO.  Requires n to be a
/// positive multiple of 8 and family over (5, n).
ObstructionReport immersion_obstruction_check(std::uint64_t n, const GroebnerFamily& family);

/// Number of ones in the binary expansion of m.
int alpha(std::uint64_t m);

} // namespace grassmann
