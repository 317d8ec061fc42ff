#pragma once

#include <cstdint>

#include "grassmann/combinatorics.hpp"
#include "grassmann/f2poly.hpp"

namespace grassmann {

/// Sum of P(A, M) W^A over all nonnegative k-tuples A of weighted degree
/// `degree`, where k = m.num_vars().
///
/// The exponent vectors are enumerated from a_k down to a_1, and a branch is
/// abandoned as soon as one of the factors P_t(A, M) that it already
/// determines is even.  With M = 0 this is the multinomial sum defining the
/// dual classes; with general M it is the Groebner basis element g_M.
Polynomial weighted_parity_sum(std::uint64_t degree, const MultiIndex& m);

/// Dual Stiefel-Whitney class of weighted degree r in w_1..w_k, from
/// (1 + w_1 + ... + w_k)(1 + wbar_1 + wbar_2 + ...) = 1.
Polynomial wbar_recurrence(std::uint64_t r, std::size_t k);

/// Same class from the closed multinomial formula.
Polynomial wbar_explicit(std::uint64_t r, std::size_t k);

} // namespace grassmann
