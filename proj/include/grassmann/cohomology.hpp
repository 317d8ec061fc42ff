#pragma once

#include <functional>
#include <vector>

#include "grassmann/f2poly.hpp"
#include "grassmann/groebner_family.hpp"

namespace grassmann {

/// A class in H*(G_{k,n}; F2), stored as its normal form: a sum of
/// monomials with exponent sum at most n.
class CohomologyClass {
public:
  CohomologyClass(GrassmannContext ctx, Polynomial normal_form);

  const GrassmannContext& context() const { return ctx_; }
  const Polynomial& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }

  friend bool operator==(const CohomologyClass&, const CohomologyClass&) = default;

private:
  GrassmannContext ctx_;
  Polynomial value_;
};

/// Remainder of f on division by the family.
///
/// A term t of exponent sum >= n + 1 is reduced by the unique element whose
/// leading term is t with exponents removed from the left until the sum
/// drops to n + 1.  Terms are taken in decreasing grlex order.
CohomologyClass normal_form(const Polynomial& f, const GroebnerFamily& family);

/// Picks which leading term (of exponent sum n + 1) dividing `term` to use.
using DivisorChoice = std::function<Monomial(const Monomial& term)>;

/// normal_form with an arbitrary admissible divisor choice; used to check
/// that the result does not depend on the choice.
Polynomial normal_form_with(const Polynomial& f, const GroebnerFamily& family,
                            const DivisorChoice& choose);

/// Leading term of exponent sum n + 1 dividing `term`, taken from the left.
Monomial leftmost_divisor(const Monomial& term, std::size_t n);

bool is_zero(const Polynomial& f, const GroebnerFamily& family);

/// Throws std::invalid_argument when the classes live on different Grassmannians.
CohomologyClass cup(const CohomologyClass& a, const CohomologyClass& b, const GroebnerFamily& family);

/// Monomials with exponent sum <= n, in increasing grlex order.
std::vector<Monomial> standard_basis(const GrassmannContext& ctx);

/// All monomials in k variables with exponent sum exactly s, increasing grlex.
std::vector<Monomial> monomials_of_total_degree(std::size_t k, std::uint64_t s);

} // namespace grassmann
