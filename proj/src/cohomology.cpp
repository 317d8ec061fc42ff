#include "grassmann/cohomology.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace grassmann {

CohomologyClass::CohomologyClass(GrassmannContext ctx, Polynomial normal_form)
    : ctx_(ctx), value_(std::move(normal_form)) {
  if (value_.num_vars() != ctx_.k())
    throw std::invalid_argument("CohomologyClass: polynomial has the wrong number of variables");
  for (const auto& t : value_) {
    if (t.total_degree() > ctx_.n())
      throw std::invalid_argument("CohomologyClass: polynomial is not in normal form");
  }
}

Monomial leftmost_divisor(const Monomial& term, std::size_t n) {
  if (term.total_degree() < n + 1) throw std::domain_error("leftmost_divisor: term is standard");
  std::uint64_t excess = term.total_degree() - (n + 1);
  Monomial::Storage e(term.exponents().begin(), term.exponents().end());
  for (std::size_t i = 0; i < e.size() && excess > 0; ++i) {
    const std::uint64_t take = std::min<std::uint64_t>(e[i], excess);
    e[i] -= static_cast<std::uint32_t>(take);
    excess -= take;
  }
  return Monomial(std::move(e));
}

Polynomial normal_form_with(const Polynomial& f, const GroebnerFamily& family,
                            const DivisorChoice& choose) {
  const auto& ctx = family.context();
  if (f.num_vars() != ctx.k()) throw std::invalid_argument("normal_form: polynomial has the wrong k");
  const std::uint64_t bound = ctx.n() + 1;

  std::set<Monomial, GrlexGreater> work(f.begin(), f.end());
  const auto toggle = [&work](const Monomial& m) {
    auto [it, inserted] = work.insert(m);
    if (!inserted) work.erase(it);
  };
  // grlex compares exponent sums first, so once the largest term is
  // standard every remaining term is.
  while (!work.empty() && work.begin()->total_degree() >= bound) {
    const Monomial t = *work.begin();
    const Monomial lead = choose(t);
    if (lead.total_degree() != bound || !lead.divides(t))
      throw std::logic_error("normal_form: divisor choice is not an admissible leading term");
    const Polynomial& g = family.element_with_leading_term(lead);
    const Monomial q = t / lead;
    for (const auto& s : g) toggle(s * q);
  }
  return Polynomial::from_sorted_unchecked(ctx.k(), std::vector<Monomial>(work.begin(), work.end()));
}

CohomologyClass normal_form(const Polynomial& f, const GroebnerFamily& family) {
  const std::size_t n = family.context().n();
  return CohomologyClass(family.context(),
                         normal_form_with(f, family, [n](const Monomial& t) { return leftmost_divisor(t, n); }));
}

bool is_zero(const Polynomial& f, const GroebnerFamily& family) {
  return normal_form(f, family).is_zero();
}

CohomologyClass cup(const CohomologyClass& a, const CohomologyClass& b, const GroebnerFamily& family) {
  if (!(a.context() == b.context()) || !(a.context() == family.context()))
    throw std::invalid_argument("cup: classes live on different Grassmannians");
  return normal_form(a.value() * b.value(), family);
}

std::vector<Monomial> monomials_of_total_degree(std::size_t k, std::uint64_t s) {
  std::vector<Monomial> out;
  Monomial::Storage cur(k, 0);
  const auto fill = [&](auto&& self, std::size_t pos, std::uint64_t left) -> void {
    if (pos + 1 == k) {
      cur[pos] = static_cast<std::uint32_t>(left);
      out.emplace_back(cur);
      return;
    }
    for (std::uint64_t v = 0; v <= left; ++v) {
      cur[pos] = static_cast<std::uint32_t>(v);
      self(self, pos + 1, left - v);
    }
  };
  if (k > 0) fill(fill, 0, s);
  // The odometer already yields increasing a_1, then a_2, ...
  return out;
}

std::vector<Monomial> standard_basis(const GrassmannContext& ctx) {
  std::vector<Monomial> out;
  for (std::uint64_t s = 0; s <= ctx.n(); ++s) {
    auto layer = monomials_of_total_degree(ctx.k(), s);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

} // namespace grassmann
