#include "grassmann/buchberger_oracle.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "grassmann/dual_classes.hpp"

namespace grassmann {

namespace {

std::size_t common_k(const std::vector<Polynomial>& polys) {
  if (polys.empty()) return 0;
  const std::size_t k = polys.front().num_vars();
  for (const auto& p : polys) {
    if (p.num_vars() != k) throw std::invalid_argument("buchberger: generators disagree on k");
  }
  return k;
}

// Reducers whose leading term is a multiple of another reducer's leading
// term are skipped; they do not change which terms are reducible.
std::vector<std::size_t> active_reducers(const std::vector<TracedPolynomial>& basis) {
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Monomial& li = basis[i].value.leading_term();
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (j == i) continue;
      const Monomial& lj = basis[j].value.leading_term();
      redundant = lj.divides(li) && (!(lj == li) || j < i);
    }
    if (!redundant) active.push_back(i);
  }
  return active;
}

TracedPolynomial reduce_traced(const TracedPolynomial& f, const std::vector<TracedPolynomial>& basis,
                               const std::vector<std::size_t>& reducers, bool track) {
  const std::size_t k = f.value.num_vars();
  // Increasing grlex order, so the current leading term sits at the back.
  std::vector<Monomial> work(f.value.terms().rbegin(), f.value.terms().rend());
  std::vector<Monomial> scaled;
  std::vector<Monomial> merged;
  std::vector<Monomial> remainder;
  std::vector<Polynomial> cofactors = f.cofactors;
  while (!work.empty()) {
    const Monomial& t = work.back();
    const Polynomial* g = nullptr;
    std::size_t idx = 0;
    for (std::size_t r : reducers) {
      if (basis[r].value.leading_term().divides(t)) {
        g = &basis[r].value;
        idx = r;
        break;
      }
    }
    if (g == nullptr) {
      remainder.push_back(std::move(work.back()));
      work.pop_back();
      continue;
    }
    const Monomial q = t / g->leading_term();
    work.pop_back(); // cancelled by the leading term of q * g
    scaled.clear();
    for (auto it = g->terms().rbegin(); it + 1 != g->terms().rend(); ++it) scaled.push_back(*it * q);
    merged.clear();
    std::set_symmetric_difference(work.begin(), work.end(), scaled.begin(), scaled.end(),
                                  std::back_inserter(merged), GrlexLess{});
    work.swap(merged);
    if (track) {
      for (std::size_t i = 0; i < cofactors.size(); ++i) cofactors[i] += basis[idx].cofactors[i] * q;
    }
  }
  return {Polynomial::from_sorted_unchecked(k, std::move(remainder)), std::move(cofactors)};
}

TracedPolynomial s_polynomial_traced(const TracedPolynomial& f, const TracedPolynomial& g, bool track) {
  const Monomial l = lcm(f.value.leading_term(), g.value.leading_term());
  const Monomial qf = l / f.value.leading_term();
  const Monomial qg = l / g.value.leading_term();
  TracedPolynomial out{f.value * qf + g.value * qg, {}};
  if (track) {
    out.cofactors.reserve(f.cofactors.size());
    for (std::size_t i = 0; i < f.cofactors.size(); ++i)
      out.cofactors.push_back(f.cofactors[i] * qf + g.cofactors[i] * qg);
  }
  return out;
}

struct PendingPair {
  Monomial lcm;
  std::size_t i;
  std::size_t j;
};

struct PairOrder {
  bool operator()(const PendingPair& a, const PendingPair& b) const {
    if (auto c = grlex_compare_unchecked(a.lcm, b.lcm); c != 0) return c < 0;
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  }
};

std::vector<TracedPolynomial> run_buchberger(const std::vector<Polynomial>& generators, bool track) {
  const std::size_t k = common_k(generators);
  std::vector<TracedPolynomial> basis;
  std::set<PendingPair, PairOrder> pairs;
  std::vector<std::size_t> reducers;

  const auto add = [&](TracedPolynomial p) {
    const std::size_t j = basis.size();
    for (std::size_t i = 0; i < j; ++i) {
      const Monomial& a = basis[i].value.leading_term();
      const Monomial& b = p.value.leading_term();
      if (coprime(a, b)) continue;
      pairs.insert({lcm(a, b), i, j});
    }
    basis.push_back(std::move(p));
    reducers = active_reducers(basis);
  };

  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (generators[g].is_zero()) throw std::invalid_argument("buchberger: zero generator");
    TracedPolynomial p{generators[g], {}};
    if (track) {
      p.cofactors.assign(generators.size(), Polynomial(k));
      p.cofactors[g] = Polynomial::one(k);
    }
    add(std::move(p));
  }

  while (!pairs.empty()) {
    const PendingPair pair = *pairs.begin();
    pairs.erase(pairs.begin());
    TracedPolynomial r =
        reduce_traced(s_polynomial_traced(basis[pair.i], basis[pair.j], track), basis, reducers, track);
    if (!r.value.is_zero()) add(std::move(r));
  }
  return basis;
}

} // namespace

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw std::domain_error("s_polynomial: zero input");
  return s_polynomial_traced({f, {}}, {g, {}}, false).value;
}

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  std::vector<TracedPolynomial> basis;
  basis.reserve(divisors.size());
  for (const auto& d : divisors) {
    if (d.is_zero()) throw std::invalid_argument("reduce: zero divisor");
    basis.push_back({d, {}});
  }
  std::vector<std::size_t> all(basis.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return reduce_traced({f, {}}, basis, all, false).value;
}

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& generators) {
  std::vector<Polynomial> out;
  for (auto& p : run_buchberger(generators, false)) out.push_back(std::move(p.value));
  return out;
}

std::vector<TracedPolynomial> buchberger_traced(const std::vector<Polynomial>& generators) {
  return run_buchberger(generators, true);
}

std::vector<Polynomial> reduce_basis(std::vector<Polynomial> gb) {
  std::erase_if(gb, [](const Polynomial& p) { return p.is_zero(); });
  common_k(gb);
  std::stable_sort(gb.begin(), gb.end(), [](const Polynomial& a, const Polynomial& b) {
    return grlex_compare_unchecked(a.leading_term(), b.leading_term()) < 0;
  });

  std::vector<Polynomial> minimal;
  for (auto& g : gb) {
    const bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& h) {
      return h.leading_term().divides(g.leading_term());
    });
    if (!redundant) minimal.push_back(std::move(g));
  }

  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (const auto& g : minimal) {
    const Polynomial lead(g.leading_term());
    reduced.push_back(lead + reduce(g + lead, minimal));
  }
  return reduced;
}

std::vector<Polynomial> oracle_basis(const GrassmannContext& ctx, std::uint64_t cap) {
  const auto size = binom_int(static_cast<std::int64_t>(ctx.n() + ctx.k()),
                              static_cast<std::int64_t>(ctx.k() - 1));
  if (size > cap)
    throw OracleCapExceeded("oracle instance has " + size.str() + " basis elements, over the cap of " +
                            std::to_string(cap));
  std::vector<Polynomial> generators;
  for (std::size_t j = 1; j <= ctx.k(); ++j) generators.push_back(wbar_recurrence(ctx.n() + j, ctx.k()));
  return reduce_basis(buchberger(generators));
}

bool oracle_equals_family(const GrassmannContext& ctx, std::uint64_t cap) {
  const auto oracle = oracle_basis(ctx, cap);
  const auto family = build_family(ctx);
  std::vector<Polynomial> closed;
  for (const auto& m : family->indices()) closed.push_back(family->element(m));
  std::sort(closed.begin(), closed.end(), [](const Polynomial& a, const Polynomial& b) {
    return grlex_compare_unchecked(a.leading_term(), b.leading_term()) < 0;
  });
  return oracle == closed;
}

} // namespace grassmann
