// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "grassmann/buchberger_oracle.hpp"
#include "grassmann/cohomology.hpp"
#include "grassmann/dual_classes.hpp"
#include "grassmann/groebner_family.hpp"
#include "grassmann/steenrod.hpp"
#include "support/generators.hpp"

namespace {

using namespace grassmann;
using Clock = std::chrono::steady_clock;

const std::vector<std::pair<std::size_t, std::size_t>> kOracleInstances{
    {2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 3}, {3, 4}, {3, 5}, {4, 4}, {4, 5}, {5, 5}};

// Collects the first few failure messages of a criterion.
class Check {
public:
  void expect(bool ok, const std::function<std::string()>& message) {
    if (ok) return;
    if (failures_++ < 3) notes_ += (notes_.empty() ? "" : "; ") + message();
  }
  bool passed() const { return failures_ == 0; }
  std::string notes() const {
    if (failures_ <= 3) return notes_;
    return notes_ + "; and " + std::to_string(failures_ - 3) + " more";
  }

private:
  std::size_t failures_ = 0;
  std::string notes_;
};

std::string str(const Polynomial& p) { return format_polynomial(p); }

std::string instance(std::size_t k, std::size_t n) {
  return "(" + std::to_string(k) + "," + std::to_string(n) + ")";
}

std::vector<Polynomial> sorted_family(const GroebnerFamily& family) {
  std::vector<Polynomial> out;
  for (const auto& m : family.indices()) out.push_back(family.element(m));
  std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
    return grlex_compare(a.leading_term(), b.leading_term()) < 0;
  });
  return out;
}

struct Shared {
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Polynomial>> oracle;
  std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<GroebnerFamily>> family;

  const GroebnerFamily& fam(std::size_t k, std::size_t n) {
    auto& slot = family[{k, n}];
    if (!slot) slot = build_family(GrassmannContext(k, n));
    return *slot;
  }
};

Check criterion1(Shared& s, double& seconds) {
  Check c;
  const auto start = Clock::now();
  for (auto [k, n] : kOracleInstances) {
    auto gb = reduce_basis(buchberger([&] {
      std::vector<Polynomial> gens;
      for (std::size_t j = 1; j <= k; ++j) gens.push_back(wbar_recurrence(n + j, k));
      return gens;
    }()));
    const auto closed = sorted_family(s.fam(k, n));
    c.expect(gb == closed, [&] {
      return instance(k, n) + ": oracle has " + std::to_string(gb.size()) + " elements, family " +
             std::to_string(closed.size());
    });
    s.oracle[{k, n}] = std::move(gb);
  }
  seconds = std::chrono::duration<double>(Clock::now() - start).count();
  c.expect(seconds < 60.0, [&] { return "took " + std::to_string(seconds) + " s, budget 60 s"; });
  return c;
}

Check criterion2(Shared& s) {
  Check c;
  for (auto [k, n] : kOracleInstances) {
    const GrassmannContext ctx(k, n);
    const auto& family = s.fam(k, n);
    for (const auto& m : family.indices()) {
      const Polynomial& g = family.element(m);
      Monomial::Storage expected{static_cast<std::uint32_t>(n + 1 - m.sum())};
      for (auto e : m.entries()) expected.push_back(e);
      c.expect(!g.is_zero() && g.leading_term() == Monomial(expected),
               [&] { return instance(k, n) + ": wrong leading term in " + str(g); });
      for (std::size_t i = 1; i < g.size(); ++i)
        c.expect(g.terms()[i].total_degree() <= n, [&] { return instance(k, n) + ": tail term too large in " + str(g); });
    }
  }
  return c;
}

Check criterion3(Shared& s) {
  Check c;
  auto instances = kOracleInstances;
  instances.emplace_back(5, 8);
  for (auto [k, n] : instances) {
    const auto& family = s.fam(k, n);
    const BigInt expected = binom_int(static_cast<std::int64_t>(n + k), static_cast<std::int64_t>(k - 1));
    c.expect(BigInt(family.size()) == expected && BigInt(family.indices().size()) == expected,
             [&] { return instance(k, n) + ": size " + std::to_string(family.size()) + " != " + expected.str(); });
  }
  return c;
}

Check criterion4(Shared& s) {
  Check c;
  std::size_t checked = 0;
  for (auto [k, n] : {std::pair<std::size_t, std::size_t>{3, 3}, {4, 4}, {5, 5}}) {
    const GrassmannContext ctx(k, n);
    const auto& family = s.fam(k, n);
    const auto lookup = [&](const MultiIndex& m) { return g_direct(ctx, m); };
    for (const auto& m : multi_indices_up_to(k, n + 1)) {
      for (int i = 1; i < static_cast<int>(k); ++i) {
        for (int j = i; j < static_cast<int>(k); ++j) {
          const MultiIndex target = raised_pair(m, i, j);
          if (target.sum() > n + 1) continue;
          ++checked;
          c.expect(family.element(target) == g_recurrence_step(ctx, m, i, j, lookup), [&] {
            return instance(k, n) + ": recurrence fails at i=" + std::to_string(i) + " j=" + std::to_string(j);
          });
        }
      }
    }
  }
  c.expect(checked > 0, [] { return std::string("no admissible triples"); });
  return c;
}

Check criterion5() {
  Check c;
  for (auto [k, n] : {std::pair<std::size_t, std::size_t>{3, 4}, {4, 5}}) {
    const GrassmannContext ctx(k, n);
    for (std::uint32_t m = 0; m <= 5; ++m) {
      MultiIndex::Storage e(k - 1, 0);
      e[0] = m;
      Polynomial expected(k);
      for (std::uint32_t i = 0; i <= m; ++i) {
        if (binom_int(m, i) % 2 == 0) continue;
        expected += wbar_explicit(n + 1 + i, k) * Monomial::variable(k, 1, m - i);
      }
      c.expect(g_direct(ctx, MultiIndex(e)) == expected,
               [&] { return instance(k, n) + ": m=" + std::to_string(m); });
    }
  }
  return c;
}

Check criterion6() {
  Check c;
  for (auto [k, n] : {std::pair<std::size_t, std::size_t>{3, 4}, {4, 5}, {5, 6}, {5, 8}}) {
    const GrassmannContext ctx(k, n);
    std::size_t covered = 0;
    for (const auto& m : multi_indices_up_to(k, n + 1)) {
      if (auto closed = g_closed_form(ctx, m)) {
        ++covered;
        c.expect(*closed == g_direct(ctx, m), [&] { return instance(k, n) + ": closed form " + str(*closed); });
      }
    }
    c.expect(covered > 0, [&] { return instance(k, n) + ": no closed forms"; });
    if (k != 5) continue;
    const std::string p = "^" + std::to_string(n - 1);
    const std::uint32_t top = static_cast<std::uint32_t>(n - 1);
    const std::vector<std::pair<MultiIndex, std::string>> rank_five_forms{
        {{0, 0, 0, top}, "w1^2*w5" + p + " + w2*w5" + p},
        {{1, 0, 0, top}, "w1*w2*w5" + p + " + w3*w5" + p},
        {{0, 1, 0, top}, "w1*w3*w5" + p + " + w4*w5" + p},
        {{0, 0, 1, top}, "w1*w4*w5" + p + " + w5^" + std::to_string(n)}};
    for (const auto& [m, text] : rank_five_forms) {
      const auto closed = g_closed_form(ctx, m);
      const Polynomial expected = parse_polynomial(text, 5);
      c.expect(closed && *closed == expected && g_direct(ctx, m) == expected,
               [&] { return instance(k, n) + ": " + text; });
    }
  }
  return c;
}

Check criterion7(Shared& s) {
  Check c;
  for (auto [k, n] : kOracleInstances) {
    const auto& oracle = s.oracle.at({k, n});
    const auto& family = s.fam(k, n);
    for (const auto& m : family.indices())
      c.expect(reduce(family.element(m), oracle).is_zero(), [&] { return instance(k, n) + ": g_M outside oracle ideal"; });
    for (std::size_t j = 1; j <= k; ++j)
      c.expect(is_zero(wbar_recurrence(n + j, k), family),
               [&] { return instance(k, n) + ": wbar_" + std::to_string(n + j) + " nonzero"; });
  }
  return c;
}

Check criterion8(Shared& s) {
  Check c;
  for (auto [k, n] : kOracleInstances) {
    const GrassmannContext ctx(k, n);
    const auto basis = standard_basis(ctx);
    const BigInt expected = binom_int(static_cast<std::int64_t>(n + k), static_cast<std::int64_t>(k));
    c.expect(BigInt(basis.size()) == expected, [&] { return instance(k, n) + ": basis size"; });
    const auto& oracle = s.oracle.at({k, n});
    const auto standard = [&](const Monomial& t) {
      return std::none_of(oracle.begin(), oracle.end(), [&](const Polynomial& g) { return g.leading_term().divides(t); });
    };
    // Monomials of larger exponent sum are multiples of those with sum n + 1.
    std::vector<Monomial> oracle_standard;
    for (std::uint64_t d = 0; d <= n + 1; ++d) {
      for (const auto& t : monomials_of_total_degree(k, d)) {
        if (standard(t)) oracle_standard.push_back(t);
      }
    }
    c.expect(oracle_standard == basis, [&] { return instance(k, n) + ": oracle standard monomials differ"; });
  }
  return c;
}

Check criterion9(double& seconds_n24) {
  Check c;
  for (std::uint32_t n : {8u, 16u, 24u}) {
    const auto start = Clock::now();
    GroebnerFamily family(GrassmannContext(5, n));
    const auto w = [](std::size_t j, std::uint32_t e = 1) { return Monomial::variable(5, j, e); };
    const Polynomial sq1 = normal_form(sq(1, Polynomial(w(4) * w(5, n - 1))), family).value();
    const Polynomial x2(w(2) * w(5, n - 1));
    const Polynomial w2nu = parse_polynomial("w1^2 + w2", 5);
    const Polynomial k1 = normal_form(sq(2, x2) + w2nu * x2, family).value();
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (n == 24) seconds_n24 = seconds;
    c.expect(sq1 == Polynomial(w(5, n)) && !sq1.is_zero(),
             [&, n] { return "n=" + std::to_string(n) + ": Sq1 gives " + str(sq1); });
    c.expect(k1 == Polynomial(w(4) * w(5, n - 1)) && !k1.is_zero(),
             [&, n] { return "n=" + std::to_string(n) + ": k-invariant gives " + str(k1); });
  }
  c.expect(seconds_n24 < 120.0, [&] { return "n=24 took " + std::to_string(seconds_n24) + " s, budget 120 s"; });
  return c;
}

Check criterion10() {
  Check c;
  GroebnerFamily family(GrassmannContext(5, 8));
  const auto w = normal_bundle_sw(8, family);
  c.expect(w.at(2).value() == parse_polynomial("w1^2 + w2", 5), [&] { return "w2(nu) = " + str(w.at(2).value()); });
  for (const auto& [d, cls] : w) {
    if (d >= 36) c.expect(cls.is_zero(), [&, d = d] { return "w" + std::to_string(d) + "(nu) nonzero"; });
  }
  c.expect(w.rbegin()->first >= 40, [] { return std::string("normal bundle classes stop early"); });

  const Polynomial t = tensor_square_sw(5, 25);
  c.expect(t.weighted_component(1).is_zero() && t.weighted_component(2).is_zero(),
           [] { return std::string("tensor square nonzero in degree 1 or 2"); });
  std::uint64_t top = 0;
  for (std::uint64_t d = 0; d <= 25; ++d) {
    if (t.weighted_component(d).is_zero()) continue;
    top = d;
    c.expect(d % 2 == 0, [d] { return "odd component in degree " + std::to_string(d); });
  }
  c.expect(top == 20, [top] { return "top nonzero degree " + std::to_string(top); });
  return c;
}

Check criterion11() {
  using namespace grassmann::testing;
  Check c;
  for (std::int64_t a = -64; a <= 64; ++a) {
    for (std::int64_t b = -64; b <= 64; ++b) {
      c.expect(binom_int(a, b) == binom_int(a - 1, b) + binom_int(a - 1, b - 1) &&
                   binom_parity(a, b) == (binom_parity(a - 1, b) != binom_parity(a - 1, b - 1)),
               [&] { return "Pascal fails at (" + std::to_string(a) + "," + std::to_string(b) + ")"; });
      c.expect(binom_int(a, b) == 0 || a >= b || a <= -1,
               [&] { return "nonzero bound fails at (" + std::to_string(a) + "," + std::to_string(b) + ")"; });
    }
  }

  GroebnerFamily family(GrassmannContext(3, 4));
  for (int trial = 0; trial < 1000; ++trial) {
    const Polynomial f = random_polynomial(3, 10, 6), g = random_polynomial(3, 10, 6);
    const Polynomial nf = normal_form(f, family).value();
    const Polynomial ng = normal_form(g, family).value();
    c.expect(normal_form(nf, family).value() == nf, [&] { return "not idempotent on " + str(f); });
    c.expect(normal_form(f + g, family).value() == nf + ng, [&] { return "not linear on " + str(f); });
    const auto random_divisor = [](const Monomial& t) {
      Monomial::Storage e(t.exponents().begin(), t.exponents().end());
      for (std::uint64_t excess = t.total_degree() - 5; excess > 0;) {
        const std::size_t i = uniform(0, 2);
        if (e[i] == 0) continue;
        --e[i];
        --excess;
      }
      return Monomial(std::move(e));
    };
    c.expect(normal_form_with(f, family, random_divisor) == nf, [&] { return "not confluent on " + str(f); });
  }

  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t df = uniform(0, 10), dg = uniform(0, 10 - df);
    const Polynomial f = random_homogeneous(5, df), g = random_homogeneous(5, dg);
    for (std::uint64_t i = 0; i <= df + dg; ++i) {
      Polynomial cartan(5);
      for (std::uint64_t a = 0; a <= i; ++a) cartan += sq(a, f) * sq(i - a, g);
      c.expect(sq(i, f * g) == cartan, [&] { return "Cartan fails for " + str(f) + " and " + str(g); });
    }
    c.expect(sq(0, f) == f && sq(df, f) == f * f && sq(df + 1, f).is_zero(),
             [&] { return "squaring fails for " + str(f); });
  }
  return c;
}

} // namespace

int main() {
  Shared shared;
  int failed = 0;
  const auto report = [&](int id, const std::string& name, const Check& c, const std::string& extra = "") {
    const bool ok = c.passed();
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << name;
    if (!extra.empty()) std::cout << " [" << extra << "]";
    if (!ok) std::cout << " -- " << c.notes();
    std::cout << std::endl;
  };
  const auto fmt = [](double s) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << s << " s";
    return os.str();
  };

  double t1 = 0;
  const Check c1 = criterion1(shared, t1);
  report(1, "oracle reduced basis equals closed-form family", c1, fmt(t1));
  report(2, "leading-term law", criterion2(shared));
  report(3, "family size binom(n+k, k-1)", criterion3(shared));
  report(4, "recurrence identity", criterion4(shared));
  report(5, "first-index identity via dual classes", criterion5());
  report(6, "closed forms agree with the direct formula", criterion6());
  report(7, "membership in both directions", criterion7(shared));
  report(8, "standard monomials and dimension binom(n+k, k)", criterion8(shared));
  double t9 = 0;
  const Check c9 = criterion9(t9);
  report(9, "immersion obstruction values for n = 8, 16, 24", c9, "n=24 " + fmt(t9));
  report(10, "normal bundle and tensor square classes", criterion10());
  report(11, "property suites", criterion11());

  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
