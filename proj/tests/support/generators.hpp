#pragma once

// Hand-rolled random generators for property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "grassmann/f2poly.hpp"

namespace grassmann::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed2024u);
  return gen;
}

inline std::uint32_t uniform(std::uint32_t lo, std::uint32_t hi) {
  return std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng());
}

inline Monomial random_monomial(std::size_t k, std::uint32_t max_exp) {
  Monomial::Storage e(k);
  for (auto& x : e) x = uniform(0, max_exp);
  return Monomial(std::move(e));
}

inline Polynomial random_polynomial(std::size_t k, std::size_t max_terms, std::uint32_t max_exp) {
  std::vector<Monomial> terms;
  const std::size_t count = uniform(0, static_cast<std::uint32_t>(max_terms));
  for (std::size_t i = 0; i < count; ++i) terms.push_back(random_monomial(k, max_exp));
  return Polynomial::from_terms(k, std::move(terms));
}

inline Polynomial random_nonzero_polynomial(std::size_t k, std::size_t max_terms, std::uint32_t max_exp) {
  Polynomial p(k);
  while (p.is_zero()) p = random_polynomial(k, max_terms, max_exp);
  return p;
}

// All exponent vectors of weighted degree d in k variables.
inline std::vector<Monomial> monomials_of_weighted_degree(std::size_t k, std::uint64_t d) {
  std::vector<Monomial> out;
  Monomial::Storage cur(k, 0);
  const auto fill = [&](auto&& self, std::size_t j, std::uint64_t left) -> void {
    if (j == 0) {
      if (left == 0) out.emplace_back(cur);
      return;
    }
    for (std::uint64_t e = 0; e * j <= left; ++e) {
      cur[j - 1] = static_cast<std::uint32_t>(e);
      self(self, j - 1, left - e * j);
    }
    cur[j - 1] = 0;
  };
  fill(fill, k, d);
  return out;
}

// Random homogeneous polynomial of weighted degree d.
inline Polynomial random_homogeneous(std::size_t k, std::uint64_t d) {
  std::vector<Monomial> pool = monomials_of_weighted_degree(k, d);
  std::vector<Monomial> picked;
  for (auto& m : pool) {
    if (uniform(0, 2) == 0) picked.push_back(std::move(m));
  }
  return Polynomial::from_terms(k, std::move(picked));
}

} // namespace grassmann::testing
