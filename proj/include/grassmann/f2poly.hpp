#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace grassmann {

/// The term W^A = w_1^{a_1} ... w_k^{a_k}.  Variable w_j has cohomological
/// degree j, so weighted_degree() is the degree of the class it represents.
class Monomial {
public:
  using Storage = boost::container::small_vector<std::uint32_t, 8>;

  Monomial() = default;
  explicit Monomial(Storage exponents);
  Monomial(std::initializer_list<std::uint32_t> exponents);

  static Monomial one(std::size_t k) { return Monomial(Storage(k, 0)); }
  /// w_j^e in k variables, j in 1..k.
  static Monomial variable(std::size_t k, std::size_t j, std::uint32_t e = 1);

  std::size_t num_vars() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::span<const std::uint32_t> exponents() const { return {exps_.data(), exps_.size()}; }

  /// S_A, the exponent sum.
  std::uint64_t total_degree() const { return total_; }
  /// S'_A = sum of j * a_j.
  std::uint64_t weighted_degree() const;

  bool is_one() const { return total_ == 0; }
  bool divides(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.total_ == b.total_ && a.exps_ == b.exps_;
  }

  /// Throws std::overflow_error if an exponent leaves 32 bits.
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; throws std::domain_error unless b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);

private:
  Storage exps_;
  std::uint64_t total_ = 0;
};

Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

/// Graded lexicographic order with w_1 > w_2 > ... > w_k.
/// Throws std::invalid_argument when the variable counts differ.
std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b);

/// Same as grlex_compare but without the variable-count check.
inline std::strong_ordering grlex_compare_unchecked(const Monomial& a, const Monomial& b) {
  if (a.total_degree() != b.total_degree()) return a.total_degree() <=> b.total_degree();
  for (std::size_t i = 0; i < a.num_vars(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grlex_compare_unchecked(a, b) > 0;
  }
};

struct GrlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grlex_compare_unchecked(a, b) < 0;
  }
};

/// A polynomial over F2 in w_1..w_k: a finite set of monomials, kept
/// sorted in strictly decreasing grlex order.
class Polynomial {
public:
  explicit Polynomial(std::size_t k = 0) : k_(k) {}
  explicit Polynomial(const Monomial& m);

  /// Builds from an arbitrary list of terms; repeated terms cancel in pairs.
  static Polynomial from_terms(std::size_t k, std::vector<Monomial> terms);
  /// Trusts that terms are distinct and already in decreasing grlex order.
  static Polynomial from_sorted_unchecked(std::size_t k, std::vector<Monomial> terms);

  static Polynomial one(std::size_t k) { return Polynomial(Monomial::one(k)); }
  static Polynomial variable(std::size_t k, std::size_t j, std::uint32_t e = 1) {
    return Polynomial(Monomial::variable(k, j, e));
  }

  std::size_t num_vars() const { return k_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Monomial>& terms() const { return terms_; }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  bool contains(const Monomial& m) const;

  /// Throws std::domain_error on the zero polynomial.
  const Monomial& leading_term() const;

  /// Terms of weighted degree exactly d.
  Polynomial weighted_component(std::uint64_t d) const;
  bool is_homogeneous() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Monomial& m);
  friend Polynomial operator*(const Monomial& m, const Polynomial& f) { return f * m; }
  Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
  Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

  /// Exponentwise doubling, i.e. f^2 in characteristic 2.
  Polynomial frobenius() const;
  Polynomial pow(std::uint64_t e) const;

private:
  std::size_t k_ = 0;
  std::vector<Monomial> terms_;
};

// Free-function spellings of the ring operations.
inline Polynomial add(const Polynomial& f, const Polynomial& g) { return f + g; }
inline Polynomial multiply(const Polynomial& f, const Polynomial& g) { return f * g; }
inline const Monomial& leading_term(const Polynomial& f) { return f.leading_term(); }

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Parses the textual form, e.g. "w1^2*w2 + w2^2", "1" or "0".
Polynomial parse_polynomial(std::string_view text, std::size_t k);

std::string format_monomial(const Monomial& m);
/// Terms in decreasing grlex order joined by " + "; "0" for zero.
std::string format_polynomial(const Polynomial& f);

std::ostream& operator<<(std::ostream& os, const Monomial& m);
std::ostream& operator<<(std::ostream& os, const Polynomial& f);

} // namespace grassmann
