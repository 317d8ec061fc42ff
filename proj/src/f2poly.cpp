#include "grassmann/f2poly.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>

namespace grassmann {

namespace {

constexpr std::uint64_t kMaxExponent = std::numeric_limits<std::uint32_t>::max();

void require_same_k(std::size_t a, std::size_t b, const char* where) {
  if (a != b) throw std::invalid_argument(std::string(where) + ": variable counts differ");
}

// Sort descending and drop pairs of equal terms (coefficients mod 2).
std::vector<Monomial> normalize_terms(std::vector<Monomial> terms) {
  std::sort(terms.begin(), terms.end(), GrlexGreater{});
  std::vector<Monomial> out;
  out.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(std::move(terms[i]));
    i = j;
  }
  return out;
}

} // namespace

Monomial::Monomial(Storage exponents) : exps_(std::move(exponents)) {
  for (auto e : exps_) total_ += e;
}

Monomial::Monomial(std::initializer_list<std::uint32_t> exponents)
    : Monomial(Storage(exponents.begin(), exponents.end())) {}

Monomial Monomial::variable(std::size_t k, std::size_t j, std::uint32_t e) {
  if (j < 1 || j > k) throw std::out_of_range("Monomial::variable: index out of 1..k");
  Storage s(k, 0);
  s[j - 1] = e;
  return Monomial(std::move(s));
}

std::uint64_t Monomial::weighted_degree() const {
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i) d += (i + 1) * std::uint64_t{exps_[i]};
  return d;
}

bool Monomial::divides(const Monomial& other) const {
  if (total_ > other.total_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  require_same_k(a.num_vars(), b.num_vars(), "Monomial::operator*");
  Monomial::Storage s(a.num_vars());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const std::uint64_t e = std::uint64_t{a[i]} + b[i];
    if (e > kMaxExponent) throw std::overflow_error("monomial exponent overflow");
    s[i] = static_cast<std::uint32_t>(e);
  }
  return Monomial(std::move(s));
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  require_same_k(a.num_vars(), b.num_vars(), "Monomial::operator/");
  if (!b.divides(a)) throw std::domain_error("monomial quotient is not exact");
  Monomial::Storage s(a.num_vars());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = a[i] - b[i];
  return Monomial(std::move(s));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  require_same_k(a.num_vars(), b.num_vars(), "lcm");
  Monomial::Storage s(a.num_vars());
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = std::max(a[i], b[i]);
  return Monomial(std::move(s));
}

bool coprime(const Monomial& a, const Monomial& b) {
  require_same_k(a.num_vars(), b.num_vars(), "coprime");
  for (std::size_t i = 0; i < a.num_vars(); ++i) {
    if (a[i] != 0 && b[i] != 0) return false;
  }
  return true;
}

std::strong_ordering grlex_compare(const Monomial& a, const Monomial& b) {
  require_same_k(a.num_vars(), b.num_vars(), "grlex_compare");
  return grlex_compare_unchecked(a, b);
}

Polynomial::Polynomial(const Monomial& m) : k_(m.num_vars()), terms_{m} {}

Polynomial Polynomial::from_terms(std::size_t k, std::vector<Monomial> terms) {
  for (const auto& t : terms) require_same_k(k, t.num_vars(), "Polynomial::from_terms");
  Polynomial p(k);
  p.terms_ = normalize_terms(std::move(terms));
  return p;
}

Polynomial Polynomial::from_sorted_unchecked(std::size_t k, std::vector<Monomial> terms) {
  Polynomial p(k);
  p.terms_ = std::move(terms);
  return p;
}

bool Polynomial::contains(const Monomial& m) const {
  return std::binary_search(terms_.begin(), terms_.end(), m, GrlexGreater{});
}

const Monomial& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  return terms_.front();
}

Polynomial Polynomial::weighted_component(std::uint64_t d) const {
  Polynomial out(k_);
  for (const auto& t : terms_) {
    if (t.weighted_degree() == d) out.terms_.push_back(t);
  }
  return out;
}

bool Polynomial::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Monomial& t) {
    return t.weighted_degree() == terms_.front().weighted_degree();
  });
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  require_same_k(f.k_, g.k_, "Polynomial::operator+");
  Polynomial out(f.k_);
  out.terms_.reserve(f.terms_.size() + g.terms_.size());
  std::set_symmetric_difference(f.terms_.begin(), f.terms_.end(), g.terms_.begin(),
                                g.terms_.end(), std::back_inserter(out.terms_), GrlexGreater{});
  return out;
}

Polynomial operator*(const Polynomial& f, const Monomial& m) {
  require_same_k(f.k_, m.num_vars(), "Polynomial::operator*");
  // grlex is a monomial order, so the term order survives scaling.
  Polynomial out(f.k_);
  out.terms_.reserve(f.terms_.size());
  for (const auto& t : f.terms_) out.terms_.push_back(t * m);
  return out;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  require_same_k(f.k_, g.k_, "Polynomial::operator*");
  if (f.is_zero() || g.is_zero()) return Polynomial(f.k_);
  if (g.size() == 1) return f * g.terms_.front();
  if (f.size() == 1) return g * f.terms_.front();
  std::vector<Monomial> products;
  products.reserve(f.size() * g.size());
  for (const auto& a : f.terms_) {
    for (const auto& b : g.terms_) products.push_back(a * b);
  }
  Polynomial out(f.k_);
  out.terms_ = normalize_terms(std::move(products));
  return out;
}

Polynomial Polynomial::frobenius() const {
  Polynomial out(k_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back(t * t);
  return out;
}

Polynomial Polynomial::pow(std::uint64_t e) const {
  Polynomial result = Polynomial::one(k_);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base.frobenius();
  }
  return result;
}

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

namespace {

class Parser {
public:
  Parser(std::string_view text, std::size_t k) : text_(text), k_(k) {}

  Polynomial run() {
    skip_ws();
    if (at_end()) throw ParseError("empty input", pos_);
    if (peek() == '0') {
      ++pos_;
      skip_ws();
      if (!at_end()) throw ParseError("unexpected character after \"0\"", pos_);
      return Polynomial(k_);
    }
    std::vector<Monomial> terms;
    terms.push_back(term());
    skip_ws();
    while (!at_end()) {
      if (peek() != '+') throw ParseError("expected '+'", pos_);
      ++pos_;
      skip_ws();
      terms.push_back(term());
      skip_ws();
    }
    return Polynomial::from_terms(k_, std::move(terms));
  }

private:
  Monomial term() {
    if (at_end()) throw ParseError("expected a term", pos_);
    if (peek() == '1') {
      ++pos_;
      return Monomial::one(k_);
    }
    Monomial::Storage exps(k_, 0);
    factor(exps);
    while (!at_end() && peek() == '*') {
      ++pos_;
      factor(exps);
    }
    return Monomial(std::move(exps));
  }

  void factor(Monomial::Storage& exps) {
    if (at_end() || peek() != 'w') throw ParseError("expected 'w'", pos_);
    ++pos_;
    const std::size_t index_pos = pos_;
    const std::uint64_t index = number();
    if (index < 1 || index > k_)
      throw ParseError("variable index " + std::to_string(index) + " outside 1.." +
                           std::to_string(k_),
                       index_pos);
    std::uint64_t e = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      const std::size_t exp_pos = pos_;
      e = number();
      if (e < 1) throw ParseError("exponent must be at least 1", exp_pos);
    }
    const std::uint64_t total = exps[index - 1] + e;
    if (total > kMaxExponent) throw ParseError("exponent overflow", index_pos);
    exps[index - 1] = static_cast<std::uint32_t>(total);
  }

  std::uint64_t number() {
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (!at_end() && peek() >= '0' && peek() <= '9') {
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (v > kMaxExponent) throw ParseError("number too large", start);
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected a decimal number", pos_);
    return v;
  }

  void skip_ws() {
    while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\n' || peek() == '\r')) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t k_;
  std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t k) {
  if (k < 1) throw std::invalid_argument("parse_polynomial: k must be positive");
  return Parser(text, k).run();
}

std::string format_monomial(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.num_vars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'w';
    out += std::to_string(i + 1);
    if (m[i] > 1) {
      out += '^';
      out += std::to_string(m[i]);
    }
  }
  return out;
}

std::string format_polynomial(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& t : f) {
    if (!out.empty()) out += " + ";
    out += format_monomial(t);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << format_monomial(m); }
std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << format_polynomial(f); }

} // namespace grassmann
