#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "arrspec/rational.hpp"

namespace arrspec {

/// Exponent vector with cached total degree.
///
/// Ordering is graded-lexicographic: lower total degree first, then, within a degree,
/// monomials with a larger exponent on a lower-indexed variable come later.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exponents_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint16_t> exponents);

  static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1);

  std::size_t nvars() const { return exponents_.size(); }
  int degree() const { return degree_; }
  std::uint16_t operator[](std::size_t i) const { return exponents_[i]; }
  const std::vector<std::uint16_t>& exponents() const { return exponents_; }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;

  std::strong_ordering operator<=>(const Monomial& other) const;
  bool operator==(const Monomial& other) const = default;

 private:
  std::vector<std::uint16_t> exponents_;
  int degree_ = 0;
};

/// All monomials of total degree exactly `degree` in `nvars` variables, ascending.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree);

/// Sparse polynomial with exact rational coefficients, truncated above `max_degree`.
///
/// Terms of total degree above the truncation are discarded on every operation, so
/// this is the ring Q[c_0..c_{m-1}] / (monomials of degree > max_degree).
/// Binary operations truncate at the smaller of the two operands' degrees.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  Polynomial(std::size_t nvars, int max_degree) : nvars_(nvars), max_degree_(max_degree) {}

  static Polynomial constant(std::size_t nvars, int max_degree, const Rational& value);
  static Polynomial variable(std::size_t nvars, int max_degree, std::size_t index, const Rational& coeff = 1);
  static Polynomial monomial(int max_degree, const Monomial& m, const Rational& coeff = 1);

  std::size_t nvars() const { return nvars_; }
  int max_degree() const { return max_degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;

  /// Adds c·m in place; dropped silently when deg(m) exceeds the truncation.
  void add_term(const Monomial& m, const Rational& c);

  /// Degree-j homogeneous component.
  Polynomial homogeneous(int j) const;
  /// Highest degree with a nonzero term, or -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  /// Same terms, new truncation (terms above it are dropped).
  Polynomial truncated(int max_degree) const;

  /// Σ_i (−1)^i · (degree-i part).
  Polynomial alternating() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  bool operator==(const Polynomial& other) const;

 private:
  void check_compatible(const Polynomial& other) const;

  std::size_t nvars_;
  int max_degree_;
  Terms terms_;
};

/// p^e for e ≥ 0; negative e inverts via geom_inv (constant term must be nonzero).
Polynomial pow(const Polynomial& p, int e);

/// Truncated multiplicative inverse of a polynomial with nonzero constant term.
Polynomial geom_inv(const Polynomial& u);

/// Truncated exponential Σ z^k / k! of a polynomial with zero constant term.
Polynomial exp(const Polynomial& z);

/// Σ_k series[k] · z^k, for z with zero constant term.
Polynomial compose(std::span<const Rational> series, const Polynomial& z);

/// Renders with variable names produced by `name(i)`, highest degree first.
std::string to_string(const Polynomial& p, const std::function<std::string(std::size_t)>& name);

}  // namespace arrspec
