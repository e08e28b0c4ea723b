#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "goals/errors.hpp"

namespace goals {

using Rational = mpq_class;

// Exact univariate polynomial, coefficients ascending in the variable.
// The zero polynomial is the empty vector; otherwise the leading
// coefficient is nonzero and every rational is in lowest terms.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs);

  static RationalPolynomial constant(const Rational& c);
  // (x + shift)
  static RationalPolynomial linear_root(const Rational& shift);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Rational evaluate(const Rational& x) const;

  // Composition with x -> a*x + b.
  RationalPolynomial compose_affine(const Rational& a, const Rational& b) const;

  RationalPolynomial operator+(const RationalPolynomial& o) const;
  RationalPolynomial operator-(const RationalPolynomial& o) const;
  RationalPolynomial operator*(const RationalPolynomial& o) const;
  bool operator==(const RationalPolynomial&) const = default;

  // Exact division; throws NonzeroRemainder unless it divides evenly.
  RationalPolynomial divide_exact(const RationalPolynomial& divisor) const;

  // "(1/L)*(integer polynomial)" with L = lcm of coefficient denominators.
  std::pair<mpz_class, std::vector<mpz_class>> integer_content_form() const;

  std::string to_string(const std::string& var = "r") const;

 private:
  std::vector<Rational> coeffs_;
  void trim();
};

// Unique polynomial of degree < points.size() through the given points,
// by fraction-free elimination on the Vandermonde system.
RationalPolynomial interpolate(
    const std::vector<std::pair<Rational, Rational>>& points);

// Solves the square system A x = b in exact rationals.
// Throws VerificationFailure if A is singular.
std::vector<Rational> solve_linear_system(std::vector<std::vector<Rational>> a,
                                          std::vector<Rational> b);

}  // namespace goals
