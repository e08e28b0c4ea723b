#include "goals/poly.hpp"

#include <sstream>

namespace goals {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  for (Rational& c : coeffs_) c.canonicalize();
  trim();
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) {
  return RationalPolynomial(std::vector<Rational>{c});
}

RationalPolynomial RationalPolynomial::linear_root(const Rational& shift) {
  return RationalPolynomial(std::vector<Rational>{shift, 1});
}

Rational RationalPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

RationalPolynomial RationalPolynomial::compose_affine(const Rational& a,
                                                      const Rational& b) const {
  // Horner in the polynomial ring: p(a x + b).
  RationalPolynomial inner(std::vector<Rational>{b, a});
  RationalPolynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * inner + constant(*it);
  return acc;
}

RationalPolynomial RationalPolynomial::operator+(
    const RationalPolynomial& o) const {
  std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::operator-(
    const RationalPolynomial& o) const {
  std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] -= o.coeffs_[i];
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::operator*(
    const RationalPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * o.coeffs_[j];
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::divide_exact(
    const RationalPolynomial& divisor) const {
  if (divisor.is_zero()) throw NonzeroRemainder("division by zero polynomial");
  std::vector<Rational> rem = coeffs_;
  const int dd = divisor.degree();
  const int dq = degree() - dd;
  if (dq < 0) {
    if (is_zero()) return {};
    throw NonzeroRemainder("degree of dividend below divisor");
  }
  std::vector<Rational> quot(dq + 1, 0);
  for (int k = dq; k >= 0; --k) {
    Rational c = rem[k + dd] / divisor.coefficients()[dd];
    quot[k] = c;
    for (int i = 0; i <= dd; ++i) rem[k + i] -= c * divisor.coefficients()[i];
  }
  for (const Rational& c : rem)
    if (c != 0) throw NonzeroRemainder("division leaves a nonzero remainder");
  return RationalPolynomial(std::move(quot));
}

std::pair<mpz_class, std::vector<mpz_class>>
RationalPolynomial::integer_content_form() const {
  mpz_class l = 1;
  for (const Rational& c : coeffs_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(),
                                            c.get_den().get_mpz_t());
  std::vector<mpz_class> ints;
  ints.reserve(coeffs_.size());
  for (const Rational& c : coeffs_) {
    Rational scaled = c * Rational(l);
    ints.push_back(scaled.get_num());
  }
  return {l, std::move(ints)};
}

std::string RationalPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  auto [l, ints] = integer_content_form();
  std::ostringstream os;
  if (l != 1) os << "(1/" << l.get_str() << ")*(";
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const mpz_class& c = ints[k];
    if (c == 0) continue;
    mpz_class a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (a != 1 || k == 0) os << a.get_str();
    if (k > 0) {
      if (a != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  if (l != 1) os << ")";
  return os.str();
}

std::vector<Rational> solve_linear_system(std::vector<std::vector<Rational>> a,
                                          std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw VerificationFailure("singular linear system");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = col + 1; row < n; ++row) {
      if (a[row][col] == 0) continue;
      Rational f = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
      b[row] -= f * b[col];
    }
  }
  std::vector<Rational> x(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    Rational s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= a[i][k] * x[k];
    x[i] = s / a[i][i];
  }
  return x;
}

RationalPolynomial interpolate(
    const std::vector<std::pair<Rational, Rational>>& points) {
  const std::size_t n = points.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, 0));
  std::vector<Rational> b(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational p = 1;
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = p;
      p *= points[i].first;
    }
    b[i] = points[i].second;
  }
  return RationalPolynomial(solve_linear_system(std::move(a), std::move(b)));
}

}  // namespace goals
