#include "goals/fit.hpp"

#include <string>

#include "goals/count.hpp"

namespace goals {

FitPlan FitPlan::for_n(int n) {
  FitPlan plan;
  plan.n = n;
  plan.degree = n * n - 3 * n + 1;
  for (long k = 1; k <= n - 2; ++k) plan.known_roots.push_back(-k);
  plan.center = Rational(-(n - 1), 2);
  return plan;
}

Counter make_counter(MarginOffsets offsets, EntryMask mask) {
  return [offsets = std::move(offsets), mask = std::move(mask)](long r) {
    TableProblem p;
    p.offsets = offsets;
    p.mask = mask;
    p.r = r;
    return count_tables(reduce_fixed(validate_problem(p)));
  };
}

Rational evaluate_poly(const RationalPolynomial& p, long r) {
  return p.evaluate(Rational(r));
}

StructureReport verify_structure(const RationalPolynomial& p, int n) {
  StructureReport rep;
  rep.degree_ok = p.degree() == n * n - 3 * n + 1;
  rep.roots_ok = true;
  for (long k = 1; k <= n - 2; ++k)
    if (p.evaluate(Rational(-k)) != 0) rep.roots_ok = false;
  // p(-(n-1)-r) + p(r) must vanish identically.
  RationalPolynomial reflected = p.compose_affine(-1, Rational(-(n - 1)));
  rep.reciprocity_ok = (reflected + p).is_zero();
  return rep;
}

RationalPolynomial known_root_product(int n) {
  RationalPolynomial prod = RationalPolynomial::constant(1);
  for (long k = 1; k <= n - 2; ++k)
    prod = prod * RationalPolynomial::linear_root(Rational(k));
  return prod;
}

RationalPolynomial factor_known_roots(const RationalPolynomial& p, int n) {
  return p.divide_exact(known_root_product(n));
}

namespace {

void check_fresh_points(const RationalPolynomial& poly, const Counter& counter,
                        long first_fresh, FitReport& report) {
  for (long r = first_fresh; r < first_fresh + 3; ++r) {
    mpz_class expected = counter(r);
    if (poly.evaluate(Rational(r)) != Rational(expected))
      throw VerificationFailure("fitted polynomial disagrees with the count at r=" +
                                std::to_string(r));
    report.extra_points_checked.push_back(r);
  }
}

}  // namespace

FitReport fit_sn(int n, FitMode mode, const Counter& counter) {
  if (n < 3) throw ShapeError("fit_sn requires n >= 3");
  const FitPlan plan = FitPlan::for_n(n);
  FitReport report;
  long first_fresh = 0;

  if (mode == FitMode::Plain) {
    std::vector<std::pair<Rational, Rational>> points;
    for (long r = 0; r <= plan.degree; ++r) {
      mpz_class c = counter(r);
      report.samples_used.emplace_back(r, c);
      points.emplace_back(Rational(r), Rational(c));
    }
    report.polynomial = interpolate(points);
    first_fresh = plan.degree + 1;
  } else {
    // S_n = P * Q with P = prod(r+k); Q, re-centered as a polynomial in
    // u = r + (n-1)/2, is odd for n even and even for n odd. Its free
    // coefficients are the monomials u^e of the right parity up to
    // deg Q = (n-1)(n-3).
    const RationalPolynomial p_known = known_root_product(n);
    const int q_degree = (n - 1) * (n - 3);
    std::vector<int> exponents;
    for (int e = (n % 2 == 0) ? 1 : 0; e <= q_degree; e += 2)
      exponents.push_back(e);
    const std::size_t m = exponents.size();

    const Rational half_shift = Rational(n - 1, 2);
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m));
    std::vector<Rational> b(m);
    for (std::size_t i = 0; i < m; ++i) {
      const long r = static_cast<long>(i);
      mpz_class c = counter(r);
      report.samples_used.emplace_back(r, c);
      const Rational u = Rational(r) + half_shift;
      Rational pr = p_known.evaluate(Rational(r));
      b[i] = Rational(c) / pr;
      for (std::size_t j = 0; j < m; ++j) {
        Rational pow = 1;
        for (int e = 0; e < exponents[j]; ++e) pow *= u;
        a[i][j] = pow;
      }
    }
    std::vector<Rational> coeffs = solve_linear_system(std::move(a), std::move(b));

    std::vector<Rational> q_in_u(q_degree + 1, 0);
    for (std::size_t j = 0; j < m; ++j) q_in_u[exponents[j]] = coeffs[j];
    RationalPolynomial q =
        RationalPolynomial(std::move(q_in_u)).compose_affine(1, half_shift);
    report.polynomial = p_known * q;
    first_fresh = static_cast<long>(m);
  }

  report.structure = verify_structure(report.polynomial, n);
  if (!report.structure.all_pass())
    throw VerificationFailure("fitted S_n fails a structural check for n=" +
                              std::to_string(n));
  check_fresh_points(report.polynomial, counter, first_fresh, report);
  report.detected_degree = report.polynomial.degree();
  report.valid = true;
  return report;
}

namespace {

// Smallest k whose k-th finite differences of `values` are equal over at
// least `windows` consecutive positions, or -1.
int detect_degree(const std::vector<mpz_class>& values, int windows) {
  std::vector<mpz_class> diffs(values.begin(), values.end());
  for (int k = 0; static_cast<int>(diffs.size()) >= windows; ++k) {
    bool constant = true;
    for (int i = 1; i < windows; ++i)
      if (diffs[i] != diffs[0]) constant = false;
    if (constant) return k;
    for (std::size_t i = 0; i + 1 < diffs.size(); ++i)
      diffs[i] = diffs[i + 1] - diffs[i];
    diffs.pop_back();
  }
  return -1;
}

FitReport fit_general_attempt(long start, const Counter& counter,
                              int max_degree, int& detected_out) {
  const int windows = 3;
  std::vector<mpz_class> values;
  FitReport report;

  int d = -1;
  for (int budget = windows; budget <= max_degree + windows; ++budget) {
    while (static_cast<int>(values.size()) < budget)
      values.push_back(counter(start + static_cast<long>(values.size())));
    d = detect_degree(values, windows);
    if (d >= 0) break;
  }
  if (d < 0)
    throw NotPolynomial("no constant finite differences up to degree " +
                        std::to_string(max_degree));
  detected_out = d;

  while (static_cast<int>(values.size()) < d + 1 + 3)
    values.push_back(counter(start + static_cast<long>(values.size())));

  std::vector<std::pair<Rational, Rational>> points;
  for (int i = 0; i <= d; ++i) {
    report.samples_used.emplace_back(start + i, values[i]);
    points.emplace_back(Rational(start + i), Rational(values[i]));
  }
  report.polynomial = interpolate(points);
  report.detected_degree = d;
  detected_out = d;

  for (int i = d + 1; i < d + 4; ++i) {
    if (report.polynomial.evaluate(Rational(start + i)) != Rational(values[i]))
      throw VerificationFailure("interpolant disagrees with the count at r=" +
                                std::to_string(start + i));
    report.extra_points_checked.push_back(start + i);
  }
  report.valid = true;
  return report;
}

}  // namespace

FitReport fit_general(const MarginOffsets& offsets, const EntryMask& mask,
                      long r_start, const Counter& counter) {
  const int max_degree = offsets.n * offsets.n + 2;
  {
    TableProblem probe;
    probe.offsets = offsets;
    probe.mask = mask;
    probe.r = r_start;
    validate_problem(probe);  // NegativeMargin/ShapeError surface here
  }
  int detected = -1;
  try {
    return fit_general_attempt(r_start, counter, max_degree, detected);
  } catch (const NotPolynomial&) {
    throw;
  } catch (const VerificationFailure& first) {
    // One retry past the failed fit window; eventually-polynomial counting
    // functions may only stabilize past small r.
    const long retry_start = r_start + (detected >= 0 ? detected : max_degree) + 1;
    try {
      return fit_general_attempt(retry_start, counter, max_degree, detected);
    } catch (const VerificationFailure&) {
      throw NotPolynomial(std::string("counting function is not a polynomial "
                                      "from the requested start: ") +
                          first.what());
    }
  }
}

}  // namespace goals
