#pragma once

#include <functional>
#include <vector>

#include "goals/poly.hpp"
#include "goals/problem.hpp"

namespace goals {

enum class FitMode { Plain, Economical };

// Structure of S_n(r): degree n^2-3n+1, roots at -1..-(n-2), and the
// reflection S_n(-(n-1)-r) = -S_n(r).
struct FitPlan {
  int n;
  int degree;                    // n^2 - 3n + 1
  std::vector<long> known_roots;  // -1 .. -(n-2)
  Rational center;               // -(n-1)/2

  static FitPlan for_n(int n);
};

struct StructureReport {
  bool degree_ok = false;
  bool roots_ok = false;
  bool reciprocity_ok = false;
  bool all_pass() const { return degree_ok && roots_ok && reciprocity_ok; }
};

struct FitReport {
  RationalPolynomial polynomial;
  std::vector<std::pair<long, mpz_class>> samples_used;
  StructureReport structure;
  std::vector<long> extra_points_checked;
  int detected_degree = -1;
  bool valid = false;
};

// Evaluates the count of the instance dilated to r.
using Counter = std::function<mpz_class(long r)>;

// Counter over a fixed offsets/mask pair; validates and counts at each r.
Counter make_counter(MarginOffsets offsets, EntryMask mask);

// Fits S_n(r) for the zero-diagonal instance. Plain mode interpolates
// from r = 0..degree; Economical writes S_n = prod(r+k) * Q with Q of
// fixed parity about -(n-1)/2 and solves for Q's free coefficients from
// the minimal number of counts. Both modes verify structure and re-check
// against three fresh counts; failure throws VerificationFailure.
FitReport fit_sn(int n, FitMode mode, const Counter& counter);

// General offsets/mask fit: detects the degree from finite differences
// (constant over three consecutive windows), interpolates, verifies at
// three fresh points, and retries once from r_start + d + 1 before
// throwing NotPolynomial.
FitReport fit_general(const MarginOffsets& offsets, const EntryMask& mask,
                      long r_start, const Counter& counter);

Rational evaluate_poly(const RationalPolynomial& p, long r);

StructureReport verify_structure(const RationalPolynomial& p, int n);

// Exact division by prod_{k=1..n-2} (r+k); throws NonzeroRemainder.
RationalPolynomial factor_known_roots(const RationalPolynomial& p, int n);

// prod_{k=1..n-2} (r+k)
RationalPolynomial known_root_product(int n);

}  // namespace goals
