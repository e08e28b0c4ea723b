// Acceptance suite: one pass/fail line per criterion.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "goals/count.hpp"
#include "goals/fit.hpp"
#include "goals/io.hpp"
#include "goals/puzzle.hpp"
#include "goals/worldcup.hpp"

using namespace goals;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(int number, const std::string& title, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  auto start = Clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (budget_seconds > 0 && secs > budget_seconds) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
  }
  std::cout << "criterion " << number << " [" << title << "]: "
            << (ok ? "PASS" : "FAIL") << " (" << secs << "s)";
  if (!ok && !detail.empty()) std::cout << " -- " << detail;
  std::cout << "\n";
  if (!ok) ++failures;
}

Counter soccer_counter(int n) {
  TableProblem zd = TableProblem::zero_diagonal(n, 0);
  return make_counter(zd.offsets, zd.mask);
}

RationalPolynomial s4_reference() {
  return RationalPolynomial(std::vector<Rational>{
      1, Rational(83, 30), 3, Rational(5, 3), Rational(1, 2), Rational(1, 15)});
}

RationalPolynomial s5_reference() {
  const long inner[] = {40320, 96240, 123436, 101272, 55907,
                        20680, 4934,  688,    43};
  std::vector<Rational> coeffs;
  for (long v : inner) coeffs.emplace_back(v, 241920);
  RationalPolynomial p(coeffs);
  for (long k = 1; k <= 3; ++k)
    p = p * RationalPolynomial::linear_root(Rational(k));
  return p;
}

ConcreteMargins soccer(int n, long r) {
  return reduce_fixed(validate_problem(TableProblem::zero_diagonal(n, r)));
}

mpz_class zero_diag_count(const std::vector<long>& gf,
                          const std::vector<long>& ga) {
  const int n = static_cast<int>(gf.size());
  ConcreteMargins m;
  m.n = n;
  m.row_targets = gf;
  m.col_targets = ga;
  m.free_cells.assign(static_cast<std::size_t>(n) * n, true);
  for (int i = 0; i < n; ++i) m.free_cells[i * n + i] = false;
  return count_tables(m);
}

long scenario_bruteforce(const ScoreBoard& b, const PointsRule& rule) {
  long cap = 0;
  for (long v : b.gf) cap = std::max(cap, v);
  const std::size_t m = Scenario::match_count(b.n);
  Scenario s;
  s.n = b.n;
  s.scores.assign(m, {0, 0});
  long found = 0;
  std::vector<long> flat(2 * m, 0);
  for (;;) {
    for (std::size_t k = 0; k < m; ++k)
      s.scores[k] = {flat[2 * k], flat[2 * k + 1]};
    ScoreBoard derived = derive_board(s, rule);
    if (derived.gf == b.gf && derived.ga == b.ga &&
        (!b.pts || *derived.pts == *b.pts))
      ++found;
    std::size_t i = 0;
    while (i < flat.size() && flat[i] == cap) flat[i++] = 0;
    if (i == flat.size()) break;
    ++flat[i];
  }
  return found;
}

}  // namespace

int main() {
  criterion(1, "title theorem: S_4 in both modes from two counts", 1.0,
            [](std::string& detail) {
              const RationalPolynomial want = s4_reference();
              FitReport plain = fit_sn(4, FitMode::Plain, soccer_counter(4));
              FitReport econ = fit_sn(4, FitMode::Economical, soccer_counter(4));
              if (plain.polynomial != want || econ.polynomial != want) {
                detail = "fitted polynomial differs from the closed form";
                return false;
              }
              if (econ.samples_used.size() != 2 ||
                  econ.samples_used[0].first != 0 ||
                  econ.samples_used[1].first != 1) {
                detail = "economical mode did not use exactly r=0 and r=1";
                return false;
              }
              RationalPolynomial quotient = factor_known_roots(want, 4);
              RationalPolynomial rebuilt = quotient * known_root_product(4);
              if (rebuilt != want) {
                detail = "factored shape does not rebuild the polynomial";
                return false;
              }
              // quotient carries the (2r+3)(r^2+3r+5)/30 part
              if (quotient !=
                  RationalPolynomial(std::vector<Rational>{
                      Rational(1, 2), Rational(19, 30), Rational(3, 10),
                      Rational(1, 15)})) {
                detail = "quotient coefficients are wrong";
                return false;
              }
              return true;
            });

  criterion(2, "closed forms for S_3 and S_5 (plain mode)", 300.0,
            [](std::string& detail) {
              FitReport s3p = fit_sn(3, FitMode::Plain, soccer_counter(3));
              FitReport s3e = fit_sn(3, FitMode::Economical, soccer_counter(3));
              RationalPolynomial r_plus_1(std::vector<Rational>{1, 1});
              if (s3p.polynomial != r_plus_1 || s3e.polynomial != r_plus_1) {
                detail = "S_3 is not r+1";
                return false;
              }
              const RationalPolynomial want = s5_reference();
              FitReport s5p = fit_sn(5, FitMode::Plain, soccer_counter(5));
              FitReport s5e = fit_sn(5, FitMode::Economical, soccer_counter(5));
              if (s5p.polynomial != want || s5e.polynomial != want) {
                detail = "S_5 differs from the closed form";
                return false;
              }
              return true;
            });

  criterion(3, "S_5 sequence regression r=0..11", 300.0,
            [](std::string& detail) {
              const char* expected[] = {
                  "1",        "44",       "870",      "9480",
                  "68290",    "365936",   "1573374",  "5709120",
                  "18107760", "51488800", "133748186", "321979164"};
              for (long r = 0; r <= 11; ++r) {
                mpz_class c = count_tables(soccer(5, r));
                if (c != mpz_class(expected[r])) {
                  detail = "S_5(" + std::to_string(r) + ") = " + c.get_str() +
                           ", expected " + expected[r];
                  return false;
                }
              }
              return true;
            });

  criterion(4, "structural invariants for fitted S_3, S_4, S_5", 300.0,
            [](std::string& detail) {
              for (int n : {3, 4, 5}) {
                FitReport rep = fit_sn(n, FitMode::Economical, soccer_counter(n));
                StructureReport s = verify_structure(rep.polynomial, n);
                if (!s.all_pass()) {
                  detail = "structure check failed for n=" + std::to_string(n);
                  return false;
                }
              }
              return true;
            });

  criterion(5, "oracle equivalence (exhaustive small + 200 random)", 120.0,
            [](std::string& detail) {
              for (int n = 1; n <= 4; ++n)
                for (long r = 0; r <= 3; ++r) {
                  ConcreteMargins m = soccer(n, r);
                  if (count_tables(m) != count_bruteforce(m)) {
                    detail = "mismatch on zero_diagonal(" + std::to_string(n) +
                             "), r=" + std::to_string(r);
                    return false;
                  }
                }
              std::mt19937 gen(19861986);
              std::uniform_int_distribution<int> n_dist(2, 4);
              std::uniform_int_distribution<long> off(-1, 1);
              std::uniform_int_distribution<int> pct(0, 99);
              int done = 0;
              while (done < 200) {
                TableProblem p;
                int n = n_dist(gen);
                p.offsets.n = n;
                p.offsets.sr.resize(n);
                p.offsets.sc.resize(n);
                for (long& v : p.offsets.sr) v = off(gen);
                for (long& v : p.offsets.sc) v = off(gen);
                long diff = 0;
                for (long v : p.offsets.sr) diff += v;
                for (long v : p.offsets.sc) diff -= v;
                p.offsets.sc[n - 1] += diff;
                if (p.offsets.sc[n - 1] < -1 || p.offsets.sc[n - 1] > 1) continue;
                p.mask = EntryMask::all_free(n);
                for (int i = 0; i < n; ++i)
                  for (int j = 0; j < n; ++j)
                    if (pct(gen) < 20)
                      p.mask.at(i, j) = Cell::Fixed(pct(gen) < 50 ? 0 : 1);
                p.r = 2;
                ConcreteMargins m;
                try {
                  m = reduce_fixed(validate_problem(p));
                } catch (const ValidationError&) {
                  continue;
                }
                if (count_tables(m) != count_bruteforce(m)) {
                  detail = "mismatch on random instance " + std::to_string(done);
                  return false;
                }
                ++done;
              }
              return true;
            });

  criterion(6, "matrix-scenario bijection (exhaustive <=2 + 100 random <=3)",
            300.0, [](std::string& detail) {
              std::vector<long> gf(4), ga(4);
              for (int cf = 0; cf < 81; ++cf) {
                int f = cf;
                long sf = 0;
                for (int i = 0; i < 4; ++i, f /= 3) sf += (gf[i] = f % 3);
                for (int ca = 0; ca < 81; ++ca) {
                  int a = ca;
                  long sa = 0;
                  for (int i = 0; i < 4; ++i, a /= 3) sa += (ga[i] = a % 3);
                  if (sf != sa) continue;
                  ScoreBoard b;
                  b.n = 4;
                  b.gf = gf;
                  b.ga = ga;
                  if (find_scenarios(b).count != zero_diag_count(gf, ga)) {
                    detail = "exhaustive case mismatch";
                    return false;
                  }
                }
              }
              std::mt19937 gen(630);
              std::uniform_int_distribution<long> goal(0, 3);
              int done = 0;
              while (done < 100) {
                long diff = 0;
                for (int i = 0; i < 4; ++i) {
                  gf[i] = goal(gen);
                  ga[i] = goal(gen);
                  diff += gf[i] - ga[i];
                }
                if (diff != 0) continue;
                ScoreBoard b;
                b.n = 4;
                b.gf = gf;
                b.ga = ga;
                if (find_scenarios(b).count != zero_diag_count(gf, ga)) {
                  detail = "random board mismatch";
                  return false;
                }
                ++done;
              }
              return true;
            });

  criterion(7, "scenario solver spot values vs independent brute force", 120.0,
            [](std::string& detail) {
              ScoreBoard zero;
              zero.n = 4;
              zero.gf = zero.ga = {0, 0, 0, 0};
              zero.pts = std::vector<long>{3, 3, 3, 3};
              if (find_scenarios(zero).count != 1 ||
                  scenario_bruteforce(zero, {}) != 1) {
                detail = "all-draw board is not unique";
                return false;
              }
              zero.pts = std::vector<long>{0, 0, 0, 0};
              if (find_scenarios(zero).count != 0 ||
                  scenario_bruteforce(zero, {}) != 0) {
                detail = "zero-points board should have no scenarios";
                return false;
              }
              ScoreBoard ones;
              ones.n = 4;
              ones.gf = ones.ga = {1, 1, 1, 1};
              ones.pts = std::vector<long>{3, 3, 3, 3};
              if (find_scenarios(ones).count != 3 ||
                  scenario_bruteforce(ones, {}) != 3) {
                detail = "1-1 matching board should have 3 scenarios";
                return false;
              }
              return true;
            });

  criterion(8, "historical groups 1998-2014 match the published counts", 300.0,
            [](std::string& detail) {
              struct YearUnique {
                const char* year;
                std::vector<std::string> unique_groups;
              };
              const YearUnique remarks[] = {
                  {"1998", {"G", "H"}}, {"2002", {"A", "E", "H"}},
                  {"2006", {"B", "G"}}, {"2010", {"G"}},  {"2014", {}}};
              for (const auto& [year, unique_groups] : remarks) {
                GroupDataset ds = load_group_dataset(
                    std::string(GOALS_DATA_DIR) + "/worldcup/" + year + ".json");
                if (!ds.expected_counts) {
                  detail = std::string(year) + ": no expected counts";
                  return false;
                }
                for (std::size_t g = 0; g < ds.groups.size(); ++g) {
                  mpz_class c = find_scenarios(ds.groups[g].board).count;
                  if (c != (*ds.expected_counts)[g]) {
                    detail = std::string(year) + " group " + ds.groups[g].name +
                             ": got " + c.get_str() + ", published " +
                             std::to_string((*ds.expected_counts)[g]);
                    return false;
                  }
                  bool should_be_unique =
                      std::find(unique_groups.begin(), unique_groups.end(),
                                ds.groups[g].name) != unique_groups.end();
                  if ((c == 1) != should_be_unique) {
                    detail = std::string(year) + " group " + ds.groups[g].name +
                             ": uniqueness flag mismatch";
                    return false;
                  }
                }
              }
              return true;
            });

  criterion(9, "100 seeded unique puzzles, reproducible book", 300.0,
            [](std::string& detail) {
              PuzzleBook book = make_book(100, 4, 4, 20140623, false);
              for (std::size_t i = 0; i < book.puzzles.size(); ++i) {
                const Puzzle& p = book.puzzles[i];
                if (p.solutions_count != 1) {
                  detail = "puzzle " + std::to_string(i) + " is not unique";
                  return false;
                }
                ScenarioResult res = find_scenarios(p.board, p.rule, std::size_t{2});
                if (res.count != 1 || res.scenarios[0] != p.solution) {
                  detail = "puzzle " + std::to_string(i) +
                           ": enumeration does not recover the solution";
                  return false;
                }
              }
              PuzzleBook again = make_book(100, 4, 4, 20140623, false);
              if (book_to_json(book) != book_to_json(again)) {
                detail = "regenerated book is not byte-identical";
                return false;
              }
              return true;
            });

  criterion(10, "evaluation and reciprocity spot checks", 60.0,
            [](std::string& detail) {
              RationalPolynomial s4 = s4_reference();
              if (evaluate_poly(s4, -1) != 0) {
                detail = "S_4(-1) != 0";
                return false;
              }
              for (long r = 0; r <= 10; ++r)
                if (evaluate_poly(s4, -3 - r) != -evaluate_poly(s4, r)) {
                  detail = "reciprocity fails at r=" + std::to_string(r);
                  return false;
                }
              if (evaluate_poly(s5_reference(), 2) != 870) {
                detail = "S_5(2) != 870";
                return false;
              }
              return true;
            });

  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
