// goals: exact counting of round-robin goal tallies, polynomial fits,
// scoreboard scenario solving, and puzzle generation.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "goals/count.hpp"
#include "goals/fit.hpp"
#include "goals/io.hpp"
#include "goals/puzzle.hpp"
#include "goals/worldcup.hpp"

namespace {

using namespace goals;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitVerification = 3;
constexpr int kExitResource = 4;

std::vector<long> parse_long_list(const std::string& csv) {
  std::vector<long> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    out.push_back(std::stol(tok, &pos));
    if (pos != tok.size()) throw ParseError("bad integer list: " + csv);
  }
  return out;
}

struct Options {
  bool machine = false;
};

mpz_class count_instance(const MarginOffsets& offsets, const EntryMask& mask,
                         long r) {
  TableProblem p;
  p.offsets = offsets;
  p.mask = mask;
  p.r = r;
  return count_tables(reduce_fixed(validate_problem(p)));
}

std::pair<MarginOffsets, EntryMask> instance_from_flags(
    int n, bool zero_diagonal, const std::string& problem_file) {
  if (!problem_file.empty()) return load_problem_file(problem_file);
  if (!zero_diagonal)
    throw ParseError("need --zero-diagonal or --problem FILE");
  TableProblem p = TableProblem::zero_diagonal(n, 0);
  return {p.offsets, p.mask};
}

void print_fit_report(const FitReport& rep, int n, const Options& opt,
                      bool factored) {
  if (opt.machine) {
    std::cout << fit_report_to_json(rep) << "\n";
    return;
  }
  std::cout << "polynomial: " << rep.polynomial.to_string() << "\n";
  if (factored && n >= 3) {
    RationalPolynomial quotient = factor_known_roots(rep.polynomial, n);
    std::string roots;
    for (long k = 1; k <= n - 2; ++k)
      roots += "(r+" + std::to_string(k) + ")";
    std::cout << "factored: " << roots << " * [" << quotient.to_string()
              << "]\n";
  }
  std::cout << "degree: " << rep.polynomial.degree() << "\n";
  std::cout << "samples:";
  for (const auto& [r, c] : rep.samples_used)
    std::cout << " S(" << r << ")=" << c.get_str();
  std::cout << "\nverified at:";
  for (long r : rep.extra_points_checked) std::cout << " r=" << r;
  std::cout << "\nstructure checks: degree="
            << (rep.structure.degree_ok ? "pass" : "fail")
            << " roots=" << (rep.structure.roots_ok ? "pass" : "fail")
            << " reciprocity=" << (rep.structure.reciprocity_ok ? "pass" : "fail")
            << "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"exact round-robin goal-tally counting and scoreboard tools"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag_callback(
      "--machine", [&opt] { opt.machine = true; },
      "line-oriented key=value output instead of human text");

  // count
  auto* count_cmd = app.add_subcommand("count", "count tables at one dilation r");
  int count_n = 4;
  long count_r = 0;
  bool count_zero_diag = false;
  std::string count_problem;
  count_cmd->add_option("--n", count_n, "matrix side");
  count_cmd->add_option("--r", count_r, "dilation parameter")->required();
  count_cmd->add_flag("--zero-diagonal", count_zero_diag,
                      "zero offsets, diagonal pinned to 0");
  count_cmd->add_option("--problem", count_problem,
                        "JSON problem file {n, sr, sc, mask}");
  count_cmd->callback([&] {
    auto [offsets, mask] =
        instance_from_flags(count_n, count_zero_diag, count_problem);
    mpz_class c = count_instance(offsets, mask, count_r);
    if (opt.machine)
      std::cout << "r=" << count_r << " count=" << c.get_str() << "\n";
    else
      std::cout << c.get_str() << "\n";
  });

  // poly
  auto* poly_cmd = app.add_subcommand("poly", "fit S_n(r) for the soccer case");
  int poly_n = 4;
  std::string poly_mode = "economical";
  poly_cmd->add_option("--n", poly_n, "number of teams")->required();
  poly_cmd->add_option("--mode", poly_mode, "plain | economical")
      ->check(CLI::IsMember({"plain", "economical"}));
  poly_cmd->callback([&] {
    TableProblem zd = TableProblem::zero_diagonal(poly_n, 0);
    Counter counter = make_counter(zd.offsets, zd.mask);
    FitMode mode =
        poly_mode == "plain" ? FitMode::Plain : FitMode::Economical;
    FitReport rep = fit_sn(poly_n, mode, counter);
    print_fit_report(rep, poly_n, opt, true);
  });

  // fitgen
  auto* fitgen_cmd =
      app.add_subcommand("fitgen", "fit a counting polynomial for a general "
                                   "offsets/mask instance");
  std::string fitgen_problem;
  long fitgen_start = 0;
  fitgen_cmd->add_option("--problem", fitgen_problem, "JSON problem file")
      ->required();
  fitgen_cmd->add_option("--r-start", fitgen_start, "first sampled dilation");
  fitgen_cmd->callback([&] {
    auto [offsets, mask] = load_problem_file(fitgen_problem);
    Counter counter = make_counter(offsets, mask);
    FitReport rep = fit_general(offsets, mask, fitgen_start, counter);
    print_fit_report(rep, 0, opt, false);
  });

  // seq
  auto* seq_cmd = app.add_subcommand("seq", "counts for r = 0..r-max");
  int seq_n = 4;
  long seq_rmax = 0;
  bool seq_zero_diag = false;
  std::string seq_problem;
  seq_cmd->add_option("--n", seq_n, "matrix side");
  seq_cmd->add_option("--r-max", seq_rmax, "largest dilation")->required();
  seq_cmd->add_flag("--zero-diagonal", seq_zero_diag, "soccer instance");
  seq_cmd->add_option("--problem", seq_problem, "JSON problem file");
  seq_cmd->callback([&] {
    auto [offsets, mask] =
        instance_from_flags(seq_n, seq_zero_diag, seq_problem);
    for (long r = 0; r <= seq_rmax; ++r) {
      mpz_class c = count_instance(offsets, mask, r);
      if (opt.machine)
        std::cout << "r=" << r << " count=" << c.get_str() << "\n";
      else
        std::cout << (r == 0 ? "" : ", ") << c.get_str();
    }
    if (!opt.machine) std::cout << "\n";
  });

  // scenarios
  auto* scen_cmd =
      app.add_subcommand("scenarios", "count/list match-score scenarios for a "
                                      "scoreboard");
  std::string scen_gf, scen_ga, scen_pts, scen_rule = "3,1,0";
  bool scen_wildcard = false;
  long scen_list = -1;
  scen_cmd->add_option("--gf", scen_gf, "goals for, comma separated")->required();
  scen_cmd->add_option("--ga", scen_ga, "goals against")->required();
  scen_cmd->add_option("--pts", scen_pts, "points");
  scen_cmd->add_flag("--wildcard-pts", scen_wildcard, "leave points unconstrained");
  scen_cmd->add_option("--list", scen_list, "also list up to N scenarios");
  scen_cmd->add_option("--rule", scen_rule, "win,draw,loss points");
  scen_cmd->callback([&] {
    ScoreBoard board;
    board.gf = parse_long_list(scen_gf);
    board.ga = parse_long_list(scen_ga);
    board.n = static_cast<int>(board.gf.size());
    if (!scen_wildcard) {
      if (scen_pts.empty())
        throw ParseError("need --pts or --wildcard-pts");
      board.pts = parse_long_list(scen_pts);
    }
    auto rv = parse_long_list(scen_rule);
    if (rv.size() != 3) throw ParseError("--rule wants win,draw,loss");
    PointsRule rule{rv[0], rv[1], rv[2]};
    std::optional<std::size_t> list_limit;
    if (scen_list >= 0) list_limit = static_cast<std::size_t>(scen_list);
    ScenarioResult res = find_scenarios(board, rule, list_limit);
    if (opt.machine)
      std::cout << "count=" << res.count.get_str() << " nodes=" << res.nodes
                << "\n";
    else
      std::cout << "count: " << res.count.get_str() << "\n";
    for (const Scenario& s : res.scenarios) {
      std::size_t idx = 0;
      std::ostringstream line;
      for (int i = 0; i < s.n; ++i)
        for (int j = i + 1; j < s.n; ++j, ++idx)
          line << (idx ? " " : "") << i + 1 << "v" << j + 1 << ":"
               << s.scores[idx].first << "-" << s.scores[idx].second;
      if (opt.machine)
        std::cout << "scenario=" << line.str() << "\n";
      else
        std::cout << "  " << line.str() << "\n";
    }
  });

  // groups
  auto* groups_cmd =
      app.add_subcommand("groups", "solve every scoreboard in a dataset file");
  std::string groups_file, groups_rule = "3,1,0";
  groups_cmd->add_option("--dataset", groups_file, "JSON dataset file")
      ->required();
  groups_cmd->add_option("--rule", groups_rule, "win,draw,loss points");
  bool groups_failed = false;
  groups_cmd->callback([&] {
    auto rv = parse_long_list(groups_rule);
    if (rv.size() != 3) throw ParseError("--rule wants win,draw,loss");
    PointsRule rule{rv[0], rv[1], rv[2]};
    GroupDataset ds = load_group_dataset(groups_file, rule);
    for (std::size_t g = 0; g < ds.groups.size(); ++g) {
      ScenarioResult res = find_scenarios(ds.groups[g].board, rule);
      bool unique = res.count == 1;
      std::string expected;
      if (ds.expected_counts) {
        long want = (*ds.expected_counts)[g];
        if (res.count != want) {
          groups_failed = true;
          expected = " MISMATCH expected=" + std::to_string(want);
        }
      }
      if (opt.machine)
        std::cout << "year=" << ds.year << " group=" << ds.groups[g].name
                  << " count=" << res.count.get_str()
                  << " unique=" << (unique ? 1 : 0) << expected << "\n";
      else
        std::cout << ds.year << " group " << ds.groups[g].name << ": "
                  << res.count.get_str() << (unique ? " (unique)" : "")
                  << expected << "\n";
    }
  });

  // puzzle
  auto* puzzle_cmd = app.add_subcommand("puzzle", "generate one scoreboard puzzle");
  int pz_n = 4, pz_attempts = 1000;
  long pz_max_goal = 4;
  std::uint64_t pz_seed = 0;
  bool pz_any = false;
  puzzle_cmd->add_option("--n", pz_n, "teams");
  puzzle_cmd->add_option("--max-goal", pz_max_goal, "per-side score bound");
  puzzle_cmd->add_option("--seed", pz_seed, "generator seed")->required();
  puzzle_cmd->add_flag("--any", pz_any, "accept non-unique boards");
  puzzle_cmd->add_option("--max-attempts", pz_attempts, "rejection budget");
  puzzle_cmd->callback([&] {
    Puzzle p = make_puzzle(pz_n, pz_max_goal, pz_seed, !pz_any, pz_attempts);
    std::cout << puzzle_to_json(p) << "\n";
  });

  // book
  auto* book_cmd = app.add_subcommand("book", "generate a puzzle book");
  int bk_count = 10, bk_n = 4, bk_attempts = 1000;
  long bk_max_goal = 4;
  std::uint64_t bk_seed = 0;
  bool bk_sort = false;
  std::string bk_out;
  book_cmd->add_option("--count", bk_count, "number of puzzles")->required();
  book_cmd->add_option("--n", bk_n, "teams");
  book_cmd->add_option("--max-goal", bk_max_goal, "per-side score bound");
  book_cmd->add_option("--seed", bk_seed, "master seed")->required();
  book_cmd->add_flag("--sort", bk_sort, "sort ascending by difficulty");
  book_cmd->add_option("--out", bk_out, "write JSON here instead of stdout");
  book_cmd->add_option("--max-attempts", bk_attempts, "per-puzzle rejection budget");
  book_cmd->callback([&] {
    PuzzleBook book =
        make_book(bk_count, bk_n, bk_max_goal, bk_seed, bk_sort, bk_attempts);
    std::string text = book_to_json(book);
    if (bk_out.empty()) {
      std::cout << text << "\n";
    } else {
      std::ofstream out(bk_out, std::ios::binary);
      out << text << "\n";
    }
  });

  // oeis-check
  auto* oeis_cmd =
      app.add_subcommand("oeis-check", "compare S_n counts against a b-file");
  int oc_n = 4;
  long oc_offset = 0, oc_rmax = -1;
  std::string oc_path;
  oeis_cmd->add_option("--n", oc_n, "teams")->required();
  oeis_cmd->add_option("--bfile", oc_path, "local b-file path")->required();
  oeis_cmd->add_option("--offset", oc_offset,
                       "b-file index corresponding to r=0");
  oeis_cmd->add_option("--r-max", oc_rmax,
                       "largest r to compute (default: last b-file index)");
  bool oeis_failed = false;
  oeis_cmd->callback([&] {
    BFile bf = load_bfile(oc_path);
    long rmax = oc_rmax;
    if (rmax < 0)
      rmax = bf.entries.empty() ? -1 : bf.entries.back().index - oc_offset;
    TableProblem zd = TableProblem::zero_diagonal(oc_n, 0);
    Counter counter = make_counter(zd.offsets, zd.mask);
    std::vector<mpz_class> seq;
    for (long r = 0; r <= rmax; ++r) seq.push_back(counter(r));
    CompareReport rep = compare_bfile(seq, bf, oc_offset);
    if (opt.machine) {
      std::cout << "compared=" << rep.compared
                << " matched=" << (rep.matched ? 1 : 0)
                << " index_gap=" << (rep.index_gap ? 1 : 0);
      if (!rep.matched)
        std::cout << " mismatch_index=" << rep.mismatch_index
                  << " expected=" << rep.expected.get_str()
                  << " actual=" << rep.actual.get_str();
      std::cout << "\n";
    } else if (rep.matched) {
      std::cout << "full match over " << rep.compared << " entries";
      if (rep.index_gap) std::cout << " (warning: index gap in b-file)";
      std::cout << "\n";
    } else {
      std::cout << "MISMATCH at index " << rep.mismatch_index << ": b-file "
                << rep.expected.get_str() << ", computed "
                << rep.actual.get_str() << "\n";
    }
    if (!rep.matched) oeis_failed = true;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const ExhaustedAttempts& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitVerification;
  }
  if (groups_failed || oeis_failed) return kExitVerification;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
