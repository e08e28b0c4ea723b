#include "goals/puzzle.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace goals {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

Scenario random_scenario(int n, long max_goal, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  Scenario s;
  s.n = n;
  const std::uint64_t range = static_cast<std::uint64_t>(max_goal) + 1;
  s.scores.reserve(Scenario::match_count(n));
  for (std::size_t m = 0; m < Scenario::match_count(n); ++m) {
    long a = static_cast<long>(gen() % range);
    long b = static_cast<long>(gen() % range);
    s.scores.emplace_back(a, b);
  }
  return s;
}

Puzzle make_puzzle(int n, long max_goal, std::uint64_t seed, bool require_unique,
                   int max_attempts, const PointsRule& rule) {
  validate_rule(rule);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::uint64_t sub_seed = splitmix64(seed + static_cast<std::uint64_t>(attempt));
    Scenario s = random_scenario(n, max_goal, sub_seed);
    ScoreBoard board = derive_board(s, rule);
    ScenarioResult res = find_scenarios(board, rule, std::size_t{2});
    if (require_unique && res.count != 1) continue;
    Puzzle p;
    p.board = std::move(board);
    p.rule = rule;
    p.solution = std::move(s);
    p.solutions_count = res.count;
    p.seed = seed;
    p.difficulty = res.nodes;
    return p;
  }
  throw ExhaustedAttempts("no " +
                          std::string(require_unique ? "unique-solution " : "") +
                          "board found in " + std::to_string(max_attempts) +
                          " attempts for seed " + std::to_string(seed));
}

PuzzleBook make_book(int count, int n, long max_goal, std::uint64_t master_seed,
                     bool sorted_by_difficulty, int max_attempts,
                     const PointsRule& rule) {
  PuzzleBook book;
  book.n = n;
  book.max_goal = max_goal;
  book.rule = rule;
  book.master_seed = master_seed;
  book.sorted_by_difficulty = sorted_by_difficulty;
  for (int i = 0; i < count; ++i) {
    try {
      book.puzzles.push_back(make_puzzle(
          n, max_goal, master_seed + static_cast<std::uint64_t>(i), true,
          max_attempts, rule));
    } catch (const ExhaustedAttempts& e) {
      throw ExhaustedAttempts("puzzle " + std::to_string(i) + ": " + e.what());
    }
  }
  if (sorted_by_difficulty)
    std::stable_sort(book.puzzles.begin(), book.puzzles.end(),
                     [](const Puzzle& a, const Puzzle& b) {
                       return a.difficulty < b.difficulty;
                     });
  return book;
}

}  // namespace goals
