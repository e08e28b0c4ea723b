#pragma once

#include <cstdint>

#include "goals/worldcup.hpp"

namespace goals {

struct Puzzle {
  ScoreBoard board;
  PointsRule rule;
  Scenario solution;
  mpz_class solutions_count;
  std::uint64_t seed = 0;
  std::uint64_t difficulty = 0;  // solver backtracking nodes on the board

  bool operator==(const Puzzle&) const = default;
};

struct PuzzleBook {
  int n = 0;
  long max_goal = 0;
  PointsRule rule;
  std::uint64_t master_seed = 0;
  bool sorted_by_difficulty = false;
  std::vector<Puzzle> puzzles;
};

// Each match score drawn uniformly from {0..max_goal}^2 via a pinned
// generator (mt19937_64 + modulo); same seed, same scenario, everywhere.
Scenario random_scenario(int n, long max_goal, std::uint64_t seed);

// Rejection sampling: draw scenarios on derived sub-seeds until one whose
// board has a unique solution (when require_unique). Throws
// ExhaustedAttempts after max_attempts draws.
Puzzle make_puzzle(int n, long max_goal, std::uint64_t seed,
                   bool require_unique, int max_attempts = 1000,
                   const PointsRule& rule = {});

PuzzleBook make_book(int count, int n, long max_goal, std::uint64_t master_seed,
                     bool sorted_by_difficulty = false, int max_attempts = 1000,
                     const PointsRule& rule = {});

}  // namespace goals
