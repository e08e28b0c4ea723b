#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "goals/errors.hpp"

namespace goals {

struct PointsRule {
  long win = 3;
  long draw = 1;
  long loss = 0;

  bool operator==(const PointsRule&) const = default;
};

// Throws InvalidBoard unless win > draw > loss and all are nonnegative.
void validate_rule(const PointsRule& rule);

// GF/GA/PTS vectors of an n-team group; pts == nullopt means the points
// column is a wildcard (unconstrained).
struct ScoreBoard {
  int n = 0;
  std::vector<long> gf;
  std::vector<long> ga;
  std::optional<std::vector<long>> pts;

  bool operator==(const ScoreBoard&) const = default;
};

void validate_board(const ScoreBoard& b, const PointsRule& rule);

// One score (a, b) per unordered match {i, j}, i < j, stored in
// lexicographic (i, j) order.
struct Scenario {
  int n = 0;
  std::vector<std::pair<long, long>> scores;

  static std::size_t match_count(int n) {
    return static_cast<std::size_t>(n) * (n - 1) / 2;
  }
  // Index of pair (i, j), i < j, in the fixed enumeration order.
  static std::size_t match_index(int n, int i, int j);

  bool operator==(const Scenario&) const = default;
};

std::vector<long> points_of(const Scenario& s, const PointsRule& rule);

ScoreBoard derive_board(const Scenario& s, const PointsRule& rule);

struct ScenarioResult {
  mpz_class count = 0;
  std::vector<Scenario> scenarios;  // populated up to list_limit
  std::uint64_t nodes = 0;          // backtracking nodes visited
};

struct ScenarioLimits {
  std::uint64_t max_nodes = 500'000'000;
};

// Counts (and optionally lists, in lexicographic order of the flattened
// score sequence) every scenario whose derived board equals b.
// list_limit == nullopt stores nothing; a value stores up to that many.
ScenarioResult find_scenarios(const ScoreBoard& b, const PointsRule& rule = {},
                              std::optional<std::size_t> list_limit = std::nullopt,
                              const ScenarioLimits& limits = {});

bool unique_board(const ScoreBoard& b, const PointsRule& rule = {});

}  // namespace goals
