#include "goals/worldcup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace goals {

void validate_rule(const PointsRule& rule) {
  if (rule.loss < 0 || !(rule.win > rule.draw && rule.draw > rule.loss))
    throw InvalidBoard("points rule must satisfy win > draw > loss >= 0");
}

std::size_t Scenario::match_index(int n, int i, int j) {
  // pairs (0,1)..(0,n-1),(1,2),.. ; i < j
  return static_cast<std::size_t>(i) * (2 * n - i - 1) / 2 + (j - i - 1);
}

void validate_board(const ScoreBoard& b, const PointsRule& rule) {
  validate_rule(rule);
  if (b.n < 2) throw InvalidBoard("a group needs at least 2 teams");
  if (static_cast<int>(b.gf.size()) != b.n ||
      static_cast<int>(b.ga.size()) != b.n)
    throw InvalidBoard("gf/ga vectors must have length n");
  for (int t = 0; t < b.n; ++t)
    if (b.gf[t] < 0 || b.ga[t] < 0)
      throw InvalidBoard("goal totals must be nonnegative");
  long sum_gf = std::accumulate(b.gf.begin(), b.gf.end(), 0L);
  long sum_ga = std::accumulate(b.ga.begin(), b.ga.end(), 0L);
  if (sum_gf != sum_ga)
    throw InvalidBoard("goals for and against totals differ: " +
                       std::to_string(sum_gf) + " vs " + std::to_string(sum_ga));
  if (b.pts) {
    if (static_cast<int>(b.pts->size()) != b.n)
      throw InvalidBoard("pts vector must have length n");
    for (int t = 0; t < b.n; ++t)
      if ((*b.pts)[t] < 0)
        throw InvalidBoard("pts[" + std::to_string(t) + "] is negative");
  }
}

// Every completed group has a pts total between per-match min and max;
// anything else has zero scenarios.
static bool points_total_feasible(const ScoreBoard& b, const PointsRule& rule) {
  if (!b.pts) return true;
  long matches = static_cast<long>(b.n) * (b.n - 1) / 2;
  long per_min = std::min(2 * rule.draw, rule.win + rule.loss);
  long per_max = std::max(2 * rule.draw, rule.win + rule.loss);
  long sum_pts = std::accumulate(b.pts->begin(), b.pts->end(), 0L);
  return sum_pts >= per_min * matches && sum_pts <= per_max * matches;
}

std::vector<long> points_of(const Scenario& s, const PointsRule& rule) {
  std::vector<long> pts(s.n, 0);
  std::size_t idx = 0;
  for (int i = 0; i < s.n; ++i) {
    for (int j = i + 1; j < s.n; ++j, ++idx) {
      auto [a, b] = s.scores[idx];
      if (a > b) {
        pts[i] += rule.win;
        pts[j] += rule.loss;
      } else if (a < b) {
        pts[i] += rule.loss;
        pts[j] += rule.win;
      } else {
        pts[i] += rule.draw;
        pts[j] += rule.draw;
      }
    }
  }
  return pts;
}

ScoreBoard derive_board(const Scenario& s, const PointsRule& rule) {
  ScoreBoard board;
  board.n = s.n;
  board.gf.assign(s.n, 0);
  board.ga.assign(s.n, 0);
  std::size_t idx = 0;
  for (int i = 0; i < s.n; ++i) {
    for (int j = i + 1; j < s.n; ++j, ++idx) {
      auto [a, b] = s.scores[idx];
      board.gf[i] += a;
      board.ga[i] += b;
      board.gf[j] += b;
      board.ga[j] += a;
    }
  }
  board.pts = points_of(s, rule);
  return board;
}

namespace {

class ScenarioSearch {
 public:
  ScenarioSearch(const ScoreBoard& b, const PointsRule& rule,
                 std::optional<std::size_t> list_limit,
                 const ScenarioLimits& limits)
      : board_(b), rule_(rule), list_limit_(list_limit), limits_(limits) {
    for (int i = 0; i < b.n; ++i)
      for (int j = i + 1; j < b.n; ++j) matches_.emplace_back(i, j);
    gf_left_ = b.gf;
    ga_left_ = b.ga;
    played_.assign(b.n, 0);
    pts_acc_.assign(b.n, 0);
    current_.n = b.n;
    current_.scores.assign(matches_.size(), {0, 0});
  }

  ScenarioResult run() {
    search(0);
    return std::move(result_);
  }

 private:
  bool team_feasible(int t) const {
    const int remaining = board_.n - 1 - played_[t];
    if (remaining == 0) {
      if (gf_left_[t] != 0 || ga_left_[t] != 0) return false;
      if (board_.pts && pts_acc_[t] != (*board_.pts)[t]) return false;
      return true;
    }
    if (board_.pts) {
      const long target = (*board_.pts)[t];
      if (pts_acc_[t] + rule_.win * remaining < target) return false;
      if (pts_acc_[t] + rule_.loss * remaining > target) return false;
    }
    return true;
  }

  void search(std::size_t m) {
    if (++result_.nodes > limits_.max_nodes)
      throw ResourceLimit("scenario search node budget exceeded");
    if (m == matches_.size()) {
      result_.count += 1;
      if (list_limit_ && result_.scenarios.size() < *list_limit_)
        result_.scenarios.push_back(current_);
      return;
    }
    auto [i, j] = matches_[m];
    const long a_max = std::min(gf_left_[i], ga_left_[j]);
    const long b_max = std::min(gf_left_[j], ga_left_[i]);
    for (long a = 0; a <= a_max; ++a) {
      for (long b = 0; b <= b_max; ++b) {
        long pi, pj;
        if (a > b) {
          pi = rule_.win;
          pj = rule_.loss;
        } else if (a < b) {
          pi = rule_.loss;
          pj = rule_.win;
        } else {
          pi = pj = rule_.draw;
        }
        gf_left_[i] -= a;
        ga_left_[j] -= a;
        gf_left_[j] -= b;
        ga_left_[i] -= b;
        ++played_[i];
        ++played_[j];
        pts_acc_[i] += pi;
        pts_acc_[j] += pj;
        current_.scores[m] = {a, b};

        if (team_feasible(i) && team_feasible(j)) search(m + 1);

        gf_left_[i] += a;
        ga_left_[j] += a;
        gf_left_[j] += b;
        ga_left_[i] += b;
        --played_[i];
        --played_[j];
        pts_acc_[i] -= pi;
        pts_acc_[j] -= pj;
      }
    }
  }

  const ScoreBoard& board_;
  const PointsRule& rule_;
  std::optional<std::size_t> list_limit_;
  const ScenarioLimits& limits_;
  std::vector<std::pair<int, int>> matches_;
  std::vector<long> gf_left_, ga_left_, pts_acc_;
  std::vector<int> played_;
  Scenario current_;
  ScenarioResult result_;
};

}  // namespace

ScenarioResult find_scenarios(const ScoreBoard& b, const PointsRule& rule,
                              std::optional<std::size_t> list_limit,
                              const ScenarioLimits& limits) {
  validate_board(b, rule);
  if (!points_total_feasible(b, rule)) return {};
  return ScenarioSearch(b, rule, list_limit, limits).run();
}

bool unique_board(const ScoreBoard& b, const PointsRule& rule) {
  return find_scenarios(b, rule).count == 1;
}

}  // namespace goals
