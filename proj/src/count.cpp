#include "goals/count.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace goals {

namespace {

struct StateKey {
  int row;
  std::vector<long> caps;
  bool operator==(const StateKey&) const = default;
};

struct StateHash {
  std::size_t operator()(const StateKey& k) const {
    std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(k.row);
    for (long c : k.caps) {
      h ^= static_cast<std::uint64_t>(c) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

class TableCounter {
 public:
  TableCounter(const ConcreteMargins& m, const CountLimits& limits)
      : m_(m), limits_(limits) {
    for (int i = 0; i < m.n; ++i) {
      free_cols_.emplace_back();
      for (int j = 0; j < m.n; ++j)
        if (m.is_free(i, j)) free_cols_.back().push_back(j);
    }
  }

  mpz_class count() {
    std::vector<long> caps = m_.col_targets;
    return count_rows(0, caps);
  }

 private:
  mpz_class count_rows(int row, std::vector<long>& caps) {
    if (row == m_.n) return 1;  // capacities sum to 0, hence all zero
    long remaining = 0;
    for (int i = row; i < m_.n; ++i) remaining += m_.row_targets[i];
    for (long c : caps)
      if (c > remaining) return 0;

    StateKey key{row, caps};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    mpz_class total = 0;
    fill_row(row, 0, m_.row_targets[row], caps, total);

    if (memo_.size() >= limits_.max_memo_entries)
      throw ResourceLimit("memo entry budget exceeded");
    memo_.emplace(std::move(key), total);
    return total;
  }

  // Distribute `left` over the free cells of `row` starting at cell index
  // `idx`, bounded by column capacities, recursing into the next row at
  // each complete distribution.
  void fill_row(int row, std::size_t idx, long left, std::vector<long>& caps,
                mpz_class& total) {
    const std::vector<int>& cols = free_cols_[row];
    if (idx == cols.size()) {
      if (left == 0) total += count_rows(row + 1, caps);
      return;
    }
    // Remaining cells after this one must be able to absorb the rest.
    long tail_cap = 0;
    for (std::size_t k = idx + 1; k < cols.size(); ++k) tail_cap += caps[cols[k]];
    const int j = cols[idx];
    const long hi = std::min(left, caps[j]);
    const long lo = std::max(0L, left - tail_cap);
    for (long v = lo; v <= hi; ++v) {
      caps[j] -= v;
      fill_row(row, idx + 1, left - v, caps, total);
      caps[j] += v;
    }
  }

  const ConcreteMargins& m_;
  const CountLimits& limits_;
  std::vector<std::vector<int>> free_cols_;
  std::unordered_map<StateKey, mpz_class, StateHash> memo_;
};

}  // namespace

mpz_class count_tables(const ConcreteMargins& m, const CountLimits& limits) {
  long row_total = std::accumulate(m.row_targets.begin(), m.row_targets.end(), 0L);
  long col_total = std::accumulate(m.col_targets.begin(), m.col_targets.end(), 0L);
  if (row_total != col_total) return 0;
  return TableCounter(m, limits).count();
}

mpz_class count_bruteforce(const ConcreteMargins& m, const CountLimits& limits) {
  const int n = m.n;
  long row_total = std::accumulate(m.row_targets.begin(), m.row_targets.end(), 0L);
  long col_total = std::accumulate(m.col_targets.begin(), m.col_targets.end(), 0L);
  if (row_total != col_total) return 0;

  std::vector<long> row_left = m.row_targets;
  std::vector<long> col_left = m.col_targets;
  std::uint64_t nodes = 0;
  mpz_class found = 0;

  // Walk cells row-major; a free cell takes any value within its running
  // row/column budget, a pinned cell contributes nothing.
  std::function<void(int)> walk = [&](int cell) {
    if (++nodes > limits.max_bruteforce_nodes)
      throw ResourceLimit("brute-force node budget exceeded");
    if (cell > 0 && cell % n == 0 && row_left[cell / n - 1] != 0) return;
    if (cell == n * n) {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i)
        ok = row_left[i] == 0 && col_left[i] == 0;
      if (ok) found += 1;
      return;
    }
    const int i = cell / n, j = cell % n;
    if (!m.is_free(i, j)) {
      walk(cell + 1);
      return;
    }
    const long hi = std::min(row_left[i], col_left[j]);
    for (long v = 0; v <= hi; ++v) {
      row_left[i] -= v;
      col_left[j] -= v;
      walk(cell + 1);
      row_left[i] += v;
      col_left[j] += v;
    }
  };
  walk(0);
  return found;
}

void enumerate_tables(const ConcreteMargins& m,
                      const std::function<bool(const TableMatrix&)>& visit,
                      const CountLimits& limits) {
  const int n = m.n;
  TableMatrix entries(static_cast<std::size_t>(n) * n, 0);
  std::vector<long> caps = m.col_targets;
  std::size_t yielded = 0;
  bool stop = false;

  std::vector<std::vector<int>> free_cols(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m.is_free(i, j)) free_cols[i].push_back(j);

  std::function<void(int, std::size_t, long)> fill = [&](int row, std::size_t idx,
                                                         long left) {
    if (stop) return;
    if (row == n) {
      if (++yielded > limits.max_enumerate_yield)
        throw ResourceLimit("enumeration yield budget exceeded");
      if (!visit(entries)) stop = true;
      return;
    }
    const std::vector<int>& cols = free_cols[row];
    if (idx == cols.size()) {
      if (left == 0) fill(row + 1, 0, row + 1 < n ? m.row_targets[row + 1] : 0);
      return;
    }
    long tail_cap = 0;
    for (std::size_t k = idx + 1; k < cols.size(); ++k) tail_cap += caps[cols[k]];
    const int j = cols[idx];
    const long hi = std::min(left, caps[j]);
    const long lo = std::max(0L, left - tail_cap);
    for (long v = lo; v <= hi && !stop; ++v) {
      caps[j] -= v;
      entries[static_cast<std::size_t>(row) * n + j] = v;
      fill(row, idx + 1, left - v);
      caps[j] += v;
    }
    entries[static_cast<std::size_t>(row) * n + j] = 0;
  };

  long row_total = std::accumulate(m.row_targets.begin(), m.row_targets.end(), 0L);
  long col_total = std::accumulate(m.col_targets.begin(), m.col_targets.end(), 0L);
  if (row_total != col_total) return;
  fill(0, 0, n > 0 ? m.row_targets[0] : 0);
}

std::vector<TableMatrix> enumerate_tables(const ConcreteMargins& m,
                                          std::optional<std::size_t> limit,
                                          const CountLimits& limits) {
  std::vector<TableMatrix> out;
  enumerate_tables(
      m,
      [&](const TableMatrix& t) {
        out.push_back(t);
        return !limit || out.size() < *limit;
      },
      limits);
  return out;
}

}  // namespace goals
