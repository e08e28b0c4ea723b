#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "goals/problem.hpp"

namespace goals {

// Exceeding any limit raises ResourceLimit; counts are never truncated.
struct CountLimits {
  std::size_t max_memo_entries = 20'000'000;
  std::size_t max_enumerate_yield = 2'000'000;
  std::uint64_t max_bruteforce_nodes = 200'000'000;
};

// Row-major n*n entry grid satisfying a ConcreteMargins instance.
using TableMatrix = std::vector<long>;

// Memoized row-by-row count of nonnegative integer tables with the given
// margins, free cells only. State is (row index, remaining column
// capacities); the memo lives for one call.
mpz_class count_tables(const ConcreteMargins& m, const CountLimits& limits = {});

// Independent oracle: plain cell-by-cell enumeration with running-sum
// feasibility only, no memoization. Small instances only.
mpz_class count_bruteforce(const ConcreteMargins& m,
                           const CountLimits& limits = {});

// Yields every solution once, row-major lexicographic, smallest entry
// first. The visitor returns false to stop early.
void enumerate_tables(const ConcreteMargins& m,
                      const std::function<bool(const TableMatrix&)>& visit,
                      const CountLimits& limits = {});

// Convenience: collect up to `limit` solutions (all when nullopt).
std::vector<TableMatrix> enumerate_tables(
    const ConcreteMargins& m, std::optional<std::size_t> limit = std::nullopt,
    const CountLimits& limits = {});

}  // namespace goals
