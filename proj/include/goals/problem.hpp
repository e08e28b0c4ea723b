#pragma once

#include <optional>
#include <vector>

#include "goals/errors.hpp"

namespace goals {

// Row/column margin offsets: row i must sum to r + sr[i], column j to
// r + sc[j]. Offsets may be negative; only the concrete margins at a given
// dilation r are required to be nonnegative.
struct MarginOffsets {
  int n = 0;
  std::vector<long> sr;
  std::vector<long> sc;
};

// A mask cell is either pinned to a value or a wildcard.
struct Cell {
  bool free = true;
  long value = 0;  // meaningful only when !free

  static Cell Free() { return Cell{true, 0}; }
  static Cell Fixed(long v) { return Cell{false, v}; }
  bool operator==(const Cell&) const = default;
};

struct EntryMask {
  int n = 0;
  std::vector<Cell> cells;  // row-major, n*n

  static EntryMask all_free(int n);
  Cell& at(int i, int j) { return cells[static_cast<size_t>(i) * n + j]; }
  const Cell& at(int i, int j) const {
    return cells[static_cast<size_t>(i) * n + j];
  }
  bool operator==(const EntryMask&) const = default;
};

// A counting instance: offsets, mask, and the dilation parameter r.
struct TableProblem {
  MarginOffsets offsets;
  EntryMask mask;
  long r = 0;

  // The soccer case: all offsets zero, diagonal pinned to 0, rest free.
  static TableProblem zero_diagonal(int n, long r);
};

// Margins with fixed contributions already subtracted; the mask survives
// only as the set of free cells.
struct ConcreteMargins {
  int n = 0;
  std::vector<long> row_targets;
  std::vector<long> col_targets;
  std::vector<bool> free_cells;  // row-major; non-free cells are 0

  bool is_free(int i, int j) const {
    return free_cells[static_cast<size_t>(i) * n + j];
  }
};

// Witness that a TableProblem passed validate_problem.
class ValidatedProblem {
 public:
  const TableProblem& problem() const { return problem_; }

 private:
  friend ValidatedProblem validate_problem(const TableProblem& p);
  explicit ValidatedProblem(TableProblem p) : problem_(std::move(p)) {}
  TableProblem problem_;
};

// Throws MarginMismatch, NegativeMargin, or ShapeError.
ValidatedProblem validate_problem(const TableProblem& p);

// Subtracts Fixed(v) cells from their row and column targets.
// Throws InfeasibleFixed when a fixed value exceeds a margin.
ConcreteMargins reduce_fixed(const ValidatedProblem& p);

// Swaps sr<->sc and transposes the mask; involutive.
TableProblem transpose_problem(const TableProblem& p);

ConcreteMargins transpose_margins(const ConcreteMargins& m);

}  // namespace goals
