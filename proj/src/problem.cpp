#include "goals/problem.hpp"

#include <numeric>
#include <string>

namespace goals {

EntryMask EntryMask::all_free(int n) {
  EntryMask m;
  m.n = n;
  m.cells.assign(static_cast<size_t>(n) * n, Cell::Free());
  return m;
}

TableProblem TableProblem::zero_diagonal(int n, long r) {
  TableProblem p;
  p.offsets.n = n;
  p.offsets.sr.assign(n, 0);
  p.offsets.sc.assign(n, 0);
  p.mask = EntryMask::all_free(n);
  for (int i = 0; i < n; ++i) p.mask.at(i, i) = Cell::Fixed(0);
  p.r = r;
  return p;
}

ValidatedProblem validate_problem(const TableProblem& p) {
  const int n = p.offsets.n;
  if (n < 1) throw ShapeError("matrix side must be >= 1");
  if (static_cast<int>(p.offsets.sr.size()) != n ||
      static_cast<int>(p.offsets.sc.size()) != n)
    throw ShapeError("offset vectors must have length n");
  if (p.mask.n != n ||
      p.mask.cells.size() != static_cast<size_t>(n) * n)
    throw ShapeError("mask is not n x n");
  for (const Cell& c : p.mask.cells)
    if (!c.free && c.value < 0)
      throw ShapeError("fixed mask values must be nonnegative");

  long sum_sr = std::accumulate(p.offsets.sr.begin(), p.offsets.sr.end(), 0L);
  long sum_sc = std::accumulate(p.offsets.sc.begin(), p.offsets.sc.end(), 0L);
  if (sum_sr != sum_sc)
    throw MarginMismatch("offset sums differ: " + std::to_string(sum_sr) +
                         " vs " + std::to_string(sum_sc));

  for (int i = 0; i < n; ++i) {
    if (p.r + p.offsets.sr[i] < 0)
      throw NegativeMargin("row " + std::to_string(i) + " margin " +
                           std::to_string(p.r + p.offsets.sr[i]) +
                           " is negative");
    if (p.r + p.offsets.sc[i] < 0)
      throw NegativeMargin("column " + std::to_string(i) + " margin " +
                           std::to_string(p.r + p.offsets.sc[i]) +
                           " is negative");
  }
  return ValidatedProblem(p);
}

ConcreteMargins reduce_fixed(const ValidatedProblem& vp) {
  const TableProblem& p = vp.problem();
  const int n = p.offsets.n;
  ConcreteMargins m;
  m.n = n;
  m.row_targets.resize(n);
  m.col_targets.resize(n);
  m.free_cells.assign(static_cast<size_t>(n) * n, false);
  for (int i = 0; i < n; ++i) m.row_targets[i] = p.r + p.offsets.sr[i];
  for (int j = 0; j < n; ++j) m.col_targets[j] = p.r + p.offsets.sc[j];

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Cell& c = p.mask.at(i, j);
      if (c.free) {
        m.free_cells[static_cast<size_t>(i) * n + j] = true;
        continue;
      }
      m.row_targets[i] -= c.value;
      m.col_targets[j] -= c.value;
      if (m.row_targets[i] < 0 || m.col_targets[j] < 0)
        throw InfeasibleFixed("fixed value " + std::to_string(c.value) +
                              " at (" + std::to_string(i) + "," +
                              std::to_string(j) + ") exceeds its margin");
    }
  }
  return m;
}

TableProblem transpose_problem(const TableProblem& p) {
  TableProblem t;
  t.offsets.n = p.offsets.n;
  t.offsets.sr = p.offsets.sc;
  t.offsets.sc = p.offsets.sr;
  t.r = p.r;
  t.mask.n = p.mask.n;
  t.mask.cells.resize(p.mask.cells.size());
  for (int i = 0; i < p.mask.n; ++i)
    for (int j = 0; j < p.mask.n; ++j) t.mask.at(j, i) = p.mask.at(i, j);
  return t;
}

ConcreteMargins transpose_margins(const ConcreteMargins& m) {
  ConcreteMargins t;
  t.n = m.n;
  t.row_targets = m.col_targets;
  t.col_targets = m.row_targets;
  t.free_cells.assign(m.free_cells.size(), false);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      t.free_cells[static_cast<size_t>(j) * m.n + i] = m.is_free(i, j);
  return t;
}

}  // namespace goals
