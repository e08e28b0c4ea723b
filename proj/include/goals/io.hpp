#pragma once

#include <iosfwd>
#include <string>

#include "goals/fit.hpp"
#include "goals/puzzle.hpp"
#include "goals/worldcup.hpp"

namespace goals {

struct GroupEntry {
  std::string name;  // single letter
  ScoreBoard board;
};

struct GroupDataset {
  int year = 0;
  std::vector<GroupEntry> groups;
  std::optional<std::vector<long>> expected_counts;
};

// Parses the JSON dataset schema {year, groups:[{name,gf,ga,pts}],
// expected_counts?} and validates every board.
// Throws ParseError / InvalidBoard.
GroupDataset load_group_dataset(const std::string& path,
                                const PointsRule& rule = {});
GroupDataset parse_group_dataset(const std::string& text,
                                 const PointsRule& rule = {});

struct BFileEntry {
  long index;
  mpz_class value;
};

struct BFile {
  std::vector<BFileEntry> entries;  // indices strictly increasing
};

// OEIS b-file: one "index value" pair per line, '#' comments ignored.
BFile load_bfile(const std::string& path);
BFile parse_bfile(const std::string& text);

struct CompareReport {
  bool matched = true;
  std::size_t compared = 0;
  bool index_gap = false;
  // valid when !matched
  long mismatch_index = 0;
  mpz_class expected, actual;
};

// Aligns seq[i] with the b-file entry at index i + offset.
CompareReport compare_bfile(const std::vector<mpz_class>& seq, const BFile& b,
                            long offset);

// JSON serialization; round-trips exactly (counts as decimal strings).
std::string scenario_to_json(const Scenario& s);
std::string puzzle_to_json(const Puzzle& p);
std::string book_to_json(const PuzzleBook& b);
std::string fit_report_to_json(const FitReport& r);
Puzzle puzzle_from_json(const std::string& text);
PuzzleBook book_from_json(const std::string& text);

// Problem file {n, sr, sc, mask} with "B" marking wildcard cells.
std::pair<MarginOffsets, EntryMask> parse_problem_file(const std::string& text);
std::pair<MarginOffsets, EntryMask> load_problem_file(const std::string& path);

}  // namespace goals
