#include "goals/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace goals {

namespace {

using nlohmann::json;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<long> long_vector(const json& j, const std::string& field) {
  if (!j.is_array()) throw ParseError("field '" + field + "' must be an array");
  std::vector<long> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError("field '" + field + "' must hold integers");
    out.push_back(v.get<long>());
  }
  return out;
}

json scenario_json(const Scenario& s) {
  json scores = json::array();
  for (auto [a, b] : s.scores) scores.push_back(json::array({a, b}));
  return json{{"n", s.n}, {"scores", scores}};
}

Scenario scenario_from(const json& j) {
  Scenario s;
  s.n = j.at("n").get<int>();
  for (const auto& pair : j.at("scores"))
    s.scores.emplace_back(pair.at(0).get<long>(), pair.at(1).get<long>());
  if (s.scores.size() != Scenario::match_count(s.n))
    throw ParseError("scenario score list has the wrong length");
  return s;
}

json board_json(const ScoreBoard& b) {
  json out{{"n", b.n}, {"gf", b.gf}, {"ga", b.ga}};
  if (b.pts)
    out["pts"] = *b.pts;
  else
    out["pts"] = nullptr;
  return out;
}

ScoreBoard board_from(const json& j) {
  ScoreBoard b;
  b.n = j.at("n").get<int>();
  b.gf = long_vector(j.at("gf"), "gf");
  b.ga = long_vector(j.at("ga"), "ga");
  if (j.contains("pts") && !j.at("pts").is_null())
    b.pts = long_vector(j.at("pts"), "pts");
  return b;
}

json rule_json(const PointsRule& r) {
  return json{{"win", r.win}, {"draw", r.draw}, {"loss", r.loss}};
}

PointsRule rule_from(const json& j) {
  return PointsRule{j.at("win").get<long>(), j.at("draw").get<long>(),
                    j.at("loss").get<long>()};
}

json puzzle_json(const Puzzle& p) {
  return json{{"board", board_json(p.board)},
              {"rule", rule_json(p.rule)},
              {"solution", scenario_json(p.solution)},
              {"solutions_count", p.solutions_count.get_str()},
              {"seed", p.seed},
              {"difficulty", p.difficulty}};
}

Puzzle puzzle_from(const json& j) {
  Puzzle p;
  p.board = board_from(j.at("board"));
  p.rule = rule_from(j.at("rule"));
  p.solution = scenario_from(j.at("solution"));
  p.solutions_count = mpz_class(j.at("solutions_count").get<std::string>());
  p.seed = j.at("seed").get<std::uint64_t>();
  p.difficulty = j.at("difficulty").get<std::uint64_t>();
  return p;
}

}  // namespace

GroupDataset parse_group_dataset(const std::string& text,
                                 const PointsRule& rule) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("dataset is not valid JSON: ") + e.what());
  }
  GroupDataset ds;
  try {
    ds.year = j.at("year").get<int>();
    for (const auto& g : j.at("groups")) {
      GroupEntry entry;
      entry.name = g.at("name").get<std::string>();
      ScoreBoard b;
      b.gf = long_vector(g.at("gf"), "gf");
      b.ga = long_vector(g.at("ga"), "ga");
      b.n = static_cast<int>(b.gf.size());
      if (g.contains("pts") && !g.at("pts").is_null())
        b.pts = long_vector(g.at("pts"), "pts");
      entry.board = std::move(b);
      ds.groups.push_back(std::move(entry));
    }
    if (j.contains("expected_counts") && !j.at("expected_counts").is_null())
      ds.expected_counts = long_vector(j.at("expected_counts"), "expected_counts");
  } catch (const json::exception& e) {
    throw ParseError(std::string("dataset schema error: ") + e.what());
  }
  if (ds.expected_counts && ds.expected_counts->size() != ds.groups.size())
    throw ParseError("expected_counts must have one entry per group");
  for (const GroupEntry& g : ds.groups) {
    try {
      validate_board(g.board, rule);
    } catch (const InvalidBoard& e) {
      throw InvalidBoard("group " + g.name + ": " + e.what());
    }
  }
  return ds;
}

GroupDataset load_group_dataset(const std::string& path,
                                const PointsRule& rule) {
  return parse_group_dataset(slurp(path), rule);
}

BFile parse_bfile(const std::string& text) {
  BFile bf;
  std::istringstream in(text);
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string idx_tok, val_tok, extra;
    if (!(ls >> idx_tok)) continue;  // blank
    if (!(ls >> val_tok) || (ls >> extra))
      throw ParseError("b-file line " + std::to_string(lineno) +
                       ": expected 'index value'");
    long index;
    try {
      std::size_t pos = 0;
      index = std::stol(idx_tok, &pos);
      if (pos != idx_tok.size()) throw std::invalid_argument(idx_tok);
    } catch (const std::exception&) {
      throw ParseError("b-file line " + std::to_string(lineno) +
                       ": bad index '" + idx_tok + "'");
    }
    mpz_class value;
    if (mpz_set_str(value.get_mpz_t(), val_tok.c_str(), 10) != 0)
      throw ParseError("b-file line " + std::to_string(lineno) +
                       ": bad value '" + val_tok + "'");
    if (!bf.entries.empty() && index <= bf.entries.back().index)
      throw ParseError("b-file line " + std::to_string(lineno) +
                       ": indices must be strictly increasing");
    bf.entries.push_back({index, std::move(value)});
  }
  return bf;
}

BFile load_bfile(const std::string& path) { return parse_bfile(slurp(path)); }

CompareReport compare_bfile(const std::vector<mpz_class>& seq, const BFile& b,
                            long offset) {
  CompareReport rep;
  for (const BFileEntry& e : b.entries) {
    long i = e.index - offset;
    if (i < 0 || i >= static_cast<long>(seq.size())) continue;
    ++rep.compared;
    if (seq[static_cast<std::size_t>(i)] != e.value) {
      rep.matched = false;
      rep.mismatch_index = e.index;
      rep.expected = e.value;
      rep.actual = seq[static_cast<std::size_t>(i)];
      return rep;
    }
  }
  // A gap: consecutive compared indices not adjacent in the b-file.
  for (std::size_t k = 1; k < b.entries.size(); ++k)
    if (b.entries[k].index != b.entries[k - 1].index + 1) rep.index_gap = true;
  return rep;
}

std::string scenario_to_json(const Scenario& s) { return scenario_json(s).dump(); }

std::string puzzle_to_json(const Puzzle& p) { return puzzle_json(p).dump(2); }

Puzzle puzzle_from_json(const std::string& text) {
  try {
    return puzzle_from(json::parse(text));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad puzzle JSON: ") + e.what());
  }
}

std::string book_to_json(const PuzzleBook& b) {
  json puzzles = json::array();
  for (const Puzzle& p : b.puzzles) puzzles.push_back(puzzle_json(p));
  return json{{"n", b.n},
              {"max_goal", b.max_goal},
              {"rule", rule_json(b.rule)},
              {"master_seed", b.master_seed},
              {"sorted_by_difficulty", b.sorted_by_difficulty},
              {"puzzles", puzzles}}
      .dump(2);
}

PuzzleBook book_from_json(const std::string& text) {
  try {
    json j = json::parse(text);
    PuzzleBook b;
    b.n = j.at("n").get<int>();
    b.max_goal = j.at("max_goal").get<long>();
    b.rule = rule_from(j.at("rule"));
    b.master_seed = j.at("master_seed").get<std::uint64_t>();
    b.sorted_by_difficulty = j.at("sorted_by_difficulty").get<bool>();
    for (const auto& p : j.at("puzzles")) b.puzzles.push_back(puzzle_from(p));
    return b;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad book JSON: ") + e.what());
  }
}

std::string fit_report_to_json(const FitReport& r) {
  json samples = json::array();
  for (const auto& [rv, count] : r.samples_used)
    samples.push_back(json{{"r", rv}, {"count", count.get_str()}});
  json coeffs = json::array();
  for (const Rational& c : r.polynomial.coefficients())
    coeffs.push_back(c.get_str());
  return json{{"polynomial", r.polynomial.to_string()},
              {"coefficients", coeffs},
              {"degree", r.polynomial.degree()},
              {"samples_used", samples},
              {"extra_points_checked", r.extra_points_checked},
              {"verification",
               {{"degree", r.structure.degree_ok},
                {"roots", r.structure.roots_ok},
                {"reciprocity", r.structure.reciprocity_ok}}},
              {"valid", r.valid}}
      .dump(2);
}

std::pair<MarginOffsets, EntryMask> parse_problem_file(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("problem file is not valid JSON: ") + e.what());
  }
  MarginOffsets offsets;
  EntryMask mask;
  try {
    offsets.n = j.at("n").get<int>();
    offsets.sr = long_vector(j.at("sr"), "sr");
    offsets.sc = long_vector(j.at("sc"), "sc");
    mask.n = offsets.n;
    if (j.contains("mask")) {
      for (const auto& row : j.at("mask")) {
        for (const auto& cell : row) {
          if (cell.is_string() && cell.get<std::string>() == "B")
            mask.cells.push_back(Cell::Free());
          else if (cell.is_number_integer())
            mask.cells.push_back(Cell::Fixed(cell.get<long>()));
          else
            throw ParseError("mask cells must be integers or \"B\"");
        }
      }
    } else {
      mask = EntryMask::all_free(offsets.n);
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("problem file schema error: ") + e.what());
  }
  return {std::move(offsets), std::move(mask)};
}

std::pair<MarginOffsets, EntryMask> load_problem_file(const std::string& path) {
  return parse_problem_file(slurp(path));
}

}  // namespace goals
