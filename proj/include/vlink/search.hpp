#pragma once

// Bounded breadth-first search over move applications, with free
// normalization moves, plus step-script verification.

#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "vlink/diagram.hpp"
#include "vlink/moves.hpp"

namespace vlink {

struct SearchBudget {
  int max_depth = 4;
  long long max_states = 200000;
  // Moves that cost one unit of depth each.
  std::vector<MoveSpec> costed;
  // Free normalization: kink / opposite-sign bigon deletions applied eagerly
  // at cost zero to every state.
  bool free_r1 = true;
  bool free_r2 = true;
  // Cap on insertion gap positions per component during enumeration.
  int gap_cap = std::numeric_limits<int>::max();
};

namespace detail {

inline ChordDiagram search_normalize(const ChordDiagram& d, const SearchBudget& b) {
  if (b.free_r1 && b.free_r2) return greedy_simplify(d).diagram;
  if (!b.free_r1 && !b.free_r2) return d;
  MoveKind kind = b.free_r1 ? MoveKind::R1 : MoveKind::R2;
  ChordDiagram cur = d;
  for (;;) {
    auto sites = enumerate_sites(cur, kind, MoveDir::Del);
    if (sites.empty()) return cur;
    cur = apply_move(cur, sites.front()).diagram;
  }
}

}  // namespace detail

// Fewest costed moves taking `a` to `b` up to free normalization, or absent
// if no path exists within max_depth or the state budget runs out. States are
// deduplicated by canonical key, so the count is exact for the given budget.
inline std::optional<int> bounded_distance(const ChordDiagram& a, const ChordDiagram& b,
                                           const SearchBudget& budget) {
  EnumerateOptions opts;
  opts.gap_cap = budget.gap_cap;
  ChordDiagram start = detail::search_normalize(a, budget);
  const std::string target = canonical_key(detail::search_normalize(b, budget));
  const std::string start_key = canonical_key(start);
  if (start_key == target) return 0;

  std::map<std::string, int> seen;
  seen.emplace(start_key, 0);
  std::queue<std::pair<ChordDiagram, int>> frontier;
  frontier.emplace(std::move(start), 0);
  long long states = 1;

  while (!frontier.empty()) {
    auto [cur, depth] = std::move(frontier.front());
    frontier.pop();
    if (depth >= budget.max_depth) continue;
    for (const MoveSpec& spec : budget.costed) {
      for (const MoveSite& site : enumerate_sites(cur, spec.kind, spec.dir, opts)) {
        ChordDiagram child = detail::search_normalize(apply_move(cur, site).diagram, budget);
        std::string key = canonical_key(child);
        if (seen.count(key)) continue;
        if (key == target) return depth + 1;
        if (++states > budget.max_states) return std::nullopt;
        seen.emplace(std::move(key), depth + 1);
        frontier.emplace(std::move(child), depth + 1);
      }
    }
  }
  return std::nullopt;
}

// Checks a step script against a knot diagram: greedy-simplify, then for each
// step remove the named chords and greedy-simplify again. True when the final
// diagram has no chords. Throws if a step names a chord that is not present.
inline bool verify_script(const ChordDiagram& d,
                          const std::vector<std::vector<std::string>>& script) {
  ChordDiagram cur = greedy_simplify(d).diagram;
  for (const auto& step : script) {
    std::vector<int> idx;
    for (const std::string& label : step) {
      int k = cur.find_chord(label);
      if (k < 0) throw std::invalid_argument("verify_script: unknown chord '" + label + "'");
      idx.push_back(k);
    }
    cur = greedy_simplify(remove_chords(cur, idx)).diagram;
  }
  return cur.chord_count() == 0;
}

}  // namespace vlink
