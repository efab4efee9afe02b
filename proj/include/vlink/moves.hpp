#pragma once

// Local move engine. Every supported move except the crossing change is
// described by one uniform pattern shape: a small set of sign-constrained
// chords whose endpoints form ordered adjacent pairs on the diagram. A move
// either swaps the two slots of each pair (third Reidemeister move, forbidden
// exchange moves) or deletes/inserts the whole pattern (first and second
// Reidemeister moves, triple-insertion moves, four-chord pass moves).

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "vlink/diagram.hpp"

namespace vlink {

enum class MoveKind {
  R1,
  R2,
  R3,
  CC,
  F1,
  F2,
  F3,
  F4,
  F5,
  F6,
  FD1,
  FD2,
  FD3,
  FD4,
  VDC1,
  VDC2,
  VDC3,
  VDC4,
  VP1,
  VP2,
  VP3,
  VP4,
};

enum class MoveDir { Swap, Del, Ins };

inline bool kind_is_directional(MoveKind k) {
  switch (k) {
    case MoveKind::R3:
    case MoveKind::CC:
    case MoveKind::F1:
    case MoveKind::F2:
    case MoveKind::F3:
    case MoveKind::F4:
    case MoveKind::F5:
    case MoveKind::F6:
    case MoveKind::FD1:
    case MoveKind::FD2:
    case MoveKind::FD3:
    case MoveKind::FD4:
      return false;
    default:
      return true;
  }
}

inline std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::R1: return "r1";
    case MoveKind::R2: return "r2";
    case MoveKind::R3: return "r3";
    case MoveKind::CC: return "cc";
    case MoveKind::F1: return "f1";
    case MoveKind::F2: return "f2";
    case MoveKind::F3: return "f3";
    case MoveKind::F4: return "f4";
    case MoveKind::F5: return "f5";
    case MoveKind::F6: return "f6";
    case MoveKind::FD1: return "fd1";
    case MoveKind::FD2: return "fd2";
    case MoveKind::FD3: return "fd3";
    case MoveKind::FD4: return "fd4";
    case MoveKind::VDC1: return "vdc1";
    case MoveKind::VDC2: return "vdc2";
    case MoveKind::VDC3: return "vdc3";
    case MoveKind::VDC4: return "vdc4";
    case MoveKind::VP1: return "vp1";
    case MoveKind::VP2: return "vp2";
    case MoveKind::VP3: return "vp3";
    case MoveKind::VP4: return "vp4";
  }
  throw std::logic_error("to_string: unknown move kind");
}

inline std::string to_string(MoveDir d) {
  switch (d) {
    case MoveDir::Swap: return "swap";
    case MoveDir::Del: return "del";
    case MoveDir::Ins: return "ins";
  }
  throw std::logic_error("to_string: unknown move direction");
}

struct MoveSpec {
  MoveKind kind;
  MoveDir dir;
};

// Parses "r2:del", "vdc1:ins", "r3", "cc", ... A directional kind without a
// suffix expands to both directions. Group aliases expand to every variant:
// "vdc" = vdc1..vdc4 (both directions), likewise "vp", "f", "fd".
inline std::vector<MoveSpec> parse_move_specs(const std::string& name);

// Comma-separated list of the above.
inline std::vector<MoveSpec> parse_move_list(const std::string& csv) {
  std::vector<MoveSpec> out;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) return;
    auto part = parse_move_specs(cur);
    out.insert(out.end(), part.begin(), part.end());
    cur.clear();
  };
  for (char c : csv) {
    if (c == ',')
      flush();
    else if (!std::isspace(static_cast<unsigned char>(c)))
      cur += c;
  }
  flush();
  if (out.empty()) throw std::invalid_argument("empty move list");
  return out;
}

struct GapRef {
  int component = 0;
  int gap = 0;  // insert before this slot; 0 on an empty component
};

// A concrete site where a move applies. Deletion and swap sites carry the
// matched chords (one diagram chord per pattern chord) and the slot of each
// matched pair's first endpoint. Insertion sites carry one gap per pattern
// pair plus resolved signs for sign-free pattern chords.
struct MoveSite {
  MoveKind kind = MoveKind::R1;
  MoveDir dir = MoveDir::Swap;
  int variant = 0;
  std::vector<int> chords;
  std::vector<std::pair<int, int>> pair_slots;
  std::vector<GapRef> gaps;
  std::vector<int> signs;
};

struct MoveResult {
  ChordDiagram diagram;
  MoveSite inverse;
};

struct EnumerateOptions {
  // Insertion sites consider at most this many gap positions per component.
  int gap_cap = std::numeric_limits<int>::max();
};

namespace detail {

struct EndpointPat {
  int chord;
  bool is_head;
};

struct PatternPair {
  EndpointPat first;
  EndpointPat second;
};

// signs[i] constrains pattern chord i: +1 / -1 exact, 0 free.
struct MovePattern {
  std::vector<int> signs;
  std::vector<PatternPair> pairs;
};

inline PatternPair pp(int c1, bool h1, int c2, bool h2) {
  return PatternPair{EndpointPat{c1, h1}, EndpointPat{c2, h2}};
}

constexpr bool T = false;  // tail endpoint (over strand)
constexpr bool H = true;   // head endpoint (under strand)

// Pattern tables. Chord numbering inside each pattern:
//   r1: 0 = the kink chord.
//   r2: 0 = the chord whose tail comes first, 1 = its opposite-sign partner;
//       variants are nested/crossed head order times the sign of chord 0.
//   r3: 0,1,2 = the top-middle, top-bottom, middle-bottom crossing of a
//       triangle with strands t over m over b (mirrored variants flip all
//       three crossings). Variant index bits: 8 = mirror, 4/2/1 = reversed
//       orientation of strand t/m/b.
//   vdc: 0,1,2 = x,y,z, all of one sign; the six endpoints form three
//        adjacent pairs, each pairing one tail with another chord's head.
//   vp: 0,1,2,3 = the four crossings of two antiparallel two-strand bands
//       (13,14,23,24); two chords of each sign, paired tails-with-tails and
//       heads-with-heads.
inline const std::vector<MovePattern>& kind_patterns(MoveKind kind) {
  static const std::map<MoveKind, std::vector<MovePattern>> tables = [] {
    std::map<MoveKind, std::vector<MovePattern>> t;
    t[MoveKind::R1] = {
        {{0}, {pp(0, T, 0, H)}},
        {{0}, {pp(0, H, 0, T)}},
    };
    t[MoveKind::R2] = {
        {{+1, -1}, {pp(0, T, 1, T), pp(1, H, 0, H)}},
        {{-1, +1}, {pp(0, T, 1, T), pp(1, H, 0, H)}},
        {{+1, -1}, {pp(0, T, 1, T), pp(0, H, 1, H)}},
        {{-1, +1}, {pp(0, T, 1, T), pp(0, H, 1, H)}},
    };
    {
      std::vector<MovePattern> r3;
      for (int v = 0; v < 16; ++v) {
        bool mirror = (v & 8) != 0;
        int st = (v & 4) ? -1 : +1;
        int sm = (v & 2) ? -1 : +1;
        int sb = (v & 1) ? -1 : +1;
        MovePattern p;
        p.signs = {st * sm, st * sb, -sm * sb};
        bool ta = T, hb = H;
        if (mirror) {
          for (int& s : p.signs) s = -s;
          ta = H;
          hb = T;
        }
        auto ordered = [](int dir, PatternPair fwd) {
          if (dir > 0) return fwd;
          return PatternPair{fwd.second, fwd.first};
        };
        p.pairs = {
            ordered(st, pp(0, ta, 1, ta)),
            ordered(sm, pp(2, ta, 0, hb)),
            ordered(sb, pp(2, hb, 1, hb)),
        };
        r3.push_back(std::move(p));
      }
      t[MoveKind::R3] = std::move(r3);
    }
    t[MoveKind::F1] = {{{+1, +1}, {pp(0, T, 1, T)}}};
    t[MoveKind::F2] = {{{+1, -1}, {pp(0, T, 1, T)}}, {{-1, +1}, {pp(0, T, 1, T)}}};
    t[MoveKind::F3] = {{{-1, -1}, {pp(0, T, 1, T)}}};
    t[MoveKind::F4] = {{{+1, +1}, {pp(0, H, 1, H)}}};
    t[MoveKind::F5] = {{{+1, -1}, {pp(0, H, 1, H)}}, {{-1, +1}, {pp(0, H, 1, H)}}};
    t[MoveKind::F6] = {{{-1, -1}, {pp(0, H, 1, H)}}};
    // fd chord 0 always plays the tail role, chord 1 the head role.
    t[MoveKind::FD1] = {{{+1, +1}, {pp(0, T, 1, H)}}, {{+1, +1}, {pp(1, H, 0, T)}}};
    t[MoveKind::FD2] = {{{+1, -1}, {pp(0, T, 1, H)}}, {{+1, -1}, {pp(1, H, 0, T)}}};
    t[MoveKind::FD3] = {{{-1, +1}, {pp(0, T, 1, H)}}, {{-1, +1}, {pp(1, H, 0, T)}}};
    t[MoveKind::FD4] = {{{-1, -1}, {pp(0, T, 1, H)}}, {{-1, -1}, {pp(1, H, 0, T)}}};
    t[MoveKind::VDC1] = {{{+1, +1, +1}, {pp(0, T, 1, H), pp(2, T, 0, H), pp(1, T, 2, H)}}};
    t[MoveKind::VDC2] = {{{+1, +1, +1}, {pp(1, H, 0, T), pp(0, H, 2, T), pp(2, H, 1, T)}}};
    t[MoveKind::VDC3] = {{{-1, -1, -1}, {pp(0, H, 1, T), pp(2, H, 0, T), pp(1, H, 2, T)}}};
    t[MoveKind::VDC4] = {{{-1, -1, -1}, {pp(1, T, 0, H), pp(0, T, 2, H), pp(2, T, 1, H)}}};
    t[MoveKind::VP1] = {
        {{+1, -1, -1, +1}, {pp(0, T, 1, T), pp(3, T, 2, T), pp(0, H, 2, H), pp(3, H, 1, H)}}};
    t[MoveKind::VP2] = {
        {{-1, +1, +1, -1}, {pp(0, T, 1, T), pp(3, T, 2, T), pp(2, H, 0, H), pp(1, H, 3, H)}}};
    t[MoveKind::VP3] = {
        {{-1, +1, +1, -1}, {pp(1, T, 0, T), pp(2, T, 3, T), pp(0, H, 2, H), pp(3, H, 1, H)}}};
    t[MoveKind::VP4] = {
        {{+1, -1, -1, +1}, {pp(1, T, 0, T), pp(2, T, 3, T), pp(2, H, 0, H), pp(1, H, 3, H)}}};
    return t;
  }();
  auto it = tables.find(kind);
  if (it == tables.end()) throw std::invalid_argument("no pattern table for this kind");
  return it->second;
}

inline EndpointRef slot_of(const ChordDiagram& d, int chord, bool is_head) {
  const Chord& c = d.chord(chord);
  return is_head ? c.head : c.tail;
}

inline EndpointRef next_slot(const ChordDiagram& d, EndpointRef r) {
  int size = d.component_size(r.component);
  return EndpointRef{r.component, cyclic(r.position + 1, size)};
}

inline bool holds(const ChordDiagram& d, EndpointRef r, int chord, bool is_head) {
  const Endpoint& e = d.at(r.component, r.position);
  return e.chord == chord && e.is_head == is_head;
}

// Ordered adjacency: `second` occupies the slot right after `first`.
inline bool pair_matches(const ChordDiagram& d, const std::vector<int>& assign,
                         const PatternPair& pair) {
  int c1 = assign[pair.first.chord];
  int c2 = assign[pair.second.chord];
  if (c1 < 0 || c2 < 0) return false;
  EndpointRef s1 = slot_of(d, c1, pair.first.is_head);
  EndpointRef s2 = next_slot(d, s1);
  if (s2.component == s1.component && s2.position == s1.position) return false;
  return holds(d, s2, c2, pair.second.is_head);
}

inline bool sign_ok(const ChordDiagram& d, int chord, int want) {
  return want == 0 || d.chord(chord).sign == want;
}

// Finds every assignment of distinct diagram chords to the pattern chords
// under which all pairs are ordered-adjacent. Patterns are connected, so
// fixing pattern chord 0 forces the rest through the pairs.
inline std::vector<std::vector<int>> match_pattern(const ChordDiagram& d, const MovePattern& pat) {
  const int pk = static_cast<int>(pat.signs.size());
  std::vector<std::vector<int>> out;
  for (int c0 = 0; c0 < d.chord_count(); ++c0) {
    if (!sign_ok(d, c0, pat.signs[0])) continue;
    std::vector<int> assign(pk, -1);
    assign[0] = c0;
    bool dead = false;
    bool progress = true;
    while (progress && !dead) {
      progress = false;
      for (const PatternPair& pair : pat.pairs) {
        int ka = assign[pair.first.chord];
        int kb = assign[pair.second.chord];
        if (ka >= 0 && kb >= 0) continue;
        if (ka < 0 && kb < 0) continue;
        int forced_pc;
        EndpointPat want{};
        EndpointRef slot{};
        if (ka >= 0) {
          EndpointRef s1 = slot_of(d, ka, pair.first.is_head);
          slot = next_slot(d, s1);
          if (slot.component == s1.component && slot.position == s1.position) {
            dead = true;
            break;
          }
          forced_pc = pair.second.chord;
          want = pair.second;
        } else {
          EndpointRef s2 = slot_of(d, kb, pair.second.is_head);
          int size = d.component_size(s2.component);
          slot = EndpointRef{s2.component, cyclic(s2.position - 1, size)};
          if (slot.position == s2.position) {
            dead = true;
            break;
          }
          forced_pc = pair.first.chord;
          want = pair.first;
        }
        const Endpoint& e = d.at(slot.component, slot.position);
        if (e.is_head != want.is_head || !sign_ok(d, e.chord, pat.signs[forced_pc])) {
          dead = true;
          break;
        }
        assign[forced_pc] = e.chord;
        progress = true;
      }
    }
    if (dead) continue;
    if (std::any_of(assign.begin(), assign.end(), [](int a) { return a < 0; })) continue;
    std::set<int> distinct(assign.begin(), assign.end());
    if (static_cast<int>(distinct.size()) != pk) continue;
    bool all = true;
    for (const PatternPair& pair : pat.pairs) {
      if (!pair_matches(d, assign, pair)) {
        all = false;
        break;
      }
    }
    if (all) out.push_back(std::move(assign));
  }
  return out;
}

inline std::vector<std::pair<int, int>> pattern_pair_slots(const ChordDiagram& d,
                                                           const MovePattern& pat,
                                                           const std::vector<int>& assign) {
  std::vector<std::pair<int, int>> slots;
  slots.reserve(pat.pairs.size());
  for (const PatternPair& pair : pat.pairs) {
    EndpointRef s = slot_of(d, assign[pair.first.chord], pair.first.is_head);
    slots.emplace_back(s.component, s.position);
  }
  return slots;
}

inline std::vector<std::vector<Endpoint>> copy_slots(const ChordDiagram& d) {
  return d.slots();
}

// Gap position in the diagram that remains after deleting `removed` slots of
// one component. Gaps on an empty or fully deleted component collapse to 0.
inline int remap_gap(const std::vector<int>& removed_positions_sorted, int old_pos, int new_size) {
  int before = static_cast<int>(std::lower_bound(removed_positions_sorted.begin(),
                                                 removed_positions_sorted.end(), old_pos) -
                                removed_positions_sorted.begin());
  if (new_size <= 0) return 0;
  return cyclic(old_pos - before, new_size);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Site enumeration.
// ---------------------------------------------------------------------------

inline std::vector<MoveSite> enumerate_sites(const ChordDiagram& d, MoveKind kind, MoveDir dir,
                                             const EnumerateOptions& opts = {}) {
  using namespace detail;
  std::vector<MoveSite> sites;

  if (kind == MoveKind::CC) {
    if (dir != MoveDir::Swap) throw std::invalid_argument("cc has no insertion/deletion form");
    for (int k = 0; k < d.chord_count(); ++k) {
      MoveSite s;
      s.kind = kind;
      s.dir = MoveDir::Swap;
      s.chords = {k};
      sites.push_back(std::move(s));
    }
    return sites;
  }

  const auto& patterns = kind_patterns(kind);
  const bool directional = kind_is_directional(kind);
  if (directional && dir == MoveDir::Swap)
    throw std::invalid_argument(to_string(kind) + " requires :ins or :del");
  if (!directional && dir != MoveDir::Swap)
    throw std::invalid_argument(to_string(kind) + " has no insertion/deletion form");

  if (dir == MoveDir::Ins) {
    // Gap universe per the cap: every gap of a nonempty component (up to the
    // cap), one gap for each empty component.
    std::vector<GapRef> universe;
    for (int ci = 0; ci < d.component_count(); ++ci) {
      int size = d.component_size(ci);
      int count = size == 0 ? 1 : std::min(size, std::max(opts.gap_cap, 1));
      for (int g = 0; g < count; ++g) universe.push_back(GapRef{ci, g});
    }
    for (size_t v = 0; v < patterns.size(); ++v) {
      const MovePattern& pat = patterns[v];
      int free_signs = 0;
      for (int s : pat.signs)
        if (s == 0) ++free_signs;
      const int np = static_cast<int>(pat.pairs.size());
      std::vector<int> idx(np, 0);
      if (universe.empty()) continue;
      for (;;) {
        for (int mask = 0; mask < (1 << free_signs); ++mask) {
          MoveSite s;
          s.kind = kind;
          s.dir = MoveDir::Ins;
          s.variant = static_cast<int>(v);
          for (int i = 0; i < np; ++i) s.gaps.push_back(universe[idx[i]]);
          int bit = 0;
          for (int sign : pat.signs) {
            if (sign == 0) {
              s.signs.push_back((mask >> bit) & 1 ? -1 : +1);
              ++bit;
            } else {
              s.signs.push_back(sign);
            }
          }
          sites.push_back(std::move(s));
        }
        int i = np - 1;
        while (i >= 0 && ++idx[i] == static_cast<int>(universe.size())) idx[i--] = 0;
        if (i < 0) break;
      }
    }
    return sites;
  }

  // Deletion and swap sites share the matcher.
  std::set<std::vector<std::pair<int, int>>> seen;
  for (size_t v = 0; v < patterns.size(); ++v) {
    const MovePattern& pat = patterns[v];
    for (auto& assign : match_pattern(d, pat)) {
      auto slots = pattern_pair_slots(d, pat, assign);
      auto key = slots;
      std::sort(key.begin(), key.end());
      if (!seen.insert(key).second) continue;
      MoveSite s;
      s.kind = kind;
      s.dir = dir;
      s.variant = static_cast<int>(v);
      s.chords = assign;
      s.pair_slots = std::move(slots);
      for (int pc = 0; pc < static_cast<int>(assign.size()); ++pc)
        s.signs.push_back(d.chord(assign[pc]).sign);
      sites.push_back(std::move(s));
    }
  }
  std::sort(sites.begin(), sites.end(), [](const MoveSite& a, const MoveSite& b) {
    auto ka = a.pair_slots;
    auto kb = b.pair_slots;
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    if (ka != kb) return ka < kb;
    if (a.variant != b.variant) return a.variant < b.variant;
    return a.chords < b.chords;
  });
  return sites;
}

// ---------------------------------------------------------------------------
// Application.
// ---------------------------------------------------------------------------

namespace detail {

inline void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

inline MoveResult apply_swap(const ChordDiagram& d, const MoveSite& site) {
  const auto& patterns = kind_patterns(site.kind);
  require(site.variant >= 0 && site.variant < static_cast<int>(patterns.size()),
          "apply_move: bad variant");
  const MovePattern& pat = patterns[site.variant];
  require(site.chords.size() == pat.signs.size(), "apply_move: bad chord count for site");
  for (size_t pc = 0; pc < site.chords.size(); ++pc) {
    require(site.chords[pc] >= 0 && site.chords[pc] < d.chord_count(),
            "apply_move: chord out of range");
    require(sign_ok(d, site.chords[pc], pat.signs[pc]), "apply_move: sign mismatch at site");
  }
  for (const PatternPair& pair : pat.pairs)
    require(pair_matches(d, site.chords, pair), "apply_move: site does not match diagram");

  auto slots = copy_slots(d);
  std::vector<std::pair<int, int>> where;
  for (const PatternPair& pair : pat.pairs) {
    EndpointRef s1 = slot_of(d, site.chords[pair.first.chord], pair.first.is_head);
    EndpointRef s2 = next_slot(d, s1);
    std::swap(slots[s1.component][s1.position], slots[s2.component][s2.position]);
    where.emplace_back(s1.component, s1.position);
  }
  std::sort(where.begin(), where.end());

  MoveResult res{diagram_from_slots(slots, d.chords()), site};
  // The swapped configuration is again a site of the same kind at the same
  // slots, usually under a different variant with the roles permuted; find
  // it so the inverse actually applies.
  bool found = false;
  for (MoveSite& cand : enumerate_sites(res.diagram, site.kind, MoveDir::Swap)) {
    auto key = cand.pair_slots;
    std::sort(key.begin(), key.end());
    if (key == where) {
      res.inverse = std::move(cand);
      found = true;
      break;
    }
  }
  require(found, "apply_move: swapped site has no reverse (table inconsistency)");
  return res;
}

inline MoveResult apply_delete(const ChordDiagram& d, const MoveSite& site) {
  const auto& patterns = kind_patterns(site.kind);
  require(site.variant >= 0 && site.variant < static_cast<int>(patterns.size()),
          "apply_move: bad variant");
  const MovePattern& pat = patterns[site.variant];
  require(site.chords.size() == pat.signs.size(), "apply_move: bad chord count for site");
  std::set<int> removed_set(site.chords.begin(), site.chords.end());
  require(removed_set.size() == site.chords.size(), "apply_move: repeated chord in site");
  for (size_t pc = 0; pc < site.chords.size(); ++pc) {
    require(site.chords[pc] >= 0 && site.chords[pc] < d.chord_count(),
            "apply_move: chord out of range");
    require(sign_ok(d, site.chords[pc], pat.signs[pc]), "apply_move: sign mismatch at site");
  }
  for (const PatternPair& pair : pat.pairs)
    require(pair_matches(d, site.chords, pair), "apply_move: site does not match diagram");

  // Remove the pattern chords' slots, tracking deleted positions per
  // component so the inverse insertion gaps can be recomputed.
  std::vector<std::vector<int>> removed_positions(d.component_count());
  for (int k : site.chords) {
    const Chord& c = d.chord(k);
    removed_positions[c.tail.component].push_back(c.tail.position);
    removed_positions[c.head.component].push_back(c.head.position);
  }
  for (auto& v : removed_positions) std::sort(v.begin(), v.end());

  std::vector<std::vector<Endpoint>> slots(d.component_count());
  std::vector<int> chord_remap(d.chord_count(), -1);
  std::vector<Chord> chords;
  for (int k = 0; k < d.chord_count(); ++k) {
    if (removed_set.count(k)) continue;
    chord_remap[k] = static_cast<int>(chords.size());
    chords.push_back(d.chord(k));
  }
  for (int ci = 0; ci < d.component_count(); ++ci) {
    for (int p = 0; p < d.component_size(ci); ++p) {
      const Endpoint& e = d.at(ci, p);
      if (removed_set.count(e.chord)) continue;
      slots[ci].push_back(Endpoint{chord_remap[e.chord], e.is_head});
    }
  }

  MoveResult res{diagram_from_slots(slots, chords), MoveSite{}};
  MoveSite& inv = res.inverse;
  inv.kind = site.kind;
  inv.dir = MoveDir::Ins;
  inv.variant = site.variant;
  for (const PatternPair& pair : pat.pairs) {
    EndpointRef s = slot_of(d, site.chords[pair.first.chord], pair.first.is_head);
    int new_size = static_cast<int>(slots[s.component].size());
    inv.gaps.push_back(
        GapRef{s.component, remap_gap(removed_positions[s.component], s.position, new_size)});
  }
  for (int k : site.chords) inv.signs.push_back(d.chord(k).sign);
  return res;
}

inline MoveResult apply_insert(const ChordDiagram& d, const MoveSite& site) {
  const auto& patterns = kind_patterns(site.kind);
  require(site.variant >= 0 && site.variant < static_cast<int>(patterns.size()),
          "apply_move: bad variant");
  const MovePattern& pat = patterns[site.variant];
  const int pk = static_cast<int>(pat.signs.size());
  require(site.gaps.size() == pat.pairs.size(), "apply_move: bad gap count for site");
  require(static_cast<int>(site.signs.size()) == pk, "apply_move: bad sign count for site");
  for (int pc = 0; pc < pk; ++pc) {
    require(site.signs[pc] == 1 || site.signs[pc] == -1, "apply_move: bad sign value");
    require(pat.signs[pc] == 0 || pat.signs[pc] == site.signs[pc],
            "apply_move: sign conflicts with move variant");
  }
  for (const GapRef& g : site.gaps) {
    require(g.component >= 0 && g.component < d.component_count(),
            "apply_move: gap component out of range");
    int size = d.component_size(g.component);
    require(g.gap >= 0 && g.gap <= (size == 0 ? 0 : size - 1), "apply_move: gap out of range");
  }

  std::vector<Chord> chords = d.chords();
  auto labels = fresh_labels(d, pk);
  int base = static_cast<int>(chords.size());
  for (int pc = 0; pc < pk; ++pc) chords.push_back(Chord{labels[pc], site.signs[pc], {}, {}});

  // One pass per component: before emitting slot p, emit the pairs whose gap
  // sits there, in site order.
  std::vector<std::vector<Endpoint>> slots(d.component_count());
  for (int ci = 0; ci < d.component_count(); ++ci) {
    int size = d.component_size(ci);
    int upto = size == 0 ? 1 : size;
    for (int p = 0; p < upto; ++p) {
      for (size_t i = 0; i < site.gaps.size(); ++i) {
        if (site.gaps[i].component != ci || site.gaps[i].gap != p) continue;
        const PatternPair& pair = pat.pairs[i];
        slots[ci].push_back(Endpoint{base + pair.first.chord, pair.first.is_head});
        slots[ci].push_back(Endpoint{base + pair.second.chord, pair.second.is_head});
      }
      if (p < size) slots[ci].push_back(d.at(ci, p));
    }
  }

  MoveResult res{diagram_from_slots(slots, chords), MoveSite{}};
  MoveSite& inv = res.inverse;
  inv.kind = site.kind;
  inv.dir = MoveDir::Del;
  inv.variant = site.variant;
  for (int pc = 0; pc < pk; ++pc) inv.chords.push_back(base + pc);
  inv.pair_slots = pattern_pair_slots(res.diagram, pat, inv.chords);
  for (int pc = 0; pc < pk; ++pc) inv.signs.push_back(site.signs[pc]);
  return res;
}

}  // namespace detail

inline MoveResult apply_move(const ChordDiagram& d, const MoveSite& site) {
  if (site.kind == MoveKind::CC) {
    detail::require(site.chords.size() == 1, "apply_move: cc takes one chord");
    int k = site.chords[0];
    detail::require(k >= 0 && k < d.chord_count(), "apply_move: chord out of range");
    auto slots = d.slots();
    std::vector<Chord> chords = d.chords();
    const Chord& c = d.chord(k);
    slots[c.tail.component][c.tail.position].is_head = true;
    slots[c.head.component][c.head.position].is_head = false;
    chords[k].sign = -chords[k].sign;
    return MoveResult{diagram_from_slots(slots, chords), site};
  }
  switch (site.dir) {
    case MoveDir::Swap: return detail::apply_swap(d, site);
    case MoveDir::Del: return detail::apply_delete(d, site);
    case MoveDir::Ins: return detail::apply_insert(d, site);
  }
  throw std::logic_error("apply_move: unknown direction");
}

// Crossing change on one chord: the sign flips and tail and head trade
// places, as when the two strands of a crossing swap over/under.
inline ChordDiagram crossing_change(const ChordDiagram& d, const std::string& id) {
  int k = d.find_chord(id);
  if (k < 0) throw std::invalid_argument("crossing_change: unknown chord '" + id + "'");
  MoveSite s;
  s.kind = MoveKind::CC;
  s.dir = MoveDir::Swap;
  s.chords = {k};
  return apply_move(d, s).diagram;
}

// Plain removal of a set of chords by index, with no pattern check. Used by
// step scripts, where the removed set is prescribed rather than matched.
inline ChordDiagram remove_chords(const ChordDiagram& d, const std::vector<int>& chord_indices) {
  std::set<int> removed(chord_indices.begin(), chord_indices.end());
  for (int k : removed)
    if (k < 0 || k >= d.chord_count())
      throw std::invalid_argument("remove_chords: chord index out of range");
  std::vector<int> remap(d.chord_count(), -1);
  std::vector<Chord> chords;
  for (int k = 0; k < d.chord_count(); ++k) {
    if (removed.count(k)) continue;
    remap[k] = static_cast<int>(chords.size());
    chords.push_back(d.chord(k));
  }
  std::vector<std::vector<Endpoint>> slots(d.component_count());
  for (int ci = 0; ci < d.component_count(); ++ci)
    for (int p = 0; p < d.component_size(ci); ++p) {
      const Endpoint& e = d.at(ci, p);
      if (!removed.count(e.chord)) slots[ci].push_back(Endpoint{remap[e.chord], e.is_head});
    }
  return diagram_from_slots(slots, chords);
}

// ---------------------------------------------------------------------------
// Greedy simplification: repeatedly apply the first available kink deletion,
// else the first available opposite-sign bigon deletion. Only these two
// deletions are used, so reaching the empty diagram certifies the unknot.
// ---------------------------------------------------------------------------

struct TraceEntry {
  MoveKind kind;
  std::vector<std::string> chords;
};

struct SimplifyResult {
  ChordDiagram diagram;
  std::vector<TraceEntry> trace;
};

inline SimplifyResult greedy_simplify(const ChordDiagram& d0) {
  SimplifyResult res{d0, {}};
  for (;;) {
    std::vector<MoveSite> sites = enumerate_sites(res.diagram, MoveKind::R1, MoveDir::Del);
    if (sites.empty()) sites = enumerate_sites(res.diagram, MoveKind::R2, MoveDir::Del);
    if (sites.empty()) break;
    const MoveSite& site = sites.front();
    TraceEntry entry{site.kind, {}};
    for (int k : site.chords) entry.chords.push_back(res.diagram.chord(k).id);
    res.diagram = apply_move(res.diagram, site).diagram;
    res.trace.push_back(std::move(entry));
  }
  return res;
}

// ---------------------------------------------------------------------------
// Move-name parsing.
// ---------------------------------------------------------------------------

inline std::vector<MoveSpec> parse_move_specs(const std::string& name) {
  std::string base = name;
  std::string suffix;
  auto colon = name.find(':');
  if (colon != std::string::npos) {
    base = name.substr(0, colon);
    suffix = name.substr(colon + 1);
  }
  static const std::map<std::string, std::vector<MoveKind>> groups = {
      {"vdc", {MoveKind::VDC1, MoveKind::VDC2, MoveKind::VDC3, MoveKind::VDC4}},
      {"vp", {MoveKind::VP1, MoveKind::VP2, MoveKind::VP3, MoveKind::VP4}},
      {"f", {MoveKind::F1, MoveKind::F2, MoveKind::F3, MoveKind::F4, MoveKind::F5, MoveKind::F6}},
      {"fd", {MoveKind::FD1, MoveKind::FD2, MoveKind::FD3, MoveKind::FD4}},
  };
  static const std::map<std::string, MoveKind> singles = [] {
    std::map<std::string, MoveKind> m;
    for (int i = 0; i <= static_cast<int>(MoveKind::VP4); ++i) {
      MoveKind k = static_cast<MoveKind>(i);
      m[to_string(k)] = k;
    }
    return m;
  }();

  std::vector<MoveKind> kinds;
  if (auto g = groups.find(base); g != groups.end()) {
    kinds = g->second;
  } else if (auto s = singles.find(base); s != singles.end()) {
    kinds = {s->second};
  } else {
    throw std::invalid_argument("unknown move '" + name + "'");
  }

  std::vector<MoveSpec> out;
  for (MoveKind k : kinds) {
    if (!kind_is_directional(k)) {
      if (!suffix.empty())
        throw std::invalid_argument(to_string(k) + " does not take a direction suffix");
      out.push_back({k, MoveDir::Swap});
    } else if (suffix == "ins") {
      out.push_back({k, MoveDir::Ins});
    } else if (suffix == "del") {
      out.push_back({k, MoveDir::Del});
    } else if (suffix.empty()) {
      out.push_back({k, MoveDir::Del});
      out.push_back({k, MoveDir::Ins});
    } else {
      throw std::invalid_argument("unknown direction suffix in '" + name + "'");
    }
  }
  return out;
}

}  // namespace vlink
