#pragma once

// Core data model for Gauss diagrams of oriented virtual knots and links:
// the diagram type itself, the GDF text format (parse/serialize), structural
// validation, rotation-invariant canonical keys, and closure of long-knot
// templates into product diagrams.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vlink {

// Reference to one slot of a component's cyclic endpoint sequence.
struct EndpointRef {
  int component = 0;
  int position = 0;
};

// A signed, oriented chord. The tail lies on the strand passing over
// (GDF letter 'O'), the head on the strand passing under ('U').
struct Chord {
  std::string id;
  int sign = +1;  // +1 or -1
  EndpointRef tail;
  EndpointRef head;
};

// Contents of one slot, as seen from the component side.
struct Endpoint {
  int chord = -1;
  bool is_head = false;
};

// Unvalidated diagram data: per-component slot counts plus chords that
// reference slots. ChordDiagram wraps this once it passes validation.
struct RawDiagram {
  std::vector<int> component_sizes;
  std::vector<Chord> chords;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  std::string joined() const {
    std::string out;
    for (const auto& v : violations) {
      if (!out.empty()) out += "; ";
      out += v;
    }
    return out;
  }
};

inline bool valid_label(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

// Structural checks: every slot used exactly once, all references in range,
// signs in {+1,-1}, labels well-formed and unique.
inline ValidationReport validate(const RawDiagram& raw) {
  ValidationReport rep;
  auto fail = [&rep](const std::string& msg) { rep.violations.push_back(msg); };

  if (raw.component_sizes.empty()) fail("no components");
  long long total = 0;
  for (size_t i = 0; i < raw.component_sizes.size(); ++i) {
    if (raw.component_sizes[i] < 0) fail("negative size for component " + std::to_string(i));
    total += raw.component_sizes[i];
  }
  if (total != 2LL * static_cast<long long>(raw.chords.size()))
    fail("endpoint count mismatch: " + std::to_string(total) + " slots for " +
         std::to_string(raw.chords.size()) + " chords");

  std::set<std::string> ids;
  std::set<std::pair<int, int>> used;
  for (size_t k = 0; k < raw.chords.size(); ++k) {
    const Chord& c = raw.chords[k];
    if (!valid_label(c.id)) fail("bad label for chord " + std::to_string(k));
    if (!ids.insert(c.id).second) fail("duplicate label '" + c.id + "'");
    if (c.sign != 1 && c.sign != -1) fail("bad sign for chord '" + c.id + "'");
    for (const EndpointRef* ref : {&c.tail, &c.head}) {
      if (ref->component < 0 || ref->component >= static_cast<int>(raw.component_sizes.size()) ||
          ref->position < 0 || ref->position >= raw.component_sizes[ref->component]) {
        fail("bad reference from chord '" + c.id + "'");
        continue;
      }
      if (!used.insert({ref->component, ref->position}).second)
        fail("duplicate slot (" + std::to_string(ref->component) + "," +
             std::to_string(ref->position) + ")");
    }
  }
  return rep;
}

// A validated Gauss diagram. Components are cyclic; slot p is followed by
// slot (p+1) mod size. Construction throws on structural violations, so any
// live instance satisfies the validate() contract.
class ChordDiagram {
 public:
  // Default: the empty knot diagram (one component, no chords).
  ChordDiagram() : sizes_{0} { slots_.emplace_back(); }

  explicit ChordDiagram(const RawDiagram& raw) {
    ValidationReport rep = validate(raw);
    if (!rep.ok()) throw std::invalid_argument("invalid diagram: " + rep.joined());
    sizes_ = raw.component_sizes;
    chords_ = raw.chords;
    slots_.resize(sizes_.size());
    for (size_t i = 0; i < sizes_.size(); ++i) slots_[i].assign(sizes_[i], Endpoint{});
    for (size_t k = 0; k < chords_.size(); ++k) {
      const Chord& c = chords_[k];
      slots_[c.tail.component][c.tail.position] = Endpoint{static_cast<int>(k), false};
      slots_[c.head.component][c.head.position] = Endpoint{static_cast<int>(k), true};
    }
  }

  int component_count() const { return static_cast<int>(sizes_.size()); }
  int component_size(int i) const { return sizes_.at(i); }
  int chord_count() const { return static_cast<int>(chords_.size()); }
  bool empty() const { return chords_.empty(); }

  const Chord& chord(int k) const { return chords_.at(k); }
  const std::vector<Chord>& chords() const { return chords_; }
  const std::vector<std::vector<Endpoint>>& slots() const { return slots_; }
  const Endpoint& at(int comp, int pos) const { return slots_.at(comp).at(pos); }

  // Sign carried by a single endpoint: -sign at the tail, +sign at the head.
  int endpoint_sign(int comp, int pos) const {
    const Endpoint& e = at(comp, pos);
    int s = chords_.at(e.chord).sign;
    return e.is_head ? s : -s;
  }

  bool is_self(int k) const {
    const Chord& c = chords_.at(k);
    return c.tail.component == c.head.component;
  }

  int find_chord(const std::string& id) const {
    for (size_t k = 0; k < chords_.size(); ++k)
      if (chords_[k].id == id) return static_cast<int>(k);
    return -1;
  }

 private:
  std::vector<int> sizes_;
  std::vector<Chord> chords_;
  std::vector<std::vector<Endpoint>> slots_;
};

inline int cyclic(int i, int n) { return ((i % n) + n) % n; }

// Rebuild a diagram from slot lists. Chord entries supply id and sign; their
// endpoint references are recomputed from the slots.
inline ChordDiagram diagram_from_slots(const std::vector<std::vector<Endpoint>>& slots,
                                       const std::vector<Chord>& chord_info) {
  RawDiagram raw;
  raw.chords = chord_info;
  raw.component_sizes.reserve(slots.size());
  for (const auto& comp : slots) raw.component_sizes.push_back(static_cast<int>(comp.size()));
  for (size_t ci = 0; ci < slots.size(); ++ci) {
    for (size_t p = 0; p < slots[ci].size(); ++p) {
      const Endpoint& e = slots[ci][p];
      if (e.chord < 0 || e.chord >= static_cast<int>(raw.chords.size()))
        throw std::invalid_argument("diagram_from_slots: slot names unknown chord");
      EndpointRef& ref = e.is_head ? raw.chords[e.chord].head : raw.chords[e.chord].tail;
      ref = EndpointRef{static_cast<int>(ci), static_cast<int>(p)};
    }
  }
  return ChordDiagram(raw);
}

// ---------------------------------------------------------------------------
// GDF text format.
//
//   diagram   := component (';' component)*
//   component := token*
//   token     := ('O'|'U') label sign
//   label     := [0-9A-Za-z_]+
//   sign      := '+' | '-'
//
// '#' starts a comment running to end of line. Every label appears exactly
// twice, once with 'O' (tail) and once with 'U' (head), with equal signs.
// A long template uses the same token grammar, restricted to a single
// component, preceded by a header line "%long".
// ---------------------------------------------------------------------------

struct GdfError : std::runtime_error {
  int line;
  int col;
  GdfError(const std::string& msg, int line_, int col_)
      : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                           std::to_string(col_) + ")"),
        line(line_),
        col(col_) {}
};

namespace detail {

struct GdfToken {
  std::string text;
  int line;
  int col;
};

inline std::vector<GdfToken> gdf_tokenize(const std::string& text) {
  std::vector<GdfToken> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto advance = [&](char c) {
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(text[i++]);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(c);
      ++i;
      continue;
    }
    if (c == ';') {
      out.push_back({";", line, col});
      advance(c);
      ++i;
      continue;
    }
    GdfToken tok{"", line, col};
    while (i < text.size()) {
      char t = text[i];
      if (std::isspace(static_cast<unsigned char>(t)) || t == ';' || t == '#') break;
      tok.text += t;
      advance(t);
      ++i;
    }
    out.push_back(std::move(tok));
  }
  return out;
}

struct ParsedEndpoint {
  std::string label;
  bool is_head;
  int sign;
  int line;
  int col;
};

inline ParsedEndpoint parse_endpoint_token(const GdfToken& tok) {
  const std::string& s = tok.text;
  if (s.size() < 3) throw GdfError("malformed token '" + s + "'", tok.line, tok.col);
  bool is_head;
  if (s[0] == 'O')
    is_head = false;
  else if (s[0] == 'U')
    is_head = true;
  else
    throw GdfError("expected 'O' or 'U' in token '" + s + "'", tok.line, tok.col);
  char sc = s.back();
  int sign;
  if (sc == '+')
    sign = +1;
  else if (sc == '-')
    sign = -1;
  else
    throw GdfError("expected sign '+' or '-' in token '" + s + "'", tok.line, tok.col);
  std::string label = s.substr(1, s.size() - 2);
  if (!valid_label(label))
    throw GdfError("bad label in token '" + s + "'", tok.line, tok.col);
  return ParsedEndpoint{label, is_head, sign, tok.line, tok.col};
}

struct ChordAccum {
  int index = -1;     // order of first appearance
  int sign = 0;
  int seen = 0;
  bool have_tail = false;
  bool have_head = false;
  EndpointRef tail;
  EndpointRef head;
};

// Shared back end for diagrams and long templates.
inline RawDiagram parse_components(const std::vector<GdfToken>& toks, size_t start,
                                   bool allow_multi_component) {
  std::vector<std::vector<ParsedEndpoint>> comps(1);
  for (size_t i = start; i < toks.size(); ++i) {
    if (toks[i].text == ";") {
      if (!allow_multi_component)
        throw GdfError("';' is not allowed in a long template", toks[i].line, toks[i].col);
      comps.emplace_back();
      continue;
    }
    if (!toks[i].text.empty() && toks[i].text[0] == '%')
      throw GdfError("unexpected directive '" + toks[i].text + "'", toks[i].line, toks[i].col);
    comps.back().push_back(parse_endpoint_token(toks[i]));
  }

  std::map<std::string, ChordAccum> acc;
  std::vector<std::string> order;
  for (size_t ci = 0; ci < comps.size(); ++ci) {
    for (size_t p = 0; p < comps[ci].size(); ++p) {
      const ParsedEndpoint& e = comps[ci][p];
      ChordAccum& a = acc[e.label];
      if (a.seen == 0) {
        a.index = static_cast<int>(order.size());
        order.push_back(e.label);
        a.sign = e.sign;
      } else {
        if (a.sign != e.sign)
          throw GdfError("sign mismatch for chord '" + e.label + "'", e.line, e.col);
      }
      if (++a.seen > 2)
        throw GdfError("chord '" + e.label + "' appears more than twice", e.line, e.col);
      EndpointRef ref{static_cast<int>(ci), static_cast<int>(p)};
      if (e.is_head) {
        if (a.have_head)
          throw GdfError("chord '" + e.label + "' has two 'U' endpoints", e.line, e.col);
        a.have_head = true;
        a.head = ref;
      } else {
        if (a.have_tail)
          throw GdfError("chord '" + e.label + "' has two 'O' endpoints", e.line, e.col);
        a.have_tail = true;
        a.tail = ref;
      }
    }
  }
  for (const auto& [label, a] : acc) {
    if (a.seen != 2) {
      throw GdfError("chord '" + label + "' appears once", 1, 1);
    }
  }

  RawDiagram raw;
  raw.component_sizes.reserve(comps.size());
  for (const auto& comp : comps) raw.component_sizes.push_back(static_cast<int>(comp.size()));
  raw.chords.resize(order.size());
  for (const std::string& label : order) {
    const ChordAccum& a = acc[label];
    raw.chords[a.index] = Chord{label, a.sign, a.tail, a.head};
  }
  return raw;
}

}  // namespace detail

inline ChordDiagram parse_gdf(const std::string& text) {
  auto toks = detail::gdf_tokenize(text);
  if (!toks.empty() && toks[0].text == "%long")
    throw GdfError("input is a long template; a closed diagram was expected", toks[0].line,
                   toks[0].col);
  return ChordDiagram(detail::parse_components(toks, 0, true));
}

inline std::string serialize_gdf(const ChordDiagram& d) {
  std::string out;
  for (int ci = 0; ci < d.component_count(); ++ci) {
    if (ci) out += " ; ";
    for (int p = 0; p < d.component_size(ci); ++p) {
      if (p) out += ' ';
      const Endpoint& e = d.at(ci, p);
      out += e.is_head ? 'U' : 'O';
      out += d.chord(e.chord).id;
      out += d.chord(e.chord).sign > 0 ? '+' : '-';
    }
  }
  return out;
}

// A long-knot template: a linear (non-cyclic) endpoint sequence.
struct TemplateChord {
  std::string id;
  int sign = +1;
};

struct LongTemplate {
  std::vector<Endpoint> sequence;
  std::vector<TemplateChord> chords;
};

inline LongTemplate parse_long_template(const std::string& text) {
  auto toks = detail::gdf_tokenize(text);
  if (toks.empty() || toks[0].text != "%long")
    throw GdfError("long template must start with '%long'", 1, 1);
  RawDiagram raw = detail::parse_components(toks, 1, false);
  LongTemplate t;
  t.chords.reserve(raw.chords.size());
  for (const Chord& c : raw.chords) t.chords.push_back(TemplateChord{c.id, c.sign});
  t.sequence.assign(raw.component_sizes[0], Endpoint{});
  for (size_t k = 0; k < raw.chords.size(); ++k) {
    t.sequence[raw.chords[k].tail.position] = Endpoint{static_cast<int>(k), false};
    t.sequence[raw.chords[k].head.position] = Endpoint{static_cast<int>(k), true};
  }
  return t;
}

inline std::string serialize_long_template(const LongTemplate& t) {
  std::string out = "%long\n";
  for (size_t p = 0; p < t.sequence.size(); ++p) {
    if (p) out += ' ';
    const Endpoint& e = t.sequence[p];
    out += e.is_head ? 'U' : 'O';
    out += t.chords.at(e.chord).id;
    out += t.chords.at(e.chord).sign > 0 ? '+' : '-';
  }
  return out;
}

// Closure of m concatenated copies of a long template into a one-component
// diagram. Copy labels stay unchanged for m = 1 and get a "_<copy>" suffix
// (1-based) otherwise.
inline ChordDiagram close_product(const LongTemplate& t, int m) {
  if (m < 1) throw std::invalid_argument("close_product: m must be >= 1");
  const int per = static_cast<int>(t.sequence.size());
  const int k = static_cast<int>(t.chords.size());
  RawDiagram raw;
  raw.component_sizes = {per * m};
  raw.chords.resize(static_cast<size_t>(k) * m);
  for (int copy = 0; copy < m; ++copy) {
    for (int j = 0; j < k; ++j) {
      Chord& c = raw.chords[static_cast<size_t>(copy) * k + j];
      c.id = m == 1 ? t.chords[j].id : t.chords[j].id + "_" + std::to_string(copy + 1);
      c.sign = t.chords[j].sign;
    }
    for (int p = 0; p < per; ++p) {
      const Endpoint& e = t.sequence[p];
      Chord& c = raw.chords[static_cast<size_t>(copy) * k + e.chord];
      EndpointRef& ref = e.is_head ? c.head : c.tail;
      ref = EndpointRef{0, copy * per + p};
    }
  }
  return ChordDiagram(raw);
}

// ---------------------------------------------------------------------------
// Canonical key: the lexicographically least serialization over all
// per-component rotations, with chords renumbered 1, 2, ... in first-visit
// order. Two storages of the same diagram that differ only by component
// rotations or chord labels share a key. Component order and orientations
// are not quotiented.
// ---------------------------------------------------------------------------

inline std::string canonical_key(const ChordDiagram& d) {
  struct State {
    std::vector<int> relabel;  // chord -> new number, 0 while unassigned
    int next = 1;
  };
  std::vector<State> states{State{std::vector<int>(d.chord_count(), 0), 1}};
  std::string acc;
  for (int ci = 0; ci < d.component_count(); ++ci) {
    const int size = d.component_size(ci);
    const int rotations = size == 0 ? 1 : size;
    std::string best;
    bool have_best = false;
    std::vector<State> winners;
    for (const State& st : states) {
      for (int r = 0; r < rotations; ++r) {
        State cand = st;
        std::string text;
        for (int p = 0; p < size; ++p) {
          const Endpoint& e = d.at(ci, cyclic(r + p, size));
          int& lab = cand.relabel[e.chord];
          if (lab == 0) lab = cand.next++;
          if (p) text += ' ';
          text += e.is_head ? 'U' : 'O';
          text += std::to_string(lab);
          text += d.chord(e.chord).sign > 0 ? '+' : '-';
        }
        if (!have_best || text < best) {
          best = std::move(text);
          have_best = true;
          winners.clear();
          winners.push_back(std::move(cand));
        } else if (text == best) {
          winners.push_back(std::move(cand));
        }
      }
    }
    std::sort(winners.begin(), winners.end(),
              [](const State& a, const State& b) { return a.relabel < b.relabel; });
    winners.erase(std::unique(winners.begin(), winners.end(),
                              [](const State& a, const State& b) { return a.relabel == b.relabel; }),
                  winners.end());
    states = std::move(winners);
    if (ci) acc += " ; ";
    acc += best;
  }
  return acc;
}

// Smallest block of decimal labels not yet used by the diagram.
inline std::vector<std::string> fresh_labels(const ChordDiagram& d, int count) {
  long long max_numeric = 0;
  for (const Chord& c : d.chords()) {
    bool digits = !c.id.empty() &&
                  std::all_of(c.id.begin(), c.id.end(),
                              [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
    if (digits && c.id.size() <= 18) max_numeric = std::max(max_numeric, std::stoll(c.id));
  }
  std::vector<std::string> out;
  out.reserve(count);
  for (int i = 1; i <= count; ++i) out.push_back(std::to_string(max_numeric + i));
  return out;
}

}  // namespace vlink
