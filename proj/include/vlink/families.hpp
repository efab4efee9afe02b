#pragma once

// Infinite families of long templates whose m-fold closures realize
// prescribed writhe spectra, together with their expected spectra and the
// step scripts that undo each closure copy.

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vlink/diagram.hpp"
#include "vlink/invariants.hpp"

namespace vlink {

enum class FamilyId { VDC, VS, VP, INDEP_A, INDEP_B };

inline std::string to_string(FamilyId id) {
  switch (id) {
    case FamilyId::VDC: return "VDC";
    case FamilyId::VS: return "VS";
    case FamilyId::VP: return "VP";
    case FamilyId::INDEP_A: return "INDEP_A";
    case FamilyId::INDEP_B: return "INDEP_B";
  }
  throw std::logic_error("to_string: unknown family id");
}

inline FamilyId parse_family_id(const std::string& s) {
  std::string low;
  for (char c : s) low += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (low == "vdc") return FamilyId::VDC;
  if (low == "vs") return FamilyId::VS;
  if (low == "vp") return FamilyId::VP;
  if (low == "indep_a") return FamilyId::INDEP_A;
  if (low == "indep_b") return FamilyId::INDEP_B;
  throw std::invalid_argument("unknown family id '" + s +
                              "' (expected vdc, vs, vp, indep_a, indep_b)");
}

inline int family_min_s(FamilyId id) {
  switch (id) {
    case FamilyId::VDC: return 1;
    case FamilyId::VS: return 3;
    case FamilyId::VP: return 1;
    case FamilyId::INDEP_A: return 1;
    case FamilyId::INDEP_B: return 2;
  }
  throw std::logic_error("family_min_s: unknown family id");
}

namespace detail {

inline void check_family_s(FamilyId id, int s) {
  if (s < family_min_s(id))
    throw std::invalid_argument("family " + to_string(id) + ": s must be >= " +
                                std::to_string(family_min_s(id)));
}

inline void check_family_m(int m) {
  if (m < 1) throw std::invalid_argument("family closure: m must be >= 1");
}

// Word entries name chords by label; false = tail, true = head.
using Word = std::vector<std::pair<std::string, bool>>;

inline LongTemplate word_to_template(const std::vector<TemplateChord>& chords, const Word& word) {
  std::map<std::string, int> index;
  for (size_t i = 0; i < chords.size(); ++i) index[chords[i].id] = static_cast<int>(i);
  LongTemplate t;
  t.chords = chords;
  for (const auto& [label, is_head] : word) {
    auto it = index.find(label);
    if (it == index.end()) throw std::logic_error("family word names unknown chord " + label);
    t.sequence.push_back(Endpoint{it->second, is_head});
  }
  if (t.sequence.size() != 2 * chords.size())
    throw std::logic_error("family word has wrong length");
  return t;
}

inline std::string lbl(const char* base, int i) { return base + std::to_string(i); }

}  // namespace detail

// Long template for the family member with parameter s. Chord count:
// VDC 4s+3, VS 2s+6, VP 4s+8, INDEP_A 2s+4, INDEP_B 2s+5.
inline LongTemplate family_template(FamilyId id, int s) {
  detail::check_family_s(id, s);
  using detail::lbl;
  std::vector<TemplateChord> chords;
  detail::Word w;

  switch (id) {
    case FamilyId::VDC: {
      for (int i = 1; i <= 2 * s; ++i) chords.push_back({lbl("a", i), +1});
      for (int i = 1; i <= 3; ++i) chords.push_back({lbl("b", i), -1});
      for (int i = 1; i <= 2 * s; ++i) chords.push_back({lbl("c", i), +1});
      w.push_back({"b1", false});
      for (int i = 1; i <= 2 * s; ++i) w.push_back({lbl("a", i), false});
      for (int i = 1; i <= 2 * s; ++i) w.push_back({lbl("c", i), false});
      w.push_back({"b1", true});
      w.push_back({"b2", false});
      for (int i = 2 * s; i >= 1; --i) w.push_back({lbl("c", i), true});
      w.push_back({"b2", true});
      w.push_back({"b3", false});
      for (int i = 2 * s; i >= 1; --i) w.push_back({lbl("a", i), true});
      w.push_back({"b3", true});
      break;
    }
    case FamilyId::VS: {
      for (int i = 1; i <= 2 * s; ++i) chords.push_back({lbl("a", i), +1});
      for (int i = 1; i <= 4; ++i) chords.push_back({lbl("b", i), +1});
      chords.push_back({"c1", +1});
      chords.push_back({"c2", -1});
      w.push_back({"b3", false});
      w.push_back({"c1", true});
      for (int i = 1; i <= 2 * s; ++i) w.push_back({lbl("a", i), false});
      w.push_back({"b3", true});
      w.push_back({"b4", true});
      for (int i = 2 * s; i >= 1; --i) w.push_back({lbl("a", i), true});
      w.push_back({"c2", true});
      w.push_back({"b4", false});
      w.push_back({"c2", false});
      w.push_back({"b2", true});
      w.push_back({"b1", true});
      w.push_back({"c1", false});
      w.push_back({"b1", false});
      w.push_back({"b2", false});
      break;
    }
    case FamilyId::VP: {
      // Rainbow chords in sequence order: a_1..a_2s, c1, c2, d_1..d_{2s+2}.
      std::vector<std::string> e;
      for (int i = 1; i <= 2 * s; ++i) e.push_back(lbl("a", i));
      e.push_back("c1");
      e.push_back("c2");
      for (int i = 1; i <= 2 * s + 2; ++i) e.push_back(lbl("d", i));
      const int n = static_cast<int>(e.size());  // 4s + 4
      chords.push_back({"b1", -1});
      chords.push_back({"b2", +1});
      chords.push_back({"b3", -1});
      chords.push_back({"b4", +1});
      for (const auto& name : e) chords.push_back({name, +1});
      w.push_back({"b4", true});
      w.push_back({"b3", true});
      w.push_back({e[0], false});
      w.push_back({e[1], false});
      w.push_back({"b2", true});
      w.push_back({"b1", true});
      for (int i = 2; i < 2 * s + 2; ++i) w.push_back({e[i], false});
      w.push_back({"b1", false});
      w.push_back({"b4", false});
      w.push_back({e[2 * s + 2], false});
      w.push_back({e[2 * s + 3], false});
      w.push_back({"b3", false});
      w.push_back({"b2", false});
      for (int i = 2 * s + 4; i < n; ++i) w.push_back({e[i], false});
      for (int i = n - 1; i >= 0; --i) w.push_back({e[i], true});
      break;
    }
    case FamilyId::INDEP_A: {
      // Rainbow chords: a_1..a_{2s-1}, c1, c2.
      std::vector<std::string> e;
      for (int i = 1; i <= 2 * s - 1; ++i) e.push_back(lbl("a", i));
      e.push_back("c1");
      e.push_back("c2");
      const int n = static_cast<int>(e.size());  // 2s + 1
      for (const auto& name : e) chords.push_back({name, +1});
      for (int i = 1; i <= 3; ++i) chords.push_back({lbl("b", i), +1});
      w.push_back({e[0], false});
      w.push_back({"b1", true});
      w.push_back({"b2", false});
      for (int i = 1; i < 2 * s; ++i) w.push_back({e[i], false});
      w.push_back({"b3", true});
      w.push_back({"b1", false});
      w.push_back({e[n - 1], false});
      w.push_back({e[n - 1], true});
      w.push_back({"b2", true});
      w.push_back({"b3", false});
      for (int i = n - 2; i >= 0; --i) w.push_back({e[i], true});
      break;
    }
    case FamilyId::INDEP_B: {
      // Rainbow chords: a_1..a_2s, c.
      std::vector<std::string> e;
      for (int i = 1; i <= 2 * s; ++i) e.push_back(lbl("a", i));
      e.push_back("c");
      const int n = static_cast<int>(e.size());  // 2s + 1
      for (const auto& name : e) chords.push_back({name, +1});
      chords.push_back({"b1", +1});
      chords.push_back({"b2", -1});
      chords.push_back({"b3", +1});
      chords.push_back({"b4", -1});
      w.push_back({e[0], false});
      w.push_back({"b3", true});
      w.push_back({"b2", true});
      for (int i = 1; i < n; ++i) w.push_back({e[i], false});
      w.push_back({"b2", false});
      w.push_back({"b1", false});
      for (int i = n - 1; i >= 2; --i) w.push_back({e[i], true});
      w.push_back({"b4", false});
      w.push_back({"b3", false});
      w.push_back({e[1], true});
      w.push_back({"b4", true});
      w.push_back({"b1", true});
      w.push_back({e[0], true});
      break;
    }
  }
  return detail::word_to_template(chords, w);
}

// m-fold closure of the family template (a knot diagram).
inline ChordDiagram family_diagram(FamilyId id, int s, int m) {
  detail::check_family_m(m);
  return close_product(family_template(id, s), m);
}

// Expected writhe spectrum of the m-fold closure.
inline WritheSpectrum expected_spectrum(FamilyId id, int s, int m) {
  detail::check_family_s(id, s);
  detail::check_family_m(m);
  WritheSpectrum ws;
  switch (id) {
    case FamilyId::VDC:
      ws.jn[2 * s] = -2 * m;
      ws.jn[-4 * s] = -m;
      break;
    case FamilyId::VS:
      ws.jn[2] = 2 * m * s;
      ws.jn[1] = m;
      ws.jn[-3] = m;
      ws.jn[-2 * s + 1] = 2 * m;
      break;
    case FamilyId::VP:
      ws.jn[2 * s] = -m;
      ws.jn[2 * s + 2] = 2 * m;
      ws.jn[2 * s + 4] = -m;
      break;
    case FamilyId::INDEP_A:
      ws.jn[2 * s - 1] = m;
      ws.jn[-2 * s + 1] = m;
      break;
    case FamilyId::INDEP_B:
      ws.jn[1] = m;
      ws.jn[2 * s - 1] = m;
      ws.jn[2 * s] = -m;
      break;
  }
  ws.odd_writhe = 0;
  for (const auto& [n, v] : ws.jn)
    if (n % 2 != 0) ws.odd_writhe += v;
  return ws;
}

// Step script that unknots the m-fold closure: step j removes copy j's
// b-chords, after which greedy simplification clears the rest of that copy.
inline std::vector<std::vector<std::string>> unknotting_script(FamilyId id, int s, int m) {
  detail::check_family_s(id, s);
  detail::check_family_m(m);
  int nb = (id == FamilyId::VDC || id == FamilyId::INDEP_A) ? 3 : 4;
  std::vector<std::vector<std::string>> script;
  for (int j = 1; j <= m; ++j) {
    std::vector<std::string> step;
    for (int i = 1; i <= nb; ++i) {
      std::string label = "b" + std::to_string(i);
      if (m >= 2) label += "_" + std::to_string(j);
      step.push_back(std::move(label));
    }
    script.push_back(std::move(step));
  }
  return script;
}

}  // namespace vlink
