#pragma once

// Equivalence decisions and distance lower bounds for the five supported
// move classes, plus the standard-link builder that realizes any admissible
// lambda vector.

#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "vlink/diagram.hpp"
#include "vlink/invariants.hpp"

namespace vlink {

enum class MoveClass { VDELTA, VDELTA_WEDGE, VDELTA_CIRC, VSHARP, VPASS };

inline std::string to_string(MoveClass mc) {
  switch (mc) {
    case MoveClass::VDELTA: return "vdelta";
    case MoveClass::VDELTA_WEDGE: return "vdelta-wedge";
    case MoveClass::VDELTA_CIRC: return "vdelta-circ";
    case MoveClass::VSHARP: return "vsharp";
    case MoveClass::VPASS: return "vpass";
  }
  throw std::logic_error("to_string: unknown move class");
}

inline MoveClass parse_move_class(const std::string& s) {
  static const std::map<std::string, MoveClass> names = {
      {"vdelta", MoveClass::VDELTA},
      {"vdelta-wedge", MoveClass::VDELTA_WEDGE},
      {"vdelta-circ", MoveClass::VDELTA_CIRC},
      {"vsharp", MoveClass::VSHARP},
      {"vpass", MoveClass::VPASS},
  };
  auto it = names.find(s);
  if (it == names.end()) throw std::invalid_argument("unknown move class '" + s + "'");
  return it->second;
}

// Standard link on n = |a| + 1 components: component 0 is the base; for each
// further component t there are |a_t| parallel chords oriented base -> t with
// sign sgn(a_t). Tail blocks on the base are ordered by increasing t, and
// heads repeat the tail order. Its lambda vector is (-sum a, a_2, ..., a_n).
inline ChordDiagram build_standard_link(const std::vector<int>& a) {
  const int n = static_cast<int>(a.size()) + 1;
  RawDiagram raw;
  raw.component_sizes.assign(n, 0);
  for (int t = 1; t < n; ++t) {
    int count = std::abs(a[t - 1]);
    int sign = a[t - 1] >= 0 ? +1 : -1;
    for (int j = 1; j <= count; ++j) {
      Chord c;
      c.id = "c" + std::to_string(t) + "_" + std::to_string(j);
      c.sign = sign;
      c.tail = EndpointRef{0, raw.component_sizes[0]++};
      c.head = EndpointRef{t, raw.component_sizes[t]++};
      raw.chords.push_back(std::move(c));
    }
  }
  return ChordDiagram(raw);
}

struct Decision {
  bool equivalent = false;
  std::string reason;
};

namespace detail {

inline std::string vec_to_string(const std::vector<int>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace detail

// Complete classification for links under each class: single components are
// always related; otherwise the parity vector decides the delta-type classes
// and the lambda vector decides the circle-delta and pass classes.
inline Decision decide_equivalent(MoveClass mc, const ChordDiagram& a, const ChordDiagram& b) {
  if (a.component_count() != b.component_count()) {
    return Decision{false, "component counts differ (" + std::to_string(a.component_count()) +
                               " vs " + std::to_string(b.component_count()) + ")"};
  }
  if (a.component_count() == 1)
    return Decision{true, "single-component diagrams are all related under this class"};

  const bool by_lambda = mc == MoveClass::VDELTA_CIRC || mc == MoveClass::VPASS;
  if (by_lambda) {
    auto la = lambda_vector(a);
    auto lb = lambda_vector(b);
    if (la == lb)
      return Decision{true, "lambda vectors equal: " + detail::vec_to_string(la)};
    return Decision{false, "lambda vectors differ: " + detail::vec_to_string(la) + " vs " +
                               detail::vec_to_string(lb)};
  }
  auto pa = parity_vector(a);
  auto pb = parity_vector(b);
  if (pa == pb)
    return Decision{true, "parity vectors equal: " + detail::vec_to_string(pa)};
  return Decision{false, "parity vectors differ: " + detail::vec_to_string(pa) + " vs " +
                             detail::vec_to_string(pb)};
}

namespace detail {

inline int ceil_div_nonneg(long long num, long long den) {
  return static_cast<int>((num + den - 1) / den);
}

}  // namespace detail

// Lower bound on the number of class moves needed to turn knot k1 into knot
// k2, from the writhe-spectrum deltas. All arithmetic is exact; the ceilings
// are taken on integer rationals.
inline int distance_lower_bound(MoveClass mc, const ChordDiagram& k1, const ChordDiagram& k2) {
  if (k1.component_count() != 1 || k2.component_count() != 1)
    throw std::invalid_argument("distance_lower_bound: knot (one-component) diagrams required");
  WritheSpectrum s1 = writhe_spectrum(k1);
  WritheSpectrum s2 = writhe_spectrum(k2);

  long long dj = std::llabs(static_cast<long long>(s1.odd_writhe) - s2.odd_writhe);
  std::map<int, int> delta = s1.jn;
  for (const auto& [n, v] : s2.jn) delta[n] -= v;
  long long total = 0;
  for (const auto& [n, v] : delta) total += std::llabs(v);

  switch (mc) {
    case MoveClass::VDELTA:
    case MoveClass::VDELTA_WEDGE:
      return detail::ceil_div_nonneg(dj, 2);
    case MoveClass::VSHARP:
      return detail::ceil_div_nonneg(dj, 4);
    case MoveClass::VDELTA_CIRC:
      return std::max(detail::ceil_div_nonneg(dj, 2), detail::ceil_div_nonneg(total, 3));
    case MoveClass::VPASS:
      return std::max(detail::ceil_div_nonneg(dj, 2), detail::ceil_div_nonneg(total, 4));
  }
  throw std::logic_error("distance_lower_bound: unknown move class");
}

// Unknotting form: lower bound against the empty diagram.
inline int distance_lower_bound(MoveClass mc, const ChordDiagram& k1) {
  return distance_lower_bound(mc, k1, ChordDiagram());
}

}  // namespace vlink
