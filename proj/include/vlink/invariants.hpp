#pragma once

// Counting invariants of Gauss diagrams: the directed linking matrix, the
// per-component balance vector lambda, its mod-2 parity, chord indices, and
// the writhe spectrum of a knot diagram.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "vlink/diagram.hpp"

namespace vlink {

// M[i][j] = sum of signs of chords oriented from component i to component j
// (tail on i, head on j). Self-chords never contribute; the diagonal is 0.
inline std::vector<std::vector<int>> linking_matrix(const ChordDiagram& d) {
  const int n = d.component_count();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
  for (int k = 0; k < d.chord_count(); ++k) {
    const Chord& c = d.chord(k);
    if (c.tail.component == c.head.component) continue;
    m[c.tail.component][c.head.component] += c.sign;
  }
  return m;
}

// lambda_i = (signed count of chords arriving at component i) minus (signed
// count departing it). Computed two ways: from the linking matrix and as the
// endpoint-sign sum over the component restricted to non-self chords. The
// two must agree; a mismatch means the diagram representation is corrupt.
inline std::vector<int> lambda_vector(const ChordDiagram& d) {
  const int n = d.component_count();
  auto m = linking_matrix(d);
  std::vector<int> lam(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) lam[i] += m[j][i] - m[i][j];
  }
  std::vector<int> check(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int p = 0; p < d.component_size(i); ++p) {
      if (!d.is_self(d.at(i, p).chord)) check[i] += d.endpoint_sign(i, p);
    }
  }
  if (check != lam)
    throw std::logic_error("lambda_vector: matrix route disagrees with endpoint route");
  return lam;
}

// Parity p_i: the mod-2 count of non-self chord endpoints on component i
// (equivalently lambda_i mod 2, since each such endpoint carries sign +-1).
inline std::vector<int> parity_vector(const ChordDiagram& d) {
  const int n = d.component_count();
  std::vector<int> par(n, 0);
  for (int i = 0; i < n; ++i) {
    int incident = 0;
    for (int p = 0; p < d.component_size(i); ++p) {
      if (!d.is_self(d.at(i, p).chord)) ++incident;
    }
    par[i] = incident % 2;
  }
  return par;
}

// Index of a chord of a knot diagram: the endpoint-sign sum over the open
// arc that runs from the chord's tail to its head in the circle orientation.
// Defined for one-component diagrams only.
inline int chord_index(const ChordDiagram& d, int k) {
  if (d.component_count() != 1)
    throw std::invalid_argument("chord_index: defined for knot diagrams only");
  const Chord& c = d.chord(k);
  const int size = d.component_size(0);
  int sum = 0;
  for (int p = cyclic(c.tail.position + 1, size); p != c.head.position; p = cyclic(p + 1, size))
    sum += d.endpoint_sign(0, p);
  return sum;
}

inline int chord_index(const ChordDiagram& d, const std::string& id) {
  int k = d.find_chord(id);
  if (k < 0) throw std::invalid_argument("chord_index: unknown chord '" + id + "'");
  return chord_index(d, k);
}

// J_n for n != 0: the signed count of chords of index n. Neither index 0 nor
// cancelled counts are stored, so every key present has a nonzero value.
// odd_writhe is the sum of J_n over odd n.
struct WritheSpectrum {
  std::map<int, int> jn;
  int odd_writhe = 0;
};

inline WritheSpectrum writhe_spectrum(const ChordDiagram& d) {
  if (d.component_count() != 1)
    throw std::invalid_argument("writhe_spectrum: defined for knot diagrams only");
  WritheSpectrum out;
  for (int k = 0; k < d.chord_count(); ++k) {
    int n = chord_index(d, k);
    if (n == 0) continue;
    out.jn[n] += d.chord(k).sign;
  }
  for (auto it = out.jn.begin(); it != out.jn.end();) {
    if (it->second == 0)
      it = out.jn.erase(it);
    else
      ++it;
  }
  for (const auto& [n, v] : out.jn) {
    if (n % 2 != 0) out.odd_writhe += v;
  }
  return out;
}

}  // namespace vlink
