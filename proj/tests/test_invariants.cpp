#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "gen.hpp"
#include "vlink/diagram.hpp"
#include "vlink/invariants.hpp"

using namespace vlink;

TEST_CASE("worked example: two-chord positive knot") {
  ChordDiagram d = parse_gdf("O1+ O2+ U1+ U2+");
  CHECK(chord_index(d, "1") == -1);
  CHECK(chord_index(d, "2") == 1);
  WritheSpectrum ws = writhe_spectrum(d);
  REQUIRE(ws.jn.size() == 2);
  CHECK(ws.jn.at(-1) == 1);
  CHECK(ws.jn.at(1) == 1);
  CHECK(ws.odd_writhe == 2);
}

TEST_CASE("kink and empty diagram have trivial spectrum") {
  ChordDiagram kink = parse_gdf("O1+ U1+");
  CHECK(chord_index(kink, 0) == 0);
  CHECK(writhe_spectrum(kink).jn.empty());
  CHECK(writhe_spectrum(kink).odd_writhe == 0);
  CHECK(writhe_spectrum(ChordDiagram()).jn.empty());
}

TEST_CASE("index zero and cancelled counts are dropped from the spectrum") {
  // Chords a and b both have index 1 but opposite signs, so their counts
  // cancel; chord c has index 0. Nothing survives.
  ChordDiagram d = parse_gdf("Oa+ Ob- Oc+ Uc+ Ua+ Ub-");
  CHECK(chord_index(d, "a") == 1);
  CHECK(chord_index(d, "b") == 1);
  CHECK(chord_index(d, "c") == 0);
  WritheSpectrum ws = writhe_spectrum(d);
  CHECK(ws.jn.empty());
  CHECK(ws.odd_writhe == 0);
}

TEST_CASE("knot-only invariants reject links") {
  ChordDiagram link = parse_gdf("Oa+ ; Ua+");
  CHECK_THROWS_AS(writhe_spectrum(link), std::invalid_argument);
  CHECK_THROWS_AS(chord_index(link, 0), std::invalid_argument);
  CHECK_THROWS_AS(chord_index(link, "missing"), std::invalid_argument);
}

TEST_CASE("chord index agrees with the rotation oracle, exhaustively to 3 chords") {
  for (int k = 1; k <= 3; ++k) {
    testgen::for_each_knot(k, [&](const ChordDiagram& d) {
      for (int c = 0; c < d.chord_count(); ++c) {
        REQUIRE(chord_index(d, c) == testgen::index_oracle(d, c));
        REQUIRE(testgen::complementary_arc_sum(d, c) == -chord_index(d, c));
      }
    });
  }
}

TEST_CASE("chord index agrees with the rotation oracle on random larger knots") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    ChordDiagram d = testgen::random_knot(rng, 1 + rng() % 10);
    for (int c = 0; c < d.chord_count(); ++c) {
      REQUIRE(chord_index(d, c) == testgen::index_oracle(d, c));
      REQUIRE(testgen::complementary_arc_sum(d, c) == -chord_index(d, c));
    }
  }
}

TEST_CASE("two-component example invariants") {
  ChordDiagram hopf = parse_gdf("Oa+ ; Ua+");
  auto m = linking_matrix(hopf);
  CHECK(m[0][1] == 1);
  CHECK(m[1][0] == 0);
  CHECK(lambda_vector(hopf) == std::vector<int>{-1, 1});
  CHECK(parity_vector(hopf) == std::vector<int>{1, 1});
}

TEST_CASE("lambda sums to zero and parity matches lambda mod 2") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 150; ++trial) {
    ChordDiagram d = testgen::random_link(rng, 1 + rng() % 5, rng() % 12);
    auto lam = lambda_vector(d);
    CHECK(std::accumulate(lam.begin(), lam.end(), 0) == 0);
    auto par = parity_vector(d);
    for (size_t i = 0; i < lam.size(); ++i)
      CHECK(((lam[i] % 2) + 2) % 2 == par[i]);
    // Self chords never contribute to the linking matrix.
    auto m = linking_matrix(d);
    for (size_t i = 0; i < m.size(); ++i) CHECK(m[i][i] == 0);
  }
}

TEST_CASE("closure of m copies scales the spectrum by m") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    ChordDiagram base = testgen::random_knot(rng, 1 + rng() % 6);
    LongTemplate t = parse_long_template("%long\n" + serialize_gdf(base));
    WritheSpectrum one = writhe_spectrum(close_product(t, 1));
    for (int m = 2; m <= 3; ++m) {
      WritheSpectrum many = writhe_spectrum(close_product(t, m));
      REQUIRE(many.jn.size() == one.jn.size());
      for (const auto& [n, v] : one.jn) {
        REQUIRE(many.jn.count(n) == 1);
        CHECK(many.jn.at(n) == m * v);
      }
      CHECK(many.odd_writhe == m * one.odd_writhe);
    }
  }
}
