#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "gen.hpp"
#include "vlink/diagram.hpp"
#include "vlink/invariants.hpp"
#include "vlink/moves.hpp"

using namespace vlink;

namespace {

int abs_delta_sum(const WritheSpectrum& a, const WritheSpectrum& b) {
  std::map<int, int> delta = a.jn;
  for (const auto& [n, v] : b.jn) delta[n] -= v;
  int total = 0;
  for (const auto& [n, v] : delta) total += std::abs(v);
  return total;
}

}  // namespace

TEST_CASE("move spec parsing") {
  CHECK(parse_move_specs("r1").size() == 2);
  CHECK(parse_move_specs("r2:del").size() == 1);
  CHECK(parse_move_specs("r2:del")[0].dir == MoveDir::Del);
  CHECK(parse_move_specs("r3").size() == 1);
  CHECK(parse_move_specs("r3")[0].dir == MoveDir::Swap);
  CHECK(parse_move_specs("cc").size() == 1);
  CHECK(parse_move_specs("vdc").size() == 8);
  CHECK(parse_move_specs("vdc2:ins").size() == 1);
  CHECK(parse_move_specs("vp").size() == 8);
  CHECK(parse_move_specs("f").size() == 6);
  CHECK(parse_move_specs("fd").size() == 4);
  CHECK(parse_move_list("r1,r2").size() == 4);
  CHECK(parse_move_list("r1, vdc1:del").size() == 3);
  CHECK_THROWS_AS(parse_move_specs("r3:del"), std::invalid_argument);
  CHECK_THROWS_AS(parse_move_specs("cc:ins"), std::invalid_argument);
  CHECK_THROWS_AS(parse_move_specs("f1:ins"), std::invalid_argument);
  CHECK_THROWS_AS(parse_move_specs("bogus"), std::invalid_argument);
  CHECK_THROWS_AS(parse_move_list(""), std::invalid_argument);
}

TEST_CASE("kink deletion and insertion") {
  ChordDiagram kink = parse_gdf("O1+ U1+");
  // On a bare kink both endpoint orders are cyclically adjacent, so both
  // pattern variants report a site; each deletes the same chord.
  auto sites = enumerate_sites(kink, MoveKind::R1, MoveDir::Del);
  REQUIRE(sites.size() == 2);
  for (const MoveSite& site : sites) {
    MoveResult res = apply_move(kink, site);
    CHECK(res.diagram.empty());
    CHECK(res.inverse.dir == MoveDir::Ins);
    ChordDiagram back = apply_move(res.diagram, res.inverse).diagram;
    CHECK(canonical_key(back) == canonical_key(kink));
  }
  // Inside a longer component only the true adjacency matches.
  ChordDiagram padded = parse_gdf("O1+ U1+ O2+ U3- U2+ O3-");
  CHECK(enumerate_sites(padded, MoveKind::R1, MoveDir::Del).size() == 1);

  auto ins = enumerate_sites(ChordDiagram(), MoveKind::R1, MoveDir::Ins);
  // 2 orders x 1 gap x 2 signs
  REQUIRE(ins.size() == 4);
  for (const MoveSite& s : ins) {
    ChordDiagram d = apply_move(ChordDiagram(), s).diagram;
    CHECK(d.chord_count() == 1);
    CHECK(writhe_spectrum(d).jn.empty());
  }
}

TEST_CASE("bigon deletion requires opposite signs and either head order") {
  ChordDiagram nested = parse_gdf("O1+ O2- U2- U1+");
  auto s1 = enumerate_sites(nested, MoveKind::R2, MoveDir::Del);
  REQUIRE(s1.size() == 1);
  CHECK(apply_move(nested, s1[0]).diagram.empty());

  ChordDiagram crossed = parse_gdf("O1+ O2- U1+ U2-");
  auto s2 = enumerate_sites(crossed, MoveKind::R2, MoveDir::Del);
  REQUIRE(s2.size() == 1);
  CHECK(apply_move(crossed, s2[0]).diagram.empty());

  ChordDiagram same_sign = parse_gdf("O1+ O2+ U2+ U1+");
  CHECK(enumerate_sites(same_sign, MoveKind::R2, MoveDir::Del).empty());
}

TEST_CASE("bigon insertion and deletion round-trip on random knots") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    ChordDiagram d = testgen::random_knot(rng, 1 + rng() % 6);
    WritheSpectrum before = writhe_spectrum(d);
    MoveKind mk = trial % 2 ? MoveKind::R1 : MoveKind::R2;
    auto sites = enumerate_sites(d, mk, MoveDir::Ins);
    REQUIRE_FALSE(sites.empty());
    MoveResult res = apply_move(d, sites[rng() % sites.size()]);
    CHECK(writhe_spectrum(res.diagram).jn == before.jn);
    MoveResult undo = apply_move(res.diagram, res.inverse);
    CHECK(canonical_key(undo.diagram) == canonical_key(d));
    // The deletion's inverse reinserts.
    ChordDiagram again = apply_move(undo.diagram, undo.inverse).diagram;
    CHECK(canonical_key(again) == canonical_key(res.diagram));
  }
}

TEST_CASE("triangle swaps preserve the spectrum for every variant") {
  std::mt19937 rng(59);
  for (int variant = 0; variant < 16; ++variant) {
    for (int rep = 0; rep < 8; ++rep) {
      ChordDiagram base = testgen::random_knot(rng, rng() % 4);
      ChordDiagram d = testgen::plant_pattern(base, MoveKind::R3, variant, rng);
      auto sites = enumerate_sites(d, MoveKind::R3, MoveDir::Swap);
      REQUIRE_FALSE(sites.empty());
      const MoveSite& site = sites[rng() % sites.size()];
      WritheSpectrum before = writhe_spectrum(d);
      MoveResult res = apply_move(d, site);
      CHECK(writhe_spectrum(res.diagram).jn == before.jn);
      // Swapping back restores the exact diagram.
      ChordDiagram back = apply_move(res.diagram, res.inverse).diagram;
      CHECK(serialize_gdf(back) == serialize_gdf(d));
    }
  }
}

TEST_CASE("triangle swaps preserve lambda and linking on links") {
  std::mt19937 rng(61);
  for (int rep = 0; rep < 40; ++rep) {
    ChordDiagram base = testgen::random_link(rng, 2 + rng() % 2, rng() % 4);
    int variant = rng() % 16;
    ChordDiagram d = testgen::plant_pattern(base, MoveKind::R3, variant, rng);
    auto sites = enumerate_sites(d, MoveKind::R3, MoveDir::Swap);
    REQUIRE_FALSE(sites.empty());
    MoveResult res = apply_move(d, sites[rng() % sites.size()]);
    CHECK(lambda_vector(res.diagram) == lambda_vector(d));
    CHECK(linking_matrix(res.diagram) == linking_matrix(d));
    CHECK(parity_vector(res.diagram) == parity_vector(d));
  }
}

TEST_CASE("exchange swaps preserve the linking matrix and revert") {
  std::mt19937 rng(67);
  const MoveKind kinds[] = {MoveKind::F1, MoveKind::F2, MoveKind::F3, MoveKind::F4,
                            MoveKind::F5, MoveKind::F6, MoveKind::FD1, MoveKind::FD2,
                            MoveKind::FD3, MoveKind::FD4};
  for (MoveKind mk : kinds) {
    int variants = static_cast<int>(detail::kind_patterns(mk).size());
    for (int rep = 0; rep < 6; ++rep) {
      ChordDiagram base = testgen::random_link(rng, 1 + rng() % 3, rng() % 4);
      ChordDiagram d = testgen::plant_pattern(base, mk, rng() % variants, rng);
      auto sites = enumerate_sites(d, mk, MoveDir::Swap);
      REQUIRE_FALSE(sites.empty());
      MoveResult res = apply_move(d, sites[rng() % sites.size()]);
      CHECK(linking_matrix(res.diagram) == linking_matrix(d));
      CHECK(lambda_vector(res.diagram) == lambda_vector(d));
      CHECK(parity_vector(res.diagram) == parity_vector(d));
      ChordDiagram back = apply_move(res.diagram, res.inverse).diagram;
      CHECK(serialize_gdf(back) == serialize_gdf(d));
    }
  }
}

TEST_CASE("triple insertions move the spectrum by a bounded amount") {
  std::mt19937 rng(71);
  const MoveKind vdc[] = {MoveKind::VDC1, MoveKind::VDC2, MoveKind::VDC3, MoveKind::VDC4};
  for (int rep = 0; rep < 80; ++rep) {
    ChordDiagram d = testgen::random_knot(rng, 1 + rng() % 5);
    WritheSpectrum before = writhe_spectrum(d);
    MoveKind mk = vdc[rng() % 4];
    auto sites = enumerate_sites(d, mk, MoveDir::Ins);
    REQUIRE_FALSE(sites.empty());
    MoveResult res = apply_move(d, sites[rng() % sites.size()]);
    WritheSpectrum after = writhe_spectrum(res.diagram);
    CHECK(abs_delta_sum(before, after) <= 3);
    CHECK(std::abs(before.odd_writhe - after.odd_writhe) <= 2);
    // Deleting through the inverse restores the diagram.
    MoveResult undo = apply_move(res.diagram, res.inverse);
    CHECK(undo.inverse.dir == MoveDir::Ins);
    CHECK(canonical_key(undo.diagram) == canonical_key(d));
  }
}

TEST_CASE("pass-move insertions move the spectrum by a bounded amount") {
  std::mt19937 rng(73);
  const MoveKind vp[] = {MoveKind::VP1, MoveKind::VP2, MoveKind::VP3, MoveKind::VP4};
  for (int rep = 0; rep < 60; ++rep) {
    ChordDiagram d = testgen::random_knot(rng, 1 + rng() % 4);
    WritheSpectrum before = writhe_spectrum(d);
    MoveKind mk = vp[rng() % 4];
    EnumerateOptions opts;
    opts.gap_cap = 5;
    auto sites = enumerate_sites(d, mk, MoveDir::Ins, opts);
    REQUIRE_FALSE(sites.empty());
    MoveResult res = apply_move(d, sites[rng() % sites.size()]);
    WritheSpectrum after = writhe_spectrum(res.diagram);
    CHECK(abs_delta_sum(before, after) <= 4);
    CHECK(std::abs(before.odd_writhe - after.odd_writhe) <= 2);
    MoveResult undo = apply_move(res.diagram, res.inverse);
    CHECK(canonical_key(undo.diagram) == canonical_key(d));
  }
}

TEST_CASE("triple insertions preserve lambda and parity on links") {
  std::mt19937 rng(79);
  const MoveKind vdc[] = {MoveKind::VDC1, MoveKind::VDC2, MoveKind::VDC3, MoveKind::VDC4};
  for (int rep = 0; rep < 60; ++rep) {
    ChordDiagram d = testgen::random_link(rng, 2 + rng() % 3, rng() % 6);
    MoveKind mk = vdc[rng() % 4];
    auto sites = enumerate_sites(d, mk, MoveDir::Ins);
    REQUIRE_FALSE(sites.empty());
    ChordDiagram after = apply_move(d, sites[rng() % sites.size()]).diagram;
    CHECK(lambda_vector(after) == lambda_vector(d));
    CHECK(parity_vector(after) == parity_vector(d));
  }
}

TEST_CASE("crossing change flips one chord and is an involution") {
  ChordDiagram hopf = parse_gdf("Oa+ ; Ua+");
  ChordDiagram flipped = crossing_change(hopf, "a");
  CHECK(flipped.chord(0).sign == -1);
  CHECK(flipped.chord(0).tail.component == 1);
  CHECK(flipped.chord(0).head.component == 0);
  CHECK(lambda_vector(flipped) == lambda_vector(hopf));
  CHECK(parity_vector(flipped) == parity_vector(hopf));
  CHECK(linking_matrix(flipped) != linking_matrix(hopf));
  CHECK(serialize_gdf(crossing_change(flipped, "a")) == serialize_gdf(hopf));
  CHECK_THROWS_AS(crossing_change(hopf, "zz"), std::invalid_argument);

  std::mt19937 rng(83);
  for (int rep = 0; rep < 40; ++rep) {
    ChordDiagram d = testgen::random_link(rng, 1 + rng() % 3, 1 + rng() % 6);
    auto sites = enumerate_sites(d, MoveKind::CC, MoveDir::Swap);
    REQUIRE(static_cast<int>(sites.size()) == d.chord_count());
    MoveResult res = apply_move(d, sites[rng() % sites.size()]);
    CHECK(lambda_vector(res.diagram) == lambda_vector(d));
    CHECK(parity_vector(res.diagram) == parity_vector(d));
    CHECK(serialize_gdf(apply_move(res.diagram, res.inverse).diagram) == serialize_gdf(d));
  }
}

TEST_CASE("enumerate rejects direction mismatches") {
  ChordDiagram d = parse_gdf("O1+ U1+");
  CHECK_THROWS_AS(enumerate_sites(d, MoveKind::R3, MoveDir::Del), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_sites(d, MoveKind::CC, MoveDir::Ins), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_sites(d, MoveKind::F1, MoveDir::Ins), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_sites(d, MoveKind::R1, MoveDir::Swap), std::invalid_argument);
}

TEST_CASE("apply rejects sites that do not match the diagram") {
  ChordDiagram nested = parse_gdf("O1+ O2- U2- U1+");
  auto sites = enumerate_sites(nested, MoveKind::R2, MoveDir::Del);
  REQUIRE(sites.size() == 1);
  MoveSite bad = sites[0];
  std::swap(bad.chords[0], bad.chords[1]);
  CHECK_THROWS_AS(apply_move(nested, bad), std::invalid_argument);

  MoveSite ins;
  ins.kind = MoveKind::R2;
  ins.dir = MoveDir::Ins;
  ins.variant = 0;
  ins.gaps = {GapRef{0, 99}, GapRef{0, 0}};
  ins.signs = {1, -1};
  CHECK_THROWS_AS(apply_move(nested, ins), std::invalid_argument);
  ins.gaps = {GapRef{0, 0}, GapRef{0, 0}};
  ins.signs = {1, 1};  // conflicts with the (+,-) variant
  CHECK_THROWS_AS(apply_move(nested, ins), std::invalid_argument);
}

TEST_CASE("site enumeration is deterministic") {
  std::mt19937 rng(89);
  ChordDiagram d = testgen::random_knot(rng, 6);
  for (MoveKind mk : {MoveKind::R1, MoveKind::R2, MoveKind::VDC1}) {
    auto a = enumerate_sites(d, mk, MoveDir::Ins);
    auto b = enumerate_sites(d, mk, MoveDir::Ins);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].variant == b[i].variant);
      CHECK(a[i].gaps.size() == b[i].gaps.size());
      CHECK(a[i].signs == b[i].signs);
    }
  }
}

TEST_CASE("greedy simplification deletes kinks first, then bigons") {
  SimplifyResult r = greedy_simplify(parse_gdf("O1+ U1+ O2+ O3- U2+ U3-"));
  CHECK(r.diagram.empty());
  REQUIRE(r.trace.size() == 2);
  CHECK(r.trace[0].kind == MoveKind::R1);
  CHECK(r.trace[0].chords == std::vector<std::string>{"1"});
  CHECK(r.trace[1].kind == MoveKind::R2);

  // The two-chord positive knot has no kink or bigon site.
  ChordDiagram vt = parse_gdf("O1+ O2+ U1+ U2+");
  SimplifyResult rv = greedy_simplify(vt);
  CHECK(rv.trace.empty());
  CHECK(serialize_gdf(rv.diagram) == serialize_gdf(vt));

  CHECK(greedy_simplify(ChordDiagram()).diagram.empty());
}

TEST_CASE("plain chord removal") {
  ChordDiagram d = parse_gdf("O1+ O2+ U1+ U2+");
  ChordDiagram r = remove_chords(d, {d.find_chord("1")});
  REQUIRE(r.chord_count() == 1);
  CHECK(r.chord(0).id == "2");
  CHECK(r.component_size(0) == 2);
  CHECK_THROWS_AS(remove_chords(d, {7}), std::invalid_argument);
  CHECK(remove_chords(d, {0, 1}).empty());
}
