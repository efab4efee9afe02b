// gdc: command-line front end for the Gauss-diagram calculus library.
//
// Subcommands: invariants, decide, bound, simplify, moves (list|apply),
// family, search, render. Input files are GDF text; "-" reads stdin.
// Exit codes: 0 success (for decide/search: positive answer), 1 negative
// answer, 2 usage error, 3 invalid input.

#include <climits>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "vlink/diagram.hpp"
#include "vlink/equivalence.hpp"
#include "vlink/families.hpp"
#include "vlink/invariants.hpp"
#include "vlink/moves.hpp"
#include "vlink/render.hpp"
#include "vlink/search.hpp"

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    ss << in.rdbuf();
  }
  return ss.str();
}

vlink::ChordDiagram load_diagram(const std::string& path) {
  return vlink::parse_gdf(read_input(path));
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

std::string vec_to_string(const std::vector<int>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

std::string matrix_to_string(const std::vector<std::vector<int>>& m) {
  std::string s = "[";
  for (size_t i = 0; i < m.size(); ++i) {
    if (i) s += ", ";
    s += vec_to_string(m[i]);
  }
  return s + "]";
}

std::string spectrum_to_string(const std::map<int, int>& jn) {
  std::string s = "{";
  bool first = true;
  for (const auto& [n, v] : jn) {
    if (!first) s += ", ";
    first = false;
    s += std::to_string(n) + ": " + std::to_string(v);
  }
  return s + "}";
}

int cmd_invariants(const std::string& file, bool as_json) {
  vlink::ChordDiagram d = load_diagram(file);
  auto matrix = vlink::linking_matrix(d);
  auto lambda = vlink::lambda_vector(d);
  auto parity = vlink::parity_vector(d);
  const bool knot = d.component_count() == 1;
  if (as_json) {
    nlohmann::json j;
    j["components"] = d.component_count();
    j["linking_matrix"] = matrix;
    j["lambda"] = lambda;
    j["parity"] = parity;
    if (knot) {
      vlink::WritheSpectrum ws = vlink::writhe_spectrum(d);
      nlohmann::json spec = nlohmann::json::object();
      for (const auto& [n, v] : ws.jn) spec[std::to_string(n)] = v;
      j["spectrum"] = spec;
      j["odd_writhe"] = ws.odd_writhe;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "components: " << d.component_count() << "\n";
    std::cout << "linking_matrix: " << matrix_to_string(matrix) << "\n";
    std::cout << "lambda: " << vec_to_string(lambda) << "\n";
    std::cout << "parity: " << vec_to_string(parity) << "\n";
    if (knot) {
      vlink::WritheSpectrum ws = vlink::writhe_spectrum(d);
      std::cout << "spectrum: " << spectrum_to_string(ws.jn) << "\n";
      std::cout << "odd_writhe: " << ws.odd_writhe << "\n";
    }
  }
  return 0;
}

struct FlatSite {
  vlink::MoveSpec spec;
  vlink::MoveSite site;
};

std::vector<FlatSite> flat_sites(const vlink::ChordDiagram& d, const std::string& kinds,
                                 int gap_cap) {
  vlink::EnumerateOptions opts;
  opts.gap_cap = gap_cap;
  std::vector<FlatSite> out;
  for (const vlink::MoveSpec& sp : vlink::parse_move_list(kinds))
    for (const vlink::MoveSite& site : vlink::enumerate_sites(d, sp.kind, sp.dir, opts))
      out.push_back({sp, site});
  return out;
}

std::string site_line(const vlink::ChordDiagram& d, const vlink::MoveSite& s) {
  if (s.kind == vlink::MoveKind::CC) return "cc chord=" + d.chord(s.chords[0]).id;
  std::string line = vlink::to_string(s.kind) + ":" + vlink::to_string(s.dir);
  line += " variant=" + std::to_string(s.variant);
  if (s.dir == vlink::MoveDir::Ins) {
    line += " gaps=";
    for (size_t i = 0; i < s.gaps.size(); ++i) {
      if (i) line += ",";
      line += std::to_string(s.gaps[i].component) + "@" + std::to_string(s.gaps[i].gap);
    }
    line += " signs=";
    for (size_t i = 0; i < s.signs.size(); ++i) {
      if (i) line += ",";
      line += s.signs[i] > 0 ? "+1" : "-1";
    }
  } else {
    line += " chords=";
    for (size_t i = 0; i < s.chords.size(); ++i) {
      if (i) line += ",";
      line += d.chord(s.chords[i]).id;
    }
    line += " pairs=";
    for (size_t i = 0; i < s.pair_slots.size(); ++i) {
      if (i) line += ",";
      line += std::to_string(s.pair_slots[i].first) + ":" + std::to_string(s.pair_slots[i].second);
    }
  }
  return line;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gauss-diagram calculus for oriented virtual knots and links"};
  app.require_subcommand(1);
  int ret = 0;

  // invariants
  auto* inv = app.add_subcommand(
      "invariants", "Print linking matrix, lambda and parity vectors, and for knots the "
                    "writhe spectrum and odd writhe");
  std::string inv_file;
  bool inv_json = false;
  inv->add_option("file", inv_file, "GDF file ('-' for stdin)")->required();
  inv->add_flag("--json", inv_json, "machine-readable JSON output");
  inv->callback([&]() { ret = cmd_invariants(inv_file, inv_json); });

  // decide
  auto* dec = app.add_subcommand("decide",
                                 "Decide whether two link diagrams are related by the given "
                                 "move class (exit 0 yes, 1 no)");
  std::string dec_class, dec_a, dec_b;
  dec->add_option("--move", dec_class, "move class: vdelta, vdelta-wedge, vdelta-circ, vsharp, vpass")
      ->required();
  dec->add_option("first", dec_a, "GDF file ('-' for stdin)")->required();
  dec->add_option("second", dec_b, "GDF file")->required();
  dec->callback([&]() {
    vlink::MoveClass mc = vlink::parse_move_class(dec_class);
    vlink::Decision decision =
        vlink::decide_equivalent(mc, load_diagram(dec_a), load_diagram(dec_b));
    std::cout << (decision.equivalent ? "equivalent" : "not-equivalent") << ": "
              << decision.reason << "\n";
    ret = decision.equivalent ? 0 : 1;
  });

  // bound
  auto* bnd = app.add_subcommand(
      "bound", "Print a lower bound on the move-class distance between two knots "
               "(second defaults to the empty diagram)");
  std::string bnd_class, bnd_a, bnd_b;
  bnd->add_option("--move", bnd_class, "move class: vdelta, vdelta-wedge, vdelta-circ, vsharp, vpass")
      ->required();
  bnd->add_option("first", bnd_a, "GDF file ('-' for stdin)")->required();
  bnd->add_option("second", bnd_b, "GDF file (optional)");
  bnd->callback([&]() {
    vlink::MoveClass mc = vlink::parse_move_class(bnd_class);
    vlink::ChordDiagram k1 = load_diagram(bnd_a);
    vlink::ChordDiagram k2 = bnd_b.empty() ? vlink::ChordDiagram() : load_diagram(bnd_b);
    std::cout << vlink::distance_lower_bound(mc, k1, k2) << "\n";
  });

  // simplify
  auto* sim = app.add_subcommand("simplify",
                                 "Greedily delete kinks and opposite-sign bigons; print the "
                                 "simplified GDF");
  std::string sim_file;
  bool sim_trace = false;
  sim->add_option("file", sim_file, "GDF file ('-' for stdin)")->required();
  sim->add_flag("--trace", sim_trace, "print one '# <move> <chords>' comment per deletion");
  sim->callback([&]() {
    vlink::SimplifyResult r = vlink::greedy_simplify(load_diagram(sim_file));
    if (sim_trace)
      for (const vlink::TraceEntry& t : r.trace) {
        std::cout << "# " << vlink::to_string(t.kind) << ":del";
        for (const std::string& id : t.chords) std::cout << " " << id;
        std::cout << "\n";
      }
    std::cout << vlink::serialize_gdf(r.diagram) << "\n";
  });

  // moves
  auto* mv = app.add_subcommand("moves", "Enumerate or apply local move sites");
  mv->require_subcommand(1);
  auto* ml = mv->add_subcommand("list", "List every site of the given kinds, one per line");
  std::string ml_kind, ml_file;
  int ml_gap_cap = INT_MAX;
  ml->add_option("--kind", ml_kind, "move kinds, e.g. r2, r2:del, vdc, cc (comma-separated)")
      ->required();
  ml->add_option("--gap-cap", ml_gap_cap, "max insertion gap positions per component");
  ml->add_option("file", ml_file, "GDF file ('-' for stdin)")->required();
  ml->callback([&]() {
    vlink::ChordDiagram d = load_diagram(ml_file);
    auto sites = flat_sites(d, ml_kind, ml_gap_cap);
    for (size_t i = 0; i < sites.size(); ++i)
      std::cout << i << ": " << site_line(d, sites[i].site) << "\n";
  });
  auto* ma = mv->add_subcommand("apply", "Apply site N from the same enumeration as 'list'");
  std::string ma_kind, ma_file;
  int ma_site = 0, ma_gap_cap = INT_MAX;
  ma->add_option("--kind", ma_kind, "move kinds, as in 'moves list'")->required();
  ma->add_option("--site", ma_site, "site index from 'moves list'")->required();
  ma->add_option("--gap-cap", ma_gap_cap, "max insertion gap positions per component");
  ma->add_option("file", ma_file, "GDF file ('-' for stdin)")->required();
  ma->callback([&]() {
    vlink::ChordDiagram d = load_diagram(ma_file);
    auto sites = flat_sites(d, ma_kind, ma_gap_cap);
    if (ma_site < 0 || ma_site >= static_cast<int>(sites.size()))
      throw std::invalid_argument("site index " + std::to_string(ma_site) + " out of range (" +
                                  std::to_string(sites.size()) + " sites)");
    std::cout << vlink::serialize_gdf(vlink::apply_move(d, sites[ma_site].site).diagram) << "\n";
  });

  // family
  auto* fam = app.add_subcommand("family",
                                 "Emit a family member: closure GDF (default), long template, "
                                 "expected spectrum, or unknotting script");
  std::string fam_id, fam_out;
  int fam_s = 0, fam_m = 1;
  bool fam_template = false, fam_expect = false, fam_script = false;
  fam->add_option("--id", fam_id, "family id: vdc, vs, vp, indep_a, indep_b")->required();
  fam->add_option("--s", fam_s, "family parameter s")->required();
  fam->add_option("--m", fam_m, "closure copies m (default 1)");
  auto* fo_t = fam->add_flag("--template", fam_template, "print the long template instead");
  auto* fo_e = fam->add_flag("--expect", fam_expect,
                             "print expected vs computed spectrum (exit 1 on mismatch)");
  auto* fo_s = fam->add_flag("--script", fam_script, "print the unknotting script, one step per line");
  fo_t->excludes(fo_e)->excludes(fo_s);
  fo_e->excludes(fo_s);
  fam->add_option("-o,--output", fam_out, "write to file instead of stdout");
  fam->callback([&]() {
    vlink::FamilyId id = vlink::parse_family_id(fam_id);
    if (fam_template) {
      write_output(fam_out, vlink::serialize_long_template(vlink::family_template(id, fam_s)) + "\n");
      return;
    }
    if (fam_script) {
      std::string text;
      for (const auto& step : vlink::unknotting_script(id, fam_s, fam_m)) {
        for (size_t i = 0; i < step.size(); ++i) text += (i ? " " : "") + step[i];
        text += "\n";
      }
      write_output(fam_out, text);
      return;
    }
    if (fam_expect) {
      vlink::WritheSpectrum expected = vlink::expected_spectrum(id, fam_s, fam_m);
      vlink::WritheSpectrum computed =
          vlink::writhe_spectrum(vlink::family_diagram(id, fam_s, fam_m));
      bool ok = expected.jn == computed.jn && expected.odd_writhe == computed.odd_writhe;
      std::string text = "expected: " + spectrum_to_string(expected.jn) + "\n" +
                         "computed: " + spectrum_to_string(computed.jn) + "\n" +
                         "odd_writhe: " + std::to_string(computed.odd_writhe) + "\n" +
                         std::string("match: ") + (ok ? "yes" : "no") + "\n";
      write_output(fam_out, text);
      ret = ok ? 0 : 1;
      return;
    }
    write_output(fam_out, vlink::serialize_gdf(vlink::family_diagram(id, fam_s, fam_m)) + "\n");
  });

  // search
  auto* sr = app.add_subcommand("search",
                                "Breadth-first distance between two diagrams under costed "
                                "moves with free kink/bigon cleanup (prints the distance, or "
                                "'not-found' with exit 1)");
  std::string sr_moves, sr_a, sr_b;
  int sr_depth = 4, sr_gap_cap = INT_MAX;
  long long sr_max_states = 200000;
  bool sr_no_free = false;
  sr->add_option("--moves", sr_moves, "costed move kinds (comma-separated)")->required();
  sr->add_option("--depth", sr_depth, "max costed moves (default 4)");
  sr->add_option("--max-states", sr_max_states, "max stored states (default 200000)");
  sr->add_option("--gap-cap", sr_gap_cap, "max insertion gap positions per component");
  sr->add_flag("--no-free", sr_no_free, "disable free kink/bigon deletions");
  sr->add_option("first", sr_a, "GDF file ('-' for stdin)")->required();
  sr->add_option("second", sr_b, "GDF file")->required();
  sr->callback([&]() {
    vlink::SearchBudget budget;
    budget.costed = vlink::parse_move_list(sr_moves);
    budget.max_depth = sr_depth;
    budget.max_states = sr_max_states;
    budget.gap_cap = sr_gap_cap;
    if (sr_no_free) budget.free_r1 = budget.free_r2 = false;
    auto found = vlink::bounded_distance(load_diagram(sr_a), load_diagram(sr_b), budget);
    if (found) {
      std::cout << *found << "\n";
      ret = 0;
    } else {
      std::cout << "not-found\n";
      ret = 1;
    }
  });

  // render
  auto* rnd = app.add_subcommand("render", "Render the diagram as SVG");
  std::string rnd_file, rnd_out;
  rnd->add_option("file", rnd_file, "GDF file ('-' for stdin)")->required();
  rnd->add_option("-o,--output", rnd_out, "output SVG file (default stdout)");
  rnd->callback([&]() { write_output(rnd_out, vlink::render_svg(load_diagram(rnd_file))); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const vlink::GdfError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return ret;
}
