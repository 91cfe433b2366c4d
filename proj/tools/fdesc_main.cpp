// fdesc: exact topological descriptors of lower-star filtrations.
//
// Verbs: compute, compare, faithful, min-set, envelope-check, observability,
// gen, export.  All rationals travel as "p/q" strings; every output is
// byte-deterministic JSON (or SVG/CSV for export).  Exit codes: 0 success,
// 1 failed check verdict, 2 input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "fdesc/complex.hpp"
#include "fdesc/descriptors.hpp"
#include "fdesc/faithfulness.hpp"
#include "fdesc/filtration.hpp"
#include "fdesc/fixtures.hpp"
#include "fdesc/geometry.hpp"
#include "fdesc/io.hpp"
#include "fdesc/observability.hpp"
#include "fdesc/plot.hpp"

namespace {

using namespace fdesc;

SimplicialComplex load_complex_arg(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return complex_from_json(parse_json_text(ss.str()));
  }
  return complex_from_json(load_json(path));
}

std::vector<Vec> load_directions_file(const std::string& path) {
  return directions_from_json(load_json(path));
}

DescriptorKind require_kind(const std::string& name) {
  auto kind = descriptor_from_name(name);
  if (!kind) throw std::invalid_argument("unknown descriptor: '" + name + "'");
  return *kind;
}

std::uint64_t enumeration_budget() {
  const char* env = std::getenv("FD_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultEnumerationBudget;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (end == nullptr || *end != '\0' || v == 0) {
    throw std::invalid_argument(std::string("malformed FD_BUDGET value: '") + env + "'");
  }
  return v;
}

void emit(const json& j) { std::cout << json_to_string(j); }

void write_text(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact descriptors of lower-star filtrations of immersed simplicial complexes"};
  app.require_subcommand(1);
  long long seed = 0;
  app.add_option("--seed", seed,
                 "Seed accepted for reproducibility of randomized test drivers");

  // --- compute ---------------------------------------------------------
  auto* compute_cmd = app.add_subcommand("compute", "Compute one descriptor value");
  std::string c_complex = "-";
  std::string c_descriptor;
  std::string c_direction;
  std::string c_point;
  compute_cmd->add_option("--complex", c_complex, "Complex JSON file ('-' = stdin)");
  compute_cmd->add_option("--descriptor", c_descriptor, "pd|apd|bc|abc|ecc|aecc|dv|d0|dr")
      ->required();
  compute_cmd->add_option("--direction", c_direction, "Direction, e.g. \"1,0\" or \"-3/5,4/5\"");
  compute_cmd->add_option("--point", c_point, "Query point (descriptor dr only)");

  // --- compare ---------------------------------------------------------
  auto* compare_cmd =
      app.add_subcommand("compare", "Compare a descriptor of two complexes over a direction file");
  std::string m_complex = "-";
  std::string m_complex2;
  std::string m_descriptor;
  std::string m_directions;
  compare_cmd->add_option("--complex", m_complex, "First complex JSON file ('-' = stdin)");
  compare_cmd->add_option("--complex2", m_complex2, "Second complex JSON file")->required();
  compare_cmd->add_option("--descriptor", m_descriptor, "pd|apd|bc|abc|ecc|aecc|dv|d0|dr")
      ->required();
  compare_cmd->add_option("--directions", m_directions, "JSON file with parameter vectors")
      ->required();

  // --- faithful --------------------------------------------------------
  auto* faithful_cmd =
      app.add_subcommand("faithful", "Check relative faithfulness of a parameter set");
  std::string f_complex = "-";
  std::string f_descriptor;
  std::string f_directions;
  std::string f_universe;
  faithful_cmd->add_option("--complex", f_complex, "Complex JSON file ('-' = stdin)");
  faithful_cmd->add_option("--descriptor", f_descriptor, "pd|apd|bc|abc|ecc|aecc|dv|d0|dr")
      ->required();
  faithful_cmd->add_option("--directions", f_directions, "JSON file with parameter vectors")
      ->required();
  faithful_cmd->add_option("--universe", f_universe, "enumerate:maxdim=N or list:FILE")
      ->required();

  // --- min-set ---------------------------------------------------------
  auto* minset_cmd = app.add_subcommand(
      "min-set", "Smallest faithful candidate subset (exhaustive, by cardinality)");
  std::string s_complex = "-";
  std::string s_descriptor;
  std::string s_candidates;
  std::string s_universe;
  std::uint64_t s_budget = kDefaultEnumerationBudget;
  minset_cmd->add_option("--complex", s_complex, "Complex JSON file ('-' = stdin)");
  minset_cmd->add_option("--descriptor", s_descriptor, "pd|apd|bc|abc|ecc|aecc|dv|d0|dr")
      ->required();
  minset_cmd->add_option("--candidates", s_candidates, "JSON file with candidate vectors")
      ->required();
  minset_cmd->add_option("--universe", s_universe, "enumerate:maxdim=N or list:FILE")->required();
  minset_cmd->add_option("--budget", s_budget, "Max candidate subsets to test");

  // --- envelope-check ----------------------------------------------------
  auto* env_cmd = app.add_subcommand(
      "envelope-check", "Necessary conditions on a direction set for concise faithfulness");
  std::string e_complex = "-";
  std::string e_directions;
  env_cmd->add_option("--complex", e_complex, "Complex JSON file ('-' = stdin)");
  env_cmd->add_option("--directions", e_directions, "JSON file with direction vectors")
      ->required();

  // --- observability -----------------------------------------------------
  auto* obs_cmd =
      app.add_subcommand("observability", "Direction regions of clothespins and clotheslines");
  std::string o_clothespin;
  int o_clothesline = 0;
  std::string o_svg;
  auto* o_pin =
      obs_cmd->add_option("--clothespin", o_clothespin, "Clothespin complex JSON file");
  auto* o_line =
      obs_cmd->add_option("--clothesline", o_clothesline, "Build a clothesline with m motifs");
  o_pin->excludes(o_line);
  obs_cmd->add_option("--svg", o_svg, "Also write an SVG overlay to this file");

  // --- gen ---------------------------------------------------------------
  auto* gen_cmd = app.add_subcommand("gen", "Generate a named fixture complex");
  std::string g_fixture;
  int g_dim = 4;
  int g_edges = 2;
  int g_m = 2;
  std::vector<std::string> g_corners;
  gen_cmd
      ->add_option("--fixture", g_fixture,
                   "single_edge|square_a|square_b|fan_graph|sparse_graph|clothespin|clothesline")
      ->required();
  gen_cmd->add_option("--dim", g_dim, "sparse_graph: ambient dimension (default 4)");
  gen_cmd->add_option("--edges", g_edges, "sparse_graph: number of disjoint edges (default 2)");
  gen_cmd->add_option("--m", g_m, "clothesline: number of motifs (default 2)");
  gen_cmd->add_option("--corner", g_corners,
                      "clothespin: vertex as \"x,y\" (give four; default built-in)");

  // --- export ------------------------------------------------------------
  auto* export_cmd = app.add_subcommand("export", "Render a stored descriptor value");
  std::string x_value;
  std::string x_format;
  std::string x_out = "-";
  export_cmd->add_option("--value", x_value, "Descriptor value JSON file")->required();
  export_cmd->add_option("--format", x_format, "svg or csv")->required();
  export_cmd->add_option("--out", x_out, "Output file ('-' = stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (app.got_subcommand(compute_cmd)) {
    const SimplicialComplex k = load_complex_arg(c_complex);
    const DescriptorKind kind = require_kind(c_descriptor);
    Vec param;
    if (descriptor_param_is_point(kind)) {
      if (c_point.empty()) {
        throw std::invalid_argument("descriptor 'dr' requires --point");
      }
      param = parse_vector_arg(c_point);
    } else {
      if (c_direction.empty()) {
        throw std::invalid_argument("descriptor '" + c_descriptor + "' requires --direction");
      }
      param = parse_vector_arg(c_direction);
    }
    emit(descriptor_value_to_json(compute(k, kind, param)));
    return 0;
  }

  if (app.got_subcommand(compare_cmd)) {
    const SimplicialComplex a = load_complex_arg(m_complex);
    const SimplicialComplex b = load_complex_arg(m_complex2);
    const DescriptorKind kind = require_kind(m_descriptor);
    const std::vector<Vec> params = load_directions_file(m_directions);
    json rows = json::array();
    bool all_equal = true;
    for (const Vec& p : params) {
      const bool eq = equal(compute(a, kind, p), compute(b, kind, p));
      all_equal = all_equal && eq;
      rows.push_back(json{{"direction", vec_to_json(p)}, {"equal", eq}});
    }
    emit(json{{"all_equal", all_equal}, {"rows", rows}});
    return all_equal ? 0 : 1;
  }

  if (app.got_subcommand(faithful_cmd)) {
    const SimplicialComplex k = load_complex_arg(f_complex);
    const DescriptorKind kind = require_kind(f_descriptor);
    const std::vector<Vec> params = load_directions_file(f_directions);
    const AdversaryUniverse u =
        load_universe(parse_universe_spec(f_universe), k, enumeration_budget());
    const FaithfulnessReport rep = relative_faithful(kind, k, params, u);
    emit(faithfulness_report_to_json(rep));
    return rep.faithful ? 0 : 1;
  }

  if (app.got_subcommand(minset_cmd)) {
    const SimplicialComplex k = load_complex_arg(s_complex);
    const DescriptorKind kind = require_kind(s_descriptor);
    const std::vector<Vec> candidates = load_directions_file(s_candidates);
    const AdversaryUniverse u =
        load_universe(parse_universe_spec(s_universe), k, enumeration_budget());
    const MinFaithfulResult r = min_faithful_size(kind, k, candidates, u, s_budget);
    emit(min_faithful_to_json(r, candidates));
    return r.witness ? 0 : 1;
  }

  if (app.got_subcommand(env_cmd)) {
    const SimplicialComplex k = load_complex_arg(e_complex);
    const std::vector<Vec> dirs = load_directions_file(e_directions);
    const ConciseConditionsReport rep = check_concise_conditions(k, dirs);
    emit(concise_report_to_json(rep));
    return rep.verdict ? 0 : 1;
  }

  if (app.got_subcommand(obs_cmd)) {
    if (!o_clothespin.empty()) {
      const SimplicialComplex k = complex_from_json(load_json(o_clothespin));
      const ClothespinRegions regs = clothespin_regions(k);
      emit(clothespin_regions_to_json(regs));
      if (!o_svg.empty()) {
        write_text(svg_regions({{"R1", regs.r1},
                                {"R2", regs.r2},
                                {"R3", regs.r3},
                                {"R4", regs.r4},
                                {"W", regs.w}}),
                   o_svg);
      }
      return 0;
    }
    if (o_clothesline <= 0) {
      throw std::invalid_argument("observability needs --clothespin FILE or --clothesline M");
    }
    const SimplicialComplex k = build_clothesline(o_clothesline);
    const std::vector<CircularRegion> wedges = clothesline_wedges(k);
    json jw = json::array();
    std::vector<std::pair<std::string, CircularRegion>> named;
    for (std::size_t i = 0; i < wedges.size(); ++i) {
      jw.push_back(region_to_json(wedges[i]));
      named.emplace_back("W" + std::to_string(i), wedges[i]);
    }
    emit(json{{"complex", complex_to_json(k)},
              {"disjoint", regions_disjoint(k)},
              {"wedges", jw}});
    if (!o_svg.empty()) write_text(svg_regions(named), o_svg);
    return 0;
  }

  if (app.got_subcommand(gen_cmd)) {
    SimplicialComplex k;
    if (g_fixture == "single_edge") {
      k = single_edge();
    } else if (g_fixture == "square_a") {
      k = square_a();
    } else if (g_fixture == "square_b") {
      k = square_b();
    } else if (g_fixture == "fan_graph") {
      k = fan_graph();
    } else if (g_fixture == "sparse_graph") {
      k = sparse_graph(g_dim, g_edges);
    } else if (g_fixture == "clothespin") {
      if (g_corners.empty()) {
        k = standard_clothespin();
      } else if (g_corners.size() == 4) {
        k = build_clothespin(parse_vector_arg(g_corners[0]), parse_vector_arg(g_corners[1]),
                             parse_vector_arg(g_corners[2]), parse_vector_arg(g_corners[3]));
      } else {
        throw std::invalid_argument("clothespin needs exactly four --corner options");
      }
    } else if (g_fixture == "clothesline") {
      k = build_clothesline(g_m);
    } else {
      throw std::invalid_argument("unknown fixture: '" + g_fixture + "'");
    }
    emit(complex_to_json(k));
    return 0;
  }

  if (app.got_subcommand(export_cmd)) {
    const DescriptorValue v = descriptor_value_from_json(load_json(x_value));
    write_text(render_descriptor(v, x_format), x_out);
    return 0;
  }

  return 2;  // unreachable: require_subcommand guarantees a verb
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
