#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "fdesc/complex.hpp"
#include "fdesc/descriptors.hpp"
#include "fdesc/faithfulness.hpp"
#include "fdesc/fixtures.hpp"
#include "fdesc/io.hpp"
#include "fdesc/observability.hpp"
#include "fdesc/plot.hpp"
#include "fdesc/rational.hpp"

using namespace fdesc;

namespace {

Vec v2(long x, long y) { return Vec{Rat(x), Rat(y)}; }

std::vector<Simplex> gens(std::initializer_list<std::vector<int>> ls) {
  std::vector<Simplex> out;
  for (const auto& l : ls) out.push_back(Simplex{l});
  return out;
}

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

const std::string kTmpComplex = "/tmp/fdesc_io_test_complex.json";
const std::string kTmpUniverse = "/tmp/fdesc_io_test_universe.json";
const std::string kTmpBadUniverse = "/tmp/fdesc_io_test_bad_universe.json";
const std::string kTmpMissing = "/tmp/fdesc_io_test_missing_7912.json";

}  // namespace

TEST_CASE("rationals travel as exact strings") {
  CHECK(rat_to_json(rat_of(-3, 6)) == json("-1/2"));
  CHECK(rat_to_json(rat_of(4)) == json("4"));
  CHECK(rat_from_json(json("7/3")) == rat_of(7, 3));
  CHECK(rat_from_json(json("-5")) == rat_of(-5));
  CHECK(rat_from_json(json(12)) == rat_of(12));
  CHECK(rat_from_json(rat_to_json(rat_of(22, -8))) == rat_of(-11, 4));

  CHECK_THROWS_AS(rat_from_json(json(true)), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_json(json(1.5)), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_json(json("1/0")), std::invalid_argument);
  CHECK_THROWS_AS(rat_from_json(json("seven")), std::invalid_argument);
}

TEST_CASE("vectors and direction lists round-trip") {
  const Vec v{rat_of(1, 2), rat_of(-3), rat_of(0)};
  CHECK(vec_from_json(vec_to_json(v)) == v);
  CHECK(vec_to_json(v) == json::array({"1/2", "-3", "0"}));
  CHECK_THROWS_AS(vec_from_json(json::object()), std::invalid_argument);

  const std::vector<Vec> dirs{v2(1, 0), Vec{rat_of(-3, 5), rat_of(4, 5)}};
  CHECK(directions_from_json(directions_to_json(dirs)) == dirs);
  CHECK_THROWS_AS(directions_from_json(json("nope")), std::invalid_argument);

  CHECK(parse_vector_arg("1/2, -3 ,4") == (Vec{rat_of(1, 2), rat_of(-3), rat_of(4)}));
  CHECK(parse_vector_arg("2,-1") == v2(2, -1));
  CHECK_THROWS_AS(parse_vector_arg(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_vector_arg("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_vector_arg("1, 2x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_vector_arg(",1"), std::invalid_argument);
}

TEST_CASE("complexes round-trip and close up on load") {
  for (const SimplicialComplex& k : {fan_graph(), square_a(), standard_clothespin()}) {
    CHECK(complexes_equal(complex_from_json(complex_to_json(k)), k));
  }

  // Generators may omit faces; the closure is rebuilt on load.
  json tri;
  tri["ambient_dim"] = 2;
  tri["vertices"] = json::array(
      {json::array({"0", "0"}), json::array({"2", "0"}), json::array({"0", "2"})});
  tri["simplices"] = json::array({json::array({0, 1, 2})});
  SimplicialComplex filled = complex_from_json(tri);
  CHECK(filled.simplices.size() == 7);
  CHECK(filled.has(Simplex{{0, 1}}));
  CHECK(filled.has(Simplex{{2}}));

  // Collinear vertices are allowed on load (subdivisions produce them).
  SimplicialComplex split = barycentric_subdivide_edge(single_edge(), Simplex{{0, 1}});
  CHECK(complexes_equal(complex_from_json(complex_to_json(split)), split));
}

TEST_CASE("serialized complexes are byte-deterministic") {
  const std::vector<Vec> pts{v2(0, 0), v2(1, 0), v2(0, 1)};
  SimplicialComplex a = make_complex(2, pts, gens({{0, 1}, {2}}));
  SimplicialComplex b = make_complex(2, pts, gens({{2}, {1, 0}}));
  CHECK(json_to_string(complex_to_json(a)) == json_to_string(complex_to_json(b)));
  const std::string text = json_to_string(complex_to_json(a));
  CHECK(ends_with(text, "\n"));
  CHECK(json_to_string(parse_json_text(text)) == text);
}

TEST_CASE("malformed complex files are rejected") {
  json ok = complex_to_json(single_edge());

  json missing = ok;
  missing.erase("vertices");
  CHECK_THROWS_AS(complex_from_json(missing), std::invalid_argument);
  CHECK_THROWS_AS(complex_from_json(json::array()), std::invalid_argument);

  json bad_dim = ok;
  bad_dim["ambient_dim"] = "two";
  CHECK_THROWS_AS(complex_from_json(bad_dim), std::invalid_argument);

  json bad_simplices = ok;
  bad_simplices["simplices"] = json::array({json("edge")});
  CHECK_THROWS_AS(complex_from_json(bad_simplices), std::invalid_argument);

  json bad_index = ok;
  bad_index["simplices"] = json::array({json::array({0, 7})});
  CHECK_THROWS(complex_from_json(bad_index));

  json frac_index = ok;
  frac_index["simplices"] = json::array({json::array({0, 0.5})});
  CHECK_THROWS_AS(complex_from_json(frac_index), std::invalid_argument);

  json ragged = ok;
  ragged["vertices"] = json::array({json::array({"0", "0"}), json::array({"1"})});
  CHECK_THROWS(complex_from_json(ragged));
}

TEST_CASE("descriptor values of every kind round-trip through JSON") {
  SimplicialComplex k = fan_graph();
  const Vec dir{rat_of(3), rat_of(1)};
  const Vec query = k.vertices[0];
  for (DescriptorKind kind :
       {DescriptorKind::PD, DescriptorKind::APD, DescriptorKind::BC, DescriptorKind::ABC,
        DescriptorKind::ECC, DescriptorKind::AECC, DescriptorKind::DV, DescriptorKind::D0,
        DescriptorKind::DR}) {
    CAPTURE(descriptor_name(kind));
    const Vec param = descriptor_param_is_point(kind) ? query : dir;
    DescriptorValue v = compute(k, kind, param);
    json j = descriptor_value_to_json(v);
    CHECK(j["descriptor"] == descriptor_name(kind));
    DescriptorValue back = descriptor_value_from_json(j);
    CHECK(equal(back, v));
    // A second dump of the reloaded value is byte-identical.
    CHECK(json_to_string(descriptor_value_to_json(back)) == json_to_string(j));
  }
}

TEST_CASE("descriptor names map both ways") {
  for (DescriptorKind kind :
       {DescriptorKind::PD, DescriptorKind::APD, DescriptorKind::BC, DescriptorKind::ABC,
        DescriptorKind::ECC, DescriptorKind::AECC, DescriptorKind::DV, DescriptorKind::D0,
        DescriptorKind::DR}) {
    auto round = descriptor_from_name(descriptor_name(kind));
    REQUIRE(round.has_value());
    CHECK(*round == kind);
  }
  CHECK_FALSE(descriptor_from_name("PD").has_value());  // names are lower case
  CHECK_FALSE(descriptor_from_name("betti").has_value());
}

TEST_CASE("diagram payloads normalize on load") {
  // Rows arrive scrambled and with an integer birth; loading sorts them.
  json j;
  j["descriptor"] = "apd";
  j["value"] = json::array({json::array({"2", "2", 0}), json::array({1, "inf", 0})});
  DescriptorValue v = descriptor_value_from_json(j);
  const Diagram& d = std::get<Diagram>(v.payload);
  REQUIRE(d.points.size() == 2);
  CHECK(d.points[0].birth == rat_of(1));
  CHECK_FALSE(d.points[0].death.has_value());
  CHECK(d.points[1].birth == rat_of(2));
  CHECK(d.points[1].death == rat_of(2));
  CHECK(d.verbose);

  CHECK_THROWS_AS(diagram_from_json(json("x"), false), std::invalid_argument);
  CHECK_THROWS_AS(diagram_from_json(json::array({json::array({"1", "2"})}), false),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      diagram_from_json(json::array({json::array({"1", "2", "zero"})}), false),
      std::invalid_argument);
}

TEST_CASE("step payloads enforce their track width") {
  StepFunction s = step_from_json(json::array({json::array({"1", 2}), json::array({"0", 1})}), 1);
  REQUIRE(s.events.size() == 2);
  CHECK(s.events[0].first == rat_of(0));
  CHECK(s.events[0].second == std::vector<long>{1});
  CHECK(s.events[1].first == rat_of(1));

  CHECK_THROWS_AS(step_from_json(json::array({json::array({"0", 1})}), 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(step_from_json(json::array({json::array({"0", 1, 2})}), 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(step_from_json(json::array({json::array({"0", "one"})}), 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(step_from_json(json(7), 1), std::invalid_argument);
}

TEST_CASE("descriptor files must name a known descriptor") {
  json j;
  j["descriptor"] = "novelty";
  j["value"] = json::array();
  CHECK_THROWS_AS(descriptor_value_from_json(j), std::invalid_argument);
  CHECK_THROWS_AS(descriptor_value_from_json(json::array()), std::invalid_argument);
  json missing;
  missing["descriptor"] = "pd";
  CHECK_THROWS_AS(descriptor_value_from_json(missing), std::invalid_argument);
}

TEST_CASE("faithfulness reports carry the relative marker") {
  SimplicialComplex k = square_a();
  AdversaryUniverse u = universe_from_list(k, {square_b()});
  FaithfulnessReport yes = relative_faithful(DescriptorKind::APD, k, {v2(1, 0)}, u);
  json j = faithfulness_report_to_json(yes);
  CHECK(j["relative"] == true);
  CHECK(j["faithful"] == yes.faithful);
  CHECK(j.contains("indistinguishable"));
  CHECK(j.contains("separating_parameter"));

  FaithfulnessReport no = relative_faithful(DescriptorKind::D0, k, {v2(1, 0)}, u);
  json jn = faithfulness_report_to_json(no);
  CHECK(jn["relative"] == true);
  CHECK(jn["faithful"] == false);
  CHECK(jn["indistinguishable"].size() == 1);
}

TEST_CASE("cardinality bounds print their symbols") {
  CHECK(bound_to_json(CardinalityBound::finite(0)) == json("0"));
  CHECK(bound_to_json(CardinalityBound::finite(5)) == json("5"));
  CHECK(bound_to_json(CardinalityBound::countable()) == json("aleph0"));
  CHECK(bound_to_json(CardinalityBound::uncountable()) == json("aleph1"));
  CHECK(bound_to_json(CardinalityBound::top()) == json("alephTop"));
}

TEST_CASE("minimal faithful set results serialize with and without witnesses") {
  const std::vector<Vec> candidates{v2(1, 0), v2(0, 1)};
  MinFaithfulResult found;
  found.size = CardinalityBound::finite(2);
  found.witness = candidates;
  found.subsets_tested = 4;
  json j = min_faithful_to_json(found, candidates);
  CHECK(j["relative"] == true);
  CHECK(j["size"] == json("2"));
  CHECK(j["subsets_tested"] == 4);
  CHECK(j["candidate_count"] == 2);
  CHECK(j["witness"] == directions_to_json(candidates));

  MinFaithfulResult none;
  none.size = CardinalityBound::top();
  none.subsets_tested = 4;
  json jn = min_faithful_to_json(none, candidates);
  CHECK(jn["relative"] == true);
  CHECK(jn["size"] == json("alephTop"));
  CHECK(jn["witness"].is_null());
}

TEST_CASE("concise condition reports serialize every flag") {
  SimplicialComplex k = single_edge();
  ConciseConditionsReport r =
      check_concise_conditions(k, {v2(1, 0), v2(-1, 0), v2(0, 1)});
  json j = concise_report_to_json(r);
  CHECK(j["verdict"] == r.verdict);
  CHECK(j["size_ok"] == r.size_ok);
  CHECK(j["count_conditions_ok"] == r.count_conditions_ok);
  CHECK(j["envelope_dims_ok"] == r.envelope_dims_ok);
  REQUIRE(j["per_simplex"].size() == r.per_simplex.size());
  const json& row = j["per_simplex"][0];
  CHECK(row["simplex"] == json(r.per_simplex[0].simplex.v));
  CHECK(row["envelope_dim"] == r.per_simplex[0].envelope_dim);
  CHECK(row.contains("perpendicular_count"));
  CHECK(row.contains("pairwise_independent_ok"));
}

TEST_CASE("circular regions serialize their arcs exactly") {
  json jr = ray_to_json(make_ray(Rat(0), Rat(-1)));
  CHECK(jr == json::array({"0", "-1"}));

  Arc a = make_arc(make_ray(Rat(1), Rat(0)), make_ray(Rat(0), Rat(1)), true, false);
  json ja = arc_to_json(a);
  CHECK(ja["start"] == json::array({"1", "0"}));
  CHECK(ja["end"] == json::array({"0", "1"}));
  CHECK(ja["closed_start"] == true);
  CHECK(ja["closed_end"] == false);

  CircularRegion r = make_region({a});
  CHECK(region_to_json(r)["arcs"].size() == 1);

  ClothespinRegions regions = clothespin_regions(standard_clothespin());
  json jc = clothespin_regions_to_json(regions);
  for (const char* key : {"r1", "r2", "r3", "r4", "w"}) {
    CHECK(jc.contains(key));
    CHECK(jc[key]["arcs"].size() == 2);
  }
  CHECK(jc["w"]["arcs"][0]["closed_start"] == true);
  CHECK(jc["r3"]["arcs"][0]["closed_start"] == false);
}

TEST_CASE("universe specs parse or explain themselves") {
  UniverseSpec e = parse_universe_spec("enumerate:maxdim=2");
  CHECK(e.kind == UniverseSpec::Kind::Enumerate);
  CHECK(e.max_dim == 2);
  UniverseSpec l = parse_universe_spec("list:adversaries.json");
  CHECK(l.kind == UniverseSpec::Kind::List);
  CHECK(l.path == "adversaries.json");

  CHECK_THROWS_AS(parse_universe_spec("enumerate:maxdim=two"), std::invalid_argument);
  CHECK_THROWS_AS(parse_universe_spec("enumerate:maxdim=2extra"), std::invalid_argument);
  CHECK_THROWS_AS(parse_universe_spec("list:"), std::invalid_argument);
  CHECK_THROWS_AS(parse_universe_spec("everything"), std::invalid_argument);
}

TEST_CASE("universes load from enumeration specs and list files") {
  SimplicialComplex k = square_a();
  UniverseSpec e = parse_universe_spec("enumerate:maxdim=1");
  AdversaryUniverse u = load_universe(e, k, 1u << 20);
  CHECK(u.complexes.size() == 64);
  CHECK(u.reference_index >= 0);
  CHECK_THROWS_AS(load_universe(e, k, 16), std::length_error);

  json list = json::array({complex_to_json(square_b())});
  save_json(list, kTmpUniverse);
  UniverseSpec l = parse_universe_spec("list:" + kTmpUniverse);
  AdversaryUniverse ul = load_universe(l, k, 1u << 20);
  CHECK(ul.complexes.size() == 2);
  CHECK(complexes_equal(ul.complexes[ul.reference_index], k));

  save_json(json::object(), kTmpBadUniverse);
  CHECK_THROWS_AS(load_universe(parse_universe_spec("list:" + kTmpBadUniverse), k, 1u << 20),
                  std::invalid_argument);
  std::remove(kTmpMissing.c_str());
  CHECK_THROWS_AS(load_universe(parse_universe_spec("list:" + kTmpMissing), k, 1u << 20),
                  std::runtime_error);
  std::remove(kTmpUniverse.c_str());
  std::remove(kTmpBadUniverse.c_str());
}

TEST_CASE("json files save and load byte-for-byte") {
  json j = complex_to_json(fan_graph());
  save_json(j, kTmpComplex);
  json back = load_json(kTmpComplex);
  CHECK(back == j);
  CHECK(json_to_string(back) == json_to_string(j));
  CHECK(complexes_equal(complex_from_json(back), fan_graph()));
  std::remove(kTmpComplex.c_str());

  std::remove(kTmpMissing.c_str());
  CHECK_THROWS_AS(load_json(kTmpMissing), std::runtime_error);
  CHECK_THROWS_AS(save_json(j, "/tmp/no_such_dir_8841/x.json"), std::runtime_error);
  CHECK_THROWS_AS(parse_json_text("{\"unterminated\": "), std::invalid_argument);
  CHECK(parse_json_text("[1, 2]") == json::array({1, 2}));
}

TEST_CASE("csv exports are exact text") {
  Diagram d;
  d.points.push_back(DiagramPoint{rat_of(0), std::nullopt, 0});
  d.points.push_back(DiagramPoint{rat_of(1, 2), rat_of(3, 2), 1});
  normalize_diagram(d);
  CHECK(csv_diagram(d) == "birth,death,degree\n0,inf,0\n1/2,3/2,1\n");

  StepFunction s = normalize_step(2, {{rat_of(0), {1, 0}}, {rat_of(1), {2, 1}}});
  CHECK(csv_steps({{"counts", s}}) ==
        "# counts\nheight,value0,value1\n0,1,0\n1,2,1\n");

  SimplicialComplex edge = single_edge();
  const Vec up = v2(0, 1);
  CHECK(render_descriptor(compute(edge, DescriptorKind::PD, up), "csv") ==
        "birth,death,degree\n1,inf,0\n");
  CHECK(render_descriptor(compute(edge, DescriptorKind::APD, up), "csv") ==
        "birth,death,degree\n1,inf,0\n2,2,0\n");
  CHECK(render_descriptor(compute(edge, DescriptorKind::DV, up), "csv") ==
        "lowest_vertex\n1,1\nvertex_count,2\n");
  CHECK(render_descriptor(compute(edge, DescriptorKind::D0, up), "csv") == "value\n0\n");
  CHECK(render_descriptor(compute(edge, DescriptorKind::DR, edge.vertices[0]), "csv") ==
        "member\ntrue\n");
  CHECK(render_descriptor(compute(edge, DescriptorKind::DR, v2(9, 9)), "csv") ==
        "member\nfalse\n");
}

TEST_CASE("svg exports are well-formed and refuse non-plottable kinds") {
  SimplicialComplex k = fan_graph();
  const Vec dir = v2(1, 0);

  std::string pd_svg = render_descriptor(compute(k, DescriptorKind::PD, dir), "svg");
  CHECK(starts_with(pd_svg, "<svg xmlns"));
  CHECK(ends_with(pd_svg, "</svg>\n"));
  CHECK(pd_svg.find("<circle") != std::string::npos);

  std::string bc_svg = render_descriptor(compute(k, DescriptorKind::BC, dir), "svg");
  CHECK(starts_with(bc_svg, "<svg xmlns"));
  CHECK(bc_svg.find("<polyline") != std::string::npos);
  CHECK(bc_svg.find("deg0") != std::string::npos);

  std::string ecc_svg = render_descriptor(compute(k, DescriptorKind::ECC, dir), "svg");
  CHECK(ecc_svg.find("<polyline") != std::string::npos);

  ClothespinRegions regions = clothespin_regions(standard_clothespin());
  std::string region_svg = svg_regions({{"W", regions.w}, {"R1", regions.r1}});
  CHECK(starts_with(region_svg, "<svg xmlns"));
  CHECK(region_svg.find("<path") != std::string::npos);
  CHECK(region_svg.find(">W<") != std::string::npos);

  CHECK_THROWS_WITH_AS(render_descriptor(compute(k, DescriptorKind::DV, dir), "svg"),
                       "no plot rendering for vertex summaries", std::invalid_argument);
  CHECK_THROWS_WITH_AS(render_descriptor(compute(k, DescriptorKind::D0, dir), "svg"),
                       "no plot rendering for constant descriptors", std::invalid_argument);
  CHECK_THROWS_WITH_AS(render_descriptor(compute(k, DescriptorKind::DR, k.vertices[0]), "svg"),
                       "no plot rendering for membership indicators", std::invalid_argument);
  CHECK_THROWS_WITH_AS(render_descriptor(compute(k, DescriptorKind::PD, dir), "png"),
                       "unknown export format: png", std::invalid_argument);
}
