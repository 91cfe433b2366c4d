#include "fdesc/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fdesc {

json rat_to_json(const Rat& r) { return json(rat_str(r)); }

Rat rat_from_json(const json& j) {
  if (j.is_string()) return rat_parse(j.get<std::string>());
  if (j.is_number_integer()) return rat_of(j.get<long>());
  throw std::invalid_argument("malformed rational: expected a \"p/q\" string or an integer");
}

json vec_to_json(const Vec& v) {
  json a = json::array();
  for (const Rat& x : v) a.push_back(rat_to_json(x));
  return a;
}

Vec vec_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of rationals");
  Vec v;
  v.reserve(j.size());
  for (const json& x : j) v.push_back(rat_from_json(x));
  return v;
}

Vec parse_vector_arg(const std::string& text) {
  Vec v;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    // Tolerate surrounding spaces; rat_parse rejects anything else.
    const auto b = token.find_first_not_of(" \t");
    const auto e = token.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("malformed rational: ''");
    v.push_back(rat_parse(token.substr(b, e - b + 1)));
  }
  if (v.empty()) throw std::invalid_argument("malformed rational: empty vector");
  return v;
}

json complex_to_json(const SimplicialComplex& k) {
  json j;
  j["ambient_dim"] = k.ambient_dim;
  json verts = json::array();
  for (const Vec& p : k.vertices) verts.push_back(vec_to_json(p));
  j["vertices"] = std::move(verts);
  json simps = json::array();
  for (const Simplex& s : k.simplices) simps.push_back(s.v);
  j["simplices"] = std::move(simps);
  return j;
}

SimplicialComplex complex_from_json(const json& j) {
  if (!j.is_object() || !j.contains("ambient_dim") || !j.contains("vertices") ||
      !j.contains("simplices")) {
    throw std::invalid_argument(
        "complex file must be an object with ambient_dim, vertices, simplices");
  }
  if (!j["ambient_dim"].is_number_integer()) {
    throw std::invalid_argument("ambient_dim must be an integer");
  }
  const int d = j["ambient_dim"].get<int>();
  std::vector<Vec> pts;
  for (const json& p : j["vertices"]) pts.push_back(vec_from_json(p));
  std::vector<Simplex> generators;
  for (const json& s : j["simplices"]) {
    if (!s.is_array()) throw std::invalid_argument("simplices must be arrays of indices");
    Simplex g;
    for (const json& idx : s) {
      if (!idx.is_number_integer()) {
        throw std::invalid_argument("simplex vertex indices must be integers");
      }
      g.v.push_back(idx.get<int>());
    }
    generators.push_back(std::move(g));
  }
  SimplicialComplex k = make_complex(d, std::move(pts), generators);
  // Structural integrity is re-checked on load; general-position findings
  // are advisory (some constructions, like edge subdivisions, break it).
  for (const Violation& v : validate(k)) {
    if (v.kind != ViolationKind::AffinelyDependentVertices) {
      throw std::invalid_argument("invalid complex: " + v.detail);
    }
  }
  return k;
}

json directions_to_json(const std::vector<Vec>& dirs) {
  json a = json::array();
  for (const Vec& d : dirs) a.push_back(vec_to_json(d));
  return a;
}

std::vector<Vec> directions_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("directions file must be a JSON array");
  std::vector<Vec> out;
  for (const json& d : j) out.push_back(vec_from_json(d));
  return out;
}

json diagram_to_json(const Diagram& d) {
  json a = json::array();
  for (const DiagramPoint& p : d.points) {
    json row = json::array();
    row.push_back(rat_to_json(p.birth));
    if (p.death) {
      row.push_back(rat_to_json(*p.death));
    } else {
      row.push_back("inf");
    }
    row.push_back(p.degree);
    a.push_back(std::move(row));
  }
  return a;
}

Diagram diagram_from_json(const json& j, bool verbose) {
  if (!j.is_array()) throw std::invalid_argument("diagram must be an array of points");
  Diagram d;
  d.verbose = verbose;
  for (const json& row : j) {
    if (!row.is_array() || row.size() != 3) {
      throw std::invalid_argument("diagram points are [birth, death, degree]");
    }
    DiagramPoint p;
    p.birth = rat_from_json(row[0]);
    if (row[1].is_string() && row[1].get<std::string>() == "inf") {
      p.death = std::nullopt;
    } else {
      p.death = rat_from_json(row[1]);
    }
    if (!row[2].is_number_integer()) throw std::invalid_argument("degree must be an integer");
    p.degree = row[2].get<int>();
    d.points.push_back(std::move(p));
  }
  normalize_diagram(d);
  return d;
}

json step_to_json(const StepFunction& s) {
  json a = json::array();
  for (const auto& [h, v] : s.events) {
    json row = json::array();
    row.push_back(rat_to_json(h));
    for (long x : v) row.push_back(x);
    a.push_back(std::move(row));
  }
  return a;
}

StepFunction step_from_json(const json& j, int width) {
  if (!j.is_array()) throw std::invalid_argument("step function must be an array of events");
  std::vector<std::pair<Rat, std::vector<long>>> raw;
  for (const json& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != width + 1) {
      throw std::invalid_argument("step events are [height, value...]");
    }
    std::vector<long> v;
    for (int i = 1; i <= width; ++i) {
      if (!row[i].is_number_integer()) {
        throw std::invalid_argument("step values must be integers");
      }
      v.push_back(row[i].get<long>());
    }
    raw.emplace_back(rat_from_json(row[0]), std::move(v));
  }
  return normalize_step(width, std::move(raw));
}

namespace {

json family_to_json(const BettiFamily& fam) {
  json obj = json::object();
  for (const auto& [deg, curve] : fam.by_degree) {
    obj[std::to_string(deg)] = step_to_json(curve);
  }
  return obj;
}

BettiFamily family_from_json(const json& j, bool verbose, int width) {
  if (!j.is_object()) throw std::invalid_argument("curve family must map degree to events");
  BettiFamily fam;
  fam.verbose = verbose;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const int deg = std::stoi(it.key());
    StepFunction curve = step_from_json(it.value(), width);
    if (!curve.events.empty()) fam.by_degree.emplace(deg, std::move(curve));
  }
  return fam;
}

json summary_to_json(const VertexSummary& vs) {
  json j;
  json lows = json::array();
  for (const Vec& p : vs.lowest) lows.push_back(vec_to_json(p));
  j["lowest"] = std::move(lows);
  j["vertex_count"] = vs.vertex_count;
  return j;
}

VertexSummary summary_from_json(const json& j) {
  if (!j.is_object() || !j.contains("lowest") || !j.contains("vertex_count")) {
    throw std::invalid_argument("vertex summary needs lowest and vertex_count");
  }
  VertexSummary vs;
  for (const json& p : j["lowest"]) vs.lowest.push_back(vec_from_json(p));
  vs.vertex_count = j["vertex_count"].get<long>();
  return vs;
}

}  // namespace

json descriptor_value_to_json(const DescriptorValue& v) {
  json j;
  j["descriptor"] = descriptor_name(v.kind);
  switch (v.kind) {
    case DescriptorKind::PD:
    case DescriptorKind::APD:
      j["value"] = diagram_to_json(std::get<Diagram>(v.payload));
      break;
    case DescriptorKind::BC:
    case DescriptorKind::ABC:
      j["value"] = family_to_json(std::get<BettiFamily>(v.payload));
      break;
    case DescriptorKind::ECC:
    case DescriptorKind::AECC:
      j["value"] = step_to_json(std::get<StepFunction>(v.payload));
      break;
    case DescriptorKind::DV:
      j["value"] = summary_to_json(std::get<VertexSummary>(v.payload));
      break;
    case DescriptorKind::D0:
      j["value"] = std::get<long>(v.payload);
      break;
    case DescriptorKind::DR:
      j["value"] = std::get<bool>(v.payload);
      break;
  }
  return j;
}

DescriptorValue descriptor_value_from_json(const json& j) {
  if (!j.is_object() || !j.contains("descriptor") || !j.contains("value")) {
    throw std::invalid_argument("descriptor value needs descriptor and value fields");
  }
  const auto kind = descriptor_from_name(j["descriptor"].get<std::string>());
  if (!kind) {
    throw std::invalid_argument("unknown descriptor: " + j["descriptor"].get<std::string>());
  }
  DescriptorValue v;
  v.kind = *kind;
  const json& val = j["value"];
  switch (*kind) {
    case DescriptorKind::PD:
      v.payload = diagram_from_json(val, false);
      break;
    case DescriptorKind::APD:
      v.payload = diagram_from_json(val, true);
      break;
    case DescriptorKind::BC:
      v.payload = family_from_json(val, false, 1);
      break;
    case DescriptorKind::ABC:
      v.payload = family_from_json(val, true, 2);
      break;
    case DescriptorKind::ECC:
      v.payload = step_from_json(val, 1);
      break;
    case DescriptorKind::AECC:
      v.payload = step_from_json(val, 2);
      break;
    case DescriptorKind::DV:
      v.payload = summary_from_json(val);
      break;
    case DescriptorKind::D0:
      v.payload = val.get<long>();
      break;
    case DescriptorKind::DR:
      v.payload = val.get<bool>();
      break;
  }
  return v;
}

json faithfulness_report_to_json(const FaithfulnessReport& r) {
  json j;
  j["relative"] = true;
  j["faithful"] = r.faithful;
  j["indistinguishable"] = r.indistinguishable;
  json sep = json::object();
  for (const auto& [idx, p] : r.separating_parameter) {
    sep[std::to_string(idx)] = vec_to_json(p);
  }
  j["separating_parameter"] = std::move(sep);
  return j;
}

json bound_to_json(const CardinalityBound& b) { return json(bound_str(b)); }

json min_faithful_to_json(const MinFaithfulResult& r, const std::vector<Vec>& candidates) {
  json j;
  j["relative"] = true;
  j["size"] = bound_to_json(r.size);
  j["subsets_tested"] = r.subsets_tested;
  j["candidate_count"] = candidates.size();
  if (r.witness) {
    j["witness"] = directions_to_json(*r.witness);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

json concise_report_to_json(const ConciseConditionsReport& r) {
  json j;
  json rows = json::array();
  for (const SimplexConditionReport& row : r.per_simplex) {
    json item;
    item["simplex"] = row.simplex.v;
    item["envelope_dim"] = row.envelope_dim;
    item["envelope_dim_ok"] = row.envelope_dim_ok;
    item["perpendicular_count"] = row.perpendicular_count;
    item["perpendicular_count_ok"] = row.perpendicular_count_ok;
    item["pairwise_independent_ok"] = row.pairwise_independent_ok;
    rows.push_back(std::move(item));
  }
  j["per_simplex"] = std::move(rows);
  j["size_ok"] = r.size_ok;
  j["count_conditions_ok"] = r.count_conditions_ok;
  j["envelope_dims_ok"] = r.envelope_dims_ok;
  j["verdict"] = r.verdict;
  return j;
}

json ray_to_json(const Ray& r) {
  json a = json::array();
  a.push_back(rat_to_json(r.x));
  a.push_back(rat_to_json(r.y));
  return a;
}

json arc_to_json(const Arc& a) {
  json j;
  j["start"] = ray_to_json(a.start);
  j["end"] = ray_to_json(a.end);
  j["closed_start"] = a.closed_start;
  j["closed_end"] = a.closed_end;
  return j;
}

json region_to_json(const CircularRegion& r) {
  json arcs = json::array();
  for (const Arc& a : r.arcs) arcs.push_back(arc_to_json(a));
  json j;
  j["arcs"] = std::move(arcs);
  return j;
}

json clothespin_regions_to_json(const ClothespinRegions& r) {
  json j;
  j["r1"] = region_to_json(r.r1);
  j["r2"] = region_to_json(r.r2);
  j["r3"] = region_to_json(r.r3);
  j["r4"] = region_to_json(r.r4);
  j["w"] = region_to_json(r.w);
  return j;
}

UniverseSpec parse_universe_spec(const std::string& text) {
  UniverseSpec spec;
  const std::string enum_prefix = "enumerate:maxdim=";
  const std::string list_prefix = "list:";
  if (text.rfind(enum_prefix, 0) == 0) {
    spec.kind = UniverseSpec::Kind::Enumerate;
    const std::string num = text.substr(enum_prefix.size());
    try {
      std::size_t used = 0;
      spec.max_dim = std::stoi(num, &used);
      if (used != num.size()) throw std::invalid_argument(num);
    } catch (const std::exception&) {
      throw std::invalid_argument("universe spec needs an integer after maxdim=");
    }
    return spec;
  }
  if (text.rfind(list_prefix, 0) == 0) {
    spec.kind = UniverseSpec::Kind::List;
    spec.path = text.substr(list_prefix.size());
    if (spec.path.empty()) throw std::invalid_argument("universe list spec needs a file path");
    return spec;
  }
  throw std::invalid_argument("universe spec must be enumerate:maxdim=N or list:FILE");
}

AdversaryUniverse load_universe(const UniverseSpec& spec, const SimplicialComplex& k,
                                std::size_t budget) {
  if (spec.kind == UniverseSpec::Kind::Enumerate) {
    return universe_on_vertex_set(k, spec.max_dim, budget);
  }
  const json j = load_json(spec.path);
  if (!j.is_array()) throw std::invalid_argument("universe list file must be a JSON array");
  std::vector<SimplicialComplex> list;
  for (const json& c : j) list.push_back(complex_from_json(c));
  return universe_from_list(k, std::move(list));
}

std::string json_to_string(const json& j) { return j.dump(2) + "\n"; }

void save_json(const json& j, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << json_to_string(j);
  if (!out) throw std::runtime_error("write failed: " + path);
}

json load_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace fdesc
