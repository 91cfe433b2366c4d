#pragma once

// JSON serialization for complexes, directions, descriptor values, reports,
// and circular regions, plus file helpers.  All rational numbers travel as
// exact "p/q" strings (plain integers are accepted on input); nothing is
// ever converted to floating point.  Output is byte-deterministic: nlohmann
// json objects keep keys sorted, and dumping uses a fixed indent.

#include <string>
#include <vector>

#include "json.hpp"

#include "fdesc/complex.hpp"
#include "fdesc/descriptors.hpp"
#include "fdesc/faithfulness.hpp"
#include "fdesc/geometry.hpp"
#include "fdesc/observability.hpp"
#include "fdesc/rational.hpp"

namespace fdesc {

using json = nlohmann::json;

// --- rationals and vectors ---------------------------------------------

json rat_to_json(const Rat& r);
// Accepts a string "p/q" (or "p") or a JSON integer.
Rat rat_from_json(const json& j);

json vec_to_json(const Vec& v);
Vec vec_from_json(const json& j);

// Parses a CLI vector argument "a/b,c/d[,...]" into a rational vector.
Vec parse_vector_arg(const std::string& text);

// --- complexes -----------------------------------------------------------

// {"ambient_dim": d, "vertices": [["p/q", ...], ...], "simplices": [[i, ...], ...]}
// Simplices may omit faces; the closure is computed on load and the result
// is checked structurally.
json complex_to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const json& j);

// --- directions ----------------------------------------------------------

// A directions file is a JSON array of rational vectors, e.g.
// [["1","0"],["-3/5","4/5"]].
json directions_to_json(const std::vector<Vec>& dirs);
std::vector<Vec> directions_from_json(const json& j);

// --- descriptor values ---------------------------------------------------

// Diagrams serialize as arrays of [birth, death|"inf", degree]; step
// functions as arrays of [height, value, ...].  The top-level object is
// {"descriptor": <name>, "value": <payload>} so files are self-describing.
json diagram_to_json(const Diagram& d);
Diagram diagram_from_json(const json& j, bool verbose);

json step_to_json(const StepFunction& s);
StepFunction step_from_json(const json& j, int width);

json descriptor_value_to_json(const DescriptorValue& v);
DescriptorValue descriptor_value_from_json(const json& j);

// --- reports -------------------------------------------------------------

json faithfulness_report_to_json(const FaithfulnessReport& r);
json bound_to_json(const CardinalityBound& b);
json min_faithful_to_json(const MinFaithfulResult& r,
                          const std::vector<Vec>& candidates);
json concise_report_to_json(const ConciseConditionsReport& r);

// --- circular regions ----------------------------------------------------

json ray_to_json(const Ray& r);
json arc_to_json(const Arc& a);
json region_to_json(const CircularRegion& r);
json clothespin_regions_to_json(const ClothespinRegions& r);

// --- universes -----------------------------------------------------------

struct UniverseSpec {
  enum class Kind { Enumerate, List };
  Kind kind = Kind::Enumerate;
  int max_dim = 1;       // for Enumerate
  std::string path;      // for List
};

// Accepts "enumerate:maxdim=N" or "list:FILE".
UniverseSpec parse_universe_spec(const std::string& text);

// Builds the adversary universe for k: either every subcomplex over k's
// vertex set up to max_dim, or the complexes listed in a JSON array file.
AdversaryUniverse load_universe(const UniverseSpec& spec,
                                const SimplicialComplex& k,
                                std::size_t budget);

// --- files ---------------------------------------------------------------

std::string json_to_string(const json& j);
void save_json(const json& j, const std::string& path);
json load_json(const std::string& path);
json parse_json_text(const std::string& text);

}  // namespace fdesc
