#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fdesc/persistence.hpp"

namespace fdesc {

/* The descriptor family. Direction-parameterized: PD (concise persistence
 * diagram), APD (verbose diagram, diagonal kept), BC (Betti curves), ABC
 * (signed simplex-count curves), ECC (Euler characteristic curve), AECC
 * (parity simplex-count curve), DV (lowest-vertex summary), D0 (constant
 * zero). Point-parameterized: DR (membership indicator). */
enum class DescriptorKind { PD, APD, BC, ABC, ECC, AECC, DV, D0, DR };

const char* descriptor_name(DescriptorKind kind);
std::optional<DescriptorKind> descriptor_from_name(const std::string& name);
bool descriptor_param_is_point(DescriptorKind kind);
bool descriptor_is_verbose(DescriptorKind kind);

struct DiagramPoint {
  Rat birth;
  std::optional<Rat> death;  // nullopt encodes +infinity
  int degree = 0;

  bool operator==(const DiagramPoint&) const = default;
};

/* Multiset of birth/death points; normalized to a canonical sort. */
struct Diagram {
  bool verbose = false;
  std::vector<DiagramPoint> points;

  bool operator==(const Diagram&) const = default;
};

void normalize_diagram(Diagram& d);

/* Piecewise-constant function of the height, encoded by its change points:
 * value is width zeros before the first event, and events carry strictly
 * increasing heights with the value holding from each height (inclusive)
 * onward. Consecutive values always differ. */
struct StepFunction {
  int width = 1;
  std::vector<std::pair<Rat, std::vector<long>>> events;

  bool operator==(const StepFunction&) const = default;
};

StepFunction normalize_step(int width, std::vector<std::pair<Rat, std::vector<long>>> raw);
std::vector<long> step_value_at(const StepFunction& f, const Rat& t);
std::vector<long> step_final_value(const StepFunction& f);

/* One step function per homological degree; identically-zero degrees are
 * dropped so equal families compare equal structurally. */
struct BettiFamily {
  bool verbose = false;
  std::map<int, StepFunction> by_degree;

  bool operator==(const BettiFamily&) const = default;
};

/* Lowest-vertex summary: coordinates of every height-minimizing vertex
 * (sorted) plus the total vertex count. */
struct VertexSummary {
  std::vector<Vec> lowest;
  long vertex_count = 0;

  bool operator==(const VertexSummary&) const = default;
};

struct DescriptorValue {
  DescriptorKind kind = DescriptorKind::PD;
  std::variant<Diagram, BettiFamily, StepFunction, VertexSummary, long, bool> payload;

  bool operator==(const DescriptorValue&) const = default;
};

/* Direct computations (each one its own route; reductions are tested
 * against these, so BC/ECC deliberately avoid the pairing). The tie rule
 * picks the order of equal-height simplices; every choice must yield the
 * same value (order independence is a tested property). */
Diagram compute_diagram(const SimplicialComplex& k, const Direction& s, bool verbose,
                        const TieRule& tie = {});
BettiFamily compute_betti_curves(const SimplicialComplex& k, const Direction& s);
BettiFamily compute_signed_count_curves(const SimplicialComplex& k, const Direction& s,
                                        const TieRule& tie = {});
StepFunction compute_euler_curve(const SimplicialComplex& k, const Direction& s);
StepFunction compute_parity_count_curve(const SimplicialComplex& k, const Direction& s);
VertexSummary compute_vertex_summary(const SimplicialComplex& k, const Direction& s);

/* Unified entry point: param is a direction for every kind except DR,
 * where it is a query point. */
DescriptorValue compute(const SimplicialComplex& k, DescriptorKind kind, const Vec& param);

std::vector<DescriptorValue> descriptor_set(const SimplicialComplex& k, DescriptorKind kind,
                                            const std::vector<Vec>& params);

/* Structural equality of two values of the same kind; throws
 * std::invalid_argument when the kinds differ. */
bool equal(const DescriptorValue& a, const DescriptorValue& b);

std::string descriptor_value_str(const DescriptorValue& v);

}  // namespace fdesc
