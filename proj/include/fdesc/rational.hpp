#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace fdesc {

/* Exact rational scalar. Values are kept in canonical form: lowest terms,
 * denominator > 0, zero represented as 0/1. All arithmetic is exact. */
using Rat = mpq_class;

/* Parse "p", "p/q", or "-p/q" (decimal digits). Throws std::invalid_argument
 * on malformed text or q == 0. Result is canonical. */
Rat rat_parse(const std::string& text);

/* Canonical text form: "p" when the denominator is 1, else "p/q". */
std::string rat_str(const Rat& r);

Rat rat_of(long num, long den = 1);

int rat_sign(const Rat& r);

/* Coordinate vectors (points and directions share the representation). */
using Vec = std::vector<Rat>;

Rat dot(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec scale(const Rat& c, const Vec& a);
bool is_zero_vec(const Vec& a);

/* True when a and b span the same line (a = c*b for some c != 0). */
bool parallel(const Vec& a, const Vec& b);

/* True when a and b are positive multiples of each other (same ray). */
bool same_ray(const Vec& a, const Vec& b);

std::string vec_str(const Vec& v);

}  // namespace fdesc
