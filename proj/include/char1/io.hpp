#pragma once

#include <string>
#include <utility>
#include <vector>

#include "char1/elliptic.hpp"
#include "char1/monoid.hpp"

namespace char1::io {

// All parse errors raise ValidationError naming the offending field.

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

/// {"points": [{"rank": r, "torsion": [m1, m2, ...]}, ...]}
SchemeData parse_scheme_json(const std::string& text);
SchemeData read_scheme_json(const std::string& path);
std::string scheme_to_json(const SchemeData& x);

/// {"a": [a1, a2, a3, a4, a6]}; entries may be JSON integers or decimal strings.
CurveModel parse_curve_json(const std::string& text);
CurveModel read_curve_json(const std::string& path);

/// {"size": n, "zero": z, "one": u, "table": [n*n entries, row-major]}
PointedMonoid parse_monoid_json(const std::string& text);
std::string monoid_to_json(const PointedMonoid& m);

/// {"monoids": [{"name": ..., <monoid fields>}, ...]}
std::vector<std::pair<std::string, PointedMonoid>> read_monoid_corpus(const std::string& path);

}  // namespace char1::io
