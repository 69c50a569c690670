#pragma once

#include <string>

#include "bilab/autos.hpp"
#include "bilab/counting.hpp"
#include "bilab/curve.hpp"
#include "bilab/points.hpp"

namespace bilab {

// JSON text with two-space indentation and a fixed key order, so equal
// inputs always serialize to equal bytes.

std::string to_json(const BiPoly& f);
std::string to_json(const SpecialVerdict& v);
std::string to_json(const AutGroup& g);
std::string to_json(const PointSet& s);
std::string to_json(const ValueHistogram& h);
std::string to_json(const QuadrupleReport& r);

BiPoly bipoly_from_json(const std::string& text);
PointSet pointset_from_json(const std::string& text);
/// [["a", "b"], ["c", "d"]] with exact scalar entries.
Mat2Q mat2q_from_json(const std::string& text);

} // namespace bilab
