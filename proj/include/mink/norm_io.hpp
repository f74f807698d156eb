#pragma once

#include <string>

#include "mink/plane.hpp"

namespace mink {

/// Parses a norm specification from JSON text:
///   {"type":"euclidean"}
///   {"type":"lp","p":4}               (p may be the string "inf")
///   {"type":"polygon","vertices":[[1,0],[0.5,0.866],...]}
///   {"type":"regular_polygon","n":6,"rotation":0}
///   {"type":"inner_product","matrix":[[a,b],[b,c]]}
/// Throws SpecError naming the offending field on invalid input.
NormedPlane load_plane_from_json(const std::string& text);

/// Reads the file and delegates to load_plane_from_json.
NormedPlane load_plane_from_file(const std::string& path);

} // namespace mink
