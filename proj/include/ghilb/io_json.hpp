#pragma once

#include "ghilb/chamber.hpp"

// vendored single-header json
#include "json.hpp"

namespace ghilb {

using ojson = nlohmann::ordered_json;

// group + vertices + edges + triangles
ojson complex_json(const Complex& X);
// adds characters, ratios and vertex marks
ojson recipe_json(const Complex& X, const Marking& M);
// adds per-edge puzzles, the inequality table and the wall list
ojson walls_json(const Complex& X, const Marking& M, Unlocker& U, const WallReport& rep);

std::string dump_json(const ojson& j);

// parses a document produced by the emitters above and rebuilds it field by
// field; the result must serialize to the identical byte string
ojson rebuild_json(const ojson& j);

}  // namespace ghilb
