#pragma once

#include "ghilb/recipe.hpp"

namespace ghilb {

// Scalable-vector drawing of the junior simplex: regular-triangle sides
// bold, interior edges dashed, characters boxed at edge midpoints and
// interior vertices.
std::string emit_svg(const Complex& X, const Marking* M);

// The same picture as TikZ source.
std::string emit_tikz(const Complex& X, const Marking* M);

}  // namespace ghilb
