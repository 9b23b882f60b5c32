#pragma once

#include <string>

#include "polyia/animal.hpp"

namespace polyia {

struct RenderOptions {
  bool dual = false;  // overlay the dual graph (centroids + labeled edges)
};

// Schematic SVG of the animal under the equilateral embedding. Output is
// deterministic for a fixed input (fixed-precision coordinates, stable
// element order).
std::string render_svg(const Polyiamond& p, const RenderOptions& opt = {});

}  // namespace polyia
