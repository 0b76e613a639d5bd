#pragma once

#include <string>

#include "fiber2d.hpp"
#include "fibration.hpp"

namespace lf {

// Deterministic SVG renderings. Fibers follow the figure convention: the
// base circle curve in blue, the fiber spheres in green, the surgered curve
// in red. Base diagrams show critical values, the base point, and the
// vanishing paths with their lower-half-plane arcs.
std::string render_fiber_svg(const fiber2d& fiber);
std::string render_base_svg(const fibration_model& model);

} // namespace lf
