#pragma once

#include <string>

#include "ordeval/index.hpp"

namespace ordeval {

// Self-contained SVG with both step functions over [0, 1): f_mod (true
// labels in sorted order) and f_exact (the block-constant predicted class).
// Each function is one polyline whose points trace the N plateaus, with
// ids "f-mod" and "f-exact" so tests and tools can read the geometry back.
std::string render_step_function_svg(const SortedClassification& sc);

} // namespace ordeval
