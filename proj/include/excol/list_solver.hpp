#pragma once

#include <optional>

#include "excol/coloring.hpp"
#include "excol/graph.hpp"

namespace excol {

// Exact backtracking list-coloring: most-constrained vertex first, lowest
// color id first, so runs are deterministic. Returned colorings are checked
// for membership and properness before they leave.
std::optional<PartialColoring> solve_list_backtracking(const ListInstance& inst);

// Same decision through the trimmed pipeline's augmented-graph route; the
// declared k is the maximum list size.
bool solve_list_via_augmentation(const ListInstance& inst, int delta);

}  // namespace excol
