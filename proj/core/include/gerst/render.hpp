#pragma once

#include <string>

#include "gerst/point.hpp"

namespace gerst {

/// ASCII drawing of a 2-D or 3-D cell set: one grid per a3 layer, a3 = 0
/// first; rows printed top (largest a2) down, '#' for cells, '.' otherwise.
std::string render_layers(int dim, const Cells& cells);

}  // namespace gerst
