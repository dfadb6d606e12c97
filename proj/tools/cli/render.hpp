#pragma once

#include <string>
#include <vector>

#include "runpoly/lattice_path.hpp"

namespace runpoly::cli {

// ASCII drawing of the path embedded at the origin. Lattice points are
// '+', horizontal edges carry their label inline, vertical edges carry it
// to the right of the '|'. Rows are returned top to bottom.
std::vector<std::string> render_path(const LabeledPath& path);

}  // namespace runpoly::cli
