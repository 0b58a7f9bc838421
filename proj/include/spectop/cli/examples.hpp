#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "spectop/cli/lat_format.hpp"

namespace spectop::cli {

// Names accepted by `analyze --example`.
const std::vector<std::string>& example_names();

// Lattice and X for a built-in example. Throws BadParameters for unknown names.
LatticeFile builtin_example(std::string_view name);

// The underlying figure lattices (no x line).
LatticeFile fig_ln_lattice();
LatticeFile n5_lattice();
LatticeFile not_pm_lattice();
LatticeFile strongly_disjoint_lattice();

}  // namespace spectop::cli
