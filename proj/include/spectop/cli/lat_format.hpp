#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spectop/lattice.hpp"

namespace spectop::cli {

// Contents of a .lat file:
//   elements: a b c ...
//   leq: a<b b<c ...
//   bottom: a
//   top: c
//   x: b          (optional)
// '#' starts a comment; names match [A-Za-z0-9_]+.
struct LatticeFile {
    std::vector<std::string> elements;
    std::vector<std::pair<std::string, std::string>> pairs;
    std::string bottom;
    std::string top;
    std::optional<std::vector<std::string>> x;
};

LatticeFile parse_lattice_text(std::string_view text);
LatticeFile read_lattice_file(const std::string& path);

BoundedLattice to_lattice(const LatticeFile& file);

}  // namespace spectop::cli
