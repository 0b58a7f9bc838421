#pragma once

#include <cstddef>

namespace spectop {

struct Limits {
    std::size_t max_carrier = 64;                  // lattice elements; hard ceiling is 64
    std::size_t max_subspace_points = 16;          // exhaustive subspace enumeration
    std::size_t max_homeomorphism_points = 10;
    std::size_t max_retraction_candidates = 1'000'000;
    std::size_t max_semiring_carrier = 16;
};

}  // namespace spectop
