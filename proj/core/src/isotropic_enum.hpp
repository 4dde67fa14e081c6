#pragma once

#include <cstdint>
#include <vector>

#include "enriques/lattice.hpp"

namespace enriques::detail {

// All isotropic x (primitive or not, either sign of effectivity) with pair(x, r) == q.
// Requires square(r) > 0.
std::vector<Class> isotropic_solutions(const Class& r, std::int64_t q);

}  // namespace enriques::detail
