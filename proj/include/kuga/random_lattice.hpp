#pragma once

#include <cstdint>

#include "kuga/filtration.hpp"

namespace kuga {

// Seeded generator of HN-coherent test lattices: random layered containment
// with two degree coordinates (a base slope and one perturbation direction).
// Candidates that draw a coherence diagnostic or an exact slope tie are
// rejected and redrawn, so the result always admits a unique filtration.
// Deterministic for a fixed seed.
SubobjectLattice random_coherent_lattice(std::uint64_t seed, int max_nodes);

} // namespace kuga
