#pragma once

#include <cstdint>
#include <vector>

#include "uflab/growth.hpp"
#include "uflab/lattice.hpp"
#include "uflab/noise.hpp"

namespace uflab {

// Acyclic subset of erasure edges covering all occupied vertices with the
// same component structure.
struct SpanningForest {
    std::vector<int32_t> edges;
};

// Inferred error support, ascending edge ids.
using Correction = std::vector<int32_t>;

// DFS from the lowest occupied vertex id, edges explored in ascending edge
// id order.
SpanningForest spanning_forest(const Lattice& lat, const Erasure& erasure);

// Peeling decoder: prunes leaves, toggling defects upwards; trees containing
// a virtual boundary vertex are rooted there so residual defects terminate on
// the open boundary. The correction's syndrome equals the input syndrome.
Correction peel(const Lattice& lat, const SpanningForest& forest, const Syndrome& syndrome);

}  // namespace uflab
