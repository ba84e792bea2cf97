#pragma once

#include <cstdint>
#include <vector>

#include "uflab/lattice.hpp"

namespace uflab {

struct NoiseParams {
    double p = 0.0;  // error rate per (spacelike or dangling) edge
    double q = 0.0;  // measurement error rate per check per round, 3D only
};

// One bit per decoding-graph edge. A set timelike edge between rounds t and
// t+1 is a measurement flip in round t; the final round is measured
// perfectly, so no timelike edges follow it.
struct ErrorSample {
    std::vector<uint8_t> edge_error;
};

// Sorted defect vertex ids.
using Syndrome = std::vector<int32_t>;

ErrorSample sample_errors(const Lattice& lat, NoiseParams params, uint64_t seed);

// Difference syndrome: a vertex is a defect iff an odd number of incident
// marked edges.
Syndrome compute_syndrome(const Lattice& lat, const ErrorSample& errors);

// Syndrome of an arbitrary edge set (corrections, residuals).
Syndrome syndrome_of_edges(const Lattice& lat, const std::vector<int32_t>& edges);

}  // namespace uflab
