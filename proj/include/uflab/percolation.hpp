#pragma once

#include <cstdint>

#include "uflab/growth.hpp"
#include "uflab/lattice.hpp"
#include "uflab/noise.hpp"

namespace uflab {

// Populates each bond of an L x L open square lattice independently with
// rate p; true when a cluster spans the top row to the bottom row.
bool bond_percolation_trial(int L, double p, uint64_t seed);

// Toric: true iff some erasure component wraps a spatial axis (offset
// labelling; time never counts). Planar: true iff a component of real
// vertices touches both open columns.
bool erasure_percolates(const Lattice& lat, const Erasure& erasure);

// Erasure estimate from a matching: every vertex within graph distance
// floor(w/2) of either endpoint of a pair of weight w, plus every edge with
// both endpoints included.
Erasure mwpm_ball_erasure(const Lattice& lat, const Syndrome& syndrome);

// Matching-based percolation estimate: true when the ball erasure of some
// single matched pair percolates on its own. Each pair approximates one
// erasure tree; distinct trees are never conflated, unlike a check on the
// union of all balls.
bool mwpm_ball_percolates(const Lattice& lat, const Syndrome& syndrome);

}  // namespace uflab
