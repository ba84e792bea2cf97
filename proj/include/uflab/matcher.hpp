#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "uflab/lattice.hpp"
#include "uflab/noise.hpp"
#include "uflab/peeler.hpp"

namespace uflab {

// Complete graph over defects with shortest-path weights; planar defects
// additionally carry their distance to the nearest open boundary.
struct DefectGraph {
    std::vector<int32_t> defects;
    std::vector<std::vector<int32_t>> weight;
    std::vector<int32_t> boundary_weight;  // planar only
    bool planar = false;
};

// Pairs are indices into DefectGraph::defects; a second index of -1 is a
// boundary termination (planar). Every defect appears exactly once.
struct Matching {
    std::vector<std::pair<int32_t, int32_t>> pairs;
    std::vector<int32_t> weights;
    int64_t total_weight = 0;
};

DefectGraph build_defect_graph(const Lattice& lat, const Syndrome& syndrome);

// Exact minimum-weight perfect matching by subset-memoised pairing; feasible
// up to 16 defects. Deterministic tie-break (lexicographically smallest pair
// set).
Matching mwpm_exact(const DefectGraph& graph);

// Greedy nearest-neighbour matching followed by 2-opt pair-swap descent.
// Scalable stand-in where the exact matcher is infeasible; never beats it.
Matching mwpm_local(const DefectGraph& graph);

// Deterministic per-axis staircase path edges for each matched pair (wrap-
// minimal x, then y, then t); boundary terminations route to the nearest
// open side.
Correction matching_to_correction(const Lattice& lat, const DefectGraph& graph,
                                  const Matching& matching);

// Full MWPM reference decode: exact matcher when defects <= 16, else local.
Correction decode_mwpm(const Lattice& lat, const Syndrome& syndrome);

}  // namespace uflab
