#pragma once

#include <cstdint>
#include <vector>

#include "uflab/dsu.hpp"
#include "uflab/lattice.hpp"
#include "uflab/noise.hpp"

namespace uflab {

// A growth-eligible site: an occupied vertex together with an incident edge
// that has not yet filled.
struct Site {
    int32_t vertex;
    int32_t edge;

    bool operator==(const Site&) const = default;
};

struct Erasure {
    std::vector<int32_t> edges;     // fully-grown edges, ascending
    std::vector<int32_t> vertices;  // occupied vertices, ascending
};

struct ClusterStats {
    std::vector<int64_t> sizes;       // occupied vertices per final cluster
    std::vector<int64_t> perimeters;  // boundary list length at termination
    int64_t count = 0;
};

struct MergeEvent {
    int32_t edge;
    int32_t root_a;
    int32_t root_b;     // equal to root_a for an internal (same-set) fusion
    int32_t surviving;
};

// Growth scheduling: all_odd advances every odd cluster each iteration (the
// hardware-parallel variant); smallest_first advances only the smallest odd
// cluster (ties to the lowest root), which keeps erasures as local as the
// syndrome allows.
enum class GrowthSchedule { all_odd, smallest_first };

// Syndrome validation state: grows clusters from defects by half-edges over
// the instrumented forest, with per-cluster boundary lists double-buffered
// against a new edge stack, a fusion edge stack for deferred merges, parity
// tracking and planar confinement.
class GrowthState {
public:
    GrowthState(const Lattice& lat, const Syndrome& syndrome, DsuMode mode,
                GrowthSchedule schedule = GrowthSchedule::all_odd);

    bool done() const;  // no odd unconfined cluster remains

    // One growth iteration over every odd unconfined cluster (ascending root
    // id), followed by the fusion edge stack drain and the boundary-list /
    // new-edge-stack swap. No-op (empty event list) when no cluster is
    // eligible.
    std::vector<MergeEvent> grow_iteration();

    Erasure erasure() const;
    ClusterStats cluster_statistics() const;
    const AccessCounts& counts() const { return dsu_.counts(); }
    int iterations() const { return iterations_; }

    // Test introspection.
    int stage(int32_t e) const { return stage_[e]; }
    bool occupied(int32_t v) const { return occupied_[v] != 0; }
    struct ClusterView {
        int32_t root;
        bool odd;
        bool confined;
        const std::vector<Site>* boundary;
    };
    std::vector<ClusterView> clusters() const;

private:
    struct Cluster {
        int32_t root;
        int64_t size;
        bool odd;
        bool confined;
        bool alive;
        int32_t merged_into;
        std::vector<Site> boundary;
        std::vector<Site> next;  // new edge stack; becomes the next boundary
    };
    struct FusionEntry {
        int32_t edge;
        int32_t from_vertex;
        int32_t cluster;
    };

    int32_t resolve(int32_t cluster_idx) const;
    void occupy_fresh(Cluster& cl, int32_t v);
    void push_eligible_sites(Cluster& cl, int32_t v);

    const Lattice& lat_;
    DisjointForest dsu_;
    std::vector<uint8_t> stage_;
    std::vector<uint8_t> occupied_;
    std::vector<Cluster> clusters_;
    std::vector<int32_t> root_cluster_;  // current root id -> cluster index, else -1
    std::vector<FusionEntry> fes_;
    GrowthSchedule schedule_;
    int iterations_ = 0;
};

struct ValidationResult {
    Erasure erasure;
    ClusterStats stats;
    AccessCounts counts;
    int iterations = 0;
};

// Runs growth to termination: every cluster even, or confined on the planar
// boundary. Rejects odd-parity toric syndromes.
ValidationResult validate_syndrome(const Lattice& lat, const Syndrome& syndrome, DsuMode mode,
                                   GrowthSchedule schedule = GrowthSchedule::all_odd);

}  // namespace uflab
