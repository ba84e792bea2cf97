#include "uflab/growth.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace uflab {

namespace {

// Append the shorter list to the longer one, leaving the result in `into`.
void concat_lists(std::vector<Site>& into, std::vector<Site>& from) {
    if (from.empty()) return;
    if (into.size() < from.size()) into.swap(from);
    into.insert(into.end(), from.begin(), from.end());
    from.clear();
}

}  // namespace

GrowthState::GrowthState(const Lattice& lat, const Syndrome& syndrome, DsuMode mode,
                         GrowthSchedule schedule)
    : lat_(lat), dsu_(std::max<int32_t>(lat.total_vertices(), 1), mode), schedule_(schedule) {
    if (lat.kind() == CodeKind::toric && (syndrome.size() % 2) != 0)
        throw std::invalid_argument("toric syndrome must have even parity");
    stage_.assign(lat.edge_count(), 0);
    occupied_.assign(lat.total_vertices(), 0);
    root_cluster_.assign(lat.total_vertices(), -1);
    clusters_.reserve(syndrome.size());
    for (int32_t v : syndrome) {
        if (v < 0 || v >= lat.vertex_count())
            throw std::invalid_argument("syndrome vertex out of range");
        if (occupied_[v]) throw std::invalid_argument("duplicate syndrome vertex");
        occupied_[v] = 1;
        Cluster cl;
        cl.root = v;
        cl.size = 1;
        cl.odd = true;
        cl.confined = false;
        cl.alive = true;
        cl.merged_into = -1;
        clusters_.push_back(std::move(cl));
        int32_t idx = static_cast<int32_t>(clusters_.size()) - 1;
        root_cluster_[v] = idx;
        push_eligible_sites(clusters_[idx], v);
        clusters_[idx].boundary.swap(clusters_[idx].next);
    }
}

bool GrowthState::done() const {
    for (const Cluster& cl : clusters_)
        if (cl.alive && cl.odd && !cl.confined) return false;
    return true;
}

int32_t GrowthState::resolve(int32_t cluster_idx) const {
    while (!clusters_[cluster_idx].alive) cluster_idx = clusters_[cluster_idx].merged_into;
    return cluster_idx;
}

void GrowthState::push_eligible_sites(Cluster& cl, int32_t v) {
    for (const Neighbour& nb : lat_.neighbours(v))
        if (stage_[nb.edge] < 2) cl.next.push_back({v, nb.edge});
}

void GrowthState::occupy_fresh(Cluster& cl, int32_t v) {
    occupied_[v] = 1;
    cl.size += 1;
    if (lat_.is_virtual(v))
        cl.confined = true;  // cluster met the open boundary
    else
        push_eligible_sites(cl, v);
}

std::vector<MergeEvent> GrowthState::grow_iteration() {
    std::vector<std::pair<int32_t, int32_t>> eligible;  // (root, cluster index)
    for (int32_t i = 0; i < static_cast<int32_t>(clusters_.size()); ++i) {
        const Cluster& cl = clusters_[i];
        if (cl.alive && cl.odd && !cl.confined) eligible.push_back({cl.root, i});
    }
    std::vector<MergeEvent> events;
    if (eligible.empty()) return events;
    std::sort(eligible.begin(), eligible.end());
    if (schedule_ == GrowthSchedule::smallest_first && eligible.size() > 1) {
        int32_t best = eligible.front().second;
        for (auto [root, idx] : eligible)
            if (clusters_[idx].size < clusters_[best].size) best = idx;
        eligible = {{clusters_[best].root, best}};
    }

    std::vector<int32_t> touched;
    // Growth phase: each eligible cluster increments the stage of every
    // boundary site's edge; stale sites (edge already full) are dropped.
    for (auto [root, idx] : eligible) {
        Cluster& cl = clusters_[idx];
        for (const Site& s : cl.boundary) {
            if (stage_[s.edge] == 2) continue;
            if (++stage_[s.edge] == 2)
                fes_.push_back({s.edge, s.vertex, idx});
            else
                cl.next.push_back(s);
        }
        cl.boundary.clear();
        touched.push_back(idx);
    }

    // Fusion edge stack drain: each fully-grown edge fuses the clusters at
    // its endpoints, occupying fresh vertices as singleton unions.
    for (const FusionEntry& f : fes_) {
        int32_t live_idx = resolve(f.cluster);
        Cluster& cl = clusters_[live_idx];
        int32_t b = lat_.other_endpoint(f.edge, f.from_vertex);
        bool fresh = !occupied_[b];
        int32_t ra = dsu_.find(f.from_vertex);
        int32_t rb = dsu_.find(b);
        if (ra == rb) {
            events.push_back({f.edge, ra, rb, ra});
            continue;
        }
        int32_t s = dsu_.link(ra, rb);
        events.push_back({f.edge, ra, rb, s});
        int32_t other_idx = root_cluster_[rb];
        root_cluster_[ra] = -1;
        root_cluster_[rb] = -1;
        if (fresh) {
            occupy_fresh(cl, b);
        } else if (other_idx >= 0 && other_idx != live_idx) {
            Cluster& other = clusters_[other_idx];
            cl.size += other.size;
            cl.odd = cl.odd != other.odd;
            cl.confined = cl.confined || other.confined;
            concat_lists(cl.boundary, other.boundary);
            concat_lists(cl.next, other.next);
            other.alive = false;
            other.merged_into = live_idx;
            touched.push_back(other_idx);
        }
        cl.root = s;
        root_cluster_[s] = live_idx;
    }
    fes_.clear();

    // Double-buffer swap: the new edge stack becomes the boundary list.
    for (int32_t idx : touched) {
        Cluster& cl = clusters_[idx];
        if (!cl.alive) continue;
        concat_lists(cl.boundary, cl.next);
    }
    ++iterations_;
    return events;
}

Erasure GrowthState::erasure() const {
    Erasure out;
    for (int32_t e = 0; e < lat_.edge_count(); ++e)
        if (stage_[e] == 2) out.edges.push_back(e);
    for (int32_t v = 0; v < lat_.total_vertices(); ++v)
        if (occupied_[v]) out.vertices.push_back(v);
    return out;
}

ClusterStats GrowthState::cluster_statistics() const {
    std::vector<std::pair<int32_t, int32_t>> live;
    for (int32_t i = 0; i < static_cast<int32_t>(clusters_.size()); ++i)
        if (clusters_[i].alive) live.push_back({clusters_[i].root, i});
    std::sort(live.begin(), live.end());
    ClusterStats stats;
    for (auto [root, idx] : live) {
        stats.sizes.push_back(clusters_[idx].size);
        stats.perimeters.push_back(static_cast<int64_t>(clusters_[idx].boundary.size()));
    }
    stats.count = static_cast<int64_t>(live.size());
    return stats;
}

std::vector<GrowthState::ClusterView> GrowthState::clusters() const {
    std::vector<ClusterView> out;
    for (const Cluster& cl : clusters_)
        if (cl.alive) out.push_back({cl.root, cl.odd, cl.confined, &cl.boundary});
    return out;
}

ValidationResult validate_syndrome(const Lattice& lat, const Syndrome& syndrome, DsuMode mode,
                                   GrowthSchedule schedule) {
    GrowthState state(lat, syndrome, mode, schedule);
    int64_t guard = int64_t(4) * lat.diameter() *
                        std::max<int64_t>(1, static_cast<int64_t>(syndrome.size())) +
                    8;
    while (!state.done()) {
        state.grow_iteration();
        if (state.iterations() > guard)
            throw std::runtime_error("syndrome validation failed to terminate");
    }
    ValidationResult result;
    result.erasure = state.erasure();
    result.stats = state.cluster_statistics();
    result.counts = state.counts();
    result.iterations = state.iterations();
    return result;
}

}  // namespace uflab
