#include "uflab/percolation.hpp"

#include <array>
#include <stdexcept>
#include <vector>

#include "uflab/matcher.hpp"
#include "uflab/rng.hpp"

namespace uflab {

bool bond_percolation_trial(int L, double p, uint64_t seed) {
    if (L < 2) throw std::invalid_argument("bond percolation requires L >= 2");
    Rng rng(seed);
    DisjointForest forest(L * L, {true, Compression::full});
    // Fixed bond order: per site, right bond then down bond.
    for (int y = 0; y < L; ++y)
        for (int x = 0; x < L; ++x) {
            int32_t v = y * L + x;
            if (x + 1 < L && rng.bernoulli(p)) forest.unite(v, v + 1);
            if (y + 1 < L && rng.bernoulli(p)) forest.unite(v, v + L);
        }
    std::vector<uint8_t> top_root(L * L, 0);
    for (int x = 0; x < L; ++x) top_root[forest.find(x)] = 1;
    for (int x = 0; x < L; ++x)
        if (top_root[forest.find((L - 1) * L + x)]) return true;
    return false;
}

bool erasure_percolates(const Lattice& lat, const Erasure& erasure) {
    const int L = lat.distance();
    std::vector<std::vector<Neighbour>> adj(lat.total_vertices());
    for (int32_t e : erasure.edges) {
        const Edge& ed = lat.edge(e);
        adj[ed.u].push_back({ed.v, e});
        adj[ed.v].push_back({ed.u, e});
    }

    if (lat.kind() == CodeKind::planar) {
        std::vector<int32_t> comp(lat.total_vertices(), -1);
        std::vector<int32_t> stack;
        int32_t n_comp = 0;
        for (int32_t s : erasure.vertices) {
            if (comp[s] >= 0 || lat.is_virtual(s)) continue;
            int32_t c = n_comp++;
            bool left = false, right = false;
            comp[s] = c;
            stack.push_back(s);
            while (!stack.empty()) {
                int32_t v = stack.back();
                stack.pop_back();
                if (lat.x_of(v) == 0) left = true;
                if (lat.x_of(v) == L - 1) right = true;
                for (const Neighbour& nb : adj[v]) {
                    if (lat.is_virtual(nb.vertex)) continue;
                    if (comp[nb.vertex] < 0) {
                        comp[nb.vertex] = c;
                        stack.push_back(nb.vertex);
                    }
                }
            }
            if (left && right) return true;
        }
        return false;
    }

    // Offset labelling on the torus: a component wraps a spatial axis when
    // two paths to the same vertex disagree by a multiple of L there.
    std::vector<int32_t> ox(lat.total_vertices()), oy(lat.total_vertices());
    std::vector<uint8_t> seen(lat.total_vertices(), 0);
    std::vector<int32_t> stack;
    for (int32_t s : erasure.vertices) {
        if (seen[s]) continue;
        seen[s] = 1;
        ox[s] = oy[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int32_t v = stack.back();
            stack.pop_back();
            for (const Neighbour& nb : adj[v]) {
                const Edge& ed = lat.edge(nb.edge);
                int sign = ed.u == v ? 1 : -1;  // edge direction is +1 along its axis
                int dx = ed.axis == EdgeAxis::x ? sign : 0;
                int dy = ed.axis == EdgeAxis::y ? sign : 0;
                int32_t n = nb.vertex;
                if (!seen[n]) {
                    seen[n] = 1;
                    ox[n] = ox[v] + dx;
                    oy[n] = oy[v] + dy;
                    stack.push_back(n);
                } else if (ox[n] != ox[v] + dx || oy[n] != oy[v] + dy) {
                    return true;
                }
            }
        }
    }
    return false;
}

namespace {

Matching ball_matching(const DefectGraph& g) {
    return g.defects.size() <= 16 ? mwpm_exact(g) : mwpm_local(g);
}

Erasure balls_of(const Lattice& lat, const DefectGraph& g, const Matching& m, int32_t only_pair) {
    std::vector<uint8_t> included(lat.total_vertices(), 0);
    std::vector<int32_t> frontier, next;
    auto grow_ball = [&](int32_t center, int radius) {
        included[center] = 1;
        if (radius == 0) return;
        frontier.assign(1, center);
        std::vector<uint8_t> mark(lat.total_vertices(), 0);
        mark[center] = 1;
        for (int r = 0; r < radius; ++r) {
            next.clear();
            for (int32_t v : frontier)
                for (const Neighbour& nb : lat.neighbours(v))
                    if (!mark[nb.vertex]) {
                        mark[nb.vertex] = 1;
                        included[nb.vertex] = 1;
                        next.push_back(nb.vertex);
                    }
            frontier.swap(next);
        }
    };
    for (size_t pi = 0; pi < m.pairs.size(); ++pi) {
        if (only_pair >= 0 && static_cast<size_t>(only_pair) != pi) continue;
        auto [i, j] = m.pairs[pi];
        int radius = m.weights[pi] / 2;
        grow_ball(g.defects[i], radius);
        if (j >= 0) grow_ball(g.defects[j], radius);
    }

    Erasure est;
    for (int32_t v = 0; v < lat.total_vertices(); ++v)
        if (included[v]) est.vertices.push_back(v);
    for (int32_t e = 0; e < lat.edge_count(); ++e)
        if (included[lat.edge(e).u] && included[lat.edge(e).v]) est.edges.push_back(e);
    return est;
}

}  // namespace

Erasure mwpm_ball_erasure(const Lattice& lat, const Syndrome& syndrome) {
    DefectGraph g = build_defect_graph(lat, syndrome);
    Matching m = ball_matching(g);
    return balls_of(lat, g, m, -1);
}

bool mwpm_ball_percolates(const Lattice& lat, const Syndrome& syndrome) {
    DefectGraph g = build_defect_graph(lat, syndrome);
    Matching m = ball_matching(g);
    for (size_t pi = 0; pi < m.pairs.size(); ++pi) {
        // A pair's balls extend at most 2w along any axis; skip pairs that
        // cannot possibly span or wrap.
        if (2 * m.weights[pi] + 2 < lat.distance()) continue;
        if (erasure_percolates(lat, balls_of(lat, g, m, static_cast<int32_t>(pi)))) return true;
    }
    return false;
}

}  // namespace uflab
