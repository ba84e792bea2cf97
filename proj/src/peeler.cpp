#include "uflab/peeler.hpp"

#include <algorithm>
#include <stdexcept>

namespace uflab {

namespace {

// Erasure-restricted adjacency keyed by vertex, edges in ascending id order.
struct EraseAdj {
    std::vector<std::vector<Neighbour>> adj;

    EraseAdj(const Lattice& lat, const std::vector<int32_t>& edges) {
        adj.resize(lat.total_vertices());
        for (int32_t e : edges) {
            const Edge& ed = lat.edge(e);
            adj[ed.u].push_back({ed.v, e});
            adj[ed.v].push_back({ed.u, e});
        }
    }
};

}  // namespace

SpanningForest spanning_forest(const Lattice& lat, const Erasure& erasure) {
    EraseAdj g(lat, erasure.edges);
    std::vector<uint8_t> visited(lat.total_vertices(), 0);
    SpanningForest forest;
    std::vector<int32_t> stack;
    for (int32_t start : erasure.vertices) {
        if (visited[start]) continue;
        visited[start] = 1;
        stack.push_back(start);
        while (!stack.empty()) {
            int32_t v = stack.back();
            stack.pop_back();
            for (const Neighbour& nb : g.adj[v])
                if (!visited[nb.vertex]) {
                    visited[nb.vertex] = 1;
                    forest.edges.push_back(nb.edge);
                    stack.push_back(nb.vertex);
                }
        }
    }
    std::sort(forest.edges.begin(), forest.edges.end());
    return forest;
}

Correction peel(const Lattice& lat, const SpanningForest& forest, const Syndrome& syndrome) {
    EraseAdj g(lat, forest.edges);
    std::vector<uint8_t> defect(lat.total_vertices(), 0);
    std::vector<uint8_t> in_forest(lat.total_vertices(), 0);
    for (int32_t e : forest.edges) {
        in_forest[lat.edge(e).u] = 1;
        in_forest[lat.edge(e).v] = 1;
    }
    for (int32_t v : syndrome) {
        if (!in_forest[v] && g.adj[v].empty())
            in_forest[v] = 1;  // isolated defect vertex, tree of one
        if (!in_forest[v]) throw std::runtime_error("defect outside the spanning forest");
        defect[v] = 1;
    }

    // Root every tree at a virtual boundary vertex when one exists, else at
    // its lowest vertex id; processing children before parents is equivalent
    // to iterated leaf pruning and the flipping subset on a tree is unique.
    std::vector<uint8_t> visited(lat.total_vertices(), 0);
    std::vector<int32_t> roots;
    std::vector<int32_t> comp;
    std::vector<int32_t> stack;
    Correction correction;
    std::vector<std::pair<int32_t, int32_t>> order;  // (vertex, parent edge)

    std::vector<int32_t> starts;
    for (int32_t e : forest.edges) {
        starts.push_back(lat.edge(e).u);
        starts.push_back(lat.edge(e).v);
    }
    for (int32_t v : syndrome) starts.push_back(v);
    std::sort(starts.begin(), starts.end());
    starts.erase(std::unique(starts.begin(), starts.end()), starts.end());

    std::vector<uint8_t> seen(lat.total_vertices(), 0);
    for (int32_t s : starts) {
        if (seen[s]) continue;
        // Collect the component, preferring a virtual root.
        comp.clear();
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            int32_t v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (const Neighbour& nb : g.adj[v])
                if (!seen[nb.vertex]) {
                    seen[nb.vertex] = 1;
                    stack.push_back(nb.vertex);
                }
        }
        int32_t root = comp.front();
        for (int32_t v : comp)
            if (lat.is_virtual(v)) {
                root = v;
                break;
            }

        order.clear();
        visited[root] = 1;
        order.push_back({root, -1});
        for (size_t i = 0; i < order.size(); ++i) {
            int32_t v = order[i].first;
            for (const Neighbour& nb : g.adj[v])
                if (!visited[nb.vertex]) {
                    visited[nb.vertex] = 1;
                    order.push_back({nb.vertex, nb.edge});
                }
        }
        for (size_t i = order.size(); i-- > 1;) {
            auto [v, pe] = order[i];
            if (!defect[v]) continue;
            defect[v] = 0;
            correction.push_back(pe);
            int32_t parent = lat.other_endpoint(pe, v);
            defect[parent] ^= 1;
        }
        if (defect[root] && !lat.is_virtual(root))
            throw std::runtime_error("odd defect parity in an unconfined tree");
        defect[root] = 0;
    }
    std::sort(correction.begin(), correction.end());
    return correction;
}

}  // namespace uflab
