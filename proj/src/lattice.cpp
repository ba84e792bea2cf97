#include "uflab/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace uflab {

namespace {

int wrap_dist(int a, int b, int L) {
    int d = std::abs(a - b);
    return std::min(d, L - d);
}

}  // namespace

Lattice Lattice::build(const LatticeSpec& spec) {
    if (spec.distance < 2) throw std::invalid_argument("lattice distance must be >= 2");
    if (spec.rounds < 1) throw std::invalid_argument("lattice rounds must be >= 1");

    Lattice lat;
    lat.spec_ = spec;
    const int L = spec.distance;
    const int R = spec.rounds;
    const int layer = L * L;

    lat.n_real_ = layer * R;
    lat.n_total_ = lat.n_real_ + (spec.kind == CodeKind::planar ? 2 * L * R : 0);

    lat.x_.resize(lat.n_total_);
    lat.y_.resize(lat.n_total_);
    lat.t_.resize(lat.n_total_);
    for (int t = 0; t < R; ++t)
        for (int y = 0; y < L; ++y)
            for (int x = 0; x < L; ++x) {
                int32_t v = t * layer + y * L + x;
                lat.x_[v] = static_cast<int16_t>(x);
                lat.y_[v] = static_cast<int16_t>(y);
                lat.t_[v] = static_cast<int16_t>(t);
            }

    // One virtual endpoint per dangling qubit: left then right, per (t, y).
    auto virtual_id = [&lat, L, layer, R](int t, int y, bool right) {
        (void)R;
        return lat.n_real_ + 2 * (t * L + y) + (right ? 1 : 0);
    };
    if (spec.kind == CodeKind::planar)
        for (int t = 0; t < R; ++t)
            for (int y = 0; y < L; ++y) {
                int32_t vl = virtual_id(t, y, false);
                int32_t vr = virtual_id(t, y, true);
                lat.x_[vl] = -1;
                lat.x_[vr] = static_cast<int16_t>(L);
                lat.y_[vl] = lat.y_[vr] = static_cast<int16_t>(y);
                lat.t_[vl] = lat.t_[vr] = static_cast<int16_t>(t);
            }

    lat.adj_.resize(lat.n_total_);
    auto add_edge = [&lat](int32_t u, int32_t v, EdgeAxis axis) {
        int32_t e = static_cast<int32_t>(lat.edges_.size());
        lat.edges_.push_back({u, v, axis});
        lat.adj_[u].push_back({v, e});
        lat.adj_[v].push_back({u, e});
        return e;
    };

    // Row-major vertex order; per vertex the boundary, +x, +y, +t edges.
    for (int t = 0; t < R; ++t)
        for (int y = 0; y < L; ++y)
            for (int x = 0; x < L; ++x) {
                int32_t v = t * layer + y * L + x;
                if (spec.kind == CodeKind::toric) {
                    add_edge(v, t * layer + y * L + (x + 1) % L, EdgeAxis::x);
                    add_edge(v, t * layer + ((y + 1) % L) * L + x, EdgeAxis::y);
                } else {
                    if (x == 0)
                        lat.left_dangling_.push_back(add_edge(virtual_id(t, y, false), v, EdgeAxis::boundary));
                    if (x == L - 1)
                        lat.right_dangling_.push_back(add_edge(v, virtual_id(t, y, true), EdgeAxis::boundary));
                    if (x + 1 < L) add_edge(v, v + 1, EdgeAxis::x);
                    if (y + 1 < L) add_edge(v, v + L, EdgeAxis::y);
                }
                if (t + 1 < R) add_edge(v, v + layer, EdgeAxis::t);
            }
    return lat;
}

bool Lattice::is_boundary(int32_t v) const {
    if (spec_.kind != CodeKind::planar) return false;
    if (is_virtual(v)) return true;
    return x_[v] == 0 || x_[v] == spec_.distance - 1;
}

int Lattice::shortest_distance(int32_t u, int32_t v) const {
    if (u < 0 || v < 0 || u >= n_total_ || v >= n_total_)
        throw std::out_of_range("vertex id out of range");
    if (u == v) return 0;
    const int L = spec_.distance;
    if (spec_.kind == CodeKind::planar) {
        // Entering or leaving the lattice through a dangling edge costs 1.
        int du = is_virtual(u) ? 1 : 0;
        int dv = is_virtual(v) ? 1 : 0;
        int xu = is_virtual(u) ? (x_[u] < 0 ? 0 : L - 1) : x_[u];
        int xv = is_virtual(v) ? (x_[v] < 0 ? 0 : L - 1) : x_[v];
        return du + dv + std::abs(xu - xv) + std::abs(y_[u] - y_[v]) + std::abs(t_[u] - t_[v]);
    }
    return wrap_dist(x_[u], x_[v], L) + wrap_dist(y_[u], y_[v], L) + std::abs(t_[u] - t_[v]);
}

std::vector<int32_t> Lattice::logical_cut(CutAxis axis) const {
    const int L = spec_.distance;
    const int R = spec_.rounds;
    const int layer = L * L;
    std::vector<int32_t> cut;
    if (spec_.kind == CodeKind::planar) {
        if (axis != CutAxis::horizontal)
            throw std::invalid_argument("planar code exposes only the horizontal (boundary-to-boundary) cut axis");
        return left_dangling_;
    }
    for (int t = 0; t < R; ++t)
        for (int k = 0; k < L; ++k) {
            int32_t from = axis == CutAxis::horizontal ? t * layer + k * L + (L - 1)   // (L-1, k, t) +x
                                                       : t * layer + (L - 1) * L + k;  // (k, L-1, t) +y
            EdgeAxis want = axis == CutAxis::horizontal ? EdgeAxis::x : EdgeAxis::y;
            for (const Neighbour& nb : adj_[from])
                if (edges_[nb.edge].u == from && edges_[nb.edge].axis == want) {
                    cut.push_back(nb.edge);
                    break;
                }
        }
    std::sort(cut.begin(), cut.end());
    return cut;
}

int Lattice::diameter() const {
    const int L = spec_.distance;
    const int R = spec_.rounds;
    if (spec_.kind == CodeKind::toric) return 2 * (L / 2) + (R - 1);
    return 2 * (L - 1) + (R - 1) + 2;
}

int32_t Lattice::edge_between(int32_t u, int32_t v) const {
    for (const Neighbour& nb : adj_[u])
        if (nb.vertex == v) return nb.edge;
    return -1;
}

}  // namespace uflab
