#pragma once

#include <cstdint>
#include <vector>

namespace uflab {

enum class CodeKind { toric, planar };

enum class EdgeAxis : uint8_t { x, y, t, boundary };

enum class CutAxis { horizontal, vertical };

struct LatticeSpec {
    CodeKind kind = CodeKind::toric;
    int distance = 3;  // lattice length L (code distance d for the toric code)
    int rounds = 1;    // 1 for 2D, typically L for the 3D phenomenological model
};

// Directed in the generation sense: traversing u -> v moves +1 along `axis`
// (wrap-normalised on the torus; boundary edges move towards the open side).
struct Edge {
    int32_t u;
    int32_t v;
    EdgeAxis axis;
};

struct Neighbour {
    int32_t vertex;
    int32_t edge;
};

// Decoding graph for one stabiliser sector of a toric or planar code,
// optionally stacked over measurement rounds. Planar lattices carry one
// virtual vertex per dangling qubit (ids from vertex_count() upwards, left
// then right per row); an error string terminates on the open boundary by
// flipping a dangling edge. Immutable after construction.
class Lattice {
public:
    static Lattice build(const LatticeSpec& spec);

    CodeKind kind() const { return spec_.kind; }
    int distance() const { return spec_.distance; }
    int rounds() const { return spec_.rounds; }

    // Real check vertices (excludes virtual boundary nodes).
    int32_t vertex_count() const { return n_real_; }
    int32_t total_vertices() const { return n_total_; }
    int32_t edge_count() const { return static_cast<int32_t>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int32_t e) const { return edges_[e]; }
    const std::vector<Neighbour>& neighbours(int32_t v) const { return adj_[v]; }

    int x_of(int32_t v) const { return x_[v]; }
    int y_of(int32_t v) const { return y_[v]; }
    int t_of(int32_t v) const { return t_[v]; }

    bool is_virtual(int32_t v) const { return v >= n_real_; }
    bool is_boundary(int32_t v) const;  // open-column vertices and virtual nodes

    int32_t other_endpoint(int32_t e, int32_t v) const {
        const Edge& ed = edges_[e];
        return ed.u == v ? ed.v : ed.u;
    }

    // Graph geodesic in edge count. Virtual endpoints give the distance to
    // the corresponding open boundary.
    int shortest_distance(int32_t u, int32_t v) const;

    // Edges crossing a fixed noncontractible cut (toric) or the fixed
    // boundary-to-boundary cut (planar, horizontal axis only), at coordinate 0.
    std::vector<int32_t> logical_cut(CutAxis axis) const;

    // Maximum pairwise shortest distance; loose bound for growth termination.
    int diameter() const;

    // First edge joining u and v, or -1.
    int32_t edge_between(int32_t u, int32_t v) const;

private:
    LatticeSpec spec_;
    int32_t n_real_ = 0;
    int32_t n_total_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Neighbour>> adj_;
    std::vector<int16_t> x_, y_, t_;
    std::vector<int32_t> left_dangling_, right_dangling_;  // planar cut edges
};

}  // namespace uflab
