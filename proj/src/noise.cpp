#include "uflab/noise.hpp"

#include <algorithm>
#include <stdexcept>

#include "uflab/rng.hpp"

namespace uflab {

ErrorSample sample_errors(const Lattice& lat, NoiseParams params, uint64_t seed) {
    if (params.p < 0.0 || params.p > 1.0 || params.q < 0.0 || params.q > 1.0)
        throw std::invalid_argument("noise rates must lie in [0, 1]");
    if (lat.rounds() == 1 && params.q != 0.0)
        throw std::invalid_argument("2D lattices force q = 0");

    ErrorSample sample;
    sample.edge_error.assign(lat.edge_count(), 0);
    Rng rng(seed);
    // Fixed edge order so a trial is reproducible from its seed alone.
    for (int32_t e = 0; e < lat.edge_count(); ++e) {
        double rate = lat.edge(e).axis == EdgeAxis::t ? params.q : params.p;
        if (rng.bernoulli(rate)) sample.edge_error[e] = 1;
    }
    return sample;
}

Syndrome compute_syndrome(const Lattice& lat, const ErrorSample& errors) {
    if (static_cast<int32_t>(errors.edge_error.size()) != lat.edge_count())
        throw std::invalid_argument("error sample not sized to lattice");
    std::vector<uint8_t> flag(lat.vertex_count(), 0);
    for (int32_t e = 0; e < lat.edge_count(); ++e)
        if (errors.edge_error[e]) {
            const Edge& ed = lat.edge(e);
            if (ed.u < lat.vertex_count()) flag[ed.u] ^= 1;
            if (ed.v < lat.vertex_count()) flag[ed.v] ^= 1;
        }
    Syndrome defects;
    for (int32_t v = 0; v < lat.vertex_count(); ++v)
        if (flag[v]) defects.push_back(v);
    return defects;
}

Syndrome syndrome_of_edges(const Lattice& lat, const std::vector<int32_t>& edges) {
    ErrorSample s;
    s.edge_error.assign(lat.edge_count(), 0);
    for (int32_t e : edges) s.edge_error[e] ^= 1;
    return compute_syndrome(lat, s);
}

}  // namespace uflab
