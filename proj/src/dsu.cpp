#include "uflab/dsu.hpp"

#include <stdexcept>

#include "uflab/rng.hpp"

namespace uflab {

std::string mode_name(DsuMode mode) {
    std::string s = mode.by_size ? "ubs" : "";
    if (mode.compression == Compression::full) s += s.empty() ? "pc" : "+pc";
    if (mode.compression == Compression::splitting) s += s.empty() ? "ps" : "+ps";
    return s.empty() ? "naive" : s;
}

DsuMode parse_mode(const std::string& name) {
    for (DsuMode m : all_modes())
        if (mode_name(m) == name) return m;
    throw std::invalid_argument("unknown DSU mode: " + name);
}

std::vector<DsuMode> all_modes() {
    std::vector<DsuMode> out;
    for (bool bs : {false, true})
        for (Compression c : {Compression::none, Compression::full, Compression::splitting})
            out.push_back({bs, c});
    return out;
}

DisjointForest::DisjointForest(int32_t n, DsuMode mode) : mode_(mode) {
    if (n < 1) throw std::invalid_argument("forest size must be >= 1");
    parent_.resize(n);
    for (int32_t i = 0; i < n; ++i) parent_[i] = i;
    if (mode.by_size) size_.assign(n, 1);
}

int32_t DisjointForest::find(int32_t x) {
    if (x < 0 || x >= element_count()) throw std::out_of_range("element out of range");
    switch (mode_.compression) {
        case Compression::none: {
            int32_t p = read_parent(x);
            while (p != x) {
                x = p;
                p = read_parent(x);
            }
            return x;
        }
        case Compression::full: {
            visit_buf_.clear();
            int32_t p = read_parent(x);
            while (p != x) {
                visit_buf_.push_back(x);
                x = p;
                p = read_parent(x);
            }
            for (int32_t v : visit_buf_) {
                read_parent(v);  // second pass re-reads before rewriting
                write_parent(v, x);
            }
            return x;
        }
        case Compression::splitting: {
            int32_t p = read_parent(x);
            while (p != x) {
                int32_t g = read_parent(p);
                write_parent(x, g);
                x = p;
                p = read_parent(x);
            }
            return x;
        }
    }
    return x;  // unreachable
}

int32_t DisjointForest::unite(int32_t x, int32_t y) {
    int32_t rx = find(x);
    int32_t ry = find(y);
    if (rx == ry) return rx;
    return link(rx, ry);
}

int32_t DisjointForest::link(int32_t rx, int32_t ry) {
    int32_t winner, loser;
    if (mode_.by_size) {
        ++counts_.size_reads;
        int32_t sx = size_[rx];
        ++counts_.size_reads;
        int32_t sy = size_[ry];
        if (sx != sy)
            winner = sx > sy ? rx : ry;
        else
            winner = rx < ry ? rx : ry;
        loser = winner == rx ? ry : rx;
        write_parent(loser, winner);
        ++counts_.size_writes;
        size_[winner] = sx + sy;
    } else {
        // Naive rule: the first argument's root survives. Depths are
        // unbounded; which tree deepens is caller-determined.
        winner = rx;
        loser = ry;
        write_parent(loser, winner);
    }
    ++link_count_;
    return winner;
}

double bench_random_merges(int32_t n, uint64_t m, DsuMode mode, uint64_t seed) {
    if (n < 2) throw std::invalid_argument("bench requires n >= 2");
    if (m < 1) throw std::invalid_argument("bench requires m >= 1");
    DisjointForest forest(n, mode);
    Rng rng(mix_seed(seed, 0x6473755f62656e63ULL));
    for (uint64_t i = 0; i < m; ++i) {
        int32_t x = static_cast<int32_t>(rng.below(n));
        int32_t y = static_cast<int32_t>(rng.below(n));
        forest.unite(x, y);
    }
    return static_cast<double>(forest.counts().root_total()) / static_cast<double>(m);
}

}  // namespace uflab
