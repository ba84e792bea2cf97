#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "uflab/dsu.hpp"
#include "uflab/rng.hpp"

using namespace uflab;

namespace {

// Builds the chain (k) -> (k-1) -> ... -> 0 without touching depths: each
// union links two roots directly.
DisjointForest make_chain(int32_t k, DsuMode mode) {
    DisjointForest f(k + 1, mode);
    for (int32_t i = k; i >= 1; --i) f.unite(i - 1, i);
    return f;
}

int tree_height(const DisjointForest& f, int32_t root) {
    int best = 0;
    for (int32_t x = 0; x < f.element_count(); ++x) {
        int depth = 0;
        int32_t cur = x;
        while (f.parent_of(cur) != cur) {
            cur = f.parent_of(cur);
            ++depth;
        }
        if (cur == root) best = std::max(best, depth);
    }
    return best;
}

bool forest_acyclic(const DisjointForest& f) {
    for (int32_t x = 0; x < f.element_count(); ++x) {
        int32_t cur = x;
        for (int32_t steps = 0; f.parent_of(cur) != cur; ++steps) {
            if (steps > f.element_count()) return false;
            cur = f.parent_of(cur);
        }
    }
    return true;
}

}  // namespace

TEST_SUITE_BEGIN("dsu");

TEST_CASE("fresh forest is singleton roots with zero counters") {
    DisjointForest f(5, {true, Compression::none});
    CHECK(f.counts().total() == 0);
    for (int32_t i = 0; i < 5; ++i) {
        CHECK(f.parent_of(i) == i);
        CHECK(f.stored_size(i) == 1);
        CHECK(f.find(i) == i);
    }
    // A singleton find is one self-parent read.
    CHECK(f.counts().root_reads == 5);
    CHECK_THROWS(DisjointForest(0, {false, Compression::none}));
    CHECK_THROWS(f.find(5));
}

TEST_CASE("naive find on a depth-2 chain costs 3 reads") {
    DisjointForest f = make_chain(2, {false, Compression::none});
    AccessCounts before = f.counts();
    CHECK(f.find(2) == 0);
    CHECK(f.counts().root_reads - before.root_reads == 3);
    CHECK(f.counts().root_writes == before.root_writes);
}

TEST_CASE("full compression rewrites visited elements to the root") {
    DisjointForest f = make_chain(2, {false, Compression::full});
    CHECK(f.find(2) == 0);
    CHECK(f.parent_of(2) == 0);
    CHECK(f.parent_of(1) == 0);
}

TEST_CASE("a depth-1 find under full compression costs exactly 4 accesses") {
    DisjointForest f = make_chain(1, {false, Compression::full});
    AccessCounts before = f.counts();
    CHECK(f.find(1) == 0);
    const AccessCounts& after = f.counts();
    CHECK(after.root_total() - before.root_total() == 4);
    CHECK(after.root_reads - before.root_reads == 3);
    CHECK(after.root_writes - before.root_writes == 1);
}

TEST_CASE("path splitting rewrites each visited element to its grandparent") {
    DisjointForest f = make_chain(3, {false, Compression::splitting});
    CHECK(f.find(3) == 0);
    CHECK(f.parent_of(3) == 1);
    CHECK(f.parent_of(2) == 0);
    CHECK(f.parent_of(1) == 0);
}

TEST_CASE("naive union keeps the first argument's root") {
    DisjointForest f(4, {false, Compression::none});
    CHECK(f.unite(0, 1) == 0);
    CHECK(f.parent_of(1) == 0);
    CHECK(f.unite(3, 2) == 3);
    CHECK(f.parent_of(2) == 3);
    CHECK(f.unite(3, 0) == 3);
}

TEST_CASE("union by size merges the smaller tree into the larger") {
    DisjointForest f(5, {true, Compression::none});
    f.unite(0, 1);
    f.unite(0, 2);
    CHECK(f.stored_size(0) == 3);
    CHECK(f.unite(4, 0) == 0);  // singleton 4 joins the size-3 tree
    CHECK(f.stored_size(0) == 4);
    // Equal sizes tie to the lower root id.
    DisjointForest g(4, {true, Compression::none});
    g.unite(2, 3);
    g.unite(0, 1);
    CHECK(g.unite(2, 0) == 0);
}

TEST_CASE("same-set union performs no linking write") {
    DisjointForest f(4, {false, Compression::none});
    f.unite(0, 1);
    AccessCounts before = f.counts();
    CHECK(f.unite(0, 1) == 0);
    CHECK(f.counts().root_writes == before.root_writes);
}

TEST_CASE("union of two depth-1 elements costs two finds plus one write") {
    for (DsuMode mode : all_modes()) {
        DisjointForest f(4, mode);
        f.unite(0, 1);
        f.unite(2, 3);
        DisjointForest probe(4, mode);
        probe.unite(0, 1);
        AccessCounts before = probe.counts();
        probe.find(1);
        uint64_t find_cost = probe.counts().root_total() - before.root_total();

        before = f.counts();
        f.unite(1, 3);
        uint64_t union_cost = f.counts().root_total() - before.root_total();
        CHECK(union_cost == 2 * find_cost + 1);
    }
}

TEST_CASE("counters never decrease") {
    DisjointForest f(64, {true, Compression::full});
    Rng rng(5);
    uint64_t last = 0;
    for (int i = 0; i < 500; ++i) {
        f.unite(static_cast<int32_t>(rng.below(64)), static_cast<int32_t>(rng.below(64)));
        CHECK(f.counts().total() >= last);
        last = f.counts().total();
    }
}

TEST_CASE("forest stays acyclic under random operation sequences") {
    for (DsuMode mode : all_modes()) {
        DisjointForest f(48, mode);
        Rng rng(17);
        for (int i = 0; i < 300; ++i) {
            f.unite(static_cast<int32_t>(rng.below(48)), static_cast<int32_t>(rng.below(48)));
            if (i % 37 == 0) CHECK(forest_acyclic(f));
        }
        CHECK(forest_acyclic(f));
    }
}

TEST_CASE("union-by-size height bound holds over random sequences") {
    Rng seq_rng(2024);
    for (int seq = 0; seq < 1000; ++seq) {
        int32_t n = 16 << seq_rng.below(7);  // 16..1024
        DisjointForest f(n, {true, Compression::none});
        Rng rng(mix_seed(88, seq));
        int merges = static_cast<int>(rng.below(2 * n)) + 1;
        for (int i = 0; i < merges; ++i)
            f.unite(static_cast<int32_t>(rng.below(n)), static_cast<int32_t>(rng.below(n)));
        for (int32_t r = 0; r < n; ++r) {
            if (f.parent_of(r) != r) continue;
            int32_t size = f.stored_size(r);
            int log2_floor = 0;
            while ((1 << (log2_floor + 1)) <= size) ++log2_floor;
            CHECK(tree_height(f, r) <= log2_floor + 1);
        }
    }
}

TEST_CASE("with-size invariant: root size equals true tree population") {
    DisjointForest f(64, {true, Compression::full});
    Rng rng(7);
    for (int i = 0; i < 200; ++i)
        f.unite(static_cast<int32_t>(rng.below(64)), static_cast<int32_t>(rng.below(64)));
    std::vector<int32_t> pop(64, 0);
    for (int32_t x = 0; x < 64; ++x) {
        int32_t cur = x;
        while (f.parent_of(cur) != cur) cur = f.parent_of(cur);
        ++pop[cur];
    }
    for (int32_t r = 0; r < 64; ++r)
        if (f.parent_of(r) == r) CHECK(f.stored_size(r) == pop[r]);
}

TEST_CASE("connectivity agrees with a brute-force component oracle") {
    for (DsuMode mode : all_modes()) {
        for (int seq = 0; seq < 100; ++seq) {
            const int32_t n = 64;
            DisjointForest f(n, mode);
            std::vector<int32_t> comp(n);
            for (int32_t i = 0; i < n; ++i) comp[i] = i;
            Rng rng(mix_seed(101, seq));
            for (int i = 0; i < 96; ++i) {
                int32_t x = static_cast<int32_t>(rng.below(n));
                int32_t y = static_cast<int32_t>(rng.below(n));
                f.unite(x, y);
                int32_t from = comp[y], to = comp[x];
                for (int32_t& c : comp)
                    if (c == from) c = to;
            }
            for (int32_t a = 0; a < n; ++a)
                for (int32_t b = a + 1; b < n; ++b)
                    CHECK((f.find(a) == f.find(b)) == (comp[a] == comp[b]));
        }
    }
}

TEST_CASE("mode names round-trip") {
    for (DsuMode mode : all_modes()) CHECK(parse_mode(mode_name(mode)) == mode);
    CHECK_THROWS(parse_mode("bogus"));
    CHECK(all_modes().size() == 6);
}

TEST_CASE("two-element naive bench stays near the enumerated constant") {
    // After the first merge the forest is one depth-1 tree; a find costs 1
    // or 2 reads with equal probability, so a merge averages ~3 accesses.
    double v = bench_random_merges(2, 10000, {false, Compression::none}, 31);
    CHECK(v > 2.5);
    CHECK(v < 3.5);
}

TEST_CASE("unsaturated regime: accesses bounded in n at fixed m") {
    double base = bench_random_merges(1 << 10, 1 << 10, {false, Compression::none}, 77);
    double big = bench_random_merges(1 << 16, 1 << 10, {false, Compression::none}, 77);
    CHECK(big <= 1.2 * base);
}

TEST_CASE("bench is deterministic given a seed") {
    double a = bench_random_merges(256, 5000, {true, Compression::full}, 9);
    double b = bench_random_merges(256, 5000, {true, Compression::full}, 9);
    CHECK(a == b);
}

TEST_SUITE_END();
