#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "test_util.hpp"
#include "uflab/growth.hpp"
#include "uflab/lattice.hpp"
#include "uflab/noise.hpp"
#include "uflab/peeler.hpp"
#include "uflab/rng.hpp"

using namespace uflab;
using test::vertex_at;

namespace {

Erasure erasure_of_edges(const Lattice& lat, std::vector<int32_t> edges) {
    std::set<int32_t> vs;
    for (int32_t e : edges) {
        vs.insert(lat.edge(e).u);
        vs.insert(lat.edge(e).v);
    }
    std::sort(edges.begin(), edges.end());
    return {edges, std::vector<int32_t>(vs.begin(), vs.end())};
}

}  // namespace

TEST_SUITE_BEGIN("peeler");

TEST_CASE("a 4-cycle loses exactly one edge") {
    Lattice lat = Lattice::build({CodeKind::toric, 5, 1});
    int32_t a = vertex_at(lat, 1, 1), b = vertex_at(lat, 2, 1);
    int32_t c = vertex_at(lat, 2, 2), d = vertex_at(lat, 1, 2);
    Erasure cyc = erasure_of_edges(lat, {lat.edge_between(a, b), lat.edge_between(b, c),
                                         lat.edge_between(c, d), lat.edge_between(d, a)});
    SpanningForest forest = spanning_forest(lat, cyc);
    CHECK(forest.edges.size() == 3);
    for (int32_t e : forest.edges)
        CHECK(std::binary_search(cyc.edges.begin(), cyc.edges.end(), e));
}

TEST_CASE("an acyclic erasure is returned unchanged") {
    Lattice lat = Lattice::build({CodeKind::toric, 5, 1});
    int32_t a = vertex_at(lat, 0, 0), b = vertex_at(lat, 1, 0), c = vertex_at(lat, 2, 0);
    Erasure path = erasure_of_edges(lat, {lat.edge_between(a, b), lat.edge_between(b, c)});
    SpanningForest forest = spanning_forest(lat, path);
    CHECK(test::sorted(forest.edges) == path.edges);
}

TEST_CASE("two components give a forest with vertices minus two edges") {
    Lattice lat = Lattice::build({CodeKind::toric, 7, 1});
    Erasure two = erasure_of_edges(
        lat, {lat.edge_between(vertex_at(lat, 0, 0), vertex_at(lat, 1, 0)),
              lat.edge_between(vertex_at(lat, 1, 0), vertex_at(lat, 2, 0)),
              lat.edge_between(vertex_at(lat, 4, 4), vertex_at(lat, 5, 4))});
    SpanningForest forest = spanning_forest(lat, two);
    CHECK(forest.edges.size() == two.vertices.size() - 2);
}

TEST_CASE("peeling a path with endpoint defects keeps both edges") {
    Lattice lat = Lattice::build({CodeKind::toric, 5, 1});
    int32_t a = vertex_at(lat, 0, 0), b = vertex_at(lat, 1, 0), c = vertex_at(lat, 2, 0);
    Erasure path = erasure_of_edges(lat, {lat.edge_between(a, b), lat.edge_between(b, c)});
    Correction corr = peel(lat, spanning_forest(lat, path), test::sorted({a, c}));
    CHECK(test::sorted(corr) == path.edges);
}

TEST_CASE("a defect-free tree peels to an empty correction") {
    Lattice lat = Lattice::build({CodeKind::toric, 5, 1});
    Erasure path = erasure_of_edges(
        lat, {lat.edge_between(vertex_at(lat, 0, 0), vertex_at(lat, 1, 0))});
    CHECK(peel(lat, spanning_forest(lat, path), {}).empty());
}

TEST_CASE("a star with two defect leaves peels to the two spokes") {
    Lattice lat = Lattice::build({CodeKind::toric, 5, 1});
    int32_t c = vertex_at(lat, 2, 2);
    int32_t l1 = vertex_at(lat, 1, 2), l2 = vertex_at(lat, 3, 2), l3 = vertex_at(lat, 2, 1);
    Erasure star = erasure_of_edges(
        lat, {lat.edge_between(c, l1), lat.edge_between(c, l2), lat.edge_between(c, l3)});
    Correction corr = peel(lat, spanning_forest(lat, star), test::sorted({l1, l2}));
    CHECK(test::sorted(corr) ==
          test::sorted({lat.edge_between(c, l1), lat.edge_between(c, l2)}));
}

TEST_CASE("a defect outside the forest is an internal-consistency failure") {
    Lattice lat = Lattice::build({CodeKind::toric, 5, 1});
    CHECK_THROWS(peel(lat, SpanningForest{}, {0, 1}));
}

TEST_CASE("peel matches the exhaustive tree-subset oracle") {
    Lattice lat = Lattice::build({CodeKind::toric, 7, 1});
    int instances = 0;
    for (int trial = 0; instances < 1000; ++trial) {
        REQUIRE(trial < 20000);
        ErrorSample s = sample_errors(lat, {0.05, 0.0}, mix_seed(1234, trial));
        Syndrome syn = compute_syndrome(lat, s);
        ValidationResult vr = validate_syndrome(lat, syn, {true, Compression::full});
        SpanningForest forest = spanning_forest(lat, vr.erasure);
        Correction corr = peel(lat, forest, syn);

        // Group forest edges into trees.
        std::map<int32_t, int32_t> comp;  // vertex -> tree id
        for (int32_t v : vr.erasure.vertices) comp[v] = v;
        auto root = [&](int32_t v) {
            while (comp[v] != v) v = comp[v] = comp[comp[v]];
            return v;
        };
        for (int32_t e : forest.edges) comp[root(lat.edge(e).u)] = root(lat.edge(e).v);
        std::map<int32_t, std::vector<int32_t>> tree_edges;
        for (int32_t e : forest.edges) tree_edges[root(lat.edge(e).u)].push_back(e);
        std::map<int32_t, std::vector<int32_t>> tree_defects;
        for (int32_t v : syn) tree_defects[root(v)].push_back(v);

        for (const auto& [tid, edges] : tree_edges) {
            if (edges.size() > 12) continue;
            ++instances;
            Syndrome defects = test::sorted(tree_defects[tid]);
            // The unique syndrome-flipping subset of a tree's edges.
            std::vector<int32_t> oracle;
            int found = 0;
            for (uint32_t mask = 0; mask < (1u << edges.size()); ++mask) {
                std::vector<int32_t> sub;
                for (size_t i = 0; i < edges.size(); ++i)
                    if (mask & (1u << i)) sub.push_back(edges[i]);
                if (syndrome_of_edges(lat, sub) == defects) {
                    oracle = sub;
                    ++found;
                }
            }
            REQUIRE(found == 1);
            std::vector<int32_t> got;
            for (int32_t e : corr)
                if (std::find(edges.begin(), edges.end(), e) != edges.end()) got.push_back(e);
            CHECK(test::sorted(got) == test::sorted(oracle));
        }
    }
}

TEST_CASE("full-pipeline corrections reproduce their syndromes") {
    for (LatticeSpec spec : {LatticeSpec{CodeKind::toric, 9, 1}, LatticeSpec{CodeKind::planar, 9, 1},
                             LatticeSpec{CodeKind::toric, 5, 5}}) {
        Lattice lat = Lattice::build(spec);
        double q = spec.rounds > 1 ? 0.08 : 0.0;
        for (int trial = 0; trial < 300; ++trial) {
            ErrorSample s = sample_errors(lat, {0.08, q}, mix_seed(4321, trial));
            Syndrome syn = compute_syndrome(lat, s);
            ValidationResult vr = validate_syndrome(lat, syn, {false, Compression::none});
            SpanningForest forest = spanning_forest(lat, vr.erasure);
            Correction corr = peel(lat, forest, syn);
            CHECK(syndrome_of_edges(lat, corr) == syn);
            CHECK(corr.size() <= forest.edges.size());
            for (int32_t e : corr)
                CHECK(std::find(forest.edges.begin(), forest.edges.end(), e) !=
                      forest.edges.end());
        }
    }
}

TEST_SUITE_END();
