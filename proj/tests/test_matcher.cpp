#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "test_util.hpp"
#include "uflab/lattice.hpp"
#include "uflab/matcher.hpp"
#include "uflab/noise.hpp"
#include "uflab/rng.hpp"

using namespace uflab;
using test::vertex_at;

namespace {

// Minimum pairing weight by full recursion: each defect pairs another defect
// or (planar) terminates on the boundary.
int64_t brute_force_weight(const DefectGraph& g, std::vector<uint8_t>& used) {
    size_t i = 0;
    while (i < used.size() && used[i]) ++i;
    if (i == used.size()) return 0;
    used[i] = 1;
    int64_t best = INT64_MAX;
    for (size_t j = i + 1; j < used.size(); ++j) {
        if (used[j]) continue;
        used[j] = 1;
        int64_t rest = brute_force_weight(g, used);
        if (rest != INT64_MAX) best = std::min(best, g.weight[i][j] + rest);
        used[j] = 0;
    }
    if (g.planar) {
        int64_t rest = brute_force_weight(g, used);
        if (rest != INT64_MAX) best = std::min(best, g.boundary_weight[i] + rest);
    }
    used[i] = 0;
    return best;
}

int64_t brute_force_weight(const DefectGraph& g) {
    std::vector<uint8_t> used(g.defects.size(), 0);
    return brute_force_weight(g, used);
}

Syndrome random_defects(const Lattice& lat, int count, uint64_t seed) {
    Rng rng(seed);
    std::set<int32_t> chosen;
    while (static_cast<int>(chosen.size()) < count)
        chosen.insert(static_cast<int32_t>(rng.below(lat.vertex_count())));
    return Syndrome(chosen.begin(), chosen.end());
}

}  // namespace

TEST_SUITE_BEGIN("matcher");

TEST_CASE("no defects match to an empty matching") {
    Lattice lat = Lattice::build({CodeKind::toric, 5, 1});
    DefectGraph g = build_defect_graph(lat, {});
    CHECK(mwpm_exact(g).pairs.empty());
    CHECK(mwpm_exact(g).total_weight == 0);
    CHECK(decode_mwpm(lat, {}).empty());
}

TEST_CASE("two defects form the only pair at their distance") {
    Lattice lat = Lattice::build({CodeKind::toric, 7, 1});
    Syndrome syn = test::sorted({vertex_at(lat, 0, 0), vertex_at(lat, 3, 0)});
    Matching m = mwpm_exact(build_defect_graph(lat, syn));
    REQUIRE(m.pairs.size() == 1);
    CHECK(m.total_weight == 3);
    CHECK(m.weights[0] == 3);
}

TEST_CASE("defect-graph weights satisfy metric properties") {
    Lattice lat = Lattice::build({CodeKind::toric, 6, 2});
    Syndrome syn = random_defects(lat, 8, 5);
    DefectGraph g = build_defect_graph(lat, syn);
    for (size_t i = 0; i < syn.size(); ++i)
        for (size_t j = 0; j < syn.size(); ++j) {
            CHECK(g.weight[i][j] == g.weight[j][i]);
            CHECK((i == j) == (g.weight[i][j] == 0));
            for (size_t k = 0; k < syn.size(); ++k)
                CHECK(g.weight[i][j] <= g.weight[i][k] + g.weight[k][j]);
        }
}

TEST_CASE("exact matcher equals brute force on toric and planar instances") {
    Lattice toric = Lattice::build({CodeKind::toric, 8, 1});
    Lattice planar = Lattice::build({CodeKind::planar, 8, 1});
    for (int trial = 0; trial < 1000; ++trial) {
        Rng rng(mix_seed(7000, trial));
        bool use_planar = trial % 2 == 1;
        const Lattice& lat = use_planar ? planar : toric;
        int count = use_planar ? static_cast<int>(rng.below(8)) + 1
                               : 2 * (static_cast<int>(rng.below(4)) + 1);
        DefectGraph g = build_defect_graph(lat, random_defects(lat, count, rng.next()));
        Matching m = mwpm_exact(g);
        CHECK(m.total_weight == brute_force_weight(g));
        // Perfect: every defect appears exactly once.
        std::vector<int> seen(g.defects.size(), 0);
        int64_t sum = 0;
        for (size_t k = 0; k < m.pairs.size(); ++k) {
            ++seen[m.pairs[k].first];
            if (m.pairs[k].second >= 0) ++seen[m.pairs[k].second];
            sum += m.weights[k];
        }
        CHECK(sum == m.total_weight);
        for (int c : seen) CHECK(c == 1);
    }
}

TEST_CASE("exact matcher rejects oversized and odd toric inputs") {
    Lattice lat = Lattice::build({CodeKind::toric, 12, 1});
    CHECK_THROWS(mwpm_exact(build_defect_graph(lat, random_defects(lat, 18, 3))));
    CHECK_THROWS(mwpm_exact(build_defect_graph(lat, random_defects(lat, 3, 3))));
}

TEST_CASE("local matcher never beats exact and usually ties it") {
    Lattice lat = Lattice::build({CodeKind::toric, 11, 1});
    int equal = 0;
    const int trials = 1000;
    for (int trial = 0; trial < trials; ++trial) {
        DefectGraph g = build_defect_graph(lat, random_defects(lat, 8, mix_seed(8000, trial)));
        int64_t exact = mwpm_exact(g).total_weight;
        int64_t local = mwpm_local(g).total_weight;
        CHECK(local >= exact);
        if (local == exact) ++equal;
    }
    CHECK(equal >= trials * 95 / 100);
}

TEST_CASE("matching weight is invariant under defect relabelling") {
    Lattice lat = Lattice::build({CodeKind::toric, 9, 1});
    for (int trial = 0; trial < 50; ++trial) {
        DefectGraph g = build_defect_graph(lat, random_defects(lat, 6, mix_seed(8100, trial)));
        DefectGraph perm = g;
        std::vector<size_t> order{3, 1, 5, 0, 4, 2};
        for (size_t i = 0; i < order.size(); ++i) {
            perm.defects[i] = g.defects[order[i]];
            for (size_t j = 0; j < order.size(); ++j)
                perm.weight[i][j] = g.weight[order[i]][order[j]];
        }
        CHECK(mwpm_exact(perm).total_weight == mwpm_exact(g).total_weight);
    }
}

TEST_CASE("adjacent defects decode to the single shared edge") {
    Lattice lat = Lattice::build({CodeKind::toric, 5, 1});
    int32_t a = vertex_at(lat, 2, 2), b = vertex_at(lat, 3, 2);
    Correction corr = decode_mwpm(lat, test::sorted({a, b}));
    REQUIRE(corr.size() == 1);
    CHECK(corr[0] == lat.edge_between(a, b));
}

TEST_CASE("MWPM corrections reproduce their syndromes") {
    for (LatticeSpec spec : {LatticeSpec{CodeKind::toric, 9, 1}, LatticeSpec{CodeKind::planar, 9, 1},
                             LatticeSpec{CodeKind::toric, 4, 4}}) {
        Lattice lat = Lattice::build(spec);
        double q = spec.rounds > 1 ? 0.06 : 0.0;
        for (int trial = 0; trial < 300; ++trial) {
            ErrorSample s = sample_errors(lat, {0.06, q}, mix_seed(9000, trial));
            Syndrome syn = compute_syndrome(lat, s);
            CHECK(syndrome_of_edges(lat, decode_mwpm(lat, syn)) == syn);
        }
    }
}

TEST_SUITE_END();
