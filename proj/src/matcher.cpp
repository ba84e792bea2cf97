#include "uflab/matcher.hpp"

#include "uflab/rng.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace uflab {

namespace {

constexpr int64_t kInf = std::numeric_limits<int64_t>::max() / 4;

void finalize(Matching& m, const DefectGraph& g) {
    m.total_weight = 0;
    m.weights.clear();
    for (auto [i, j] : m.pairs) {
        int32_t w = j < 0 ? g.boundary_weight[i] : g.weight[i][j];
        m.weights.push_back(w);
        m.total_weight += w;
    }
}

}  // namespace

DefectGraph build_defect_graph(const Lattice& lat, const Syndrome& syndrome) {
    DefectGraph g;
    g.planar = lat.kind() == CodeKind::planar;
    g.defects = syndrome;
    const int k = static_cast<int>(syndrome.size());
    g.weight.assign(k, std::vector<int32_t>(k, 0));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            g.weight[i][j] = g.weight[j][i] =
                lat.shortest_distance(syndrome[i], syndrome[j]);
    if (g.planar) {
        const int L = lat.distance();
        for (int i = 0; i < k; ++i) {
            int x = lat.x_of(syndrome[i]);
            g.boundary_weight.push_back(std::min(x + 1, L - x));
        }
    }
    return g;
}

Matching mwpm_exact(const DefectGraph& g) {
    const int k = static_cast<int>(g.defects.size());
    if (k > 16) throw std::invalid_argument("exact matcher limited to 16 defects");
    if (!g.planar && (k % 2) != 0)
        throw std::invalid_argument("toric matching requires an even defect count");
    Matching m;
    if (k == 0) return m;

    std::vector<int64_t> memo(size_t(1) << k, -1);
    auto solve = [&](auto&& self, uint32_t mask) -> int64_t {
        if (mask == 0) return 0;
        int64_t& slot = memo[mask];
        if (slot >= 0) return slot;
        int i = __builtin_ctz(mask);
        uint32_t rest = mask & ~(1u << i);
        int64_t best = kInf;
        for (uint32_t rem = rest; rem != 0; rem &= rem - 1) {
            int j = __builtin_ctz(rem);
            int64_t c = g.weight[i][j] + self(self, rest & ~(1u << j));
            best = std::min(best, c);
        }
        if (g.planar) best = std::min(best, g.boundary_weight[i] + self(self, rest));
        return slot = best;
    };

    uint32_t mask = (k == 32 ? ~0u : (1u << k) - 1);
    solve(solve, mask);
    // Reconstruct, preferring the smallest partner index on ties and the
    // boundary last; this yields the lexicographically smallest pair set.
    while (mask != 0) {
        int i = __builtin_ctz(mask);
        uint32_t rest = mask & ~(1u << i);
        int64_t want = solve(solve, mask);
        bool placed = false;
        for (uint32_t rem = rest; rem != 0 && !placed; rem &= rem - 1) {
            int j = __builtin_ctz(rem);
            if (g.weight[i][j] + solve(solve, rest & ~(1u << j)) == want) {
                m.pairs.push_back({i, j});
                mask = rest & ~(1u << j);
                placed = true;
            }
        }
        if (!placed) {
            m.pairs.push_back({i, -1});
            mask = rest;
        }
    }
    finalize(m, g);
    return m;
}

Matching mwpm_local(const DefectGraph& g) {
    const int k = static_cast<int>(g.defects.size());
    if (!g.planar && (k % 2) != 0)
        throw std::invalid_argument("toric matching requires an even defect count");
    Matching m;
    if (k == 0) return m;

    auto pair_cost = [&g](int i, int j) -> int64_t {
        if (i < 0 && j < 0) return 0;
        if (j < 0) return g.boundary_weight[i];
        if (i < 0) return g.boundary_weight[j];
        return g.weight[i][j];
    };

    // Global greedy seed: candidate pairings (defect-defect, and
    // defect-boundary on the planar code) taken in ascending weight order,
    // ties in lexicographic pair order.
    std::vector<std::tuple<int64_t, int32_t, int32_t>> cand;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) cand.push_back({g.weight[i][j], i, j});
        if (g.planar) cand.push_back({g.boundary_weight[i], i, -1});
    }
    std::sort(cand.begin(), cand.end());
    std::vector<uint8_t> used(k, 0);
    int matched = 0;
    for (auto [w, i, j] : cand) {
        if (used[i] || (j >= 0 && used[j])) continue;
        used[i] = 1;
        ++matched;
        if (j >= 0) {
            used[j] = 1;
            ++matched;
        }
        m.pairs.push_back({i, j});
    }
    if (matched != k) throw std::runtime_error("defect left unmatched");

    auto mk = [](int i, int j) {
        return i < 0 ? std::pair<int32_t, int32_t>{j, i} : std::pair<int32_t, int32_t>{i, j};
    };
    using Pairs = std::vector<std::pair<int32_t, int32_t>>;
    auto total = [&](const Pairs& ps) {
        int64_t w = 0;
        for (auto [i, j] : ps) w += pair_cost(i, j);
        return w;
    };

    // Local descent: 2-opt partner swaps, 3-pair re-matchings (all 15
    // pairings of six endpoints; skipped on very large instances where the
    // cubic sweep dominates and the result is only feeding an erasure
    // estimate) and planar pair splitting, until no move strictly lowers the
    // total weight.
    auto descend = [&](Pairs& pairs) {
        bool improved = true;
        while (improved) {
            improved = false;
            for (size_t a = 0; a < pairs.size(); ++a)
                for (size_t b = a + 1; b < pairs.size(); ++b) {
                    auto [p, q] = pairs[a];
                    auto [r, s] = pairs[b];
                    int64_t cur = pair_cost(p, q) + pair_cost(r, s);
                    int64_t alt1 = pair_cost(p, r) + pair_cost(q, s);
                    int64_t alt2 = pair_cost(p, s) + pair_cost(q, r);
                    if (alt1 < cur && alt1 <= alt2) {
                        pairs[a] = mk(p, r);
                        pairs[b] = mk(q, s);
                        improved = true;
                    } else if (alt2 < cur) {
                        pairs[a] = mk(p, s);
                        pairs[b] = mk(q, r);
                        improved = true;
                    }
                }
            if (pairs.size() <= 40) {
                static constexpr int kSix[15][6] = {
                    {0, 1, 2, 3, 4, 5}, {0, 1, 2, 4, 3, 5}, {0, 1, 2, 5, 3, 4},
                    {0, 2, 1, 3, 4, 5}, {0, 2, 1, 4, 3, 5}, {0, 2, 1, 5, 3, 4},
                    {0, 3, 1, 2, 4, 5}, {0, 3, 1, 4, 2, 5}, {0, 3, 1, 5, 2, 4},
                    {0, 4, 1, 2, 3, 5}, {0, 4, 1, 3, 2, 5}, {0, 4, 1, 5, 2, 3},
                    {0, 5, 1, 2, 3, 4}, {0, 5, 1, 3, 2, 4}, {0, 5, 1, 4, 2, 3}};
                for (size_t a = 0; a < pairs.size(); ++a)
                    for (size_t b = a + 1; b < pairs.size(); ++b)
                        for (size_t c = b + 1; c < pairs.size(); ++c) {
                            int32_t el[6] = {pairs[a].first, pairs[a].second,
                                             pairs[b].first, pairs[b].second,
                                             pairs[c].first, pairs[c].second};
                            int64_t cur = pair_cost(el[0], el[1]) + pair_cost(el[2], el[3]) +
                                          pair_cost(el[4], el[5]);
                            int64_t best = cur;
                            int best_idx = 0;
                            for (int v = 1; v < 15; ++v) {
                                int64_t w = pair_cost(el[kSix[v][0]], el[kSix[v][1]]) +
                                            pair_cost(el[kSix[v][2]], el[kSix[v][3]]) +
                                            pair_cost(el[kSix[v][4]], el[kSix[v][5]]);
                                if (w < best) {
                                    best = w;
                                    best_idx = v;
                                }
                            }
                            if (best < cur) {
                                const int* pi = kSix[best_idx];
                                pairs[a] = mk(el[pi[0]], el[pi[1]]);
                                pairs[b] = mk(el[pi[2]], el[pi[3]]);
                                pairs[c] = mk(el[pi[4]], el[pi[5]]);
                                improved = true;
                            }
                        }
            }
            if (g.planar) {
                size_t n_pairs = pairs.size();
                for (size_t a = 0; a < n_pairs; ++a) {
                    // Index access only: push_back may reallocate the vector.
                    int32_t p = pairs[a].first, q = pairs[a].second;
                    if (p >= 0 && q >= 0 &&
                        g.boundary_weight[p] + g.boundary_weight[q] < g.weight[p][q]) {
                        pairs.push_back({q, -1});
                        pairs[a].second = -1;
                        improved = true;
                    }
                }
            }
            // Swaps can form degenerate boundary-boundary pairs; drop them.
            std::erase_if(pairs, [](auto& pr) { return pr.first < 0 && pr.second < 0; });
        }
    };

    // Multi-start: descend from the greedy seed, then from perturbed copies
    // of the incumbent (seeded by the defect set, so fully deterministic),
    // keeping the lightest local optimum found.
    Pairs best_pairs = m.pairs;
    descend(best_pairs);
    int64_t best_w = total(best_pairs);
    uint64_t h = 0x9E3779B97F4A7C15ULL;
    for (int32_t v : g.defects) h = mix_seed(h, static_cast<uint64_t>(v));
    // Larger instances have more local optima; spend more restarts there.
    const int restarts = best_pairs.size() > 8 ? 32 : 8;
    for (int r = 1; r <= restarts && best_pairs.size() > 1; ++r) {
        Rng rng(mix_seed(h, static_cast<uint64_t>(r)));
        Pairs pairs = best_pairs;
        for (int kick = 0; kick < 3; ++kick) {
            size_t a = rng.below(pairs.size());
            size_t b = rng.below(pairs.size());
            if (a == b) continue;
            auto [p, q] = pairs[a];
            auto [rr, ss] = pairs[b];
            pairs[a] = mk(p, rr);
            pairs[b] = mk(q, ss);
        }
        std::erase_if(pairs, [](auto& pr) { return pr.first < 0 && pr.second < 0; });
        descend(pairs);
        int64_t w = total(pairs);
        if (w < best_w) {
            best_w = w;
            best_pairs = pairs;
        }
    }
    m.pairs = std::move(best_pairs);
    std::sort(m.pairs.begin(), m.pairs.end());
    finalize(m, g);
    return m;
}

Correction matching_to_correction(const Lattice& lat, const DefectGraph& g,
                                  const Matching& matching) {
    const int L = lat.distance();
    std::vector<uint8_t> flip(lat.edge_count(), 0);
    auto toggle_step = [&](int32_t from, int32_t to) {
        int32_t e = lat.edge_between(from, to);
        if (e < 0) throw std::runtime_error("staircase step left the lattice");
        flip[e] ^= 1;
        return to;
    };
    auto vid = [&](int x, int y, int t) { return (t * L + y) * L + x; };

    for (auto [i, j] : matching.pairs) {
        int32_t a = g.defects[i];
        int x = lat.x_of(a), y = lat.y_of(a), t = lat.t_of(a);
        int32_t cur = a;
        if (j < 0) {
            // Walk to the nearest open side, then the dangling edge.
            int step = (x + 1 <= L - x) ? -1 : 1;
            while (x > 0 && x < L - 1) {
                cur = toggle_step(cur, vid(x + step, y, t));
                x += step;
            }
            int32_t virt = -1;
            for (const Neighbour& nb : lat.neighbours(cur))
                if (lat.is_virtual(nb.vertex) &&
                    ((step < 0 && lat.x_of(nb.vertex) < 0) || (step > 0 && lat.x_of(nb.vertex) >= L)))
                    virt = nb.vertex;
            cur = toggle_step(cur, virt);
            continue;
        }
        int32_t b = g.defects[j];
        // Wrap-minimal signed delta; ties resolve to the positive direction.
        auto axis_steps = [&](int from, int to, bool wrapped) {
            int d = to - from;
            if (!wrapped) return d;
            d %= L;
            if (d < 0) d += L;
            if (2 * d > L) d -= L;
            return d;
        };
        bool wrap = lat.kind() == CodeKind::toric;
        int dx = axis_steps(x, lat.x_of(b), wrap);
        int dy = axis_steps(y, lat.y_of(b), wrap);
        int dt = lat.t_of(b) - t;
        while (dx != 0) {
            int nx = ((x + (dx > 0 ? 1 : -1)) % L + L) % L;
            cur = toggle_step(cur, vid(nx, y, t));
            x = nx;
            dx += dx > 0 ? -1 : 1;
        }
        while (dy != 0) {
            int ny = ((y + (dy > 0 ? 1 : -1)) % L + L) % L;
            cur = toggle_step(cur, vid(x, ny, t));
            y = ny;
            dy += dy > 0 ? -1 : 1;
        }
        while (dt != 0) {
            int nt = t + (dt > 0 ? 1 : -1);
            cur = toggle_step(cur, vid(x, y, nt));
            t = nt;
            dt += dt > 0 ? -1 : 1;
        }
    }
    Correction corr;
    for (int32_t e = 0; e < lat.edge_count(); ++e)
        if (flip[e]) corr.push_back(e);
    return corr;
}

Correction decode_mwpm(const Lattice& lat, const Syndrome& syndrome) {
    DefectGraph g = build_defect_graph(lat, syndrome);
    Matching m = g.defects.size() <= 16 ? mwpm_exact(g) : mwpm_local(g);
    return matching_to_correction(lat, g, m);
}

}  // namespace uflab
