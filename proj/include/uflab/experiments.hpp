#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "uflab/dsu.hpp"
#include "uflab/lattice.hpp"
#include "uflab/table.hpp"

namespace uflab {

// Default master seed for reproducible runs.
inline constexpr uint64_t kDefaultSeed = 20260826;

enum class DecoderKind { uf, mwpm };
enum class ErasureModel { two_d, three_d };
enum class ErasureEstimator { validate, mwpm_ball };

// Stable per-point stream derivation: fold the point identity into the
// master seed, then derive per-trial seeds by index. Aggregates are
// independent of execution order by construction.
uint64_t point_seed(uint64_t master, std::initializer_list<uint64_t> parts);
uint64_t double_bits(double x);

// ---- per-point runners (shared by the CLI tables and the acceptance suite)

struct AccessMeans {
    double root_reads = 0, root_writes = 0, size_reads = 0, size_writes = 0;
    double root_total() const { return root_reads + root_writes; }
    double size_total() const { return size_reads + size_writes; }
};
AccessMeans access_count_point(CodeKind code, int d, int rounds, double p, double q,
                               DsuMode mode, int64_t trials, uint64_t master);

struct RatePoint {
    int64_t hits = 0;
    int64_t trials = 0;
    double rate() const { return static_cast<double>(hits) / static_cast<double>(trials); }
};
RatePoint threshold_point(CodeKind code, DecoderKind decoder, int d, int rounds, double p,
                          double q, int64_t trials, uint64_t master);

struct ClusterPoint {
    double mean_size = 0, mean_perimeter = 0, mean_count = 0;
};
ClusterPoint cluster_stats_point(CodeKind code, int d, int rounds, double p, int64_t trials,
                                 uint64_t master);

RatePoint bond_perc_point(int L, double p, int64_t trials, uint64_t master);
RatePoint erasure_perc_point(ErasureModel model, ErasureEstimator estimator, int L, double p,
                             int64_t trials, uint64_t master);

// ---- whole experiments (one table per subcommand, plus fits for cluster-stats)

Table run_dsu_bench(const std::vector<int64_t>& ns, const std::vector<int64_t>& ms,
                    const std::vector<DsuMode>& modes, uint64_t seed);

Table run_access_count(CodeKind code, const std::vector<int64_t>& ds,
                       const std::vector<double>& ps, const std::vector<DsuMode>& modes,
                       int64_t trials, uint64_t seed);

Table run_threshold(CodeKind code, DecoderKind decoder, const std::vector<int64_t>& ds,
                    const std::vector<double>& ps, bool rounds_eq_d, int64_t trials,
                    uint64_t seed);

std::vector<Table> run_cluster_stats(CodeKind code, const std::vector<int64_t>& ds,
                                     const std::vector<double>& ps, int64_t trials,
                                     uint64_t seed);

Table run_bond_perc(const std::vector<int64_t>& Ls, const std::vector<double>& ps,
                    int64_t trials, uint64_t seed);

Table run_erasure_perc(ErasureModel model, ErasureEstimator estimator,
                       const std::vector<int64_t>& Ls, const std::vector<double>& ps,
                       int64_t trials, uint64_t seed);

}  // namespace uflab
