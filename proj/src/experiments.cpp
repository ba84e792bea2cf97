#include "uflab/experiments.hpp"

#include <bit>
#include <stdexcept>

#include "uflab/growth.hpp"
#include "uflab/matcher.hpp"
#include "uflab/noise.hpp"
#include "uflab/peeler.hpp"
#include "uflab/percolation.hpp"
#include "uflab/rng.hpp"
#include "uflab/stats.hpp"

namespace uflab {

namespace {

// Experiment tags keep the per-point streams of different subcommands
// disjoint even when their numeric parameters coincide.
constexpr uint64_t kTagDsuBench = 0x647375u;
constexpr uint64_t kTagAccess = 0x616363u;
constexpr uint64_t kTagThreshold = 0x746872u;
constexpr uint64_t kTagCluster = 0x636c75u;
constexpr uint64_t kTagBondPerc = 0x626f6eu;
constexpr uint64_t kTagErasure = 0x657261u;

uint64_t mode_code(DsuMode mode) {
    return (mode.by_size ? 4u : 0u) + static_cast<uint64_t>(mode.compression);
}

int rounds_for(int d, bool rounds_eq_d) { return rounds_eq_d ? d : 1; }

double q_for(int rounds, double p) { return rounds > 1 ? p : 0.0; }

}  // namespace

uint64_t double_bits(double x) { return std::bit_cast<uint64_t>(x); }

uint64_t point_seed(uint64_t master, std::initializer_list<uint64_t> parts) {
    uint64_t s = master;
    for (uint64_t part : parts) s = mix_seed(s, part);
    return s;
}

AccessMeans access_count_point(CodeKind code, int d, int rounds, double p, double q,
                               DsuMode mode, int64_t trials, uint64_t master) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    Lattice lat = Lattice::build({code, d, rounds});
    // The trial stream is independent of the DSU mode so every mode decodes
    // the identical error set.
    uint64_t point = point_seed(master, {kTagAccess, static_cast<uint64_t>(code),
                                         static_cast<uint64_t>(d), static_cast<uint64_t>(rounds),
                                         double_bits(p), double_bits(q)});
    long double rr = 0, rw = 0, sr = 0, sw = 0;
    for (int64_t i = 0; i < trials; ++i) {
        uint64_t trial_seed = mix_seed(point, static_cast<uint64_t>(i));
        ErrorSample errors = sample_errors(lat, {p, q}, trial_seed);
        Syndrome syn = compute_syndrome(lat, errors);
        ValidationResult res = validate_syndrome(lat, syn, mode);
        rr += res.counts.root_reads;
        rw += res.counts.root_writes;
        sr += res.counts.size_reads;
        sw += res.counts.size_writes;
    }
    AccessMeans m;
    m.root_reads = static_cast<double>(rr / trials);
    m.root_writes = static_cast<double>(rw / trials);
    m.size_reads = static_cast<double>(sr / trials);
    m.size_writes = static_cast<double>(sw / trials);
    return m;
}

RatePoint threshold_point(CodeKind code, DecoderKind decoder, int d, int rounds, double p,
                          double q, int64_t trials, uint64_t master) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    Lattice lat = Lattice::build({code, d, rounds});
    uint64_t point = point_seed(
        master, {kTagThreshold, static_cast<uint64_t>(code), static_cast<uint64_t>(decoder),
                 static_cast<uint64_t>(d), static_cast<uint64_t>(rounds), double_bits(p),
                 double_bits(q)});
    RatePoint out;
    out.trials = trials;
    for (int64_t i = 0; i < trials; ++i) {
        uint64_t trial_seed = mix_seed(point, static_cast<uint64_t>(i));
        ErrorSample errors = sample_errors(lat, {p, q}, trial_seed);
        Syndrome syn = compute_syndrome(lat, errors);
        Correction corr;
        if (decoder == DecoderKind::uf) {
            ValidationResult res =
                validate_syndrome(lat, syn, {true, Compression::full});
            SpanningForest forest = spanning_forest(lat, res.erasure);
            corr = peel(lat, forest, syn);
        } else {
            corr = decode_mwpm(lat, syn);
        }
        if (logical_failure(lat, errors, corr)) ++out.hits;
    }
    return out;
}

ClusterPoint cluster_stats_point(CodeKind code, int d, int rounds, double p, int64_t trials,
                                 uint64_t master) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    Lattice lat = Lattice::build({code, d, rounds});
    uint64_t point = point_seed(master, {kTagCluster, static_cast<uint64_t>(code),
                                         static_cast<uint64_t>(d), static_cast<uint64_t>(rounds),
                                         double_bits(p)});
    long double total_size = 0, total_perim = 0;
    int64_t total_count = 0;
    for (int64_t i = 0; i < trials; ++i) {
        uint64_t trial_seed = mix_seed(point, static_cast<uint64_t>(i));
        ErrorSample errors = sample_errors(lat, {p, q_for(rounds, p)}, trial_seed);
        Syndrome syn = compute_syndrome(lat, errors);
        ValidationResult res = validate_syndrome(lat, syn, {true, Compression::full});
        total_count += res.stats.count;
        for (int64_t s : res.stats.sizes) total_size += s;
        for (int64_t b : res.stats.perimeters) total_perim += b;
    }
    ClusterPoint out;
    if (total_count > 0) {
        out.mean_size = static_cast<double>(total_size / total_count);
        out.mean_perimeter = static_cast<double>(total_perim / total_count);
    }
    out.mean_count = static_cast<double>(total_count) / static_cast<double>(trials);
    return out;
}

RatePoint bond_perc_point(int L, double p, int64_t trials, uint64_t master) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    uint64_t point =
        point_seed(master, {kTagBondPerc, static_cast<uint64_t>(L), double_bits(p)});
    RatePoint out;
    out.trials = trials;
    for (int64_t i = 0; i < trials; ++i) {
        if (bond_percolation_trial(L, p, mix_seed(point, static_cast<uint64_t>(i)))) ++out.hits;
    }
    return out;
}

RatePoint erasure_perc_point(ErasureModel model, ErasureEstimator estimator, int L, double p,
                             int64_t trials, uint64_t master) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    int rounds = model == ErasureModel::three_d ? L : 1;
    Lattice lat = Lattice::build({CodeKind::toric, L, rounds});
    double q = q_for(rounds, p);
    uint64_t point = point_seed(master, {kTagErasure, static_cast<uint64_t>(model),
                                         static_cast<uint64_t>(L), double_bits(p)});
    RatePoint out;
    out.trials = trials;
    for (int64_t i = 0; i < trials; ++i) {
        uint64_t trial_seed = mix_seed(point, static_cast<uint64_t>(i));
        ErrorSample errors = sample_errors(lat, {p, q}, trial_seed);
        Syndrome syn = compute_syndrome(lat, errors);
        bool hit;
        if (estimator == ErasureEstimator::validate) {
            // Validated clusters coincide with erased-edge components, so
            // per-tree percolation is a plain component check.
            Erasure erasure = validate_syndrome(lat, syn, {true, Compression::full}).erasure;
            hit = erasure_percolates(lat, erasure);
        } else {
            hit = mwpm_ball_percolates(lat, syn);
        }
        if (hit) ++out.hits;
    }
    return out;
}

Table run_dsu_bench(const std::vector<int64_t>& ns, const std::vector<int64_t>& ms,
                    const std::vector<DsuMode>& modes, uint64_t seed) {
    if (ns.empty() || ms.empty() || modes.empty())
        throw std::invalid_argument("dsu-bench: empty parameter list");
    Table t;
    t.name = "dsu_bench";
    t.header = {"n", "m", "mode", "accesses_per_merge"};
    for (int64_t n : ns) {
        for (int64_t m : ms) {
            for (DsuMode mode : modes) {
                uint64_t point =
                    point_seed(seed, {kTagDsuBench, static_cast<uint64_t>(n),
                                      static_cast<uint64_t>(m), mode_code(mode)});
                double per_merge = bench_random_merges(static_cast<int32_t>(n),
                                                       static_cast<uint64_t>(m), mode, point);
                t.add_row({n, m, mode_name(mode), per_merge});
            }
        }
    }
    return t;
}

Table run_access_count(CodeKind code, const std::vector<int64_t>& ds,
                       const std::vector<double>& ps, const std::vector<DsuMode>& modes,
                       int64_t trials, uint64_t seed) {
    if (ds.empty() || ps.empty() || modes.empty())
        throw std::invalid_argument("access-count: empty parameter list");
    Table t;
    t.name = "access_count";
    t.header = {"d",          "p",          "mode",       "root_reads",
                "root_writes", "size_reads", "size_writes", "scale_factor_vs_naive"};
    DsuMode naive{false, Compression::none};
    for (int64_t d : ds) {
        int di = static_cast<int>(d);
        for (double p : ps) {
            AccessMeans base = access_count_point(code, di, 1, p, 0.0, naive, trials, seed);
            for (DsuMode mode : modes) {
                AccessMeans m = mode == naive
                                    ? base
                                    : access_count_point(code, di, 1, p, 0.0, mode, trials, seed);
                double scale = base.root_total() > 0 ? m.root_total() / base.root_total() : 1.0;
                t.add_row({d, p, mode_name(mode), m.root_reads, m.root_writes, m.size_reads,
                           m.size_writes, scale});
            }
        }
    }
    return t;
}

Table run_threshold(CodeKind code, DecoderKind decoder, const std::vector<int64_t>& ds,
                    const std::vector<double>& ps, bool rounds_eq_d, int64_t trials,
                    uint64_t seed) {
    if (ds.empty() || ps.empty()) throw std::invalid_argument("threshold: empty parameter list");
    Table t;
    t.name = "threshold";
    t.header = {"d", "p", "failures", "trials", "rate", "wilson_lower", "wilson_upper"};
    for (int64_t d : ds) {
        int di = static_cast<int>(d);
        int rounds = rounds_for(di, rounds_eq_d);
        for (double p : ps) {
            RatePoint pt =
                threshold_point(code, decoder, di, rounds, p, q_for(rounds, p), trials, seed);
            WilsonInterval w = wilson_interval(pt.hits, pt.trials, 2.0);
            t.add_row({d, p, pt.hits, pt.trials, pt.rate(), w.lower, w.upper});
        }
    }
    return t;
}

std::vector<Table> run_cluster_stats(CodeKind code, const std::vector<int64_t>& ds,
                                     const std::vector<double>& ps, int64_t trials,
                                     uint64_t seed) {
    if (ds.empty() || ps.empty())
        throw std::invalid_argument("cluster-stats: empty parameter list");
    Table stats;
    stats.name = "cluster_stats";
    stats.header = {"d", "p", "mean_size", "mean_perimeter", "mean_count"};
    Table fits;
    fits.name = "cluster_fits";
    fits.header = {"p", "quantity", "a", "b", "r2", "intercept_stderr"};
    for (double p : ps) {
        std::vector<std::pair<double, double>> size_pts, perim_pts, count_pts;
        for (int64_t d : ds) {
            ClusterPoint pt = cluster_stats_point(code, static_cast<int>(d), 1, p, trials, seed);
            stats.add_row({d, p, pt.mean_size, pt.mean_perimeter, pt.mean_count});
            double dd = static_cast<double>(d);
            size_pts.emplace_back(dd, pt.mean_size);
            perim_pts.emplace_back(dd, pt.mean_perimeter);
            count_pts.emplace_back(dd * dd, pt.mean_count);
        }
        if (ds.size() >= 3) {
            FitResult fs = fit_hyperbolic(size_pts);
            FitResult fp = fit_hyperbolic(perim_pts);
            fits.add_row({p, std::string("size_hyperbolic"), fs.a, fs.b, fs.r2,
                          fs.intercept_stderr});
            fits.add_row({p, std::string("perimeter_hyperbolic"), fp.a, fp.b, fp.r2,
                          fp.intercept_stderr});
        }
        if (ds.size() >= 2) {
            FitResult fc = fit_linear(count_pts);
            fits.add_row({p, std::string("count_vs_d2_linear"), fc.a, fc.b, fc.r2,
                          fc.intercept_stderr});
        }
        if (ds.size() >= 4) {
            // Counts carry an O(d) boundary term on top of the leading d^2
            // scaling; fit it explicitly so the intercept is unbiased.
            std::vector<std::pair<double, double>> dy;
            for (size_t i = 0; i < ds.size(); ++i)
                dy.emplace_back(static_cast<double>(ds[i]), count_pts[i].second);
            FitResult fq = fit_quadratic(dy);
            fits.add_row({p, std::string("count_boundary_quadratic"), fq.a, fq.b, fq.r2,
                          fq.intercept_stderr});
        }
    }
    std::vector<Table> out;
    out.push_back(std::move(stats));
    if (!fits.rows.empty()) out.push_back(std::move(fits));
    return out;
}

Table run_bond_perc(const std::vector<int64_t>& Ls, const std::vector<double>& ps,
                    int64_t trials, uint64_t seed) {
    if (Ls.empty() || ps.empty()) throw std::invalid_argument("bond-perc: empty parameter list");
    Table t;
    t.name = "bond_perc";
    t.header = {"L", "p", "hits", "trials", "rate", "wilson_lower", "wilson_upper"};
    for (int64_t L : Ls) {
        for (double p : ps) {
            RatePoint pt = bond_perc_point(static_cast<int>(L), p, trials, seed);
            WilsonInterval w = wilson_interval(pt.hits, pt.trials, 2.0);
            t.add_row({L, p, pt.hits, pt.trials, pt.rate(), w.lower, w.upper});
        }
    }
    return t;
}

Table run_erasure_perc(ErasureModel model, ErasureEstimator estimator,
                       const std::vector<int64_t>& Ls, const std::vector<double>& ps,
                       int64_t trials, uint64_t seed) {
    if (Ls.empty() || ps.empty())
        throw std::invalid_argument("erasure-perc: empty parameter list");
    Table t;
    t.name = "erasure_perc";
    t.header = {"L", "p", "hits", "trials", "rate", "wilson_lower", "wilson_upper"};
    for (int64_t L : Ls) {
        for (double p : ps) {
            RatePoint pt = erasure_perc_point(model, estimator, static_cast<int>(L), p, trials,
                                              seed);
            WilsonInterval w = wilson_interval(pt.hits, pt.trials, 2.0);
            t.add_row({L, p, pt.hits, pt.trials, pt.rate(), w.lower, w.upper});
        }
    }
    return t;
}

}  // namespace uflab
