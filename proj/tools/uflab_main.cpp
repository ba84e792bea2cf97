#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "uflab/dsu.hpp"
#include "uflab/experiments.hpp"
#include "uflab/table.hpp"

namespace {

using namespace uflab;

struct CommonOpts {
    uint64_t seed = kDefaultSeed;
    std::string out;  // empty = stdout
    std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--seed", opts.seed, "master seed")->capture_default_str();
    cmd->add_option("--out", opts.out, "output path (default: stdout)");
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
}

void emit(const std::vector<Table>& tables, const CommonOpts& opts) {
    std::string text = opts.format == "json" ? to_json(tables) : to_csv(tables);
    if (opts.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opts.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + opts.out);
    f << text;
}

std::vector<DsuMode> parse_modes(const std::vector<std::string>& names) {
    std::vector<DsuMode> modes;
    for (const std::string& name : names) modes.push_back(parse_mode(name));
    return modes;
}

CodeKind parse_code(const std::string& name) {
    if (name == "toric") return CodeKind::toric;
    if (name == "planar") return CodeKind::planar;
    throw CLI::ValidationError("--code", "unknown code kind: " + name);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"surface-code union-find decoding experiments"};
    app.require_subcommand(1);

    // dsu-bench
    CommonOpts bench_opts;
    std::vector<int64_t> bench_n{1024}, bench_m{1 << 20};
    std::vector<std::string> bench_modes{"naive", "ubs", "ubs+pc"};
    auto* bench = app.add_subcommand("dsu-bench", "random-merge access benchmark");
    bench->add_option("--n", bench_n, "forest sizes")->delimiter(',')->capture_default_str();
    bench->add_option("--m", bench_m, "merge counts")->delimiter(',')->capture_default_str();
    bench->add_option("--modes", bench_modes, "forest modes")
        ->delimiter(',')
        ->capture_default_str();
    add_common(bench, bench_opts);

    // access-count
    CommonOpts acc_opts;
    std::string acc_code = "planar";
    std::vector<int64_t> acc_d{49};
    std::vector<double> acc_p{0.08};
    std::vector<std::string> acc_modes{"naive", "ubs", "ubs+pc", "ubs+ps"};
    int64_t acc_trials = 1000;
    auto* acc = app.add_subcommand("access-count", "decoder table-access statistics");
    acc->add_option("--code", acc_code, "code kind")
        ->check(CLI::IsMember({"toric", "planar"}))
        ->capture_default_str();
    acc->add_option("--d", acc_d, "distances")->delimiter(',')->capture_default_str();
    acc->add_option("--p", acc_p, "error rates")->delimiter(',')->capture_default_str();
    acc->add_option("--modes", acc_modes, "forest modes")->delimiter(',')->capture_default_str();
    acc->add_option("--trials", acc_trials, "trials per point")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_common(acc, acc_opts);

    // threshold
    CommonOpts thr_opts;
    std::string thr_code = "toric", thr_decoder = "uf";
    std::vector<int64_t> thr_d{9, 13, 17};
    std::vector<double> thr_p{0.08, 0.085, 0.09, 0.095, 0.1, 0.105, 0.11};
    bool thr_rounds_eq_d = false;
    int64_t thr_trials = 10000;
    auto* thr = app.add_subcommand("threshold", "logical failure rate sweep");
    thr->add_option("--code", thr_code, "code kind")
        ->check(CLI::IsMember({"toric", "planar"}))
        ->capture_default_str();
    thr->add_option("--decoder", thr_decoder, "decoder")
        ->check(CLI::IsMember({"uf", "mwpm"}))
        ->capture_default_str();
    thr->add_option("--d", thr_d, "distances")->delimiter(',')->capture_default_str();
    thr->add_option("--p", thr_p, "error rates")->delimiter(',')->capture_default_str();
    thr->add_flag("--rounds-eq-d", thr_rounds_eq_d,
                  "stack d measurement rounds (3D, q=p) instead of one perfect round");
    thr->add_option("--trials", thr_trials, "trials per point")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_common(thr, thr_opts);

    // cluster-stats
    CommonOpts clu_opts;
    std::string clu_code = "planar";
    std::vector<int64_t> clu_d{9, 13, 17, 25, 33, 49};
    std::vector<double> clu_p{0.08};
    int64_t clu_trials = 10000;
    auto* clu = app.add_subcommand("cluster-stats", "validated cluster statistics and fits");
    clu->add_option("--code", clu_code, "code kind")
        ->check(CLI::IsMember({"toric", "planar"}))
        ->capture_default_str();
    clu->add_option("--d", clu_d, "distances")->delimiter(',')->capture_default_str();
    clu->add_option("--p", clu_p, "error rates")->delimiter(',')->capture_default_str();
    clu->add_option("--trials", clu_trials, "trials per point")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_common(clu, clu_opts);

    // bond-perc
    CommonOpts bond_opts;
    std::vector<int64_t> bond_L{8, 16, 32, 64};
    std::vector<double> bond_p{0.4, 0.45, 0.48, 0.5, 0.52, 0.55, 0.6};
    int64_t bond_trials = 500;
    auto* bond = app.add_subcommand("bond-perc", "square-lattice bond percolation");
    bond->add_option("--L", bond_L, "lattice sizes")->delimiter(',')->capture_default_str();
    bond->add_option("--p", bond_p, "bond rates")->delimiter(',')->capture_default_str();
    bond->add_option("--trials", bond_trials, "trials per point")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_common(bond, bond_opts);

    // erasure-perc
    CommonOpts era_opts;
    std::string era_model = "2d", era_estimator;
    std::vector<int64_t> era_L{8, 16, 32, 64};
    std::vector<double> era_p{0.05, 0.1, 0.15};
    int64_t era_trials = 500;
    auto* era = app.add_subcommand("erasure-perc", "validated-erasure percolation rates");
    era->add_option("--model", era_model, "2d (perfect checks) or 3d (q=p, rounds=L)")
        ->check(CLI::IsMember({"2d", "3d"}))
        ->capture_default_str();
    era->add_option("--estimator", era_estimator,
                    "erasure source: validate or mwpm-ball (default: validate for 2d, "
                    "mwpm-ball for 3d)")
        ->check(CLI::IsMember({"validate", "mwpm-ball"}));
    era->add_option("--L", era_L, "lattice sizes")->delimiter(',')->capture_default_str();
    era->add_option("--p", era_p, "error rates")->delimiter(',')->capture_default_str();
    era->add_option("--trials", era_trials, "trials per point")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_common(era, era_opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (bench->parsed()) {
            emit({run_dsu_bench(bench_n, bench_m, parse_modes(bench_modes), bench_opts.seed)},
                 bench_opts);
        } else if (acc->parsed()) {
            emit({run_access_count(parse_code(acc_code), acc_d, acc_p, parse_modes(acc_modes),
                                   acc_trials, acc_opts.seed)},
                 acc_opts);
        } else if (thr->parsed()) {
            DecoderKind decoder = thr_decoder == "uf" ? DecoderKind::uf : DecoderKind::mwpm;
            emit({run_threshold(parse_code(thr_code), decoder, thr_d, thr_p, thr_rounds_eq_d,
                                thr_trials, thr_opts.seed)},
                 thr_opts);
        } else if (clu->parsed()) {
            emit(run_cluster_stats(parse_code(clu_code), clu_d, clu_p, clu_trials,
                                   clu_opts.seed),
                 clu_opts);
        } else if (bond->parsed()) {
            emit({run_bond_perc(bond_L, bond_p, bond_trials, bond_opts.seed)}, bond_opts);
        } else if (era->parsed()) {
            ErasureModel model =
                era_model == "3d" ? ErasureModel::three_d : ErasureModel::two_d;
            if (era_estimator.empty())
                era_estimator = model == ErasureModel::three_d ? "mwpm-ball" : "validate";
            ErasureEstimator estimator = era_estimator == "mwpm-ball"
                                             ? ErasureEstimator::mwpm_ball
                                             : ErasureEstimator::validate;
            emit({run_erasure_perc(model, estimator, era_L, era_p, era_trials, era_opts.seed)},
                 era_opts);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
