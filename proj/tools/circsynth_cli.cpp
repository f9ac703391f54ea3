#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "circsynth/circulant.hpp"
#include "circsynth/fixtures.hpp"
#include "circsynth/io.hpp"
#include "circsynth/triangular.hpp"

using namespace circsynth;

namespace {

CostKind parse_cost(const std::string& s) {
    if (s == "sum") return CostKind::HSum;
    if (s == "prod") return CostKind::HProdPair;
    if (s == "sq") return CostKind::HSqPair;
    throw CLI::ValidationError("--cost", "expected sum, prod or sq");
}

void emit(const Circuit& c, const std::string& out_path) {
    if (out_path.empty())
        std::cout << print_circuit(c);
    else
        save_circuit(c, out_path);
}

void print_report(const SynthesisReport& rep, double seconds) {
    std::printf("best.quantum_depth %u\n", rep.best_quantum_depth);
    std::printf("best.classical_depth %u\n", rep.best_classical_depth);
    std::printf("best.gate_count %zu\n", rep.best_gate_count);
    std::printf("best.trial %llu\n", static_cast<unsigned long long>(rep.best_trial));
    std::printf("trials.run %llu\n", static_cast<unsigned long long>(rep.trials_run));
    std::printf("trials.failed %llu\n", static_cast<unsigned long long>(rep.failures));
    for (const auto& pb : rep.per_block)
        std::printf("block_size %zu candidates %zu trials %llu failures %llu best_depth %u "
                    "best_gates %zu\n",
                    pb.block_size, pb.candidates, static_cast<unsigned long long>(pb.trials_run),
                    static_cast<unsigned long long>(pb.failures), pb.best_depth, pb.best_gates);
    std::printf("wall_seconds %.2f\n", seconds);
}

int do_verify(const Circuit& c, const BitMatrix& m) {
    BitMatrix sim = simulate(c);
    DepthReport rep = depth_report(c);
    if (sim == m) {
        std::printf("pass quantum_depth=%u classical_depth=%u gates=%zu\n", rep.quantum_depth,
                    rep.classical_depth, rep.gate_count);
        return 0;
    }
    for (std::size_t r = 0; r < m.dim(); ++r)
        if (sim.row(r)[0] != m.row(r)[0] ||
            !std::equal(sim.row(r).begin(), sim.row(r).end(), m.row(r).begin())) {
            std::printf("fail first_mismatch_row=%zu\n", r);
            return 1;
        }
    std::printf("fail dimension_mismatch\n");
    return 1;
}

struct BenchTarget {
    std::string name;
    SynthMode mode;
    uint32_t ref_depth;    // 0 = not applicable
    std::size_t ref_gates;
    uint32_t max_depth_ok;    // acceptance bound, 0 = informational
    std::size_t max_gates_ok;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"CNOT circuit synthesis for block-circulant GF(2) linear layers"};
    app.require_subcommand(1);

    std::string in_path, out_path, mode = "depth", cost = "sq";
    uint64_t trials = 1000, seed = 0;
    unsigned threshold = 8, jobs = 0;
    uint32_t max_depth = 0;
    bool no_fallback = false, no_dedup = false;

    auto add_synth_flags = [&](CLI::App* s) {
        s->add_option("--in", in_path, "matrix file")->required();
        s->add_option("--out", out_path, "circuit output file");
        s->add_option("--mode", mode, "depth|size");
        s->add_option("--cost", cost, "sum|prod|sq (depth mode)");
        s->add_option("--trials", trials);
        s->add_option("--seed", seed);
        s->add_option("--threshold", threshold, "max block count for exhaustive enumeration");
        s->add_option("--max-depth", max_depth, "layer budget per trial (0 = 5n)");
        s->add_option("--jobs", jobs, "worker threads (0 = auto)");
        s->add_flag("--no-fallback", no_fallback, "skip the whole-matrix block size");
        s->add_flag("--no-dedup", no_dedup, "keep first-level mirror-direction candidates");
    };

    auto* synth = app.add_subcommand("synth", "synthesize a circuit for a matrix");
    add_synth_flags(synth);

    auto* synth_tri = app.add_subcommand("synth-tri", "synthesize a unit upper-triangular matrix");
    synth_tri->add_option("--in", in_path, "matrix file")->required();
    synth_tri->add_option("--out", out_path, "circuit output file");

    std::string circuit_path, matrix_path;
    auto* verify = app.add_subcommand("verify", "check a circuit against a matrix");
    verify->add_option("--circuit", circuit_path)->required();
    verify->add_option("--matrix", matrix_path)->required();

    auto* depth = app.add_subcommand("depth", "report depth metrics of a circuit");
    depth->add_option("--in", in_path, "circuit file")->required();

    auto* opt = app.add_subcommand("opt", "depth-compact a circuit");
    opt->add_option("--in", in_path, "circuit file")->required();
    opt->add_option("--out", out_path, "circuit output file");

    std::string fixture_name;
    auto* fixtures = app.add_subcommand("fixtures", "emit a bundled matrix or circuit");
    fixtures->add_option("name", fixture_name,
                         "mixcolumn | mixcolumn-tri | whirlwind-m0 | whirlwind-depth17 | "
                         "whirlwind-xor159")
        ->required();
    fixtures->add_option("--out", out_path, "output file");

    auto* bench = app.add_subcommand("bench", "run the reference benchmark targets");
    bench->add_option("--trials", trials);
    bench->add_option("--seed", seed);
    bench->add_option("--jobs", jobs);

    CLI11_PARSE(app, argc, argv);

    try {
        if (synth->parsed()) {
            BitMatrix m = load_matrix(in_path);
            SynthesisConfig cfg;
            cfg.mode = mode == "size" ? SynthMode::Size : SynthMode::Depth;
            if (mode != "size" && mode != "depth")
                throw CLI::ValidationError("--mode", "expected depth or size");
            cfg.cost = parse_cost(cost);
            cfg.trials = trials;
            cfg.seed = seed;
            cfg.max_depth = max_depth;
            cfg.jobs = jobs;
            cfg.circulant.threshold = threshold;
            cfg.circulant.allow_fallback = !no_fallback;
            cfg.circulant.dedup_first_level = !no_dedup;
            auto t0 = std::chrono::steady_clock::now();
            SynthesisReport rep = synthesize(m, cfg);
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            if (simulate(rep.best) != m) {
                std::fprintf(stderr, "internal error: result failed verification\n");
                return 2;
            }
            print_report(rep, secs);
            emit(rep.best, out_path);
            return 0;
        }
        if (synth_tri->parsed()) {
            BitMatrix m = load_matrix(in_path);
            Circuit c = synth_unit_upper_triangular(m);
            DepthReport rep = depth_report(c);
            std::printf("quantum_depth %u\nclassical_depth %u\ngate_count %zu\n", rep.quantum_depth,
                        rep.classical_depth, rep.gate_count);
            emit(c, out_path);
            return 0;
        }
        if (verify->parsed())
            return do_verify(load_circuit(circuit_path), load_matrix(matrix_path));
        if (depth->parsed()) {
            DepthReport rep = depth_report(load_circuit(in_path));
            std::printf("quantum_depth %u\nclassical_depth %u\ngate_count %zu\n", rep.quantum_depth,
                        rep.classical_depth, rep.gate_count);
            return 0;
        }
        if (opt->parsed()) {
            Circuit c = load_circuit(in_path);
            Circuit o = apply_bidirectional_opt(c);
            std::printf("quantum_depth %u -> %u\n", quantum_depth(c), quantum_depth(o));
            emit(o, out_path);
            return 0;
        }
        if (fixtures->parsed()) {
            if (fixture_name == "mixcolumn") {
                BitMatrix m = build_aes_mixcolumn();
                if (out_path.empty()) std::cout << print_matrix(m);
                else save_matrix(m, out_path);
            } else if (fixture_name == "mixcolumn-tri") {
                BitMatrix m = build_mixcolumn_triangular();
                if (out_path.empty()) std::cout << print_matrix(m);
                else save_matrix(m, out_path);
            } else if (fixture_name == "whirlwind-m0") {
                BitMatrix m = whirlwind_m0();
                if (out_path.empty()) std::cout << print_matrix(m);
                else save_matrix(m, out_path);
            } else if (fixture_name == "whirlwind-depth17") {
                emit(whirlwind_depth17_circuit(), out_path);
            } else if (fixture_name == "whirlwind-xor159") {
                emit(whirlwind_xor159_circuit(), out_path);
            } else {
                std::fprintf(stderr, "unknown fixture '%s'\n", fixture_name.c_str());
                return 1;
            }
            return 0;
        }
        if (bench->parsed()) {
            const BenchTarget targets[] = {
                {"aes-mixcolumn depth", SynthMode::Depth, 10, 107, 12, 0},
                {"whirlwind-m0 depth", SynthMode::Depth, 17, 200, 0, 0},
                {"whirlwind-m0 size", SynthMode::Size, 0, 159, 0, 190},
            };
            int rc = 0;
            std::printf("%-22s %8s %8s %10s %8s\n", "target", "depth", "gates", "reference",
                        "status");
            for (const BenchTarget& t : targets) {
                BitMatrix m = t.name.rfind("aes", 0) == 0 ? build_aes_mixcolumn() : whirlwind_m0();
                SynthesisConfig cfg;
                cfg.mode = t.mode;
                cfg.trials = trials;
                cfg.seed = seed;
                cfg.jobs = jobs;
                cfg.circulant.allow_fallback = false;
                try {
                    SynthesisReport rep = synthesize(m, cfg);
                    bool ok = simulate(rep.best) == m;
                    if (ok && t.max_depth_ok) ok = rep.best_quantum_depth <= t.max_depth_ok;
                    if (ok && t.max_gates_ok) ok = rep.best_gate_count <= t.max_gates_ok;
                    char ref[32];
                    if (t.ref_depth)
                        std::snprintf(ref, sizeof ref, "%u/%zu", t.ref_depth, t.ref_gates);
                    else
                        std::snprintf(ref, sizeof ref, "%zu", t.ref_gates);
                    std::printf("%-22s %8u %8zu %10s %8s\n", t.name.c_str(),
                                rep.best_quantum_depth, rep.best_gate_count, ref,
                                ok ? "ok" : "MISS");
                    if (!ok) rc = 1;
                } catch (const std::exception& e) {
                    std::printf("%-22s failed: %s\n", t.name.c_str(), e.what());
                    rc = 1;
                }
            }
            // triangular route for MixColumn, informational (reference 10/105)
            Circuit tri = apply_bidirectional_opt(synth_unit_upper_triangular(
                build_mixcolumn_triangular()));
            DepthReport trep = depth_report(tri);
            std::printf("%-22s %8u %8zu %10s %8s\n", "mixcolumn-tri", trep.quantum_depth,
                        trep.gate_count, "10/105", "info");
            return rc;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
