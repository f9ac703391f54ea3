#include "circsynth/circulant.hpp"

#include <atomic>
#include <bit>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace circsynth {

BitMatrix transform_level(const BitMatrix& m, std::size_t step, std::span<const uint8_t> dir_bits,
                          std::vector<std::pair<uint32_t, uint32_t>>& rows,
                          std::vector<std::pair<uint32_t, uint32_t>>& cols) {
    const std::size_t n = m.dim();
    if (step == 0 || 2 * step > n || n % (2 * step) != 0)
        throw std::invalid_argument("transform_level: bad step");
    const std::size_t groups = n / (2 * step);
    if (dir_bits.size() != 2 * groups)
        throw std::invalid_argument("transform_level: need one direction bit per half-block pair");

    BitMatrix out = m;
    std::size_t bit = 0;
    for (std::size_t g = 0; g < groups; ++g) {
        const bool rev = dir_bits[bit++] != 0;
        for (std::size_t j = 0; j < step; ++j) {
            const std::size_t r1 = g * 2 * step + j;
            const std::size_t r2 = r1 + step;
            const std::size_t src = rev ? r1 : r2;
            const std::size_t dst = rev ? r2 : r1;
            out.row_xor(dst, src);
            rows.push_back({static_cast<uint32_t>(src), static_cast<uint32_t>(dst)});
        }
    }
    for (std::size_t g = 0; g < groups; ++g) {
        const bool rev = dir_bits[bit++] != 0;
        for (std::size_t j = 0; j < step; ++j) {
            const std::size_t c1 = g * 2 * step + j;
            const std::size_t c2 = c1 + step;
            const std::size_t src = rev ? c1 : c2;
            const std::size_t dst = rev ? c2 : c1;
            out.col_xor(dst, src);
            cols.push_back({static_cast<uint32_t>(src), static_cast<uint32_t>(dst)});
        }
    }
    return out;
}

namespace {

using OpList = std::vector<std::pair<uint32_t, uint32_t>>;

void recurse_candidates(const BitMatrix& cur, std::size_t n, std::size_t step,
                        std::size_t block_size, bool enumerate, bool top,
                        const CirculantConfig& cfg, Rng& rng, OpList cr, OpList cc,
                        std::vector<CandidateTransform>& out) {
    if (step < block_size) {
        out.push_back({cur, std::move(cr), std::move(cc)});
        return;
    }
    const std::size_t nbits = n / step;
    std::vector<uint8_t> bits(nbits);
    if (enumerate) {
        const uint64_t limit = uint64_t{1} << nbits;
        for (uint64_t s = 0; s < limit; ++s) {
            for (std::size_t i = 0; i < nbits; ++i) bits[i] = static_cast<uint8_t>((s >> i) & 1u);
            if (top && cfg.dedup_first_level && bits[0]) continue;
            OpList cr2 = cr, cc2 = cc;
            BitMatrix next = transform_level(cur, step, bits, cr2, cc2);
            recurse_candidates(next, n, step / 2, block_size, enumerate, false, cfg, rng,
                               std::move(cr2), std::move(cc2), out);
        }
    } else {
        for (auto& b : bits) b = static_cast<uint8_t>(rng() & 1u);
        OpList cr2 = cr, cc2 = cc;
        BitMatrix next = transform_level(cur, step, bits, cr2, cc2);
        recurse_candidates(next, n, step / 2, block_size, enumerate, false, cfg, rng,
                           std::move(cr2), std::move(cc2), out);
    }
}

}  // namespace

std::vector<CandidateTransform> process_circulant(const BitMatrix& m, std::size_t block_size,
                                                  const CirculantConfig& cfg, Rng& rng) {
    const std::size_t n = m.dim();
    if (n == 0 || !std::has_single_bit(n)) throw NotPowerOfTwo(n);
    if (block_size == 0 || !std::has_single_bit(block_size) || block_size > n)
        throw std::invalid_argument("process_circulant: bad block size");
    if (!is_block_circulant(m, block_size)) throw NotCirculantAtBlockSize(block_size);

    std::vector<CandidateTransform> out;
    if (block_size == n) {
        out.push_back({m, {}, {}});
        return out;
    }
    const bool enumerate = n / block_size <= cfg.threshold;
    recurse_candidates(m, n, n / 2, block_size, enumerate, true, cfg, rng, {}, {}, out);
    return out;
}

std::size_t expected_candidate_count(std::size_t n, std::size_t block_size, bool dedup) {
    if (block_size >= n) return 1;
    const std::size_t t = n / block_size;
    const std::size_t c = std::size_t{1} << (2 * (t - 1));  // 4^(t-1)
    return dedup ? c / 2 : c;
}

namespace {

// Full circuit around a back-end result: column ops as prefix gates with
// control/target exchanged, then the back-end gates, then the row ops in
// reverse order conjugated through the back-end's terminal permutation.
Circuit assemble_full(std::size_t n, const CandidateTransform& ct, const Circuit& inner) {
    std::vector<Gate> gates;
    gates.reserve(ct.c_c.size() + inner.gates.size() + ct.c_r.size());
    for (auto [src, dst] : ct.c_c) gates.push_back({dst, src});
    gates.insert(gates.end(), inner.gates.begin(), inner.gates.end());
    const Permutation& q = inner.out_perm;
    for (auto it = ct.c_r.rbegin(); it != ct.c_r.rend(); ++it)
        gates.push_back({q(it->first), q(it->second)});
    return Circuit(static_cast<uint32_t>(n), std::move(gates), q);
}

struct Slot {
    std::size_t block_size;
    std::size_t block_index;
    std::size_t cand_index;
    bool random_mode;
    CandidateTransform cand;  // unused when random_mode
};

struct BestEntry {
    bool valid = false;
    uint64_t k1 = 0, k2 = 0;
    std::size_t block_size = 0;
    std::size_t cand_index = 0;
    uint64_t trial = 0;
    Circuit circuit;
    DepthReport rep{};

    bool beats(const BestEntry& o) const {
        if (!valid) return false;
        if (!o.valid) return true;
        auto key = [](const BestEntry& e) {
            return std::tuple(e.k1, e.k2, e.block_size, e.cand_index, e.trial);
        };
        return key(*this) < key(o);
    }
};

unsigned resolve_jobs(unsigned configured, uint64_t trials) {
    unsigned jobs = configured;
    if (jobs == 0) {
        if (const char* env = std::getenv("CIRC_SYNTH_JOBS")) {
            long v = std::strtol(env, nullptr, 10);
            if (v > 0) jobs = static_cast<unsigned>(v);
        }
    }
    if (jobs == 0) jobs = std::thread::hardware_concurrency();
    if (jobs == 0) jobs = 1;
    if (trials > 0 && trials < jobs) jobs = static_cast<unsigned>(trials);
    return jobs;
}

}  // namespace

SynthesisReport synthesize(const BitMatrix& m, const SynthesisConfig& cfg) {
    const std::size_t n = m.dim();
    if (n == 0 || !std::has_single_bit(n)) throw NotPowerOfTwo(n);
    if (cfg.trials == 0) throw std::invalid_argument("synthesize: trials must be positive");
    (void)inverse(m);  // singular input fails before any trial runs

    std::vector<std::size_t> block_sizes;
    if (auto min_e = min_circulant_block_exponent(m))
        for (std::size_t bs = std::size_t{1} << *min_e; bs <= n / 2; bs <<= 1)
            block_sizes.push_back(bs);
    if (cfg.circulant.allow_fallback) block_sizes.push_back(n);
    if (block_sizes.empty()) throw NoCandidateSucceeded();

    std::vector<Slot> slots;
    Rng setup_rng = make_trial_rng(cfg.seed, ~uint64_t{0});
    for (std::size_t bi = 0; bi < block_sizes.size(); ++bi) {
        const std::size_t bs = block_sizes[bi];
        if (bs < n && n / bs > cfg.circulant.threshold) {
            // too many blocks to enumerate: one slot, fresh random string per trial
            slots.push_back({bs, bi, 0, true, {}});
            continue;
        }
        auto cands = process_circulant(m, bs, cfg.circulant, setup_rng);
        for (std::size_t ci = 0; ci < cands.size(); ++ci)
            slots.push_back({bs, bi, ci, false, std::move(cands[ci])});
    }

    SynthesisReport report;
    report.per_block.resize(block_sizes.size());
    for (std::size_t bi = 0; bi < block_sizes.size(); ++bi)
        report.per_block[bi].block_size = block_sizes[bi];
    for (const Slot& s : slots) report.per_block[s.block_index].candidates += 1;

    const bool depth_mode = cfg.mode == SynthMode::Depth;
    std::atomic<uint64_t> next{0};
    std::mutex merge_mtx;
    BestEntry global_best;
    std::vector<BestEntry> block_best(block_sizes.size());
    std::exception_ptr worker_error;

    auto worker = [&] {
        BestEntry local_best;
        std::vector<BestEntry> local_block(block_sizes.size());
        std::vector<uint64_t> local_runs(block_sizes.size(), 0), local_fails(block_sizes.size(), 0);
        try {
            uint64_t tr;
            while ((tr = next.fetch_add(1)) < cfg.trials) {
                const Slot& slot = slots[tr % slots.size()];
                Rng rng = make_trial_rng(cfg.seed, tr);
                CandidateTransform random_ct;
                const CandidateTransform* ct = &slot.cand;
                if (slot.random_mode) {
                    random_ct = std::move(
                        process_circulant(m, slot.block_size, cfg.circulant, rng).front());
                    ct = &random_ct;
                }
                local_runs[slot.block_index] += 1;
                std::optional<HeuResult> hr;
                try {
                    if (depth_mode)
                        hr = depth_greedy(ct->m_prime, cfg.cost, rng, cfg.max_depth);
                    else
                        hr = size_greedy(ct->m_prime, rng);
                } catch (const std::exception&) {
                    hr.reset();
                }
                if (!hr) {
                    local_fails[slot.block_index] += 1;
                    continue;
                }
                Circuit full = apply_bidirectional_opt(assemble_full(n, *ct, hr->circuit));
                if (simulate(full) != m) {
                    local_fails[slot.block_index] += 1;
                    continue;
                }
                DepthReport rep = depth_report(full);
                BestEntry e;
                e.valid = true;
                e.k1 = depth_mode ? rep.quantum_depth : rep.gate_count;
                e.k2 = depth_mode ? rep.gate_count : rep.quantum_depth;
                e.block_size = slot.block_size;
                e.cand_index = slot.cand_index;
                e.trial = tr;
                e.rep = rep;
                if (e.beats(local_block[slot.block_index])) {
                    BestEntry be = e;
                    local_block[slot.block_index] = std::move(be);
                }
                if (e.beats(local_best)) {
                    e.circuit = std::move(full);
                    local_best = std::move(e);
                }
            }
        } catch (...) {
            std::lock_guard lk(merge_mtx);
            if (!worker_error) worker_error = std::current_exception();
        }
        std::lock_guard lk(merge_mtx);
        if (local_best.beats(global_best)) global_best = std::move(local_best);
        for (std::size_t bi = 0; bi < block_sizes.size(); ++bi) {
            report.per_block[bi].trials_run += local_runs[bi];
            report.per_block[bi].failures += local_fails[bi];
            if (local_block[bi].beats(block_best[bi])) block_best[bi] = std::move(local_block[bi]);
        }
    };

    const unsigned jobs = resolve_jobs(cfg.jobs, cfg.trials);
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (worker_error) std::rethrow_exception(worker_error);
    if (!global_best.valid) throw NoCandidateSucceeded();

    for (std::size_t bi = 0; bi < block_sizes.size(); ++bi) {
        report.trials_run += report.per_block[bi].trials_run;
        report.failures += report.per_block[bi].failures;
        if (block_best[bi].valid) {
            report.per_block[bi].best_depth = block_best[bi].rep.quantum_depth;
            report.per_block[bi].best_gates = block_best[bi].rep.gate_count;
        }
    }
    report.best = std::move(global_best.circuit);
    report.best_quantum_depth = global_best.rep.quantum_depth;
    report.best_classical_depth = global_best.rep.classical_depth;
    report.best_gate_count = global_best.rep.gate_count;
    report.best_trial = global_best.trial;
    return report;
}

}  // namespace circsynth
