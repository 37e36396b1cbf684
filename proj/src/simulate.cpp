#include "ipc/simulate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <optional>
#include <thread>

namespace ipc::simulate {

namespace {

inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ULL;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebULL;
    z ^= z >> 31;
    return z;
}

constexpr double kTwo53 = 9007199254740992.0;

// erased  <=>  (hash >> 11) < threshold(eps)  <=>  u01(hash) < eps, exactly.
inline std::uint64_t eps_threshold(double eps) {
    return static_cast<std::uint64_t>(std::ceil(eps * kTwo53));
}

} // namespace

std::uint64_t cell_hash(std::uint64_t seed, std::uint64_t trial, std::uint64_t index) {
    std::uint64_t h = mix64(seed + 0x9e3779b97f4a7c15ULL);
    h = mix64(h ^ (trial + 0xa0761d6478bd642fULL));
    h = mix64(h ^ (index + 0xe7037ed1a0b428dbULL));
    return h;
}

double u01(std::uint64_t hash) { return static_cast<double>(hash >> 11) * 0x1.0p-53; }

std::size_t ErasureMask::count() const {
    std::size_t c = 0;
    for (auto w : words) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

namespace {

// Peeling working state; reused across trials to avoid reallocation.
struct PeelScratch {
    std::vector<std::uint64_t> words;
    std::vector<std::uint32_t> rowcnt, colcnt;
    std::vector<std::uint32_t> row_dirty, col_dirty;
    std::vector<std::uint8_t> row_flag, col_flag;

    void resize(std::size_t m, std::size_t n, std::size_t wpr) {
        words.assign(m * wpr, 0);
        rowcnt.assign(m, 0);
        colcnt.assign(n, 0);
        row_dirty.clear();
        col_dirty.clear();
        row_flag.assign(m, 0);
        col_flag.assign(n, 0);
    }
};

// Runs peeling to the fixed point on the scratch state. One round clears
// every currently decodable row, then every currently decodable column
// (swapped when columns_first). Only lines whose erasure count changed are
// re-examined; the cleared sets per round match a full rescan because row
// clears never change other rows' counts (and likewise for columns).
std::size_t peel_core(std::size_t m, std::size_t n, std::size_t wpr,
                      std::span<const std::uint32_t> row_tol, std::span<const std::uint32_t> col_tol,
                      PeelScratch& st, bool columns_first) {
    st.row_dirty.clear();
    st.col_dirty.clear();
    for (std::size_t r = 0; r < m; ++r) {
        st.row_flag[r] = 1;
        st.row_dirty.push_back(static_cast<std::uint32_t>(r));
    }
    for (std::size_t c = 0; c < n; ++c) {
        st.col_flag[c] = 1;
        st.col_dirty.push_back(static_cast<std::uint32_t>(c));
    }

    auto clear_rows = [&]() -> std::size_t {
        std::size_t cleared = 0;
        const std::size_t todo = st.row_dirty.size();
        for (std::size_t idx = 0; idx < todo; ++idx) {
            const std::uint32_t r = st.row_dirty[idx];
            st.row_flag[r] = 0;
            const std::uint32_t cnt = st.rowcnt[r];
            if (cnt == 0 || cnt > row_tol[r]) continue;
            for (std::size_t w = 0; w < wpr; ++w) {
                std::uint64_t bits = st.words[r * wpr + w];
                st.words[r * wpr + w] = 0;
                while (bits) {
                    const auto j = static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits));
                    bits &= bits - 1;
                    --st.colcnt[j];
                    if (!st.col_flag[j]) {
                        st.col_flag[j] = 1;
                        st.col_dirty.push_back(j);
                    }
                }
            }
            st.rowcnt[r] = 0;
            cleared += cnt;
        }
        st.row_dirty.clear();
        return cleared;
    };

    auto clear_cols = [&]() -> std::size_t {
        std::size_t cleared = 0;
        const std::size_t todo = st.col_dirty.size();
        for (std::size_t idx = 0; idx < todo; ++idx) {
            const std::uint32_t c = st.col_dirty[idx];
            st.col_flag[c] = 0;
            const std::uint32_t cnt = st.colcnt[c];
            if (cnt == 0 || cnt > col_tol[c]) continue;
            const std::size_t w = c / 64;
            const std::uint64_t bit = std::uint64_t{1} << (c % 64);
            for (std::size_t r = 0; r < m; ++r) {
                if (st.words[r * wpr + w] & bit) {
                    st.words[r * wpr + w] &= ~bit;
                    --st.rowcnt[r];
                    if (!st.row_flag[r]) {
                        st.row_flag[r] = 1;
                        st.row_dirty.push_back(static_cast<std::uint32_t>(r));
                    }
                }
            }
            st.colcnt[c] = 0;
            cleared += cnt;
        }
        st.col_dirty.clear();
        return cleared;
    };

    std::size_t rounds = 0;
    while (true) {
        std::size_t cleared = 0;
        if (columns_first) {
            cleared += clear_cols();
            cleared += clear_rows();
        } else {
            cleared += clear_rows();
            cleared += clear_cols();
        }
        if (cleared == 0) break;
        ++rounds;
    }
    return rounds;
}

std::vector<std::uint32_t> row_tolerances(const product::CodeSpec& spec) {
    std::vector<std::uint32_t> t(spec.m);
    for (std::size_t i = 0; i < spec.m; ++i) t[i] = static_cast<std::uint32_t>(spec.n - spec.a[i]);
    return t;
}

std::vector<std::uint32_t> col_tolerances(const product::CodeSpec& spec) {
    std::vector<std::uint32_t> t(spec.n);
    for (std::size_t j = 0; j < spec.n; ++j) t[j] = static_cast<std::uint32_t>(spec.m - spec.b[j]);
    return t;
}

} // namespace

PeelResult peel_decode(const product::CodeSpec& spec, const ErasureMask& mask, bool columns_first) {
    product::validate(spec);
    if (mask.m != spec.m || mask.n != spec.n)
        throw std::invalid_argument("peel_decode: mask shape mismatch");

    const auto rt = row_tolerances(spec), ct = col_tolerances(spec);
    PeelScratch st;
    st.resize(spec.m, spec.n, mask.wpr);
    st.words = mask.words;
    for (std::size_t r = 0; r < spec.m; ++r)
        for (std::size_t c = 0; c < spec.n; ++c)
            if (mask.get(r, c)) {
                ++st.rowcnt[r];
                ++st.colcnt[c];
            }

    PeelResult res;
    res.rounds = peel_core(spec.m, spec.n, mask.wpr, rt, ct, st, columns_first);
    res.residual = ErasureMask(spec.m, spec.n);
    res.residual.words = st.words;
    return res;
}

namespace {

struct Accumulator {
    std::vector<std::uint64_t> word_errors;    // per epsilon
    std::vector<std::uint64_t> residual_cells; // per epsilon
    std::vector<std::uint64_t> rounds_sum;     // per epsilon
    std::vector<std::vector<std::uint64_t>> hist;

    explicit Accumulator(std::size_t ne)
        : word_errors(ne, 0), residual_cells(ne, 0), rounds_sum(ne, 0), hist(ne) {}

    void record(std::size_t ei, std::size_t residual, std::size_t rounds) {
        if (residual > 0) ++word_errors[ei];
        residual_cells[ei] += residual;
        rounds_sum[ei] += rounds;
        if (hist[ei].size() <= rounds) hist[ei].resize(rounds + 1, 0);
        ++hist[ei][rounds];
    }

    void merge(const Accumulator& o) {
        for (std::size_t e = 0; e < word_errors.size(); ++e) {
            word_errors[e] += o.word_errors[e];
            residual_cells[e] += o.residual_cells[e];
            rounds_sum[e] += o.rounds_sum[e];
            if (hist[e].size() < o.hist[e].size()) hist[e].resize(o.hist[e].size(), 0);
            for (std::size_t r = 0; r < o.hist[e].size(); ++r) hist[e][r] += o.hist[e][r];
        }
    }
};

void validate_config(const SimConfig& cfg) {
    if (cfg.trials == 0) throw std::invalid_argument("simulate: trials must be >= 1");
    if (cfg.epsilons.empty()) throw std::invalid_argument("simulate: no epsilon values");
    for (std::size_t i = 0; i < cfg.epsilons.size(); ++i) {
        if (cfg.epsilons[i] <= 0.0 || cfg.epsilons[i] >= 1.0)
            throw std::invalid_argument("simulate: epsilon outside (0,1)");
        if (i > 0 && cfg.epsilons[i] <= cfg.epsilons[i - 1])
            throw std::invalid_argument("simulate: epsilons must be strictly ascending");
    }
}

// Worker over a contiguous block of trials, mask-only mode.
void sweep_block_mask(std::span<const product::CodeSpec> specs, const SimConfig& cfg,
                      std::size_t trial_lo, std::size_t trial_hi,
                      std::span<const std::vector<std::uint32_t>> row_tols,
                      std::span<const std::vector<std::uint32_t>> col_tols,
                      std::span<Accumulator> accs) {
    const std::size_t m = specs[0].m, n = specs[0].n;
    const std::size_t cells = m * n;
    const std::size_t wpr = (n + 63) / 64;
    const std::size_t ne = cfg.epsilons.size();

    std::vector<std::uint64_t> thresholds(ne);
    for (std::size_t e = 0; e < ne; ++e) thresholds[e] = eps_threshold(cfg.epsilons[e]);

    std::vector<std::uint64_t> hashes(cells);
    std::vector<std::uint64_t> base_words(m * wpr);
    std::vector<std::uint32_t> base_rowcnt(m), base_colcnt(n);
    PeelScratch st;
    st.resize(m, n, wpr);
    std::vector<std::uint8_t> prev_success(specs.size());

    for (std::size_t trial = trial_lo; trial < trial_hi; ++trial) {
        if (cfg.couple)
            for (std::size_t idx = 0; idx < cells; ++idx)
                hashes[idx] = cell_hash(cfg.seed, trial, idx) >> 11;
        std::fill(prev_success.begin(), prev_success.end(), 1);

        for (std::size_t ei = 0; ei < ne; ++ei) {
            if (!cfg.couple)
                for (std::size_t idx = 0; idx < cells; ++idx)
                    hashes[idx] = cell_hash(cfg.seed, trial, ei * cells + idx) >> 11;
            const std::uint64_t thr = thresholds[ei];
            std::fill(base_words.begin(), base_words.end(), 0);
            std::fill(base_rowcnt.begin(), base_rowcnt.end(), 0);
            std::fill(base_colcnt.begin(), base_colcnt.end(), 0);
            for (std::size_t r = 0; r < m; ++r) {
                for (std::size_t c = 0; c < n; ++c) {
                    const std::uint64_t erased = hashes[r * n + c] < thr ? 1 : 0;
                    base_words[r * wpr + c / 64] |= erased << (c % 64);
                    base_rowcnt[r] += static_cast<std::uint32_t>(erased);
                    base_colcnt[c] += static_cast<std::uint32_t>(erased);
                }
            }

            for (std::size_t s = 0; s < specs.size(); ++s) {
                std::copy(base_words.begin(), base_words.end(), st.words.begin());
                std::copy(base_rowcnt.begin(), base_rowcnt.end(), st.rowcnt.begin());
                std::copy(base_colcnt.begin(), base_colcnt.end(), st.colcnt.begin());
                const std::size_t rounds = peel_core(m, n, wpr, row_tols[s], col_tols[s], st, false);
                std::size_t residual = 0;
                for (std::size_t r = 0; r < m; ++r) residual += st.rowcnt[r];
                const bool success = residual == 0;
                if (cfg.couple) {
                    if (success && !prev_success[s])
                        throw std::logic_error("simulate: coupling violated (decoded at larger epsilon only)");
                    prev_success[s] = success ? 1 : 0;
                }
                accs[s * ne + ei].record(0, residual, rounds);
            }
        }
    }
}

} // namespace

std::vector<SimResult> run_compare(std::span<const product::CodeSpec> specs, const SimConfig& cfg) {
    if (specs.empty()) throw std::invalid_argument("simulate: no specs");
    for (const auto& s : specs) {
        product::validate(s);
        if (s.m != specs[0].m || s.n != specs[0].n)
            throw std::invalid_argument("simulate: compared specs must share the m x n shape");
    }
    validate_config(cfg);

    const std::size_t ne = cfg.epsilons.size();

    if (cfg.mode == SimMode::field_level) {
        // Validation mode: real encoding and symbol-level decoding, with the
        // mask-only result asserted equal along the way. Small specs only.
        std::vector<SimResult> out(specs.size());
        const std::size_t m = specs[0].m, n = specs[0].n;
        const std::size_t cells = m * n;
        for (std::size_t s = 0; s < specs.size(); ++s) {
            product::ProductCode code(specs[s]);
            Accumulator acc(ne);
            std::vector<galois::felem> info(code.dimension());
            for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
                for (std::size_t k = 0; k < info.size(); ++k)
                    info[k] = static_cast<galois::felem>(
                        u01(cell_hash(cfg.seed, trial, cells + 1 + k)) * specs[s].field.order());
                const auto cw = code.encode(info);
                for (std::size_t ei = 0; ei < ne; ++ei) {
                    ErasureMask mask(m, n);
                    for (std::size_t r = 0; r < m; ++r)
                        for (std::size_t c = 0; c < n; ++c)
                            mask.set(r, c, u01(cell_hash(cfg.seed, trial,
                                                         cfg.couple ? r * n + c : ei * cells + r * n + c)) <
                                               cfg.epsilons[ei]);
                    auto fd = iterative_field_decode(code, cw, mask);
                    auto pr = peel_decode(specs[s], mask);
                    if (fd.residual.words != pr.residual.words)
                        throw std::logic_error("simulate: field-level and mask-only decoders disagree");
                    for (std::size_t r = 0; r < m; ++r)
                        for (std::size_t c = 0; c < n; ++c)
                            if (!fd.residual.get(r, c) && fd.matrix.at(r, c) != cw.at(r, c))
                                throw std::logic_error("simulate: field-level decoder recovered a wrong symbol");
                    acc.record(ei, fd.residual.count(), fd.rounds);
                }
            }
            out[s].per_epsilon.resize(ne);
            for (std::size_t ei = 0; ei < ne; ++ei) {
                auto& st = out[s].per_epsilon[ei];
                st.epsilon = cfg.epsilons[ei];
                st.trials = cfg.trials;
                st.word_errors = acc.word_errors[ei];
                st.wer = static_cast<double>(st.word_errors) / static_cast<double>(cfg.trials);
                st.wer_ci95 = 1.96 * std::sqrt(st.wer * (1.0 - st.wer) / static_cast<double>(cfg.trials));
                st.mean_residual_fraction = static_cast<double>(acc.residual_cells[ei]) /
                                            (static_cast<double>(cfg.trials) * static_cast<double>(cells));
                st.mean_rounds = static_cast<double>(acc.rounds_sum[ei]) / static_cast<double>(cfg.trials);
                st.rounds_histogram = acc.hist[ei];
            }
        }
        return out;
    }

    std::vector<std::vector<std::uint32_t>> row_tols, col_tols;
    for (const auto& s : specs) {
        row_tols.push_back(row_tolerances(s));
        col_tols.push_back(col_tolerances(s));
    }

    unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, cfg.trials));

    // Per-worker accumulators, merged in block order afterwards. All counters
    // are integers, so the totals are independent of the partition.
    std::vector<std::vector<Accumulator>> partials(threads);
    for (auto& p : partials) p.assign(specs.size() * ne, Accumulator(1));

    std::vector<std::exception_ptr> errors(threads);
    auto worker = [&](unsigned t) {
        try {
            const std::size_t chunk = (cfg.trials + threads - 1) / threads;
            const std::size_t lo = t * chunk;
            const std::size_t hi = std::min(cfg.trials, lo + chunk);
            if (lo < hi) sweep_block_mask(specs, cfg, lo, hi, row_tols, col_tols, partials[t]);
        } catch (...) {
            errors[t] = std::current_exception();
        }
    };

    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);

    std::vector<SimResult> out(specs.size());
    const double cells = static_cast<double>(specs[0].m) * static_cast<double>(specs[0].n);
    for (std::size_t s = 0; s < specs.size(); ++s) {
        out[s].per_epsilon.resize(ne);
        for (std::size_t ei = 0; ei < ne; ++ei) {
            Accumulator total(1);
            for (unsigned t = 0; t < threads; ++t) total.merge(partials[t][s * ne + ei]);
            auto& st = out[s].per_epsilon[ei];
            st.epsilon = cfg.epsilons[ei];
            st.trials = cfg.trials;
            st.word_errors = total.word_errors[0];
            st.wer = static_cast<double>(st.word_errors) / static_cast<double>(cfg.trials);
            st.wer_ci95 = 1.96 * std::sqrt(st.wer * (1.0 - st.wer) / static_cast<double>(cfg.trials));
            st.mean_residual_fraction =
                static_cast<double>(total.residual_cells[0]) / (static_cast<double>(cfg.trials) * cells);
            st.mean_rounds = static_cast<double>(total.rounds_sum[0]) / static_cast<double>(cfg.trials);
            st.rounds_histogram = total.hist[0];
        }
    }
    return out;
}

SimResult run_sweep(const product::CodeSpec& spec, const SimConfig& cfg) {
    return run_compare(std::span(&spec, 1), cfg)[0];
}

FieldDecodeResult iterative_field_decode(const product::ProductCode& code, const galois::Mat& received,
                                         const ErasureMask& mask) {
    const auto& spec = code.spec();
    const std::size_t m = spec.m, n = spec.n;
    if (received.rows != m || received.cols != n || mask.m != m || mask.n != n)
        throw std::invalid_argument("iterative_field_decode: shape mismatch");

    FieldDecodeResult res;
    res.matrix = received;
    res.residual = mask;

    std::vector<std::uint32_t> rowcnt(m, 0), colcnt(n, 0);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (mask.get(r, c)) {
                ++rowcnt[r];
                ++colcnt[c];
            }

    std::vector<std::optional<galois::felem>> line;
    auto decode_row = [&](std::size_t r) {
        line.assign(n, std::nullopt);
        for (std::size_t c = 0; c < n; ++c)
            if (!res.residual.get(r, c)) line[c] = res.matrix.at(r, c);
        auto dec = mds::erasure_decode(code.row_family(), spec.a[r], line);
        if (dec.status == mds::DecodeStatus::not_a_codeword)
            throw std::runtime_error("decode: row " + std::to_string(r + 1) + " is not a codeword of its row code");
        if (dec.status != mds::DecodeStatus::ok)
            throw std::logic_error("decode: row decode failed despite meeting its trigger");
        for (std::size_t c = 0; c < n; ++c) {
            if (res.residual.get(r, c)) {
                res.matrix.at(r, c) = dec.codeword[c];
                res.residual.set(r, c, false);
                --colcnt[c];
            }
        }
        rowcnt[r] = 0;
    };
    auto decode_col = [&](std::size_t c) {
        line.assign(m, std::nullopt);
        for (std::size_t r = 0; r < m; ++r)
            if (!res.residual.get(r, c)) line[r] = res.matrix.at(r, c);
        auto dec = mds::erasure_decode(code.col_family(), spec.b[c], line);
        if (dec.status == mds::DecodeStatus::not_a_codeword)
            throw std::runtime_error("decode: column " + std::to_string(c + 1) +
                                     " is not a codeword of its column code");
        if (dec.status != mds::DecodeStatus::ok)
            throw std::logic_error("decode: column decode failed despite meeting its trigger");
        for (std::size_t r = 0; r < m; ++r) {
            if (res.residual.get(r, c)) {
                res.matrix.at(r, c) = dec.codeword[r];
                res.residual.set(r, c, false);
                --rowcnt[r];
            }
        }
        colcnt[c] = 0;
    };

    while (true) {
        std::size_t cleared = 0;
        std::vector<std::size_t> ready;
        for (std::size_t r = 0; r < m; ++r)
            if (rowcnt[r] > 0 && rowcnt[r] <= spec.n - spec.a[r]) ready.push_back(r);
        for (std::size_t r : ready) {
            cleared += rowcnt[r];
            decode_row(r);
        }
        ready.clear();
        for (std::size_t c = 0; c < n; ++c)
            if (colcnt[c] > 0 && colcnt[c] <= spec.m - spec.b[c]) ready.push_back(c);
        for (std::size_t c : ready) {
            cleared += colcnt[c];
            decode_col(c);
        }
        if (cleared == 0) break;
        ++res.rounds;
    }
    return res;
}

FieldValidateReport field_level_validate(const product::CodeSpec& spec, std::size_t trials,
                                         std::uint64_t seed) {
    product::validate(spec);
    product::ProductCode code(spec);
    const std::size_t m = spec.m, n = spec.n;
    const std::size_t cells = m * n;

    FieldValidateReport rep;
    rep.trials = trials;
    std::vector<galois::felem> info(code.dimension());
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const double eps = u01(cell_hash(seed, trial, cells));
        for (std::size_t k = 0; k < info.size(); ++k)
            info[k] = static_cast<galois::felem>(u01(cell_hash(seed, trial, cells + 1 + k)) *
                                                 spec.field.order());
        const auto cw = code.encode(info);

        ErasureMask mask(m, n);
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < n; ++c)
                mask.set(r, c, u01(cell_hash(seed, trial, r * n + c)) < eps);

        auto fd = iterative_field_decode(code, cw, mask);
        auto pr = peel_decode(spec, mask);
        if (fd.residual.words != pr.residual.words) ++rep.position_mismatches;
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (!fd.residual.get(r, c) && fd.matrix.at(r, c) != cw.at(r, c)) {
                    ++rep.symbol_mismatches;
                    break;
                }
    }
    return rep;
}

galois::Field field_for_length(std::size_t len) {
    unsigned w = 1;
    while ((std::size_t{1} << w) < len) ++w;
    if (w > 16) throw std::invalid_argument("field_for_length: length exceeds 2^16");
    return galois::Field::gf2e(w);
}

AsymptoticReport asymptotic_validate(const asymptotic::Profile& beta, double epsilon, double delta,
                                     std::span<const std::pair<std::size_t, std::size_t>> sizes,
                                     std::size_t trials, std::uint64_t seed) {
    const auto alpha = asymptotic::design_alpha_from_beta(beta, epsilon);
    const double channel = epsilon - delta;
    if (channel < 0.0) throw std::invalid_argument("asymptotic_validate: epsilon - delta below 0");

    AsymptoticReport rep;
    rep.channel_epsilon = channel;
    if (channel > 0.0) {
        auto tr = asymptotic::de_trajectory(alpha, beta, channel, 1e-9, 10000);
        rep.de_fixed_point = tr.converged_to;
        rep.predicted_row_fraction = tr.converged_to;
        rep.predicted_residual_fraction =
            channel * tr.converged_to * asymptotic::generalized_inverse(beta, channel * tr.converged_to);
    }

    for (const auto& [m, n] : sizes) {
        auto dims = asymptotic::discretize(alpha, beta, m, n, 1, 1, 0);
        product::CodeSpec spec{field_for_length(std::max(m, n)), m, n, std::move(dims.a), std::move(dims.b)};
        product::validate(spec);

        AsymptoticPoint pt;
        pt.m = m;
        pt.n = n;
        if (channel > 0.0) {
            const auto thr = eps_threshold(channel);
            std::size_t residual_rows = 0, residual_cells = 0;
            ErasureMask mask(m, n);
            for (std::size_t trial = 0; trial < trials; ++trial) {
                for (std::size_t r = 0; r < m; ++r)
                    for (std::size_t c = 0; c < n; ++c)
                        mask.set(r, c, (cell_hash(seed, trial, r * n + c) >> 11) < thr);
                auto pr = peel_decode(spec, mask);
                residual_cells += pr.residual.count();
                for (std::size_t r = 0; r < m; ++r) {
                    for (std::size_t w = 0; w < pr.residual.wpr; ++w) {
                        if (pr.residual.words[r * pr.residual.wpr + w] != 0) {
                            ++residual_rows;
                            break;
                        }
                    }
                }
            }
            pt.mean_residual_fraction = static_cast<double>(residual_cells) /
                                        (static_cast<double>(trials) * static_cast<double>(m * n));
            pt.mean_residual_row_fraction = static_cast<double>(residual_rows) /
                                            (static_cast<double>(trials) * static_cast<double>(m));
        }
        rep.points.push_back(pt);
    }
    return rep;
}

} // namespace ipc::simulate
