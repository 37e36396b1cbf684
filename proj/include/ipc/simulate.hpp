#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ipc/asymptotic.hpp"
#include "ipc/product.hpp"

namespace ipc::simulate {

/// m x n erasure pattern, one bit per symbol (set = erased), rows packed
/// into 64-bit words.
struct ErasureMask {
    std::size_t m = 0;
    std::size_t n = 0;
    std::size_t wpr = 0; // words per row
    std::vector<std::uint64_t> words;

    ErasureMask() = default;
    ErasureMask(std::size_t m_, std::size_t n_)
        : m(m_), n(n_), wpr((n_ + 63) / 64), words(m_ * ((n_ + 63) / 64), 0) {}

    bool get(std::size_t r, std::size_t c) const {
        return (words[r * wpr + c / 64] >> (c % 64)) & 1;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        auto& w = words[r * wpr + c / 64];
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        w = v ? (w | bit) : (w & ~bit);
    }
    std::size_t count() const;
    bool empty() const { return count() == 0; }
};

/// Counter-based uniform variate: one 64-bit hash per (seed, trial, index),
/// no generator state. u01 = (hash >> 11) * 2^-53.
std::uint64_t cell_hash(std::uint64_t seed, std::uint64_t trial, std::uint64_t index);
double u01(std::uint64_t hash);

struct PeelResult {
    ErasureMask residual;
    std::size_t rounds = 0;
};

/// Iterative mask-only decoding: each round clears every row whose erasure
/// count is at most n - a_i (below the row code's minimum distance), then
/// every such column. Runs to the fixed point; rounds counts the sweeps
/// that cleared something. columns_first swaps the two half-passes (the
/// fixed point is the same either way).
PeelResult peel_decode(const product::CodeSpec& spec, const ErasureMask& mask,
                       bool columns_first = false);

enum class SimMode { mask_only, field_level };

struct SimConfig {
    std::vector<double> epsilons; // ascending, in (0,1)
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    bool couple = true; // share variates across epsilons (monotone WER)
    SimMode mode = SimMode::mask_only;
    unsigned threads = 0; // 0 = hardware concurrency
};

struct EpsilonStats {
    double epsilon = 0.0;
    std::size_t trials = 0;
    std::size_t word_errors = 0;
    double wer = 0.0;
    double wer_ci95 = 0.0; // normal-approximation half-width
    double mean_residual_fraction = 0.0;
    double mean_rounds = 0.0;
    std::vector<std::uint64_t> rounds_histogram; // index = rounds
};

struct SimResult {
    std::vector<EpsilonStats> per_epsilon;
};

SimResult run_sweep(const product::CodeSpec& spec, const SimConfig& cfg);

/// Paired sweep: every spec sees the same per-trial variates (specs must
/// share the m x n shape), so per-epsilon results are directly comparable.
std::vector<SimResult> run_compare(std::span<const product::CodeSpec> specs, const SimConfig& cfg);

/// Symbol-level iterative decoding with the same trigger as peel_decode,
/// recovering actual field values through the nested RS component codes.
struct FieldDecodeResult {
    galois::Mat matrix;   // valid wherever residual bit is clear
    ErasureMask residual;
    std::size_t rounds = 0;
};

FieldDecodeResult iterative_field_decode(const product::ProductCode& code, const galois::Mat& received,
                                         const ErasureMask& mask);

/// Cross-checks mask-only peeling against real encoding + symbol-level
/// decoding on random messages and masks: recovered positions must match
/// peel_decode exactly and recovered symbols must equal the transmitted
/// ones. Any mismatch is a defect, counted in the report.
struct FieldValidateReport {
    std::size_t trials = 0;
    std::size_t position_mismatches = 0;
    std::size_t symbol_mismatches = 0;
};

FieldValidateReport field_level_validate(const product::CodeSpec& spec, std::size_t trials,
                                         std::uint64_t seed);

/// Simulates the matched design derived from `beta` at channel erasure rate
/// epsilon - delta across growing sizes, reporting residual fractions next
/// to the density-evolution prediction.
struct AsymptoticPoint {
    std::size_t m = 0;
    std::size_t n = 0;
    double mean_residual_fraction = 0.0;     // residual symbols / mn
    double mean_residual_row_fraction = 0.0; // rows with residual erasures / m
};

struct AsymptoticReport {
    double channel_epsilon = 0.0;
    double de_fixed_point = 0.0;          // limit of the DE trajectory
    double predicted_row_fraction = 0.0;  // = de_fixed_point
    double predicted_residual_fraction = 0.0; // eps * x* * beta^-1(eps x*)
    std::vector<AsymptoticPoint> points;
};

AsymptoticReport asymptotic_validate(const asymptotic::Profile& beta, double epsilon, double delta,
                                     std::span<const std::pair<std::size_t, std::size_t>> sizes,
                                     std::size_t trials, std::uint64_t seed);

/// Smallest GF(2^w) with order >= len; convenience for simulation specs.
galois::Field field_for_length(std::size_t len);

} // namespace ipc::simulate
