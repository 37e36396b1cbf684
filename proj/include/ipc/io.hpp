#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ipc/asymptotic.hpp"
#include "ipc/distance.hpp"
#include "ipc/product.hpp"
#include "ipc/simulate.hpp"

namespace ipc::io {

/// Spec file: {"field":{"kind":"gf2e","w":8,"poly":285}|{"kind":"prime","p":7},
/// "m":M,"n":N,"a":[...],"b":[...]} or, instead of a/b, a design directive
/// {"design":{"beta":"path","eps":E,"min_dist":[R,C],"boosts":B}}. The beta
/// path is resolved relative to the spec file.
product::CodeSpec load_spec(const std::filesystem::path& path);
void save_spec(const product::CodeSpec& spec, const std::filesystem::path& path);

galois::Field parse_field_json(const std::string& json_text);

/// Profile file: one "t v" pair per line; '#' starts a comment.
asymptotic::Profile load_profile(const std::filesystem::path& path);
void save_profile(const asymptotic::Profile& profile, const std::filesystem::path& path);

/// Distance profile file: {"d":[...],"dp":[...]}.
distance::DistanceProfile load_distance_profile(const std::filesystem::path& path);

/// Symbol files: whitespace-separated integers below q, row-major; "?" marks
/// an erased symbol (only meaningful for decode input).
struct SymbolMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::optional<galois::felem>> cells; // row-major
};

std::vector<galois::felem> load_symbols(const std::filesystem::path& path, std::size_t expected,
                                        const galois::Field& field);
SymbolMatrix load_symbol_matrix(const std::filesystem::path& path, std::size_t rows, std::size_t cols,
                                const galois::Field& field);
void save_symbol_matrix(const galois::Mat& mat, const simulate::ErasureMask* erased,
                        const std::filesystem::path& path);

/// CSV with the fixed column set
/// epsilon,trials,word_errors,wer,wer_ci95,mean_residual_fraction,mean_rounds.
/// Identical inputs produce byte-identical output.
std::string sim_result_csv(const simulate::SimResult& result);
void save_csv(const simulate::SimResult& result, const std::filesystem::path& path);

/// "start:stop:step" inclusive of both endpoints within 1e-12.
std::vector<double> parse_epsilon_range(const std::string& text);

std::string format_double(double v);

} // namespace ipc::io
