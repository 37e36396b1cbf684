// ipcode: irregular product code toolkit — construction, dimension and
// distance analysis, asymptotic profile design, encoding/decoding, and
// Monte Carlo erasure-channel simulation.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ipc/io.hpp"

namespace {

using namespace ipc;

int cmd_validate(const std::string& spec_path, std::size_t cross_check, std::uint64_t seed) {
    const auto spec = io::load_spec(spec_path);
    std::cout << "ok: [" << spec.m * spec.n << "," << product::dimension(spec) << "] code over field of order "
              << spec.field.order() << "\n";
    if (cross_check > 0) {
        const auto rep = simulate::field_level_validate(spec, cross_check, seed);
        std::cout << "cross-check: " << rep.trials << " trials, " << rep.position_mismatches
                  << " position mismatches, " << rep.symbol_mismatches << " symbol mismatches\n";
        if (rep.position_mismatches || rep.symbol_mismatches) return 1;
    }
    return 0;
}

int cmd_dim(const std::string& spec_path) {
    const auto spec = io::load_spec(spec_path);
    std::cout << product::dimension(spec) << "\n";
    return 0;
}

int cmd_mindist_bound(const std::string& profile_path, bool witness) {
    const auto p = io::load_distance_profile(profile_path);
    std::cout << distance::distance_bound(p) << "\n";
    if (witness) {
        if (p.m() * p.n() > 25) {
            std::cerr << "error: --witness requires m*n <= 25 (exhaustive search)\n";
            return 1;
        }
        const auto [w, mat] = distance::min_weight_oracle(p);
        (void)w;
        for (std::size_t r = 0; r < mat.m; ++r) {
            for (std::size_t c = 0; c < mat.n; ++c) {
                if (c) std::cout << ' ';
                std::cout << int(mat.at(r, c));
            }
            std::cout << '\n';
        }
    }
    return 0;
}

int cmd_encode(const std::string& spec_path, const std::string& in_path, const std::string& out_path) {
    const auto spec = io::load_spec(spec_path);
    product::ProductCode code(spec);
    const auto info = io::load_symbols(in_path, code.dimension(), spec.field);
    const auto cw = code.encode(info);
    io::save_symbol_matrix(cw, nullptr, out_path);
    return 0;
}

int cmd_decode(const std::string& spec_path, const std::string& in_path, const std::string& out_path) {
    const auto spec = io::load_spec(spec_path);
    product::ProductCode code(spec);
    const auto sm = io::load_symbol_matrix(in_path, spec.m, spec.n, spec.field);

    galois::Mat received(spec.m, spec.n);
    simulate::ErasureMask mask(spec.m, spec.n);
    for (std::size_t r = 0; r < spec.m; ++r) {
        for (std::size_t c = 0; c < spec.n; ++c) {
            const auto& cell = sm.cells[r * spec.n + c];
            if (cell)
                received.at(r, c) = *cell;
            else
                mask.set(r, c, true);
        }
    }
    const auto res = simulate::iterative_field_decode(code, received, mask);
    io::save_symbol_matrix(res.matrix, res.residual.empty() ? nullptr : &res.residual, out_path);
    const auto residual = res.residual.count();
    if (residual > 0) {
        std::cerr << "residual erasures: " << residual << "\n";
        return 2;
    }
    return 0;
}

int cmd_design(const std::string& beta_path, double eps, std::size_t m, std::size_t n,
               const std::string& min_dist, std::size_t boosts, const std::string& field_json,
               const std::string& out_path) {
    const auto beta = io::load_profile(beta_path);
    const auto alpha = asymptotic::design_alpha_from_beta(beta, eps);

    std::size_t min_row = 1, min_col = 1;
    if (std::sscanf(min_dist.c_str(), "%zu,%zu", &min_row, &min_col) != 2)
        throw std::runtime_error("--min-dist: expected ROW,COL");

    auto dims = asymptotic::discretize(alpha, beta, m, n, min_row, min_col, boosts);
    galois::Field field = field_json.empty() ? simulate::field_for_length(std::max(m, n))
                                             : io::parse_field_json(field_json);
    product::CodeSpec spec{field, m, n, std::move(dims.a), std::move(dims.b)};
    product::validate(spec);
    io::save_spec(spec, out_path);
    std::cout << "[" << m * n << "," << product::dimension(spec) << "] spec written to " << out_path << "\n";
    return 0;
}

int cmd_de_check(const std::string& alpha_path, const std::string& beta_path, double eps,
                 std::size_t grid) {
    const auto alpha = io::load_profile(alpha_path);
    const auto beta = io::load_profile(beta_path);
    const auto res = asymptotic::de_check(alpha, beta, eps, grid);
    if (res.satisfied)
        std::cout << "satisfied\n";
    else
        std::cout << "violated at x = " << io::format_double(res.violating_x) << "\n";
    return 0;
}

int cmd_rate(const std::string& alpha_path, const std::string& beta_path, std::size_t quad) {
    const auto alpha = io::load_profile(alpha_path);
    const auto beta = io::load_profile(beta_path);
    std::cout << io::format_double(asymptotic::asymptotic_rate(alpha, beta, quad)) << "\n";
    return 0;
}

int cmd_simulate(const std::string& spec_path, const std::vector<std::string>& compare_paths,
                 const std::string& eps_range, std::size_t trials, std::uint64_t seed,
                 const std::string& out_path, unsigned threads, const std::string& mode,
                 bool no_couple) {
    std::vector<product::CodeSpec> specs;
    std::vector<std::string> stems;
    specs.push_back(io::load_spec(spec_path));
    stems.push_back(std::filesystem::path(spec_path).stem().string());
    for (const auto& p : compare_paths) {
        specs.push_back(io::load_spec(p));
        stems.push_back(std::filesystem::path(p).stem().string());
    }

    simulate::SimConfig cfg;
    cfg.epsilons = io::parse_epsilon_range(eps_range);
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.threads = threads;
    cfg.couple = !no_couple;
    if (mode == "field")
        cfg.mode = simulate::SimMode::field_level;
    else if (mode != "mask")
        throw std::runtime_error("--mode: expected mask or field");

    const auto results = simulate::run_compare(specs, cfg);
    if (specs.size() == 1) {
        io::save_csv(results[0], out_path);
        std::cout << "wrote " << out_path << "\n";
    } else {
        const std::filesystem::path out(out_path);
        const auto dir = out.parent_path();
        const auto stem = out.stem().string();
        const auto ext = out.extension().string();
        for (std::size_t s = 0; s < specs.size(); ++s) {
            auto file = dir / (stem + "." + stems[s] + ext);
            io::save_csv(results[s], file);
            std::cout << "wrote " << file.string() << "\n";
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"irregular product code toolkit"};
    app.require_subcommand(1);

    std::string spec_path, in_path, out_path, profile_path, alpha_path, beta_path, min_dist = "1,1";
    std::string eps_range, field_json, mode = "mask";
    std::vector<std::string> compare_paths;
    double eps = 0.0;
    std::size_t m = 0, n = 0, boosts = 0, grid = 10000, quad = 0, trials = 0, cross_check = 0;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    bool witness = false, no_couple = false;

    auto* c_validate = app.add_subcommand("validate", "validate a spec file");
    c_validate->add_option("--spec", spec_path)->required();
    auto* seed_opt = c_validate->add_option("--seed", seed);
    c_validate
        ->add_option("--cross-check", cross_check,
                     "also run N field-level vs mask-only decoder trials")
        ->needs(seed_opt);

    auto* c_dim = app.add_subcommand("dim", "print the code dimension");
    c_dim->add_option("--spec", spec_path)->required();

    auto* c_mindist = app.add_subcommand("mindist-bound", "print the minimum-distance bound");
    c_mindist->add_option("--profile", profile_path)->required();
    c_mindist->add_flag("--witness", witness, "also print a minimum-weight witness matrix");

    auto* c_encode = app.add_subcommand("encode", "systematic encoding of an info symbol file");
    c_encode->add_option("--spec", spec_path)->required();
    c_encode->add_option("--in", in_path)->required();
    c_encode->add_option("--out", out_path)->required();

    auto* c_decode = app.add_subcommand("decode", "iterative erasure decoding of a matrix file");
    c_decode->add_option("--spec", spec_path)->required();
    c_decode->add_option("--in", in_path)->required();
    c_decode->add_option("--out", out_path)->required();

    auto* c_design = app.add_subcommand("design-asymptotic", "emit a spec from a column profile");
    c_design->add_option("--beta", beta_path)->required();
    c_design->add_option("--eps", eps)->required();
    c_design->add_option("--m", m)->required();
    c_design->add_option("--n", n)->required();
    c_design->add_option("--min-dist", min_dist, "minimum distance floors ROW,COL (default 1,1)");
    c_design->add_option("--boosts", boosts, "rows/columns forced to the strongest dimension");
    c_design->add_option("--field", field_json, "field as JSON (default: smallest adequate GF(2^w))");
    c_design->add_option("--out", out_path)->required();

    auto* c_decheck = app.add_subcommand("de-check", "decodability condition verdict");
    c_decheck->add_option("--alpha", alpha_path)->required();
    c_decheck->add_option("--beta", beta_path)->required();
    c_decheck->add_option("--eps", eps)->required();
    c_decheck->add_option("--grid", grid);

    auto* c_rate = app.add_subcommand("rate", "asymptotic rate of a profile pair");
    c_rate->add_option("--alpha", alpha_path)->required();
    c_rate->add_option("--beta", beta_path)->required();
    c_rate->add_option("--quad", quad, "extra uniform refinement points");

    auto* c_sim = app.add_subcommand("simulate", "Monte Carlo erasure sweep, CSV output");
    c_sim->add_option("--spec", spec_path)->required();
    c_sim->add_option("--compare", compare_paths, "additional spec files simulated on shared variates");
    c_sim->add_option("--eps", eps_range, "single value or start:stop:step")->required();
    c_sim->add_option("--trials", trials)->required();
    c_sim->add_option("--seed", seed)->required();
    c_sim->add_option("--out", out_path)->required();
    c_sim->add_option("--threads", threads, "worker threads (default: machine parallelism)");
    c_sim->add_option("--mode", mode, "mask (default) or field");
    c_sim->add_flag("--no-couple", no_couple, "independent masks per epsilon");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_validate->parsed()) return cmd_validate(spec_path, cross_check, seed);
        if (c_dim->parsed()) return cmd_dim(spec_path);
        if (c_mindist->parsed()) return cmd_mindist_bound(profile_path, witness);
        if (c_encode->parsed()) return cmd_encode(spec_path, in_path, out_path);
        if (c_decode->parsed()) return cmd_decode(spec_path, in_path, out_path);
        if (c_design->parsed())
            return cmd_design(beta_path, eps, m, n, min_dist, boosts, field_json, out_path);
        if (c_decheck->parsed()) return cmd_de_check(alpha_path, beta_path, eps, grid);
        if (c_rate->parsed()) return cmd_rate(alpha_path, beta_path, quad);
        if (c_sim->parsed())
            return cmd_simulate(spec_path, compare_paths, eps_range, trials, seed, out_path, threads,
                                mode, no_couple);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
