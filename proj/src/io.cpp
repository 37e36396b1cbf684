#include "ipc/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ipc::io {

using nlohmann::json;

namespace {

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error("malformed JSON in " + path.string() + ": " + e.what());
    }
    return j;
}

galois::Field field_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw std::runtime_error("field: expected an object with a \"kind\" key");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "gf2e") {
        const auto w = j.at("w").get<unsigned>();
        if (j.contains("poly")) return galois::Field::gf2e(w, j.at("poly").get<std::uint32_t>());
        return galois::Field::gf2e(w);
    }
    if (kind == "prime") return galois::Field::prime(j.at("p").get<std::uint32_t>());
    throw std::runtime_error("field: unknown kind \"" + kind + "\" (expected gf2e or prime)");
}

json field_to_json(const galois::Field& f) {
    json j;
    if (f.kind() == galois::FieldKind::binary_extension) {
        j["kind"] = "gf2e";
        j["w"] = f.degree();
        j["poly"] = f.reduction_poly();
    } else {
        j["kind"] = "prime";
        j["p"] = f.order();
    }
    return j;
}

} // namespace

galois::Field parse_field_json(const std::string& json_text) {
    return field_from_json(json::parse(json_text));
}

product::CodeSpec load_spec(const std::filesystem::path& path) {
    const json j = read_json_file(path);
    product::CodeSpec spec;
    try {
        spec.field = field_from_json(j.at("field"));
        spec.m = j.at("m").get<std::size_t>();
        spec.n = j.at("n").get<std::size_t>();
        if (j.contains("design")) {
            const auto& d = j.at("design");
            auto beta_path = std::filesystem::path(d.at("beta").get<std::string>());
            if (beta_path.is_relative()) beta_path = path.parent_path() / beta_path;
            const auto beta = load_profile(beta_path);
            const double eps = d.at("eps").get<double>();
            const auto md = d.at("min_dist").get<std::vector<std::size_t>>();
            if (md.size() != 2) throw std::runtime_error("design.min_dist: expected [row, column]");
            const auto boosts = d.value("boosts", std::size_t{0});
            const auto alpha = asymptotic::design_alpha_from_beta(beta, eps);
            auto dims = asymptotic::discretize(alpha, beta, spec.m, spec.n, md[0], md[1], boosts);
            spec.a = std::move(dims.a);
            spec.b = std::move(dims.b);
        } else {
            spec.a = j.at("a").get<std::vector<std::size_t>>();
            spec.b = j.at("b").get<std::vector<std::size_t>>();
        }
    } catch (const json::exception& e) {
        throw std::runtime_error("spec file " + path.string() + ": " + e.what());
    }
    product::validate(spec);
    return spec;
}

void save_spec(const product::CodeSpec& spec, const std::filesystem::path& path) {
    json j;
    j["field"] = field_to_json(spec.field);
    j["m"] = spec.m;
    j["n"] = spec.n;
    j["a"] = spec.a;
    j["b"] = spec.b;
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path.string());
    out << j.dump(2) << '\n';
}

asymptotic::Profile load_profile(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open profile file: " + path.string());
    std::vector<std::pair<double, double>> pts;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        double t, v;
        if (!(ss >> t)) continue; // blank
        if (!(ss >> v))
            throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                                     ": expected \"t v\" pair");
        pts.emplace_back(t, v);
    }
    try {
        return asymptotic::Profile(std::move(pts));
    } catch (const std::exception& e) {
        throw std::runtime_error("profile file " + path.string() + ": " + e.what());
    }
}

void save_profile(const asymptotic::Profile& profile, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path.string());
    for (const auto& [t, v] : profile.breakpoints())
        out << format_double(t) << ' ' << format_double(v) << '\n';
}

distance::DistanceProfile load_distance_profile(const std::filesystem::path& path) {
    const json j = read_json_file(path);
    distance::DistanceProfile p;
    try {
        p.d = j.at("d").get<std::vector<std::size_t>>();
        p.dp = j.at("dp").get<std::vector<std::size_t>>();
    } catch (const json::exception& e) {
        throw std::runtime_error("distance profile " + path.string() + ": " + e.what());
    }
    distance::validate(p);
    return p;
}

namespace {

galois::felem parse_symbol(const std::string& tok, const galois::Field& field,
                           const std::filesystem::path& path) {
    galois::felem v = 0;
    try {
        v = static_cast<galois::felem>(std::stoul(tok));
    } catch (const std::exception&) {
        throw std::runtime_error(path.string() + ": not a symbol: \"" + tok + "\"");
    }
    if (!field.valid(v))
        throw std::runtime_error(path.string() + ": symbol " + tok + " outside field of order " +
                                 std::to_string(field.order()));
    return v;
}

} // namespace

std::vector<galois::felem> load_symbols(const std::filesystem::path& path, std::size_t expected,
                                        const galois::Field& field) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open symbol file: " + path.string());
    std::vector<galois::felem> out;
    std::string tok;
    while (in >> tok) {
        if (tok == "?") throw std::runtime_error(path.string() + ": erasures are not allowed here");
        out.push_back(parse_symbol(tok, field, path));
    }
    if (out.size() != expected)
        throw std::runtime_error(path.string() + ": expected " + std::to_string(expected) +
                                 " symbols, found " + std::to_string(out.size()));
    return out;
}

SymbolMatrix load_symbol_matrix(const std::filesystem::path& path, std::size_t rows, std::size_t cols,
                                const galois::Field& field) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open symbol file: " + path.string());
    SymbolMatrix sm;
    sm.rows = rows;
    sm.cols = cols;
    std::string tok;
    while (in >> tok) {
        if (tok == "?")
            sm.cells.emplace_back(std::nullopt);
        else
            sm.cells.emplace_back(parse_symbol(tok, field, path));
    }
    if (sm.cells.size() != rows * cols)
        throw std::runtime_error(path.string() + ": expected " + std::to_string(rows * cols) +
                                 " symbols, found " + std::to_string(sm.cells.size()));
    return sm;
}

void save_symbol_matrix(const galois::Mat& mat, const simulate::ErasureMask* erased,
                        const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path.string());
    for (std::size_t r = 0; r < mat.rows; ++r) {
        for (std::size_t c = 0; c < mat.cols; ++c) {
            if (c) out << ' ';
            if (erased && erased->get(r, c))
                out << '?';
            else
                out << mat.at(r, c);
        }
        out << '\n';
    }
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string sim_result_csv(const simulate::SimResult& result) {
    std::string out = "epsilon,trials,word_errors,wer,wer_ci95,mean_residual_fraction,mean_rounds\n";
    for (const auto& st : result.per_epsilon) {
        out += format_double(st.epsilon);
        out += ',' + std::to_string(st.trials);
        out += ',' + std::to_string(st.word_errors);
        out += ',' + format_double(st.wer);
        out += ',' + format_double(st.wer_ci95);
        out += ',' + format_double(st.mean_residual_fraction);
        out += ',' + format_double(st.mean_rounds);
        out += '\n';
    }
    return out;
}

void save_csv(const simulate::SimResult& result, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path.string());
    out << sim_result_csv(result);
}

std::vector<double> parse_epsilon_range(const std::string& text) {
    // Either a single value or start:stop:step, endpoints inclusive within
    // 1e-12; grid points are start + i*step, never accumulated sums.
    std::vector<double> out;
    const auto c1 = text.find(':');
    if (c1 == std::string::npos) {
        out.push_back(std::stod(text));
        return out;
    }
    const auto c2 = text.find(':', c1 + 1);
    if (c2 == std::string::npos)
        throw std::runtime_error("epsilon range: expected start:stop:step, got \"" + text + "\"");
    const double start = std::stod(text.substr(0, c1));
    const double stop = std::stod(text.substr(c1 + 1, c2 - c1 - 1));
    const double step = std::stod(text.substr(c2 + 1));
    if (step <= 0.0) throw std::runtime_error("epsilon range: step must be positive");
    if (stop < start) throw std::runtime_error("epsilon range: stop below start");
    for (std::size_t i = 0;; ++i) {
        const double v = start + static_cast<double>(i) * step;
        if (v > stop + 1e-12) break;
        out.push_back(v);
    }
    return out;
}

} // namespace ipc::io
