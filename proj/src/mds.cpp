#include "ipc/mds.hpp"

#include <algorithm>
#include <unordered_set>

namespace ipc::mds {

NestedRsFamily::NestedRsFamily(Field field, std::size_t n, std::size_t max_dim,
                               std::vector<felem> eval_points)
    : field_(std::move(field)), n_(n), max_dim_(max_dim), points_(std::move(eval_points)),
      rows_(max_dim, n) {
    for (std::size_t j = 0; j < n_; ++j) {
        felem p = 1;
        for (std::size_t i = 0; i < max_dim_; ++i) {
            rows_.at(i, j) = p;
            p = field_.mul(p, points_[j]);
        }
    }
}

galois::Mat NestedRsFamily::generator(std::size_t k) const {
    if (k > max_dim_) throw std::invalid_argument("mds: dimension exceeds family max_dim");
    galois::Mat g(k, n_);
    std::copy_n(rows_.data.begin(), k * n_, g.data.begin());
    return g;
}

NestedRsFamily make_family(const Field& field, std::size_t n, std::size_t max_dim,
                           std::optional<std::vector<felem>> eval_points) {
    if (n == 0) throw std::invalid_argument("mds: length must be positive");
    if (field.order() < n) throw std::invalid_argument("mds: field order is smaller than the code length");
    if (max_dim > n) throw std::invalid_argument("mds: max_dim exceeds length");

    std::vector<felem> pts;
    if (eval_points) {
        pts = std::move(*eval_points);
        if (pts.size() != n) throw std::invalid_argument("mds: eval point count != length");
        std::unordered_set<felem> seen;
        for (felem p : pts) {
            if (!field.valid(p)) throw std::invalid_argument("mds: eval point outside field");
            if (!seen.insert(p).second) throw std::invalid_argument("mds: duplicate eval points");
        }
    } else {
        pts.resize(n);
        for (std::size_t j = 0; j < n; ++j) pts[j] = static_cast<felem>(j);
    }
    return NestedRsFamily(field, n, max_dim, std::move(pts));
}

std::vector<felem> encode(const NestedRsFamily& family, std::size_t k, std::span<const felem> message) {
    if (k > family.max_dim()) throw std::invalid_argument("mds: dimension exceeds family max_dim");
    if (message.size() != k) throw std::invalid_argument("mds: message length != k");
    const Field& f = family.field();
    const auto& v = family.vandermonde();
    std::vector<felem> cw(family.length(), 0);
    for (std::size_t i = 0; i < k; ++i) {
        if (message[i] == 0) continue;
        for (std::size_t j = 0; j < family.length(); ++j)
            cw[j] = f.add(cw[j], f.mul(message[i], v.at(i, j)));
    }
    return cw;
}

DecodeResult erasure_decode(const NestedRsFamily& family, std::size_t k,
                            std::span<const std::optional<felem>> received) {
    if (k > family.max_dim()) throw std::invalid_argument("mds: dimension exceeds family max_dim");
    if (received.size() != family.length())
        throw std::invalid_argument("mds: received length != code length");

    const Field& f = family.field();
    const auto& v = family.vandermonde();

    std::vector<std::size_t> known;
    known.reserve(family.length());
    for (std::size_t j = 0; j < received.size(); ++j)
        if (received[j]) known.push_back(j);

    DecodeResult res;
    if (known.size() < k) {
        res.status = DecodeStatus::insufficient_symbols;
        return res;
    }

    // Solve for the message on the first k known coordinates; any k columns
    // of the k-row Vandermonde prefix are independent, so the system is
    // always uniquely solvable.
    std::vector<felem> msg(k, 0);
    if (k > 0) {
        galois::Mat sys(k, k);
        std::vector<felem> rhs(k);
        for (std::size_t r = 0; r < k; ++r) {
            const std::size_t col = known[r];
            for (std::size_t i = 0; i < k; ++i) sys.at(r, i) = v.at(i, col);
            rhs[r] = *received[col];
        }
        auto sol = galois::solve_linear(f, sys, rhs);
        if (sol.status != galois::SolveStatus::unique_solution)
            throw std::logic_error("mds: restricted Vandermonde system not uniquely solvable");
        msg = std::move(sol.solution);
    }

    auto cw = encode(family, k, msg);
    for (std::size_t r = k; r < known.size(); ++r) {
        if (cw[known[r]] != *received[known[r]]) {
            res.status = DecodeStatus::not_a_codeword;
            return res;
        }
    }
    res.status = DecodeStatus::ok;
    res.codeword = std::move(cw);
    res.message = std::move(msg);
    return res;
}

bool contains(const NestedRsFamily& family, std::size_t k, std::span<const felem> word) {
    if (word.size() != family.length()) throw std::invalid_argument("mds: word length != code length");
    std::vector<std::optional<felem>> rec(word.begin(), word.end());
    return erasure_decode(family, k, rec).status == DecodeStatus::ok;
}

galois::Mat ScaledRsCode::generator() const {
    galois::Mat g(dim, length);
    for (std::size_t j = 0; j < length; ++j) {
        felem p = scalars[j];
        for (std::size_t i = 0; i < dim; ++i) {
            g.at(i, j) = p;
            p = field.mul(p, points[j]);
        }
    }
    return g;
}

bool ScaledRsCode::contains(std::span<const felem> word) const {
    if (word.size() != length) throw std::invalid_argument("mds: word length != code length");
    // Divide out the scalars, then test membership in the RS code on the
    // permuted points.
    auto family = make_family(field, length, dim, points);
    std::vector<felem> unscaled(length);
    for (std::size_t j = 0; j < length; ++j) unscaled[j] = field.div(word[j], scalars[j]);
    return mds::contains(family, dim, unscaled);
}

ScaledRsCode plain_code(const NestedRsFamily& family, std::size_t k) {
    if (k > family.max_dim()) throw std::invalid_argument("mds: dimension exceeds family max_dim");
    return ScaledRsCode{family.field(), family.length(), k, family.eval_points(),
                        std::vector<felem>(family.length(), 1)};
}

ScaledRsCode scaled_code_containing(const NestedRsFamily& family, std::size_t k,
                                    std::span<const std::uint8_t> target) {
    const std::size_t n = family.length();
    if (target.size() != n) throw std::invalid_argument("mds: target length != code length");
    if (k == 0 || k > family.max_dim()) throw std::invalid_argument("mds: dimension out of range");

    std::size_t w = 0;
    for (auto bit : target) w += bit ? 1 : 0;
    if (w + k < n + 1 || w > n)
        throw std::invalid_argument("mds: target weight outside [n-k+1, n]");

    const Field& f = family.field();

    // Relabel eval points: roots go to the zero coordinates of the target.
    std::vector<felem> pts(n);
    std::vector<std::size_t> zero_pos, one_pos;
    for (std::size_t j = 0; j < n; ++j) (target[j] ? one_pos : zero_pos).push_back(j);
    {
        std::size_t next = 0;
        for (std::size_t z : zero_pos) pts[z] = family.eval_points()[next++];
        for (std::size_t o : one_pos) pts[o] = family.eval_points()[next++];
    }

    // p(x) = (x - r_1)^(k+w-n) (x - r_2) ... (x - r_{n-w}), degree k-1,
    // with exactly w non-roots among the n points.
    const std::size_t n_roots = n - w;
    std::vector<felem> values(n, 1);
    if (n_roots > 0) {
        const felem first_root = pts[zero_pos[0]];
        const std::size_t mult = k + w - n; // >= 1 by the weight precondition
        for (std::size_t j = 0; j < n; ++j) {
            felem acc = f.pow(f.sub(pts[j], first_root), mult);
            for (std::size_t r = 1; r < n_roots; ++r)
                acc = f.mul(acc, f.sub(pts[j], pts[zero_pos[r]]));
            values[j] = acc;
        }
    }

    ScaledRsCode code{f, n, k, std::move(pts), std::vector<felem>(n, 1)};
    for (std::size_t j : one_pos) {
        if (values[j] == 0) throw std::logic_error("mds: witness polynomial vanished on a support coordinate");
        code.scalars[j] = f.inv(values[j]);
    }
    return code;
}

} // namespace ipc::mds
