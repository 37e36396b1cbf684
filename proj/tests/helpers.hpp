#pragma once

// Test-side oracles and utilities. Everything here is deliberately naive and
// independent of the library's computation paths.

#include <cstdint>
#include <functional>
#include <vector>

#include "ipc/asymptotic.hpp"
#include "ipc/galois.hpp"
#include "ipc/product.hpp"
#include "ipc/simulate.hpp"

namespace test {

// splitmix64; every test that needs randomness seeds one of these explicitly.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return next() % n; }
    double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// Determinant by cofactor expansion; rank = largest r with a nonsingular
// r x r submatrix. Exponential, fine up to 5x5.
inline ipc::galois::felem det_cofactor(const ipc::galois::Field& f, const ipc::galois::Mat& a) {
    const std::size_t n = a.rows;
    if (n == 1) return a.at(0, 0);
    ipc::galois::felem acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (a.at(0, j) == 0) continue;
        ipc::galois::Mat minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = a.at(r, c);
            }
        }
        auto term = f.mul(a.at(0, j), det_cofactor(f, minor));
        acc = (j % 2 == 0) ? f.add(acc, term) : f.sub(acc, term);
    }
    return acc;
}

inline std::size_t rank_minor_oracle(const ipc::galois::Field& f, const ipc::galois::Mat& a) {
    const std::size_t maxr = std::min(a.rows, a.cols);
    for (std::size_t r = maxr; r >= 1; --r) {
        // all r-subsets of rows and columns
        std::vector<std::size_t> rows(r), cols(r);
        std::function<bool(std::size_t, std::size_t)> pick_cols = [&](std::size_t idx, std::size_t lo) {
            if (idx == r) {
                ipc::galois::Mat sub(r, r);
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < r; ++j) sub.at(i, j) = a.at(rows[i], cols[j]);
                return det_cofactor(f, sub) != 0;
            }
            for (std::size_t c = lo; c < a.cols; ++c) {
                cols[idx] = c;
                if (pick_cols(idx + 1, c + 1)) return true;
            }
            return false;
        };
        std::function<bool(std::size_t, std::size_t)> pick_rows = [&](std::size_t idx, std::size_t lo) {
            if (idx == r) return pick_cols(0, 0);
            for (std::size_t rr = lo; rr < a.rows; ++rr) {
                rows[idx] = rr;
                if (pick_rows(idx + 1, rr + 1)) return true;
            }
            return false;
        };
        if (pick_rows(0, 0)) return r;
    }
    return 0;
}

// Calls fn with every message in F^k and its codeword msg * gen.
inline void for_each_codeword(const ipc::galois::Field& f, const ipc::galois::Mat& gen,
                              const std::function<void(const std::vector<ipc::galois::felem>&,
                                                       const std::vector<ipc::galois::felem>&)>& fn) {
    const std::size_t k = gen.rows;
    std::vector<ipc::galois::felem> msg(k, 0);
    while (true) {
        fn(msg, ipc::galois::vec_mat(f, msg, gen));
        std::size_t pos = 0;
        while (pos < k) {
            if (++msg[pos] < f.order()) break;
            msg[pos++] = 0;
        }
        if (pos == k) break;
    }
}

// Basis of the irregular product code with the given component generator
// matrices, via the stacked parity-check nullspace.
inline ipc::galois::Mat product_code_basis(const ipc::galois::Field& f, std::size_t m, std::size_t n,
                                           const std::vector<ipc::galois::Mat>& row_gens,
                                           const std::vector<ipc::galois::Mat>& col_gens) {
    std::vector<std::vector<ipc::galois::felem>> rows;
    for (std::size_t i = 0; i < m; ++i) {
        auto h = ipc::galois::nullspace(f, row_gens[i]);
        for (std::size_t r = 0; r < h.rows; ++r) {
            std::vector<ipc::galois::felem> c(m * n, 0);
            for (std::size_t j = 0; j < n; ++j) c[i * n + j] = h.at(r, j);
            rows.push_back(std::move(c));
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        auto h = ipc::galois::nullspace(f, col_gens[j]);
        for (std::size_t r = 0; r < h.rows; ++r) {
            std::vector<ipc::galois::felem> c(m * n, 0);
            for (std::size_t i = 0; i < m; ++i) c[i * n + j] = h.at(r, i);
            rows.push_back(std::move(c));
        }
    }
    ipc::galois::Mat h(rows.size(), m * n);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < m * n; ++c) h.at(r, c) = rows[r][c];
    return ipc::galois::nullspace(f, h);
}

// Full-rescan reference peeler; returns (residual cells, rounds).
inline std::pair<std::vector<std::uint8_t>, std::size_t> reference_peel(const ipc::product::CodeSpec& s,
                                                                        std::vector<std::uint8_t> cells) {
    const std::size_t m = s.m, n = s.n;
    std::size_t rounds = 0;
    while (true) {
        std::size_t cleared = 0;
        for (std::size_t r = 0; r < m; ++r) {
            std::size_t cnt = 0;
            for (std::size_t c = 0; c < n; ++c) cnt += cells[r * n + c];
            if (cnt > 0 && cnt <= n - s.a[r]) {
                for (std::size_t c = 0; c < n; ++c) cells[r * n + c] = 0;
                cleared += cnt;
            }
        }
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t cnt = 0;
            for (std::size_t r = 0; r < m; ++r) cnt += cells[r * n + c];
            if (cnt > 0 && cnt <= m - s.b[c]) {
                for (std::size_t r = 0; r < m; ++r) cells[r * n + c] = 0;
                cleared += cnt;
            }
        }
        if (!cleared) break;
        ++rounds;
    }
    return {cells, rounds};
}

// sup{z : f(z) <= x} by dense descending scan; reference for the closed form.
inline double ginv_reference(const ipc::asymptotic::Profile& f, double x, std::size_t grid = 2000000) {
    for (std::size_t i = grid + 1; i-- > 0;) {
        const double z = static_cast<double>(i) / static_cast<double>(grid);
        if (f.eval(z) <= x) return z;
    }
    return 0.0;
}

// Random monotone dimension profile 0 <= v_1 <= ... <= v_len <= cap.
inline std::vector<std::size_t> random_monotone_dims(Rng& rng, std::size_t len, std::size_t cap) {
    std::vector<std::size_t> v(len);
    for (auto& x : v) x = rng.below(cap + 1);
    std::sort(v.begin(), v.end());
    return v;
}

// Random non-increasing distance profile 1 <= d_i <= cap.
inline std::vector<std::size_t> random_distance_seq(Rng& rng, std::size_t len, std::size_t cap) {
    std::vector<std::size_t> v(len);
    for (auto& x : v) x = 1 + rng.below(cap);
    std::sort(v.rbegin(), v.rend());
    return v;
}

} // namespace test
