#include "ipc/galois.hpp"

#include <algorithm>
#include <array>
#include <mutex>

namespace ipc::galois {

namespace detail {

struct FieldTables {
    std::vector<felem> exp; // exp[i] = g^i, doubled so exp[log a + log b] needs no reduction
    std::vector<felem> log; // log[x] for x != 0
};

} // namespace detail

namespace {

unsigned poly_degree(std::uint32_t p) {
    unsigned d = 0;
    while (p >> (d + 1)) ++d;
    return d;
}

// Remainder of a mod b in GF(2)[x].
std::uint32_t poly_mod(std::uint64_t a, std::uint32_t b) {
    const unsigned db = poly_degree(b);
    for (int shift = 63 - static_cast<int>(db); shift >= 0; --shift) {
        if (a & (std::uint64_t{1} << (shift + db))) a ^= std::uint64_t{b} << shift;
    }
    return static_cast<std::uint32_t>(a);
}

bool is_irreducible(std::uint32_t poly, unsigned w) {
    if (w == 1) return poly == 0b10 || poly == 0b11;
    if ((poly & 1) == 0) return false; // divisible by x
    for (unsigned dd = 1; dd <= w / 2; ++dd) {
        for (std::uint32_t d = (1u << dd); d < (2u << dd); ++d) {
            if (poly_mod(poly, d) == 0) return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t p = 2; static_cast<std::uint64_t>(p) * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t p = 2; static_cast<std::uint64_t>(p) * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

std::uint32_t gf2e_pow(std::uint32_t x, std::uint32_t e, std::uint32_t poly) {
    std::uint32_t r = 1;
    while (e) {
        if (e & 1) r = clmul_mod(r, x, poly);
        x = clmul_mod(x, x, poly);
        e >>= 1;
    }
    return r;
}

std::shared_ptr<const detail::FieldTables> build_tables(unsigned w, std::uint32_t poly) {
    const std::uint32_t q = 1u << w;
    if (q == 2) {
        auto t = std::make_shared<detail::FieldTables>();
        t->exp.assign(2, 1);
        t->log.assign(2, 0);
        return t;
    }
    // The reduction polynomial need not be primitive, so locate a primitive
    // element and build exp/log on its powers.
    const auto factors = prime_factors(q - 1);
    std::uint32_t gen = 0;
    for (std::uint32_t g = 2; g < q; ++g) {
        bool primitive = true;
        for (auto p : factors) {
            if (gf2e_pow(g, (q - 1) / p, poly) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            gen = g;
            break;
        }
    }
    if (gen == 0) throw std::logic_error("galois: no primitive element found (polynomial not irreducible?)");

    auto t = std::make_shared<detail::FieldTables>();
    t->exp.assign(2 * (q - 1), 0);
    t->log.assign(q, 0);
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i < q - 1; ++i) {
        t->exp[i] = x;
        t->exp[i + q - 1] = x;
        t->log[x] = i;
        x = clmul_mod(x, gen, poly);
    }
    if (x != 1) throw std::logic_error("galois: generator order mismatch");
    return t;
}

} // namespace

std::uint32_t clmul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t poly) {
    std::uint64_t acc = 0;
    std::uint64_t aa = a;
    while (b) {
        if (b & 1) acc ^= aa;
        aa <<= 1;
        b >>= 1;
    }
    return poly_mod(acc, poly);
}

std::uint32_t default_reduction_poly(unsigned w) {
    if (w < 1 || w > 16) throw std::invalid_argument("galois: extension degree must be in [1,16]");
    for (std::uint32_t p = (1u << w) + 1; p < (2u << w); p += 2) {
        if (is_irreducible(p, w)) return p;
    }
    throw std::logic_error("galois: no irreducible polynomial found");
}

Field Field::gf2e(unsigned w) { return gf2e(w, default_reduction_poly(w)); }

Field Field::gf2e(unsigned w, std::uint32_t poly) {
    if (w < 1 || w > 16) throw std::invalid_argument("galois: extension degree must be in [1,16]");
    if (poly_degree(poly) != w || (poly & 1) == 0 || !is_irreducible(poly, w))
        throw std::invalid_argument("galois: reduction polynomial is not irreducible of the requested degree");
    Field f;
    f.kind_ = FieldKind::binary_extension;
    f.w_ = w;
    f.q_ = 1u << w;
    f.poly_ = poly;
    f.tables_ = build_tables(w, poly);
    return f;
}

Field Field::prime(std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("galois: field order is not prime");
    if (p > (1u << 20)) throw std::invalid_argument("galois: prime field order too large");
    Field f;
    f.kind_ = FieldKind::prime;
    f.w_ = 1;
    f.q_ = p;
    f.poly_ = 0;
    return f;
}

felem Field::add(felem x, felem y) const {
    if (kind_ == FieldKind::binary_extension) return x ^ y;
    felem s = x + y;
    return s >= q_ ? s - q_ : s;
}

felem Field::sub(felem x, felem y) const {
    if (kind_ == FieldKind::binary_extension) return x ^ y;
    return x >= y ? x - y : x + q_ - y;
}

felem Field::neg(felem x) const {
    if (kind_ == FieldKind::binary_extension) return x;
    return x == 0 ? 0 : q_ - x;
}

felem Field::mul(felem x, felem y) const {
    if (kind_ == FieldKind::binary_extension) {
        if (x == 0 || y == 0) return 0;
        const auto& t = *tables_;
        return t.exp[t.log[x] + t.log[y]];
    }
    return static_cast<felem>((static_cast<std::uint64_t>(x) * y) % q_);
}

felem Field::inv(felem x) const {
    if (x == 0) throw std::domain_error("galois: inverse of zero");
    if (kind_ == FieldKind::binary_extension) {
        const auto& t = *tables_;
        return t.exp[(q_ - 1) - t.log[x]];
    }
    return pow(x, q_ - 2);
}

felem Field::div(felem x, felem y) const { return mul(x, inv(y)); }

felem Field::pow(felem x, std::uint64_t e) const {
    felem r = 1;
    while (e) {
        if (e & 1) r = mul(r, x);
        x = mul(x, x);
        e >>= 1;
    }
    return r;
}

LinearSolveResult solve_linear(const Field& f, const Mat& a, const std::vector<felem>& b) {
    if (a.rows != b.size()) throw std::invalid_argument("solve_linear: rows(A) != len(b)");
    const std::size_t r = a.rows, c = a.cols;
    Mat aug(r, c + 1);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, c) = b[i];
    }

    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < c && row < r; ++col) {
        std::size_t piv = row;
        while (piv < r && aug.at(piv, col) == 0) ++piv;
        if (piv == r) continue;
        if (piv != row)
            for (std::size_t j = col; j <= c; ++j) std::swap(aug.at(piv, j), aug.at(row, j));
        const felem s = f.inv(aug.at(row, col));
        for (std::size_t j = col; j <= c; ++j) aug.at(row, j) = f.mul(aug.at(row, j), s);
        for (std::size_t i = 0; i < r; ++i) {
            if (i == row || aug.at(i, col) == 0) continue;
            const felem factor = aug.at(i, col);
            for (std::size_t j = col; j <= c; ++j)
                aug.at(i, j) = f.sub(aug.at(i, j), f.mul(factor, aug.at(row, j)));
        }
        pivot_col.push_back(col);
        ++row;
    }

    LinearSolveResult res;
    res.rank = pivot_col.size();
    for (std::size_t i = res.rank; i < r; ++i) {
        if (aug.at(i, c) != 0) {
            res.status = SolveStatus::inconsistent;
            return res;
        }
    }
    res.solution.assign(c, 0);
    for (std::size_t k = 0; k < pivot_col.size(); ++k) res.solution[pivot_col[k]] = aug.at(k, c);
    res.status = res.rank == c ? SolveStatus::unique_solution : SolveStatus::underdetermined;
    return res;
}

std::size_t rank(const Field& f, Mat a) {
    const std::size_t r = a.rows, c = a.cols;
    std::size_t rk = 0;
    for (std::size_t col = 0; col < c && rk < r; ++col) {
        std::size_t piv = rk;
        while (piv < r && a.at(piv, col) == 0) ++piv;
        if (piv == r) continue;
        if (piv != rk)
            for (std::size_t j = col; j < c; ++j) std::swap(a.at(piv, j), a.at(rk, j));
        const felem s = f.inv(a.at(rk, col));
        for (std::size_t j = col; j < c; ++j) a.at(rk, j) = f.mul(a.at(rk, j), s);
        for (std::size_t i = rk + 1; i < r; ++i) {
            if (a.at(i, col) == 0) continue;
            const felem factor = a.at(i, col);
            for (std::size_t j = col; j < c; ++j)
                a.at(i, j) = f.sub(a.at(i, j), f.mul(factor, a.at(rk, j)));
        }
        ++rk;
    }
    return rk;
}

Mat nullspace(const Field& f, const Mat& a) {
    const std::size_t r = a.rows, c = a.cols;
    Mat rr = a;
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < c && row < r; ++col) {
        std::size_t piv = row;
        while (piv < r && rr.at(piv, col) == 0) ++piv;
        if (piv == r) continue;
        if (piv != row)
            for (std::size_t j = col; j < c; ++j) std::swap(rr.at(piv, j), rr.at(row, j));
        const felem s = f.inv(rr.at(row, col));
        for (std::size_t j = col; j < c; ++j) rr.at(row, j) = f.mul(rr.at(row, j), s);
        for (std::size_t i = 0; i < r; ++i) {
            if (i == row || rr.at(i, col) == 0) continue;
            const felem factor = rr.at(i, col);
            for (std::size_t j = col; j < c; ++j)
                rr.at(i, j) = f.sub(rr.at(i, j), f.mul(factor, rr.at(row, j)));
        }
        pivot_col.push_back(col);
        ++row;
    }

    std::vector<bool> is_pivot(c, false);
    for (auto pc : pivot_col) is_pivot[pc] = true;

    Mat basis(c - pivot_col.size(), c);
    std::size_t bi = 0;
    for (std::size_t free = 0; free < c; ++free) {
        if (is_pivot[free]) continue;
        basis.at(bi, free) = 1;
        for (std::size_t k = 0; k < pivot_col.size(); ++k)
            basis.at(bi, pivot_col[k]) = f.neg(rr.at(k, free));
        ++bi;
    }
    return basis;
}

std::vector<felem> mat_vec(const Field& f, const Mat& a, const std::vector<felem>& x) {
    if (a.cols != x.size()) throw std::invalid_argument("mat_vec: dimension mismatch");
    std::vector<felem> y(a.rows, 0);
    for (std::size_t i = 0; i < a.rows; ++i) {
        felem acc = 0;
        for (std::size_t j = 0; j < a.cols; ++j) acc = f.add(acc, f.mul(a.at(i, j), x[j]));
        y[i] = acc;
    }
    return y;
}

std::vector<felem> vec_mat(const Field& f, const std::vector<felem>& x, const Mat& a) {
    if (a.rows != x.size()) throw std::invalid_argument("vec_mat: dimension mismatch");
    std::vector<felem> y(a.cols, 0);
    for (std::size_t i = 0; i < a.rows; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < a.cols; ++j) y[j] = f.add(y[j], f.mul(x[i], a.at(i, j)));
    }
    return y;
}

} // namespace ipc::galois
