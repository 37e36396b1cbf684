#include "ipc/distance.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>

namespace ipc::distance {

void validate(const DistanceProfile& p) {
    const std::size_t m = p.m(), n = p.n();
    if (m == 0 || n == 0) throw std::invalid_argument("distance profile: empty dimension");
    for (std::size_t i = 0; i < m; ++i) {
        if (p.d[i] < 1 || p.d[i] > n)
            throw std::invalid_argument("distance profile: d[" + std::to_string(i + 1) + "] outside [1, n]");
        if (i > 0 && p.d[i] > p.d[i - 1])
            throw std::invalid_argument("distance profile: d not non-increasing at index " + std::to_string(i + 1));
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (p.dp[j] < 1 || p.dp[j] > m)
            throw std::invalid_argument("distance profile: dp[" + std::to_string(j + 1) + "] outside [1, m]");
        if (j > 0 && p.dp[j] > p.dp[j - 1])
            throw std::invalid_argument("distance profile: dp not non-increasing at index " + std::to_string(j + 1));
    }
}

namespace {

// max over i-1 <= i' <= m, j-1 <= j' <= n of
//   sum_{k=i}^{i'} d_k + sum_{k=j}^{j'} dp_k - (i'-i+1)(j'-j+1),
// i.e. over all row/column sub-range sizes including empty.
long long inner_max(const DistanceProfile& p, std::size_t i, std::size_t j) {
    const std::size_t m = p.m(), n = p.n();
    long long best = std::numeric_limits<long long>::min();
    long long sum_d = 0;
    for (std::size_t rc = 0; rc <= m - i + 1; ++rc) { // rc rows taken from i
        if (rc > 0) sum_d += static_cast<long long>(p.d[i - 2 + rc]);
        long long sum_dp = 0;
        for (std::size_t cc = 0; cc <= n - j + 1; ++cc) {
            if (cc > 0) sum_dp += static_cast<long long>(p.dp[j - 2 + cc]);
            best = std::max(best, sum_d + sum_dp - static_cast<long long>(rc) * static_cast<long long>(cc));
        }
    }
    return best;
}

bool admissible(const DistanceProfile& p, std::size_t i, std::size_t j) {
    return p.d[i - 1] <= p.n() - j + 1 && p.dp[j - 1] <= p.m() - i + 1;
}

} // namespace

std::size_t distance_bound(const DistanceProfile& p) {
    validate(p);
    const std::size_t m = p.m(), n = p.n();
    long long best = std::numeric_limits<long long>::max();
    bool any = false;
    for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
            if (!admissible(p, i, j)) continue;
            any = true;
            best = std::min(best, inner_max(p, i, j));
        }
    }
    if (!any) throw std::logic_error("distance_bound: no admissible anchor (profile invariants violated?)");
    return static_cast<std::size_t>(best);
}

std::pair<std::size_t, WitnessMatrix> min_weight_oracle(const DistanceProfile& p) {
    validate(p);
    const std::size_t m = p.m(), n = p.n();
    const std::size_t cells = m * n;
    if (cells > 25) throw std::invalid_argument("min_weight_oracle: m*n > 25 is not searchable exhaustively");

    std::vector<std::uint32_t> col_mask(n, 0);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < m; ++i) col_mask[j] |= 1u << (i * n + j);
    const std::uint32_t row_bits = (n == 32) ? ~0u : ((1u << n) - 1);

    auto valid = [&](std::uint32_t mask) {
        for (std::size_t i = 0; i < m; ++i) {
            const auto w = std::popcount(mask >> (i * n) & row_bits);
            if (w != 0 && static_cast<std::size_t>(w) < p.d[i]) return false;
        }
        for (std::size_t j = 0; j < n; ++j) {
            const auto w = std::popcount(mask & col_mask[j]);
            if (w != 0 && static_cast<std::size_t>(w) < p.dp[j]) return false;
        }
        return true;
    };

    // Enumerate masks by increasing weight (Gosper's hack), so the first
    // valid mask found has minimum weight.
    for (std::size_t weight = 1; weight <= cells; ++weight) {
        std::uint64_t mask = (std::uint64_t{1} << weight) - 1;
        const std::uint64_t limit = std::uint64_t{1} << cells;
        while (mask < limit) {
            if (valid(static_cast<std::uint32_t>(mask))) {
                WitnessMatrix w;
                w.m = m;
                w.n = n;
                w.weight = weight;
                w.bits.assign(cells, 0);
                for (std::size_t c = 0; c < cells; ++c) w.bits[c] = (mask >> c) & 1;
                return {weight, w};
            }
            const std::uint64_t lo = mask & (~mask + 1);
            const std::uint64_t left = mask + lo;
            mask = left | (((mask ^ left) / lo) >> 2);
        }
    }
    throw std::logic_error("min_weight_oracle: no valid nonzero matrix (cannot happen for valid profiles)");
}

std::size_t inner_via_maxflow(const DistanceProfile& p, std::size_t i, std::size_t j) {
    validate(p);
    const std::size_t m = p.m(), n = p.n();
    if (i < 1 || i > m || j < 1 || j > n) throw std::invalid_argument("inner_via_maxflow: anchor out of range");
    const std::size_t rows = m - i + 1, cols = n - j + 1;

    // source = 0, rows = 1..rows, cols = rows+1..rows+cols, sink = rows+cols+1
    const std::size_t nodes = rows + cols + 2;
    const std::size_t src = 0, sink = nodes - 1;
    std::vector<std::vector<long long>> cap(nodes, std::vector<long long>(nodes, 0));
    for (std::size_t r = 0; r < rows; ++r) {
        const long long c = static_cast<long long>(cols) - static_cast<long long>(p.d[i - 1 + r]);
        if (c < 0) throw std::invalid_argument("inner_via_maxflow: anchor inadmissible (negative row capacity)");
        cap[src][1 + r] = c;
        for (std::size_t cidx = 0; cidx < cols; ++cidx) cap[1 + r][1 + rows + cidx] = 1;
    }
    for (std::size_t cidx = 0; cidx < cols; ++cidx) {
        const long long c = static_cast<long long>(rows) - static_cast<long long>(p.dp[j - 1 + cidx]);
        if (c < 0) throw std::invalid_argument("inner_via_maxflow: anchor inadmissible (negative column capacity)");
        cap[1 + rows + cidx][sink] = c;
    }

    // Edmonds-Karp
    long long flow = 0;
    while (true) {
        std::vector<int> parent(nodes, -1);
        parent[src] = static_cast<int>(src);
        std::queue<std::size_t> q;
        q.push(src);
        while (!q.empty() && parent[sink] == -1) {
            const std::size_t u = q.front();
            q.pop();
            for (std::size_t v = 0; v < nodes; ++v) {
                if (parent[v] == -1 && cap[u][v] > 0) {
                    parent[v] = static_cast<int>(u);
                    q.push(v);
                }
            }
        }
        if (parent[sink] == -1) break;
        long long aug = std::numeric_limits<long long>::max();
        for (std::size_t v = sink; v != src; v = static_cast<std::size_t>(parent[v]))
            aug = std::min(aug, cap[parent[v]][v]);
        for (std::size_t v = sink; v != src; v = static_cast<std::size_t>(parent[v])) {
            cap[parent[v]][v] -= aug;
            cap[v][parent[v]] += aug;
        }
        flow += aug;
    }
    return rows * cols - static_cast<std::size_t>(flow);
}

ComponentFamily achieve_distance(const DistanceProfile& p, const galois::Field& field) {
    validate(p);
    const std::size_t m = p.m(), n = p.n();
    if (field.order() < std::max(m, n))
        throw std::invalid_argument("achieve_distance: field order smaller than max(m, n)");

    auto witness = min_weight_oracle(p).second;
    auto row_family = mds::make_family(field, n, n);
    auto col_family = mds::make_family(field, m, m);

    ComponentFamily fam;
    fam.witness = witness;
    fam.row_codes.reserve(m);
    fam.col_codes.reserve(n);

    std::vector<std::uint8_t> line;
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t k = n - p.d[i] + 1;
        line.assign(witness.bits.begin() + i * n, witness.bits.begin() + (i + 1) * n);
        const bool nonzero = std::any_of(line.begin(), line.end(), [](auto b) { return b != 0; });
        fam.row_codes.push_back(nonzero ? mds::scaled_code_containing(row_family, k, line)
                                        : mds::plain_code(row_family, k));
    }
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t k = m - p.dp[j] + 1;
        line.resize(m);
        for (std::size_t i = 0; i < m; ++i) line[i] = witness.at(i, j);
        const bool nonzero = std::any_of(line.begin(), line.end(), [](auto b) { return b != 0; });
        fam.col_codes.push_back(nonzero ? mds::scaled_code_containing(col_family, k, line)
                                        : mds::plain_code(col_family, k));
    }
    return fam;
}

bool is_codeword(const ComponentFamily& family, const galois::Mat& mat) {
    const std::size_t m = family.row_codes.size(), n = family.col_codes.size();
    if (mat.rows != m || mat.cols != n) throw std::invalid_argument("is_codeword: matrix shape mismatch");
    std::vector<galois::felem> line;
    for (std::size_t i = 0; i < m; ++i) {
        line.assign(mat.data.begin() + i * n, mat.data.begin() + (i + 1) * n);
        if (!family.row_codes[i].contains(line)) return false;
    }
    for (std::size_t j = 0; j < n; ++j) {
        line.resize(m);
        for (std::size_t i = 0; i < m; ++i) line[i] = mat.at(i, j);
        if (!family.col_codes[j].contains(line)) return false;
    }
    return true;
}

} // namespace ipc::distance
