#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ipc/galois.hpp"
#include "ipc/mds.hpp"

namespace ipc::distance {

/// Component minimum-distance targets: d (rows) and dp (columns), both
/// non-increasing, with 1 <= d_i <= n and 1 <= dp_j <= m.
struct DistanceProfile {
    std::vector<std::size_t> d;  // length m
    std::vector<std::size_t> dp; // length n

    std::size_t m() const { return d.size(); }
    std::size_t n() const { return dp.size(); }
};

void validate(const DistanceProfile& p);

/// Nonzero binary matrix whose nonzero rows/columns meet the profile's
/// weight lower bounds; min weight over all such matrices equals the
/// product-code distance bound.
struct WitnessMatrix {
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<std::uint8_t> bits; // row-major
    std::size_t weight = 0;

    std::uint8_t at(std::size_t r, std::size_t c) const { return bits[r * n + c]; }
};

/// Closed-form bound: min over admissible anchors (i, j) of the max over
/// row/column ranges of sum(d) + sum(dp) - area. An anchor is admissible
/// when d_i <= n - j + 1 and dp_j <= m - i + 1.
std::size_t distance_bound(const DistanceProfile& p);

/// Exhaustive minimum-weight witness search over all nonzero binary m x n
/// matrices. Feasible for m*n <= 25 (guarded).
std::pair<std::size_t, WitnessMatrix> min_weight_oracle(const DistanceProfile& p);

/// Minimum number of ones in the (i..m) x (j..n) submatrix, computed through
/// the max-flow instance (source->rows, columns->sink, unit row-column
/// edges). Anchors are 1-based; throws on an inadmissible anchor.
std::size_t inner_via_maxflow(const DistanceProfile& p, std::size_t i, std::size_t j);

/// Row and column component codes assembled so the product code's minimum
/// distance is exactly the bound: the witness matrix is a codeword.
struct ComponentFamily {
    std::vector<mds::ScaledRsCode> row_codes;
    std::vector<mds::ScaledRsCode> col_codes;
    WitnessMatrix witness;
};

ComponentFamily achieve_distance(const DistanceProfile& p, const galois::Field& field);

/// Membership in the irregular product code built from arbitrary scaled-RS
/// components.
bool is_codeword(const ComponentFamily& family, const galois::Mat& mat);

} // namespace ipc::distance
