#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ipc/galois.hpp"

namespace ipc::mds {

using galois::Field;
using galois::felem;

/// A chain of nested MDS codes of one length: the dimension-k member is the
/// Reed-Solomon code generated by the first k rows of the Vandermonde matrix
/// V[i][j] = eval_points[j]^i. Nesting C_1 ⊆ C_2 ⊆ ... is automatic because
/// generator matrices are row prefixes of one another.
class NestedRsFamily {
  public:
    NestedRsFamily(Field field, std::size_t n, std::size_t max_dim, std::vector<felem> eval_points);

    const Field& field() const { return field_; }
    std::size_t length() const { return n_; }
    std::size_t max_dim() const { return max_dim_; }
    const std::vector<felem>& eval_points() const { return points_; }

    /// Vandermonde row r (zero-based): eval_points[j]^r.
    const galois::Mat& vandermonde() const { return rows_; }

    /// Generator matrix of the dimension-k member (first k Vandermonde rows).
    galois::Mat generator(std::size_t k) const;

  private:
    Field field_;
    std::size_t n_;
    std::size_t max_dim_;
    std::vector<felem> points_;
    galois::Mat rows_; // max_dim x n
};

/// Build a family of nested [n, k] RS codes for all k <= max_dim. When no
/// eval points are given, the first n field elements in value order are used.
/// Requires q >= n and pairwise-distinct points.
NestedRsFamily make_family(const Field& field, std::size_t n, std::size_t max_dim,
                           std::optional<std::vector<felem>> eval_points = std::nullopt);

/// message (length k) -> codeword (length n): evaluations of the polynomial
/// with coefficient vector `message` at the family's points.
std::vector<felem> encode(const NestedRsFamily& family, std::size_t k, std::span<const felem> message);

enum class DecodeStatus { ok, insufficient_symbols, not_a_codeword };

struct DecodeResult {
    DecodeStatus status = DecodeStatus::insufficient_symbols;
    std::vector<felem> codeword; // full length-n codeword when status == ok
    std::vector<felem> message;  // interpolated coefficients when status == ok
};

/// Erasure decoding of the dimension-k member. Succeeds iff at least k
/// coordinates are known; solves on the first k known coordinates and
/// verifies the rest, reporting not_a_codeword on any mismatch.
DecodeResult erasure_decode(const NestedRsFamily& family, std::size_t k,
                            std::span<const std::optional<felem>> received);

/// Membership test for the dimension-k member.
bool contains(const NestedRsFamily& family, std::size_t k, std::span<const felem> word);

/// An [n, k] RS code on a permuted point sequence with every coordinate
/// multiplied by a fixed nonzero scalar. Scaling and permutation preserve
/// the minimum distance n - k + 1.
struct ScaledRsCode {
    Field field;
    std::size_t length;
    std::size_t dim;
    std::vector<felem> points;  // evaluation point of each coordinate
    std::vector<felem> scalars; // nonzero multiplier of each coordinate

    std::size_t min_distance() const { return length - dim + 1; }

    galois::Mat generator() const;
    bool contains(std::span<const felem> word) const;
};

/// Plain (unscaled) dimension-k member of the family as a ScaledRsCode.
ScaledRsCode plain_code(const NestedRsFamily& family, std::size_t k);

/// A minimum-distance-(n-k+1) code containing the given binary word as a
/// codeword. The word's weight w must satisfy n - k + 1 <= w <= n. The
/// eval points are relabeled so the witness polynomial's roots land on the
/// zero coordinates of `target`; nonzero coordinates are then scaled to 1.
ScaledRsCode scaled_code_containing(const NestedRsFamily& family, std::size_t k,
                                    std::span<const std::uint8_t> target);

} // namespace ipc::mds
