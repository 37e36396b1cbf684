#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ipc/galois.hpp"
#include "ipc/mds.hpp"

namespace ipc::product {

using galois::Field;
using galois::felem;

/// Validation failure with the offending field named; the CLI reports
/// `what()` verbatim.
class SpecError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Full description of one irregular product code over nested MDS component
/// codes: row i of a codeword matrix lies in an [n, a_i] code, column j in
/// an [m, b_j] code.
struct CodeSpec {
    Field field;
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<std::size_t> a; // row code dimensions, non-decreasing, in [0, n]
    std::vector<std::size_t> b; // column code dimensions, non-decreasing, in [0, m]
};

/// Throws SpecError naming the first offending field/index.
void validate(const CodeSpec& spec);

/// Information length k = sum_j sum_{i=b_{j-1}+1}^{b_j} max(a_i - j + 1, 0).
std::size_t dimension(const CodeSpec& spec);

struct Coord {
    std::size_t row = 0; // zero-based
    std::size_t col = 0;
    friend bool operator==(const Coord&, const Coord&) = default;
};

enum class FillKind { row, column };

struct FillStep {
    FillKind kind = FillKind::row;
    std::size_t index = 0; // zero-based row or column index
    std::vector<Coord> coords;
};

/// Record of the marking procedure: free (generating) coordinates in the
/// order they were marked, plus the ordered fill steps that determine every
/// other coordinate. Replayed verbatim by the systematic encoder.
struct MarkSchedule {
    std::vector<Coord> generating;
    std::vector<FillStep> steps;
};

/// Runs the marking procedure: (A) fill the lowest-index determined row,
/// else (B) the lowest-index determined column, else (C) mark generating
/// coordinates in the lowest-index unfinished row. A row counts as
/// determined once >= a_i of its coordinates are marked (MDS semantics);
/// marked sets are checked to stay prefixes of their row/column throughout.
MarkSchedule mark_schedule(const CodeSpec& spec);

/// Spec plus cached nested RS component families and mark schedule;
/// immutable after construction and safe to share across threads.
class ProductCode {
  public:
    explicit ProductCode(CodeSpec spec);

    const CodeSpec& spec() const { return spec_; }
    const MarkSchedule& schedule() const { return schedule_; }
    const mds::NestedRsFamily& row_family() const { return row_family_; }
    const mds::NestedRsFamily& col_family() const { return col_family_; }
    std::size_t dimension() const { return schedule_.generating.size(); }

    /// Systematic encoding: info symbols are placed at the generating
    /// coordinates in schedule order, then fill steps regenerate every
    /// determined coordinate through its row/column component code.
    galois::Mat encode(std::span<const felem> info) const;

    /// Reads the info symbols back out of a codeword matrix.
    std::vector<felem> extract_info(const galois::Mat& cw) const;

    bool is_codeword(const galois::Mat& mat) const;

  private:
    CodeSpec spec_;
    mds::NestedRsFamily row_family_;
    mds::NestedRsFamily col_family_;
    MarkSchedule schedule_;
};

/// Independent dimension check: stacks the parity constraints of every row
/// and column code into one (sum (n-a_i) + sum (m-b_j)) x mn matrix H and
/// returns mn - rank(H).
std::size_t dimension_oracle(const CodeSpec& spec);

/// Same rank computation for arbitrary component generator matrices
/// (row_gens[i] is a_i x n, col_gens[j] is b_j x m).
std::size_t dimension_oracle_general(const Field& field, std::size_t m, std::size_t n,
                                     const std::vector<galois::Mat>& row_gens,
                                     const std::vector<galois::Mat>& col_gens);

} // namespace ipc::product
