#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

namespace ipc::galois {

/// Field element, stored as a plain integer in [0, q). The owning Field is
/// passed explicitly to every operation.
using felem = std::uint32_t;

enum class FieldKind { binary_extension, prime };

namespace detail {
struct FieldTables;
}

/// Immutable finite-field context for GF(2^w), w <= 16, or GF(p) for small
/// prime p. Cheap to copy (tables are shared) and safe to share across
/// threads after construction.
class Field {
  public:
    /// Defaults to GF(2).
    Field() = default;

    /// GF(2^w) with the default reduction polynomial: the lexicographically
    /// smallest irreducible polynomial of degree w.
    static Field gf2e(unsigned w);

    /// GF(2^w) with an explicit reduction polynomial given as a bitmask of
    /// degree w (bit w and bit 0 must be set; must be irreducible).
    static Field gf2e(unsigned w, std::uint32_t poly);

    static Field prime(std::uint32_t p);

    FieldKind kind() const { return kind_; }
    std::uint32_t order() const { return q_; }
    /// Extension degree w for binary-extension fields, 1 for prime fields.
    unsigned degree() const { return w_; }
    std::uint32_t reduction_poly() const { return poly_; }

    felem add(felem x, felem y) const;
    felem sub(felem x, felem y) const;
    felem neg(felem x) const;
    felem mul(felem x, felem y) const;
    felem inv(felem x) const; // throws std::domain_error on zero
    felem div(felem x, felem y) const;
    felem pow(felem x, std::uint64_t e) const;

    bool valid(felem x) const { return x < q_; }

    /// Two Field objects describe the same field iff kind, order and (for
    /// binary extensions) the reduction polynomial agree.
    friend bool operator==(const Field& a, const Field& b) {
        return a.kind_ == b.kind_ && a.q_ == b.q_ && a.poly_ == b.poly_;
    }
    friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

  private:
    FieldKind kind_ = FieldKind::prime;
    std::uint32_t q_ = 2;
    unsigned w_ = 1;
    std::uint32_t poly_ = 0;
    std::shared_ptr<const detail::FieldTables> tables_;
};

/// Lexicographically smallest irreducible polynomial of degree w over GF(2),
/// as a bitmask including the leading term.
std::uint32_t default_reduction_poly(unsigned w);

/// Schoolbook polynomial multiplication modulo `poly` over GF(2). Reference
/// path for the table-based multiply.
std::uint32_t clmul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t poly);

/// Dense row-major matrix of field elements.
struct Mat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<felem> data;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

    felem& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    felem at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

enum class SolveStatus { unique_solution, underdetermined, inconsistent };

struct LinearSolveResult {
    SolveStatus status = SolveStatus::inconsistent;
    /// One solution of A x = b (free variables set to zero); empty when
    /// the system is inconsistent.
    std::vector<felem> solution;
    std::size_t rank = 0;
};

/// Gaussian elimination over GF(q). Throws std::invalid_argument on
/// dimension mismatch between A and b.
LinearSolveResult solve_linear(const Field& f, const Mat& a, const std::vector<felem>& b);

std::size_t rank(const Field& f, Mat a);

/// Basis of {x : A x = 0}, one basis vector per returned row.
Mat nullspace(const Field& f, const Mat& a);

/// Matrix-vector product y = A x.
std::vector<felem> mat_vec(const Field& f, const Mat& a, const std::vector<felem>& x);

/// Row-vector / matrix product y = x A.
std::vector<felem> vec_mat(const Field& f, const std::vector<felem>& x, const Mat& a);

} // namespace ipc::galois
