#include "ipc/product.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace ipc::product {

void validate(const CodeSpec& spec) {
    if (spec.m == 0) throw SpecError("m must be positive");
    if (spec.n == 0) throw SpecError("n must be positive");
    if (spec.field.order() < std::max(spec.m, spec.n))
        throw SpecError("field order " + std::to_string(spec.field.order()) +
                        " is smaller than max(m, n) = " + std::to_string(std::max(spec.m, spec.n)));
    if (spec.a.size() != spec.m)
        throw SpecError("a has length " + std::to_string(spec.a.size()) + ", expected m = " +
                        std::to_string(spec.m));
    if (spec.b.size() != spec.n)
        throw SpecError("b has length " + std::to_string(spec.b.size()) + ", expected n = " +
                        std::to_string(spec.n));
    for (std::size_t i = 0; i < spec.m; ++i) {
        if (spec.a[i] > spec.n)
            throw SpecError("a[" + std::to_string(i + 1) + "] = " + std::to_string(spec.a[i]) +
                            " exceeds n = " + std::to_string(spec.n));
        if (i > 0 && spec.a[i] < spec.a[i - 1])
            throw SpecError("a is not non-decreasing at index " + std::to_string(i + 1));
    }
    for (std::size_t j = 0; j < spec.n; ++j) {
        if (spec.b[j] > spec.m)
            throw SpecError("b[" + std::to_string(j + 1) + "] = " + std::to_string(spec.b[j]) +
                            " exceeds m = " + std::to_string(spec.m));
        if (j > 0 && spec.b[j] < spec.b[j - 1])
            throw SpecError("b is not non-decreasing at index " + std::to_string(j + 1));
    }
}

std::size_t dimension(const CodeSpec& spec) {
    validate(spec);
    std::size_t k = 0;
    for (std::size_t j = 1; j <= spec.n; ++j) {
        const std::size_t lo = (j == 1) ? 0 : spec.b[j - 2]; // b_{j-1}, with b_0 = 0
        const std::size_t hi = spec.b[j - 1];                // b_j
        for (std::size_t i = lo + 1; i <= hi; ++i) {
            const auto ai = static_cast<long long>(spec.a[i - 1]);
            const auto term = ai - static_cast<long long>(j) + 1;
            if (term > 0) k += static_cast<std::size_t>(term);
        }
    }
    return k;
}

namespace {

// Marking state. Per the procedure's invariant, the marked cells of every
// row and column form a prefix, so prefix lengths double as marked counts.
struct MarkState {
    std::size_t m, n;
    std::vector<std::size_t> row_prefix; // marked cells in row i
    std::vector<std::size_t> col_prefix; // marked cells in column j

    MarkState(std::size_t m_, std::size_t n_) : m(m_), n(n_), row_prefix(m_, 0), col_prefix(n_, 0) {}

    void mark(std::size_t r, std::size_t c) {
        if (row_prefix[r] != c || col_prefix[c] != r)
            throw std::logic_error("mark_schedule: prefix property violated at (" +
                                   std::to_string(r + 1) + "," + std::to_string(c + 1) + ")");
        ++row_prefix[r];
        ++col_prefix[c];
    }

    bool row_available(std::size_t i) const { return row_prefix[i] < n; }
    bool col_available(std::size_t j) const { return col_prefix[j] < m; }
};

} // namespace

MarkSchedule mark_schedule(const CodeSpec& spec) {
    validate(spec);
    const std::size_t m = spec.m, n = spec.n;
    MarkState st(m, n);
    MarkSchedule sched;
    std::size_t unmarked = m * n;

    while (unmarked > 0) {
        // (A) lowest-index available determined row
        std::size_t pick = m;
        for (std::size_t i = 0; i < m; ++i) {
            if (st.row_available(i) && st.row_prefix[i] >= spec.a[i]) {
                pick = i;
                break;
            }
        }
        if (pick < m) {
            FillStep step{FillKind::row, pick, {}};
            for (std::size_t j = st.row_prefix[pick]; j < n; ++j) {
                step.coords.push_back({pick, j});
                st.mark(pick, j);
                --unmarked;
            }
            sched.steps.push_back(std::move(step));
            continue;
        }
        // (B) lowest-index available determined column
        pick = n;
        for (std::size_t j = 0; j < n; ++j) {
            if (st.col_available(j) && st.col_prefix[j] >= spec.b[j]) {
                pick = j;
                break;
            }
        }
        if (pick < n) {
            FillStep step{FillKind::column, pick, {}};
            for (std::size_t i = st.col_prefix[pick]; i < m; ++i) {
                step.coords.push_back({i, pick});
                st.mark(i, pick);
                --unmarked;
            }
            sched.steps.push_back(std::move(step));
            continue;
        }
        // (C) lowest-index available row: generating up to the first a_i
        // coordinates, the rest determined through the row.
        pick = m;
        for (std::size_t i = 0; i < m; ++i) {
            if (st.row_available(i)) {
                pick = i;
                break;
            }
        }
        if (pick == m) throw std::logic_error("mark_schedule: unmarked cells but no available row");
        if (st.row_prefix[pick] >= spec.a[pick])
            throw std::logic_error("mark_schedule: branch (C) reached a determined row");
        for (std::size_t j = st.row_prefix[pick]; j < spec.a[pick]; ++j) {
            sched.generating.push_back({pick, j});
            st.mark(pick, j);
            --unmarked;
        }
        if (st.row_prefix[pick] < n) {
            FillStep step{FillKind::row, pick, {}};
            for (std::size_t j = st.row_prefix[pick]; j < n; ++j) {
                step.coords.push_back({pick, j});
                st.mark(pick, j);
                --unmarked;
            }
            sched.steps.push_back(std::move(step));
        }
    }
    return sched;
}

namespace {
CodeSpec validated(CodeSpec spec) {
    validate(spec);
    return spec;
}
} // namespace

ProductCode::ProductCode(CodeSpec spec)
    : spec_(validated(std::move(spec))),
      row_family_(mds::make_family(spec_.field, spec_.n, spec_.a.back())),
      col_family_(mds::make_family(spec_.field, spec_.m, spec_.b.back())),
      schedule_(mark_schedule(spec_)) {}

galois::Mat ProductCode::encode(std::span<const felem> info) const {
    if (info.size() != schedule_.generating.size())
        throw std::invalid_argument("encode: info length " + std::to_string(info.size()) +
                                    " != code dimension " + std::to_string(schedule_.generating.size()));
    const Field& f = spec_.field;
    galois::Mat cw(spec_.m, spec_.n);
    std::vector<std::uint8_t> filled(spec_.m * spec_.n, 0);

    for (std::size_t k = 0; k < info.size(); ++k) {
        if (!f.valid(info[k])) throw std::invalid_argument("encode: info symbol outside field");
        const auto [r, c] = schedule_.generating[k];
        cw.at(r, c) = info[k];
        filled[r * spec_.n + c] = 1;
    }

    for (const auto& step : schedule_.steps) {
        const bool by_row = step.kind == FillKind::row;
        const auto& family = by_row ? row_family_ : col_family_;
        const std::size_t len = by_row ? spec_.n : spec_.m;
        const std::size_t dim = by_row ? spec_.a[step.index] : spec_.b[step.index];

        // The component code is generated by its first `dim` coordinates;
        // those must already be filled when the step replays.
        std::vector<std::optional<felem>> received(len);
        for (std::size_t t = 0; t < dim; ++t) {
            const std::size_t r = by_row ? step.index : t;
            const std::size_t c = by_row ? t : step.index;
            if (!filled[r * spec_.n + c])
                throw std::logic_error("encode: fill step replayed before its prefix was available");
            received[t] = cw.at(r, c);
        }
        auto dec = mds::erasure_decode(family, dim, received);
        if (dec.status != mds::DecodeStatus::ok)
            throw std::logic_error("encode: component decode failed during replay");
        for (const auto& [r, c] : step.coords) {
            cw.at(r, c) = dec.codeword[by_row ? c : r];
            filled[r * spec_.n + c] = 1;
        }
    }
    return cw;
}

std::vector<felem> ProductCode::extract_info(const galois::Mat& cw) const {
    if (cw.rows != spec_.m || cw.cols != spec_.n)
        throw std::invalid_argument("extract_info: matrix shape mismatch");
    std::vector<felem> info;
    info.reserve(schedule_.generating.size());
    for (const auto& [r, c] : schedule_.generating) info.push_back(cw.at(r, c));
    return info;
}

bool ProductCode::is_codeword(const galois::Mat& mat) const {
    if (mat.rows != spec_.m || mat.cols != spec_.n)
        throw std::invalid_argument("is_codeword: matrix shape mismatch");
    std::vector<felem> buf;
    for (std::size_t i = 0; i < spec_.m; ++i) {
        buf.assign(mat.data.begin() + i * spec_.n, mat.data.begin() + (i + 1) * spec_.n);
        if (!mds::contains(row_family_, spec_.a[i], buf)) return false;
    }
    for (std::size_t j = 0; j < spec_.n; ++j) {
        buf.resize(spec_.m);
        for (std::size_t i = 0; i < spec_.m; ++i) buf[i] = mat.at(i, j);
        if (!mds::contains(col_family_, spec_.b[j], buf)) return false;
    }
    return true;
}

std::size_t dimension_oracle(const CodeSpec& spec) {
    validate(spec);
    auto row_family = mds::make_family(spec.field, spec.n, spec.a.back());
    auto col_family = mds::make_family(spec.field, spec.m, spec.b.back());
    std::vector<galois::Mat> row_gens, col_gens;
    row_gens.reserve(spec.m);
    col_gens.reserve(spec.n);
    for (std::size_t i = 0; i < spec.m; ++i) row_gens.push_back(row_family.generator(spec.a[i]));
    for (std::size_t j = 0; j < spec.n; ++j) col_gens.push_back(col_family.generator(spec.b[j]));
    return dimension_oracle_general(spec.field, spec.m, spec.n, row_gens, col_gens);
}

std::size_t dimension_oracle_general(const Field& field, std::size_t m, std::size_t n,
                                     const std::vector<galois::Mat>& row_gens,
                                     const std::vector<galois::Mat>& col_gens) {
    if (row_gens.size() != m || col_gens.size() != n)
        throw std::invalid_argument("dimension_oracle: generator count mismatch");
    const std::size_t cells = m * n;
    std::vector<std::vector<felem>> constraints;

    for (std::size_t i = 0; i < m; ++i) {
        auto h = galois::nullspace(field, row_gens[i]);
        for (std::size_t r = 0; r < h.rows; ++r) {
            std::vector<felem> row(cells, 0);
            for (std::size_t j = 0; j < n; ++j) row[i * n + j] = h.at(r, j);
            constraints.push_back(std::move(row));
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        auto h = galois::nullspace(field, col_gens[j]);
        for (std::size_t r = 0; r < h.rows; ++r) {
            std::vector<felem> row(cells, 0);
            for (std::size_t i = 0; i < m; ++i) row[i * n + j] = h.at(r, i);
            constraints.push_back(std::move(row));
        }
    }

    galois::Mat h(constraints.size(), cells);
    for (std::size_t r = 0; r < constraints.size(); ++r)
        for (std::size_t c = 0; c < cells; ++c) h.at(r, c) = constraints[r][c];
    return cells - galois::rank(field, std::move(h));
}

} // namespace ipc::product
