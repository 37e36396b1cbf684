#include "ipc/asymptotic.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace ipc::asymptotic {

namespace {
constexpr double kJumpEps = 1e-12;
}

Profile::Profile(std::vector<std::pair<double, double>> breakpoints) : bp_(std::move(breakpoints)) {
    if (bp_.size() < 2) throw std::invalid_argument("profile: need at least two breakpoints");
    if (bp_.front().first != 0.0 || bp_.back().first != 1.0)
        throw std::invalid_argument("profile: breakpoints must cover t = 0 and t = 1");
    for (std::size_t i = 0; i < bp_.size(); ++i) {
        const auto [t, v] = bp_[i];
        if (t < 0.0 || t > 1.0 || v < 0.0 || v > 1.0)
            throw std::invalid_argument("profile: breakpoint outside the unit square at index " +
                                        std::to_string(i + 1));
        if (i > 0 && t <= bp_[i - 1].first)
            throw std::invalid_argument("profile: t not strictly increasing at index " + std::to_string(i + 1));
        if (i > 0 && v < bp_[i - 1].second)
            throw std::invalid_argument("profile: v not non-decreasing at index " + std::to_string(i + 1));
    }
}

double Profile::eval(double t) const {
    if (t <= 0.0) return bp_.front().second;
    if (t >= 1.0) return bp_.back().second;
    auto it = std::upper_bound(bp_.begin(), bp_.end(), t,
                               [](double x, const auto& p) { return x < p.first; });
    const auto& [t1, v1] = *it;
    const auto& [t0, v0] = *(it - 1);
    return v0 + (v1 - v0) * (t - t0) / (t1 - t0);
}

Profile Profile::linear(double scale) { return Profile({{0.0, 0.0}, {1.0, scale}}); }

Profile Profile::constant(double v) { return Profile({{0.0, v}, {1.0, v}}); }

double generalized_inverse(const Profile& f, double x) {
    const auto& bp = f.breakpoints();
    // Largest breakpoint with value <= x; the crossing lies in the segment
    // that follows it.
    std::ptrdiff_t idx = -1;
    for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(bp.size()) - 1; i >= 0; --i) {
        if (bp[static_cast<std::size_t>(i)].second <= x) {
            idx = i;
            break;
        }
    }
    if (idx < 0) return 0.0; // f(0) > x: empty set
    const auto& [t0, v0] = bp[static_cast<std::size_t>(idx)];
    if (static_cast<std::size_t>(idx) + 1 == bp.size()) return 1.0;
    const auto& [t1, v1] = bp[static_cast<std::size_t>(idx) + 1];
    // v1 > x >= v0 here, so the segment rises strictly.
    const double z = t0 + (x - v0) * (t1 - t0) / (v1 - v0);
    return std::min(z, 1.0);
}

namespace {

double de_map(const Profile& alpha, const Profile& beta, double epsilon, double x) {
    return generalized_inverse(alpha, epsilon * generalized_inverse(beta, epsilon * x));
}

} // namespace

DeCheckResult de_check(const Profile& alpha, const Profile& beta, double epsilon, std::size_t grid) {
    if (epsilon <= 0.0 || epsilon >= 1.0) throw std::invalid_argument("de_check: epsilon outside (0,1)");
    if (grid < 2) grid = 2;

    std::set<double> xs;
    for (std::size_t k = 1; k <= grid; ++k) xs.insert(static_cast<double>(k) / static_cast<double>(grid));
    auto add = [&](double x) {
        for (double cand : {x - kJumpEps, x, x + kJumpEps})
            if (cand > 0.0 && cand <= 1.0) xs.insert(cand);
    };
    // Piece boundaries of the composite map: beta's values reached by eps*x,
    // and the points where the inner value crosses alpha's breakpoint values.
    for (const auto& [t, v] : beta.breakpoints()) add(v / epsilon);
    for (const auto& [t, v] : alpha.breakpoints()) {
        const double w = v / epsilon;
        if (w <= 1.0) add(beta.eval(w) / epsilon);
    }

    DeCheckResult res;
    res.satisfied = true;
    for (double x : xs) {
        if (de_map(alpha, beta, epsilon, x) >= x) {
            res.satisfied = false;
            res.violating_x = x;
            return res;
        }
    }
    return res;
}

DeTrajectory de_trajectory(const Profile& alpha, const Profile& beta, double epsilon,
                           double x_stop, std::size_t max_rounds) {
    if (epsilon <= 0.0 || epsilon >= 1.0) throw std::invalid_argument("de_trajectory: epsilon outside (0,1)");
    DeTrajectory tr;
    tr.epsilon = epsilon;
    double x = 1.0;
    tr.xs.push_back(x);
    while (x > x_stop && tr.rounds < max_rounds) {
        x = de_map(alpha, beta, epsilon, x);
        tr.xs.push_back(x);
        ++tr.rounds;
    }
    tr.converged_to = x;
    return tr;
}

Profile design_alpha_from_beta(const Profile& beta, double epsilon) {
    if (epsilon <= 0.0 || epsilon >= 1.0)
        throw std::invalid_argument("design_alpha_from_beta: epsilon outside (0,1)");
    if (beta.value_at_0() != 0.0) throw std::invalid_argument("design_alpha_from_beta: beta(0) must be 0");
    if (beta.value_at_1() > epsilon)
        throw std::invalid_argument("design_alpha_from_beta: beta(1) exceeds epsilon");

    // alpha(x) = eps * beta^-1(eps x): piece boundaries sit at x = v/eps for
    // each distinct breakpoint value v of beta. A plateau of beta at level v
    // makes beta^-1 jump there; approximate the jump with a kJumpEps ramp.
    std::vector<std::pair<double, double>> pts;
    pts.emplace_back(0.0, epsilon * generalized_inverse(beta, 0.0));

    std::vector<double> values;
    for (const auto& [t, v] : beta.breakpoints()) values.push_back(v);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());

    for (double v : values) {
        if (v <= 0.0) continue;
        const double x = v / epsilon;
        const double up = generalized_inverse(beta, v);
        // Left limit of beta^-1 at v: first t where beta reaches v.
        double down = up;
        for (const auto& [t, bv] : beta.breakpoints()) {
            if (bv >= v) {
                down = t;
                break;
            }
        }
        if (up - down > kJumpEps && x - kJumpEps > pts.back().first)
            pts.emplace_back(x - kJumpEps, epsilon * down);
        if (x > pts.back().first) pts.emplace_back(std::min(x, 1.0), epsilon * up);
    }
    if (pts.back().first < 1.0) pts.emplace_back(1.0, epsilon * generalized_inverse(beta, beta.value_at_1()));
    return Profile(std::move(pts));
}

double asymptotic_rate(const Profile& alpha, const Profile& beta, std::size_t quad_points) {
    // Split [0,1] at every x where either beta^-1 or alpha changes piece;
    // both are affine between consecutive cuts, so reconstruct the affine
    // difference from two interior samples and integrate max(., 0) exactly.
    std::set<double> cuts{0.0, 1.0};
    for (const auto& [t, v] : beta.breakpoints()) {
        if (v >= 0.0 && v <= 1.0) cuts.insert(v);
    }
    for (const auto& [t, v] : alpha.breakpoints()) cuts.insert(t);
    for (std::size_t k = 1; k < quad_points; ++k)
        cuts.insert(static_cast<double>(k) / static_cast<double>(quad_points));

    double total = 0.0;
    auto it = cuts.begin();
    double x1 = *it;
    for (++it; it != cuts.end(); ++it) {
        const double x2 = *it;
        const double len = x2 - x1;
        if (len <= 0.0) {
            x1 = x2;
            continue;
        }
        const double p = x1 + len / 3.0, q = x1 + 2.0 * len / 3.0;
        const double dp = generalized_inverse(beta, p) - alpha.eval(p);
        const double dq = generalized_inverse(beta, q) - alpha.eval(q);
        const double slope = (dq - dp) / (q - p);
        const double at1 = dp + slope * (x1 - p); // one-sided limits at the cut
        const double at2 = dp + slope * (x2 - p);
        if (at1 >= 0.0 && at2 >= 0.0) {
            total += 0.5 * (at1 + at2) * len;
        } else if (at1 > 0.0 || at2 > 0.0) {
            const double x0 = x1 + (0.0 - at1) / slope;
            if (at1 > 0.0)
                total += 0.5 * at1 * (x0 - x1);
            else
                total += 0.5 * at2 * (x2 - x0);
        }
        x1 = x2;
    }
    return total;
}

DiscretizeResult discretize(const Profile& alpha, const Profile& beta, std::size_t m, std::size_t n,
                            std::size_t min_row_dist, std::size_t min_col_dist, std::size_t boosts) {
    if (m == 0 || n == 0) throw std::invalid_argument("discretize: m and n must be positive");
    if (min_row_dist < 1 || min_row_dist > n)
        throw std::invalid_argument("discretize: row distance floor outside [1, n]");
    if (min_col_dist < 1 || min_col_dist > m)
        throw std::invalid_argument("discretize: column distance floor outside [1, m]");

    auto build = [](const Profile& f, std::size_t count, std::size_t len, std::size_t floor_dist) {
        std::vector<std::size_t> dims(count);
        const auto cap = len - floor_dist + 1;
        for (std::size_t i = 1; i <= count; ++i) {
            const double x = 1.0 - static_cast<double>(i) / static_cast<double>(count);
            const double val = static_cast<double>(len) * (1.0 - f.eval(x));
            auto rounded = static_cast<long long>(std::floor(val + 0.5));
            rounded = std::clamp<long long>(rounded, 0, static_cast<long long>(cap));
            dims[i - 1] = static_cast<std::size_t>(rounded);
        }
        return dims;
    };

    DiscretizeResult res;
    res.a = build(alpha, m, n, min_row_dist);
    res.b = build(beta, n, m, min_col_dist);

    for (std::size_t i = 0; i < std::min(boosts, m); ++i) res.a[i] = res.a[0];
    for (std::size_t j = 0; j < std::min(boosts, n); ++j) res.b[j] = res.b[0];

    for (std::size_t i = 1; i < m; ++i) res.a[i] = std::max(res.a[i], res.a[i - 1]);
    for (std::size_t j = 1; j < n; ++j) res.b[j] = std::max(res.b[j], res.b[j - 1]);
    return res;
}

} // namespace ipc::asymptotic
