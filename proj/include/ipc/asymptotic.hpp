#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace ipc::asymptotic {

/// Non-decreasing piecewise-linear function [0,1] -> [0,1] given by
/// breakpoints (t, v) with strictly increasing t covering 0 and 1. All
/// inverses, compositions and integrals are evaluated in closed form per
/// segment.
class Profile {
  public:
    explicit Profile(std::vector<std::pair<double, double>> breakpoints);

    const std::vector<std::pair<double, double>>& breakpoints() const { return bp_; }

    double eval(double t) const;
    double value_at_0() const { return bp_.front().second; }
    double value_at_1() const { return bp_.back().second; }

    /// f(t) = scale * t.
    static Profile linear(double scale);
    /// f == v everywhere.
    static Profile constant(double v);

  private:
    std::vector<std::pair<double, double>> bp_;
};

/// sup{ z in [0,1] : f(z) <= x }, or 0 when the set is empty; the
/// right-continuous generalized inverse.
double generalized_inverse(const Profile& f, double x);

struct DeCheckResult {
    bool satisfied = false;
    double violating_x = 0.0; // smallest violating point when !satisfied
};

/// Verifies the decodability condition a^-1(eps * b^-1(eps x)) < x on (0,1].
/// Evaluated at all composite piece boundaries plus a uniform safety grid;
/// ties count as violations.
DeCheckResult de_check(const Profile& alpha, const Profile& beta, double epsilon,
                       std::size_t grid = 10000);

struct DeTrajectory {
    double epsilon = 0.0;
    std::vector<double> xs; // x_0 = 1, x_1, ...
    double converged_to = 1.0;
    std::size_t rounds = 0;
};

/// Iterates x_{i+1} = a^-1(eps b^-1(eps x_i)) from x_0 = 1 until
/// x <= x_stop or max_rounds; the sequence is non-increasing.
DeTrajectory de_trajectory(const Profile& alpha, const Profile& beta, double epsilon,
                           double x_stop, std::size_t max_rounds);

/// The matching row profile alpha(x) = eps * b^-1(eps x) for a column
/// profile beta with beta(0) = 0 and beta(1) <= eps. The resulting pair has
/// asymptotic rate 1 - eps and passes de_check at any rate below eps.
Profile design_alpha_from_beta(const Profile& beta, double epsilon);

/// Exact integral of max(b^-1(x) - a(x), 0) over [0,1]; the asymptotic rate
/// of the (alpha, beta) family. quad_points adds uniform refinement points
/// on top of the exact piece boundaries.
double asymptotic_rate(const Profile& alpha, const Profile& beta, std::size_t quad_points = 0);

struct DiscretizeResult {
    std::vector<std::size_t> a;
    std::vector<std::size_t> b;
};

/// Finite-length profile: a_i = round(n(1 - alpha(1 - i/m))) clamped so
/// every row code has minimum distance >= min_row_dist (and likewise for
/// columns); the first `boosts` rows/columns are then forced down to the
/// strongest (lowest) dimension, and a forward max-scan restores
/// monotonicity.
DiscretizeResult discretize(const Profile& alpha, const Profile& beta, std::size_t m, std::size_t n,
                            std::size_t min_row_dist, std::size_t min_col_dist, std::size_t boosts);

} // namespace ipc::asymptotic
