#include "papr/simplex.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace papr::lp {

Solution maximize(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                  const std::vector<double>& c, std::size_t max_pivots)
{
    const std::size_t m = a.size();
    const std::size_t n = c.size();
    if (b.size() != m) throw std::invalid_argument("LP: row count mismatch");
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("LP: column count mismatch");
    for (double v : b)
        if (v < 0.0) throw std::invalid_argument("LP: right-hand side must be nonnegative");

    constexpr double eps = 1e-11;
    const std::size_t cols = n + m + 1;
    const std::size_t rhs = n + m;
    std::vector<double> t((m + 1) * cols, 0.0);
    auto at = [&](std::size_t r, std::size_t col) -> double& { return t[r * cols + col]; };

    std::vector<std::size_t> basis(m);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t j = 0; j < n; ++j) at(r, j) = a[r][j];
        at(r, n + r) = 1.0;
        at(r, rhs) = b[r];
        basis[r] = n + r;
    }
    for (std::size_t j = 0; j < n; ++j) at(m, j) = -c[j];

    Solution sol;
    std::size_t degenerate_run = 0;
    std::size_t pivots = 0;
    for (;; ++pivots) {
        if (pivots >= max_pivots) {
            sol.status = Status::pivot_limit;
            break;
        }
        const bool bland = degenerate_run > 50;
        std::size_t enter = cols;
        double most_negative = -eps;
        for (std::size_t j = 0; j < rhs; ++j) {
            if (at(m, j) < most_negative) {
                enter = j;
                if (bland) break;
                most_negative = at(m, j);
            }
        }
        if (enter == cols) break;

        std::size_t leave = m;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (std::size_t r = 0; r < m; ++r) {
            const double coeff = at(r, enter);
            if (coeff > eps) {
                const double ratio = at(r, rhs) / coeff;
                if (ratio < best_ratio - eps || (ratio <= best_ratio + eps && leave < m && basis[r] < basis[leave])) {
                    best_ratio = ratio;
                    leave = r;
                }
            }
        }
        if (leave == m) {
            sol.status = Status::unbounded;
            return sol;
        }
        degenerate_run = best_ratio <= eps ? degenerate_run + 1 : 0;

        const double pivot = at(leave, enter);
        for (std::size_t j = 0; j < cols; ++j) at(leave, j) /= pivot;
        for (std::size_t r = 0; r <= m; ++r) {
            if (r == leave) continue;
            const double factor = at(r, enter);
            if (factor == 0.0) continue;
            for (std::size_t j = 0; j < cols; ++j) at(r, j) -= factor * at(leave, j);
        }
        basis[leave] = enter;
    }

    sol.x.assign(n, 0.0);
    for (std::size_t r = 0; r < m; ++r)
        if (basis[r] < n) sol.x[basis[r]] = at(r, rhs);
    sol.objective = 0.0;
    for (std::size_t j = 0; j < n; ++j) sol.objective += c[j] * sol.x[j];
    return sol;
}

}  // namespace papr::lp
