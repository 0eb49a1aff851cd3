#pragma once

#include <cstddef>
#include <vector>

namespace papr::lp {

enum class Status { optimal, unbounded, pivot_limit };

struct Solution {
    Status status = Status::optimal;
    std::vector<double> x;
    double objective = 0.0;
};

/// Dense tableau simplex for
///     maximize c.x  subject to  A x <= b,  x >= 0,  with b >= 0,
/// so the slack basis is feasible from the start. Dantzig pricing, switching to
/// Bland's rule after a run of degenerate pivots. Intended for a few hundred rows.
Solution maximize(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                  const std::vector<double>& c, std::size_t max_pivots = 200000);

}  // namespace papr::lp
