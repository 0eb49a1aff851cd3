#pragma once

#include "papr/types.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace papr {

constexpr bool is_power_of_two(std::size_t n) noexcept { return n != 0 && (n & (n - 1)) == 0; }

/// Iterative radix-2 decimation-in-time transform of a fixed power-of-two size.
/// Neither direction is scaled.
class FftPlan {
public:
    explicit FftPlan(std::size_t n);

    std::size_t size() const noexcept { return n_; }

    /// X[k] = sum_n x[n] exp(-j 2 pi k n / size)
    void forward(std::span<Complex> data) const;
    /// x[n] = sum_k X[k] exp(+j 2 pi k n / size)
    void inverse(std::span<Complex> data) const;

private:
    void transform(std::span<Complex> data, bool inverse) const;

    std::size_t n_;
    std::vector<std::size_t> bitrev_;
    std::vector<Complex> twiddles_;  // exp(-j 2 pi i / n), i < n/2
};

/// Per-thread cache of plans keyed by size.
const FftPlan& cached_plan(std::size_t n);

}  // namespace papr
