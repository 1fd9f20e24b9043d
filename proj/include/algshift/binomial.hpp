#pragma once

#include <cstdint>
#include <vector>

namespace algshift {

/// (a choose i) with the convention that it vanishes for a < i or i < 0 (a may be negative).
inline std::int64_t binomial(std::int64_t a, std::int64_t i)
{
    if (i < 0 || a < i) return 0;
    if (i > a - i) i = a - i;
    std::int64_t r = 1;
    for (std::int64_t k = 1; k <= i; ++k) r = r * (a - i + k) / k;
    return r;
}

/// Integer polynomials as dense coefficient vectors, index = degree.
using IntPoly = std::vector<std::int64_t>;

inline IntPoly poly_mul_truncated(const IntPoly& a, const IntPoly& b, std::size_t max_degree)
{
    IntPoly out(max_degree + 1, 0);
    for (std::size_t i = 0; i < a.size() && i <= max_degree; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j <= max_degree; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

/// Truncated power series of (1 - x)^e for any integer e (negative e gives the geometric-type series).
inline IntPoly one_minus_x_pow(std::int64_t e, std::size_t max_degree)
{
    IntPoly out(max_degree + 1, 0);
    for (std::size_t i = 0; i <= max_degree; ++i) {
        auto k = static_cast<std::int64_t>(i);
        std::int64_t c = e >= 0 ? binomial(e, k) : binomial(-e + k - 1, k);
        out[i] = (e >= 0 && (k % 2 == 1)) ? -c : c;
    }
    return out;
}

} // namespace algshift
