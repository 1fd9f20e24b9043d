#pragma once

#include <map>
#include <vector>

#include "binomial.hpp"
#include "monomial_ideal.hpp"

namespace algshift {

namespace detail {

inline void check_support(const MonomialIdeal& ideal, std::int64_t n)
{
    if (n < 0) throw InvalidInput("number of variables must be nonnegative");
    if (ideal.max_var() > static_cast<std::uint64_t>(n))
        throw InvalidInput("ideal " + ideal.to_string() + " is not supported on the first " + std::to_string(n) +
                           " variables");
}

inline IntPoly poly_add(IntPoly a, const IntPoly& b, std::size_t shift = 0)
{
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
    return a;
}

class KPolynomial {
public:
    IntPoly operator()(const MonomialIdeal& ideal)
    {
        const auto& g = ideal.generators();
        if (g.empty()) return {1};
        if (auto it = memo_.find(g); it != memo_.end()) return it->second;

        // Count, per variable, how many generators it divides.
        std::map<Var, std::size_t> uses;
        for (const auto& m : g)
            for (const auto& p : m.powers()) ++uses[p.var];
        Var pivot = 0;
        std::size_t best = 1;
        for (const auto& [v, c] : uses)
            if (c > best) { best = c; pivot = v; }

        IntPoly result;
        if (pivot == 0) {
            // Pairwise coprime generators: K = prod (1 - t^{deg m}).
            result = {1};
            for (const auto& m : g) {
                IntPoly f(m.degree() + 1, 0);
                f[0] = 1;
                f[m.degree()] -= 1;
                result = poly_mul_truncated(result, f, result.size() + f.size() - 2);
            }
        } else {
            const auto x = Monomial::variable(pivot);
            // K(S/I) = K(S/(I + x)) + t K(S/(I : x)).
            result = poly_add((*this)(ideal_sum(ideal, MonomialIdeal::minimalize({x}))), (*this)(ideal_quotient(ideal, x)), 1);
        }
        while (result.size() > 1 && result.back() == 0) result.pop_back();
        memo_.emplace(g, result);
        return result;
    }

private:
    std::map<std::vector<Monomial>, IntPoly> memo_;
};

} // namespace detail

/// Numerator K(t) of Hilb(S/I, t) = K(t) / (1 - t)^n. Independent of n once supports fit.
inline IntPoly k_polynomial(const MonomialIdeal& ideal)
{
    detail::KPolynomial k;
    return k(ideal);
}

/// Coefficients of (1 - x)^n Hilb(I cap S_[n], x) through degree dmax (index = degree).
inline IntPoly hilbert_numerator(const MonomialIdeal& ideal, std::int64_t n, std::uint32_t dmax)
{
    detail::check_support(ideal, n);
    auto k = k_polynomial(ideal);
    IntPoly out(dmax + 1, 0);
    out[0] = 1;
    for (std::size_t i = 0; i < k.size() && i <= dmax; ++i) out[i] -= k[i];
    return out;
}

/// Number of monomials of degree d in n variables.
inline std::int64_t monomial_count(std::int64_t n, std::int64_t d)
{
    if (d < 0) return 0;
    if (n == 0) return d == 0 ? 1 : 0;
    return binomial(d + n - 1, n - 1);
}

/// dim_k (I cap S_[n])_d.
inline std::int64_t dim_degree(const MonomialIdeal& ideal, std::int64_t n, std::int64_t d)
{
    detail::check_support(ideal, n);
    if (d < 0) throw InvalidInput("degree must be nonnegative");
    const auto& g = ideal.generators();
    if (g.empty()) return 0;
    constexpr std::size_t kInclusionExclusionCap = 20;
    if (g.size() <= kInclusionExclusionCap) {
        // Inclusion-exclusion over subsets; a subset contributes the count of multiples of its lcm.
        std::int64_t total = 0;
        auto rec = [&](auto&& self, std::size_t next, const Monomial& l, int sign) -> void {
            for (std::size_t i = next; i < g.size(); ++i) {
                auto l2 = lcm(l, g[i]);
                if (l2.degree() > d) continue;
                total += sign * monomial_count(n, d - l2.degree());
                self(self, i + 1, l2, -sign);
            }
        };
        rec(rec, 0, Monomial{}, 1);
        return total;
    }
    auto k = k_polynomial(ideal);
    std::int64_t quotient = 0;
    for (std::size_t i = 0; i < k.size(); ++i) quotient += k[i] * monomial_count(n, d - static_cast<std::int64_t>(i));
    return monomial_count(n, d) - quotient;
}

} // namespace algshift
