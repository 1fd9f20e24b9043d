#pragma once

#include <algorithm>
#include <atomic>
#include <optional>
#include <string>
#include <vector>

#include "groebner.hpp"
#include "hilbert.hpp"
#include "monomial_ideal.hpp"
#include "rational.hpp"

namespace algshift {

struct GinOptions {
    std::uint64_t seed = 1;
    int trials = 2;
    std::int64_t range = GenericMatrix::kDefaultRange;
    /// Rounds of fresh seeds with a squared coefficient range after a trial disagreement.
    int max_retries = 2;
    /// Compute only generators of degree <= bound (exact in those degrees).
    std::optional<std::uint32_t> degree_bound;
};

/// Counters over every certified gin call in the process.
struct GinStats {
    std::atomic<std::uint64_t> calls{0};
    std::atomic<std::uint64_t> retries{0};
};

inline GinStats& gin_stats()
{
    static GinStats stats;
    return stats;
}

/// Seed for trial `t` of a run with base seed `seed` (splitmix64 finalizer).
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t t)
{
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (t + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// in_ord(g I) for one explicit change of coordinates, via the Groebner engine.
inline MonomialIdeal initial_ideal_after_change(const MonomialIdeal& ideal, const GenericMatrix& g, const TermOrder& ord,
                                                std::optional<std::uint32_t> degree_bound = std::nullopt)
{
    const auto n = g.n();
    if (ideal.max_var() > n) throw InvalidInput("ideal support exceeds the matrix size");
    if (n > engine::kMaxVars) throw InvalidInput("too many variables for the Groebner engine");
    if (ideal.is_zero()) return {};
    const engine::Order eo(ord.with_policy(DegreePolicy::Groebner), n);
    std::vector<engine::Poly> gens;
    for (const auto& m : ideal.generators())
        if (!degree_bound || m.degree() <= *degree_bound) gens.push_back(engine::image_of_monomial(g, m, eo));
    // Hilbert-driven stop: the leading monomials span an ideal inside in(gI); once its Hilbert
    // series equals that of I the two coincide and the remaining pairs all reduce to zero.
    const auto target = k_polynomial(degree_bound ? ideal.truncated(*degree_bound) : ideal);
    auto complete = [&](const std::vector<engine::Mono>& leads) {
        std::vector<Monomial> ms;
        for (const auto& m : leads) ms.push_back(engine::to_monomial(m, n));
        return k_polynomial(MonomialIdeal::minimalize(std::move(ms))) == target;
    };
    auto basis = engine::minimal_basis(std::move(gens), eo, degree_bound, complete);
    std::vector<Monomial> lead;
    lead.reserve(basis.size());
    for (const auto& f : basis) lead.push_back(engine::to_monomial(f.front().m, n));
    return MonomialIdeal::minimalize(std::move(lead));
}

namespace detail {

inline void certify_gin(const MonomialIdeal& source, const MonomialIdeal& result, Var n,
                        std::optional<std::uint32_t> degree_bound)
{
    if (!is_strongly_stable(result))
        throw GinError("gin result " + result.to_string() + " is not strongly stable");
    std::uint32_t top = result.is_zero() ? 1 : regularity(result) + 1;
    if (degree_bound) top = std::min(top, *degree_bound);
    for (std::uint32_t e = 0; e <= top; ++e)
        if (dim_degree(result, n, e) != dim_degree(source, n, e))
            throw GinError("gin result " + result.to_string() + " changes the Hilbert function in degree " +
                           std::to_string(e));
    if (!degree_bound && k_polynomial(result) != k_polynomial(source))
        throw GinError("gin result " + result.to_string() + " changes the Hilbert series");
}

} // namespace detail

/// Generic initial ideal Gin_ord(I) in S_[n] = k[x_1..x_n].
/// Runs `trials` independent seeded upper-triangular changes of coordinates; all must agree.
/// On disagreement, retries with fresh seeds and a squared coefficient range. The result is
/// certified strongly stable and Hilbert-function preserving.
inline MonomialIdeal gin(const MonomialIdeal& ideal, Var n, const TermOrder& ord, const GinOptions& opt = {})
{
    detail::check_support(ideal, n);
    if (opt.trials < 1) throw InvalidInput("gin needs at least one trial");
    gin_stats().calls++;
    if (ideal.is_zero()) return {};
    std::int64_t range = opt.range;
    for (int round = 0; round <= opt.max_retries; ++round) {
        std::optional<MonomialIdeal> agreed;
        bool disagreement = false;
        for (int t = 0; t < opt.trials; ++t) {
            const auto seed = trial_seed(opt.seed, static_cast<std::uint64_t>(round) * 1000 + t);
            auto in = initial_ideal_after_change(ideal, GenericMatrix::sample_normalized(n, seed, range), ord, opt.degree_bound);
            if (!agreed) agreed = std::move(in);
            else if (!(in == *agreed)) {
                disagreement = true;
                break;
            }
        }
        if (!disagreement) {
            detail::certify_gin(ideal, *agreed, n, opt.degree_bound);
            return *agreed;
        }
        gin_stats().retries++;
        constexpr std::int64_t kRangeCap = 1'000'000'000'000'000'000;
        range = range > kRangeCap / range ? kRangeCap : range * range;
    }
    throw GinError("gin trials keep disagreeing for " + ideal.to_string());
}

inline MonomialIdeal gin(const MonomialIdeal& ideal, Var n, const TermOrder& ord, std::uint64_t seed, int trials)
{
    GinOptions opt;
    opt.seed = seed;
    opt.trials = trials;
    return gin(ideal, n, ord, opt);
}

/// Linear-algebra oracle: for each degree e <= d, row-reduce g applied to a monomial basis of I_e
/// with columns in ord-descending order; the pivot columns are the monomials of Gin_e.
/// Returns all monomials of Gin of degree <= d (not only generators).
inline std::vector<Monomial> gin_truncated(const MonomialIdeal& ideal, Var n, const TermOrder& ord, std::uint32_t d,
                                           std::uint64_t seed = 1, std::int64_t range = GenericMatrix::kDefaultRange)
{
    detail::check_support(ideal, n);
    std::vector<Monomial> out;
    if (ideal.is_zero()) return out;
    const auto g = GenericMatrix::sample(n, trial_seed(seed, 0), range);
    const auto o = ord.with_policy(DegreePolicy::Groebner);
    for (std::uint32_t e = 0; e <= d; ++e) {
        auto columns = monomials_of_degree(n, e);
        std::sort(columns.begin(), columns.end(), [&](const Monomial& a, const Monomial& b) { return o.greater(a, b); });
        std::vector<Monomial> basis;
        for (const auto& m : columns)
            if (ideal.contains(m)) basis.push_back(m);
        if (basis.empty()) continue;
        std::map<Monomial, std::size_t> column_of;
        for (std::size_t c = 0; c < columns.size(); ++c) column_of[columns[c]] = c;
        RationalMatrix mat(basis.size(), columns.size());
        for (std::size_t r = 0; r < basis.size(); ++r) {
            const auto image = apply_change(g, Polynomial(basis[r]));
            for (const auto& [m, c] : image.terms()) mat(r, column_of.at(m)) = c;
        }
        for (auto c : row_echelon(mat)) out.push_back(columns[c]);
    }
    return out;
}

/// Minimal generators of the ideal spanned by a set of monomials.
inline MonomialIdeal ideal_of(std::vector<Monomial> monomials) { return MonomialIdeal::minimalize(std::move(monomials)); }

} // namespace algshift
