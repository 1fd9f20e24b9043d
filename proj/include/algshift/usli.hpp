#pragma once

#include <vector>

#include "betti.hpp"
#include "monomial_ideal.hpp"
#include "simplicial_complex.hpp"

namespace algshift {

/// Degree <= dmax part of the universal squarefree lexsegment ideal L(k).
struct UsliPrefix {
    KSequence k;
    std::vector<std::int64_t> R; // R[0] = 0, R[j] = j + k_1 + ... + k_j
    MonomialIdeal generators;

    friend bool operator==(const UsliPrefix&, const UsliPrefix&) = default;
};

inline std::vector<std::int64_t> usli_indices(const KSequence& k)
{
    std::vector<std::int64_t> r(k.dmax + 1, 0);
    std::int64_t sum = 0;
    for (std::uint32_t j = 1; j <= k.dmax; ++j) {
        sum += k.values[j];
        r[j] = j + sum;
    }
    return r;
}

/// Degree-r generators are x_{R_1} ... x_{R_{r-1}} * x_l for R_{r-1} < l < R_r.
inline UsliPrefix usli_from_k(const KSequence& k, std::uint32_t dmax)
{
    KSequence kk(dmax);
    for (std::uint32_t i = 1; i <= dmax; ++i) {
        if (k.at(i) < 0) throw InvalidInput("k entries must be nonnegative");
        kk.values[i] = k.at(i);
    }
    UsliPrefix out{kk, usli_indices(kk), {}};
    std::vector<Monomial> gens;
    std::vector<Var> head;
    for (std::uint32_t r = 1; r <= dmax; ++r) {
        for (auto l = out.R[r - 1] + 1; l <= out.R[r] - 1; ++l) {
            auto vars = head;
            vars.push_back(static_cast<Var>(l));
            gens.push_back(Monomial::squarefree(vars));
        }
        head.push_back(static_cast<Var>(out.R[r]));
    }
    out.generators = MonomialIdeal::minimalize(std::move(gens));
    return out;
}

inline UsliPrefix usli_from_k(const KSequence& k) { return usli_from_k(k, k.dmax); }

/// Number of minimal generators in each degree 1..max degree.
inline KSequence generator_counts(const MonomialIdeal& ideal)
{
    std::uint32_t top = 0;
    for (const auto& g : ideal.generators()) top = std::max(top, g.degree());
    KSequence k(top);
    for (const auto& g : ideal.generators()) ++k.values[g.degree()];
    return k;
}

/// True iff I is squarefree and G(I) is the generator set of L(k) with k_i = |G(I)_i|.
/// The zero ideal counts as the USLI with k = 0.
inline bool is_usli(const MonomialIdeal& ideal)
{
    if (ideal.is_zero()) return true;
    if (!ideal.is_squarefree()) return false;
    return usli_from_k(generator_counts(ideal)).generators == ideal;
}

/// Squarefree strongly stable, not a USLI, and a USLI once the last generator in generator order is dropped.
inline bool is_almost_usli(const MonomialIdeal& ideal)
{
    if (ideal.is_zero() || !is_squarefree_strongly_stable(ideal) || is_usli(ideal)) return false;
    auto gens = ideal.generators();
    gens.pop_back();
    return is_usli(MonomialIdeal::minimalize(std::move(gens)));
}

/// Facets of the complex on [n] with Stanley-Reisner ideal L(k), d the last degree with k_d > 0:
/// F_i = {R_1..R_{i-1}} u [R_i + 1, n] for i < d and F_d = {R_1..R_{d-1}} u [R_d, n].
inline std::vector<Face> usli_facets(const KSequence& k, Vertex n)
{
    const auto d = k.last_nonzero();
    if (d == 0) throw InvalidInput("usli_facets needs a nonzero k");
    const auto r = usli_indices(k);
    if (r[d] > static_cast<std::int64_t>(n) + 1)
        throw InvalidInput("usli_facets: n = " + std::to_string(n) + " is below R_d - 1 = " + std::to_string(r[d] - 1));
    std::vector<Face> out;
    Face head;
    for (std::uint32_t i = 1; i <= d; ++i) {
        const auto lo = static_cast<Vertex>(i < d ? r[i] + 1 : r[i]);
        Face f = head;
        for (auto v = lo; v <= n; ++v) f = f.with(v);
        out.push_back(f);
        if (i < d) head = head.with(static_cast<Vertex>(r[i]));
    }
    return out;
}

} // namespace algshift
