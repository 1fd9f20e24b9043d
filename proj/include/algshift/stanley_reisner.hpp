#pragma once

#include <algorithm>
#include <vector>

#include "monomial_ideal.hpp"
#include "simplicial_complex.hpp"

namespace algshift {

namespace detail {

/// Minimal sets meeting every member of `edges` (Berge's incremental algorithm).
inline std::vector<std::uint64_t> minimal_transversals(const std::vector<std::uint64_t>& edges)
{
    std::vector<std::uint64_t> current{0};
    for (auto e : edges) {
        std::vector<std::uint64_t> next;
        for (auto t : current) {
            if (t & e) {
                next.push_back(t);
                continue;
            }
            for (auto b = e; b != 0; b &= b - 1) next.push_back(t | (b & (~b + 1)));
        }
        std::sort(next.begin(), next.end(), [](auto a, auto b) {
            return std::popcount(a) != std::popcount(b) ? std::popcount(a) < std::popcount(b) : a < b;
        });
        next.erase(std::unique(next.begin(), next.end()), next.end());
        std::vector<std::uint64_t> minimal;
        for (auto t : next)
            if (std::none_of(minimal.begin(), minimal.end(), [t](auto m) { return (m & ~t) == 0; }))
                minimal.push_back(t);
        current = std::move(minimal);
    }
    return current;
}

inline std::uint64_t support_mask(const Monomial& m)
{
    std::uint64_t b = 0;
    for (const auto& p : m.powers()) {
        if (p.var > kMaxVertices) throw InvalidInput("variable index beyond 64");
        b |= std::uint64_t{1} << (p.var - 1);
    }
    return b;
}

inline Monomial mask_monomial(std::uint64_t bits)
{
    std::vector<Power> p;
    for (auto b = bits; b != 0; b &= b - 1) p.push_back({static_cast<Var>(std::countr_zero(b) + 1), 1});
    return Monomial(std::move(p));
}

inline std::uint64_t universe_mask(Vertex n) { return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

} // namespace detail

/// I_Gamma, generated by the minimal nonfaces of Gamma inside [n].
/// The void complex would give the unit ideal and is rejected.
inline MonomialIdeal stanley_reisner(const SimplicialComplex& c)
{
    if (c.is_void()) throw InvalidInput("the void complex has the unit ideal as Stanley-Reisner ideal");
    // A set is a nonface iff it meets the complement of every facet.
    std::vector<std::uint64_t> complements;
    const auto all = detail::universe_mask(c.n());
    for (Face f : c.facets()) complements.push_back(all & ~f.bits());
    if (std::any_of(complements.begin(), complements.end(), [](auto e) { return e == 0; })) return {};
    std::vector<Monomial> gens;
    for (auto t : detail::minimal_transversals(complements)) gens.push_back(detail::mask_monomial(t));
    return MonomialIdeal::minimalize(std::move(gens));
}

/// The complex on [n] whose Stanley-Reisner ideal is `ideal` (squarefree, supported in [n]).
inline SimplicialComplex complex_of(const MonomialIdeal& ideal, Vertex n)
{
    if (!ideal.is_squarefree()) throw InvalidInput("complex_of needs a squarefree ideal, got " + ideal.to_string());
    if (ideal.max_var() > n) throw InvalidInput("ideal " + ideal.to_string() + " not supported in [" + std::to_string(n) + "]");
    if (n > kMaxVertices) throw InvalidInput("vertex universe larger than 64");
    std::vector<std::uint64_t> edges;
    for (const auto& g : ideal.generators()) edges.push_back(detail::support_mask(g));
    // Facets are the complements of minimal transversals of the generator supports.
    std::vector<Face> facets;
    const auto all = detail::universe_mask(n);
    for (auto t : detail::minimal_transversals(edges)) facets.push_back(Face::from_bits(all & ~t));
    return SimplicialComplex(n, std::move(facets));
}

} // namespace algshift
