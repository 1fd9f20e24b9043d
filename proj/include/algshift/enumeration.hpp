#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "simplicial_complex.hpp"

namespace algshift {

inline constexpr Vertex kDefaultShiftedCap = 6;

/// Calls `visit` once for every shifted complex on [n] (the void complex included), in a fixed order.
/// Shifted complexes are exactly the down-sets of the order on subsets of [n] where A lies below B
/// when |A| <= |B| and a_i >= b_i for i <= |A| (both sorted increasingly).
inline void enumerate_shifted(Vertex n, const std::function<void(const SimplicialComplex&)>& visit,
                              Vertex cap = kDefaultShiftedCap)
{
    if (n > cap) throw InvalidInput("enumerate_shifted: n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    if (n > 6) throw InvalidInput("enumerate_shifted supports n <= 6");
    const std::size_t count = std::size_t{1} << n;
    std::vector<Face> elems(count);
    for (std::size_t b = 0; b < count; ++b) elems[b] = Face::from_bits(b);
    // Linear extension: size ascending, vertex sum descending.
    auto vsum = [](Face f) {
        auto v = f.vertices();
        return std::accumulate(v.begin(), v.end(), 0u);
    };
    std::sort(elems.begin(), elems.end(), [&](Face a, Face b) {
        if (a.size() != b.size()) return a.size() < b.size();
        if (vsum(a) != vsum(b)) return vsum(a) > vsum(b);
        return a < b;
    });
    auto below_eq = [](Face a, Face b) {
        if (a.size() > b.size()) return false;
        auto va = a.vertices();
        auto vb = b.vertices();
        for (std::size_t i = 0; i < va.size(); ++i)
            if (va[i] < vb[i]) return false;
        return true;
    };
    std::vector<std::uint64_t> below(count, 0);
    for (std::size_t k = 0; k < count; ++k)
        for (std::size_t j = 0; j < k; ++j)
            if (below_eq(elems[j], elems[k])) below[k] |= std::uint64_t{1} << j;

    std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t k, std::uint64_t chosen) {
        if (k == count) {
            std::vector<Face> faces;
            for (std::size_t j = 0; j < count; ++j)
                if (chosen >> j & 1) faces.push_back(elems[j]);
            visit(SimplicialComplex(n, std::move(faces)));
            return;
        }
        rec(k + 1, chosen);
        if ((chosen & below[k]) == below[k]) rec(k + 1, chosen | (std::uint64_t{1} << k));
    };
    rec(0, 0);
}

inline std::vector<SimplicialComplex> all_shifted(Vertex n, Vertex cap = kDefaultShiftedCap)
{
    std::vector<SimplicialComplex> out;
    enumerate_shifted(n, [&](const SimplicialComplex& c) { out.push_back(c); }, cap);
    return out;
}

/// Deterministic sample: facet count uniform in [0, n+1], each candidate facet a uniform
/// random subset of uniform random size; the maximal candidates become the facets.
inline SimplicialComplex random_complex(Vertex n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Vertex> count_dist(0, n + 1);
    std::uniform_int_distribution<Vertex> size_dist(0, n);
    const auto count = count_dist(rng);
    std::vector<Vertex> verts(n);
    std::iota(verts.begin(), verts.end(), 1u);
    std::vector<Face> facets;
    for (Vertex i = 0; i < count; ++i) {
        std::shuffle(verts.begin(), verts.end(), rng);
        const auto k = size_dist(rng);
        facets.emplace_back(std::vector<Vertex>(verts.begin(), verts.begin() + k));
    }
    return SimplicialComplex(n, std::move(facets));
}

} // namespace algshift
