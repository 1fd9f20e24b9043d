#pragma once

// Seeded generators and brute-force oracles shared by the test binaries.
// The oracles deliberately avoid the library's own enumerators.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include <algshift/algshift.hpp>

namespace testkit {

using namespace algshift;

inline std::mt19937_64 rng_for(std::uint64_t seed) { return std::mt19937_64(seed * 0x9e3779b97f4a7c15ull + 17); }

/// Face set of a complex as a set of bitmasks, by testing every subset of [n].
inline std::set<std::uint64_t> face_masks(const SimplicialComplex& c)
{
    std::set<std::uint64_t> out;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << c.n()); ++s)
        if (c.contains(Face::from_bits(s))) out.insert(s);
    return out;
}

/// Every nonvoid simplicial complex on [n] (n <= 4), as the downward closed subsets of 2^[n].
/// The void complex is appended last.
inline std::vector<SimplicialComplex> all_complexes(Vertex n)
{
    const std::uint64_t subsets = std::uint64_t{1} << n;
    std::vector<SimplicialComplex> out;
    for (std::uint64_t fam = 1; fam < (std::uint64_t{1} << subsets); ++fam) {
        if (!(fam & 1)) continue; // must contain the empty face
        bool closed = true;
        for (std::uint64_t s = 0; s < subsets && closed; ++s) {
            if (!(fam >> s & 1)) continue;
            for (std::uint64_t b = s; b && closed; b &= b - 1)
                if (!(fam >> (s & ~(b & (~b + 1))) & 1)) closed = false;
        }
        if (!closed) continue;
        std::vector<Face> faces;
        for (std::uint64_t s = 0; s < subsets; ++s)
            if (fam >> s & 1) faces.push_back(Face::from_bits(s));
        out.emplace_back(n, std::move(faces));
    }
    out.push_back(SimplicialComplex::void_complex(n));
    return out;
}

/// Definitional shiftedness over the full face set.
inline bool shifted_by_definition(const SimplicialComplex& c)
{
    const auto faces = face_masks(c);
    for (auto f : faces)
        for (Vertex i = 1; i <= c.n(); ++i) {
            if (!(f >> (i - 1) & 1)) continue;
            for (Vertex j = i + 1; j <= c.n(); ++j) {
                if (f >> (j - 1) & 1) continue;
                const auto g = (f & ~(std::uint64_t{1} << (i - 1))) | (std::uint64_t{1} << (j - 1));
                if (!faces.count(g)) return false;
            }
        }
    return true;
}

/// All exponent vectors of total degree d in n variables, by recursion.
inline void exponent_vectors(int n, int d, std::vector<Exp>& cur, std::vector<std::vector<Exp>>& out)
{
    if (static_cast<int>(cur.size()) == n - 1) {
        cur.push_back(static_cast<Exp>(d));
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = 0; e <= d; ++e) {
        cur.push_back(static_cast<Exp>(e));
        exponent_vectors(n, d - e, cur, out);
        cur.pop_back();
    }
}

inline std::vector<Monomial> degree_monomials(int n, int d)
{
    std::vector<Monomial> out;
    if (n == 0) {
        if (d == 0) out.push_back(Monomial{});
        return out;
    }
    std::vector<std::vector<Exp>> vs;
    std::vector<Exp> cur;
    exponent_vectors(n, d, cur, vs);
    for (const auto& v : vs) out.push_back(Monomial::from_exponents(v));
    return out;
}

/// dim I_d in n variables by counting multiples of the generators.
inline std::int64_t count_in_degree(const MonomialIdeal& I, int n, int d)
{
    std::int64_t c = 0;
    for (const auto& m : degree_monomials(n, d))
        for (const auto& g : I.generators())
            if (g.divides(m)) {
                ++c;
                break;
            }
    return c;
}

/// Random monomial ideal in x_1..x_n, degrees 1..max_deg.
inline MonomialIdeal random_ideal(std::mt19937_64& rng, int n, int max_gens, int max_deg)
{
    std::uniform_int_distribution<int> count(1, max_gens);
    std::uniform_int_distribution<int> deg(1, max_deg);
    std::uniform_int_distribution<int> var(1, n);
    std::vector<Monomial> gens;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) {
        Monomial m;
        const int d = deg(rng);
        for (int j = 0; j < d; ++j) m = m * Monomial::variable(static_cast<Var>(var(rng)));
        gens.push_back(m);
    }
    return MonomialIdeal::minimalize(gens);
}

/// Random squarefree monomial ideal in x_1..x_n with generators of degree 2..max_deg.
inline MonomialIdeal random_squarefree_ideal(std::mt19937_64& rng, int n, int max_gens, int max_deg)
{
    std::uniform_int_distribution<int> count(1, max_gens);
    std::uniform_int_distribution<int> deg(2, std::min(max_deg, n));
    std::vector<Monomial> gens;
    std::vector<Var> vars(n);
    for (int i = 0; i < n; ++i) vars[i] = static_cast<Var>(i + 1);
    const int k = count(rng);
    for (int i = 0; i < k; ++i) {
        std::shuffle(vars.begin(), vars.end(), rng);
        std::vector<Var> pick(vars.begin(), vars.begin() + deg(rng));
        std::sort(pick.begin(), pick.end());
        gens.push_back(Monomial::squarefree(pick));
    }
    return MonomialIdeal::minimalize(gens);
}

/// Closure under squarefree exchanges x_i m / x_j (i < j, x_i not dividing m), by fixpoint iteration.
inline MonomialIdeal squarefree_borel_closure(const MonomialIdeal& I)
{
    std::set<Monomial> all(I.generators().begin(), I.generators().end());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Monomial> add;
        for (const auto& m : all)
            for (Var j : m.support())
                for (Var i = 1; i < j; ++i)
                    if (m.exponent(i) == 0) {
                        auto e = m / Monomial::variable(j) * Monomial::variable(i);
                        if (!all.count(e)) add.push_back(e);
                    }
        for (auto& m : add) grew |= all.insert(m).second;
    }
    return MonomialIdeal::minimalize(std::vector<Monomial>(all.begin(), all.end()));
}

/// Random squarefree strongly stable ideal in x_1..x_n.
inline MonomialIdeal random_sqss_ideal(std::mt19937_64& rng, int n, int max_gens, int max_deg)
{
    return squarefree_borel_closure(random_squarefree_ideal(rng, n, max_gens, max_deg));
}

/// Shifted complexes on [n] for n = 1..n_max, the void complex excluded.
inline std::vector<SimplicialComplex> shifted_corpus(Vertex n_max)
{
    std::vector<SimplicialComplex> out;
    for (Vertex n = 1; n <= n_max; ++n)
        for (auto& c : all_shifted(n))
            if (!c.is_void()) out.push_back(std::move(c));
    return out;
}

inline MonomialIdeal ideal(std::initializer_list<const char*> gens)
{
    std::vector<std::string> s(gens.begin(), gens.end());
    return MonomialIdeal::parse(s);
}

inline SimplicialComplex complex(Vertex n, std::initializer_list<std::initializer_list<Vertex>> facets)
{
    std::vector<Face> fs;
    for (auto f : facets) fs.emplace_back(f);
    return SimplicialComplex(n, std::move(fs));
}

} // namespace testkit
