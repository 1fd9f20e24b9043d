#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "monomial_ideal.hpp"
#include "polynomial.hpp"
#include "term_order.hpp"

namespace algshift {

namespace engine {

/// Most variables the dense Groebner representation handles.
inline constexpr std::size_t kMaxVars = 32;

struct Mono {
    std::array<std::uint16_t, kMaxVars> e{};
    std::uint32_t deg = 0;
    std::uint32_t mask = 0; // bit i set iff e[i] > 0

    friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
};

inline Mono make_mono(const Monomial& m, std::size_t n)
{
    if (m.max_var() > n) throw InvalidInput("monomial outside the engine's variables");
    Mono out;
    for (const auto& p : m.powers()) {
        if (p.exp > 0xFFFF) throw InvalidInput("exponent too large for the Groebner engine");
        out.e[p.var - 1] = static_cast<std::uint16_t>(p.exp);
        out.deg += p.exp;
        out.mask |= 1u << (p.var - 1);
    }
    return out;
}

inline Monomial to_monomial(const Mono& m, std::size_t n)
{
    std::vector<Power> p;
    for (std::size_t i = 0; i < n; ++i)
        if (m.e[i]) p.push_back({static_cast<Var>(i + 1), m.e[i]});
    return Monomial(std::move(p));
}

inline bool divides(const Mono& a, const Mono& b, std::size_t n)
{
    if ((a.mask & ~b.mask) != 0 || a.deg > b.deg) return false;
    for (std::size_t i = 0; i < n; ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

inline Mono mul(const Mono& a, const Mono& b, std::size_t n)
{
    Mono out;
    for (std::size_t i = 0; i < n; ++i) out.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
    out.deg = a.deg + b.deg;
    out.mask = a.mask | b.mask;
    return out;
}

/// a / b, b | a assumed.
inline Mono quo(const Mono& a, const Mono& b, std::size_t n)
{
    Mono out;
    for (std::size_t i = 0; i < n; ++i) {
        out.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
        if (out.e[i]) out.mask |= 1u << i;
    }
    out.deg = a.deg - b.deg;
    return out;
}

inline Mono lcm(const Mono& a, const Mono& b, std::size_t n)
{
    Mono out;
    for (std::size_t i = 0; i < n; ++i) out.e[i] = std::max(a.e[i], b.e[i]);
    out.deg = 0;
    for (std::size_t i = 0; i < n; ++i) out.deg += out.e[i];
    out.mask = a.mask | b.mask;
    return out;
}

/// Degree-compatible well-order (lower degree smaller) with the order's within-degree rule.
class Order {
public:
    Order(const TermOrder& ord, std::size_t n) : ord_(ord), n_(n) {}

    int cmp(const Mono& a, const Mono& b) const
    {
        if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
        switch (ord_.kind()) {
        case WithinDegree::Lex:
            for (std::size_t i = 0; i < n_; ++i)
                if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
            return 0;
        case WithinDegree::Revlex:
            for (std::size_t i = n_; i-- > 0;)
                if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
            return 0;
        case WithinDegree::Plugin: {
            if (const auto& dense = ord_.exponent_comparator()) {
                auto c = dense(a.e.data(), b.e.data(), n_);
                return c > 0 ? 1 : (c < 0 ? -1 : 0);
            }
            auto c = ord_.within_degree(to_monomial(a, n_), to_monomial(b, n_));
            return c > 0 ? 1 : (c < 0 ? -1 : 0);
        }
        }
        return 0;
    }

    std::size_t n() const { return n_; }

private:
    TermOrder ord_;
    std::size_t n_;
};

struct Term {
    Mono m;
    Integer c;
};

/// Integer-coefficient polynomial, terms strictly decreasing in the engine order.
/// Represents the rational polynomial up to a nonzero scalar.
using Poly = std::vector<Term>;

inline void make_primitive(Poly& f)
{
    if (f.empty()) return;
    Integer g = abs(f.front().c);
    for (std::size_t i = 1; i < f.size() && g != 1; ++i) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), f[i].c.get_mpz_t());
    if (f.front().c < 0) g = -g;
    if (g != 1)
        for (auto& t : f) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
}

/// a*f - b*(shift*g), dropping cancelled terms.
/// Terms of f before index `from` are ignored.
inline Poly combine(const Poly& f, const Integer& a, const Poly& g, const Integer& b, const Mono& shift, const Order& ord,
                    std::size_t from = 0)
{
    const auto n = ord.n();
    Poly out;
    out.reserve(f.size() - from + g.size());
    std::size_t i = from, j = 0;
    Mono gm;
    bool have_gm = false;
    while (i < f.size() || j < g.size()) {
        if (j < g.size() && !have_gm) {
            gm = mul(g[j].m, shift, n);
            have_gm = true;
        }
        int c = i == f.size() ? -1 : (j == g.size() ? 1 : ord.cmp(f[i].m, gm));
        if (c > 0) {
            out.push_back({f[i].m, a * f[i].c});
            ++i;
        } else if (c < 0) {
            out.push_back({gm, -b * g[j].c});
            ++j;
            have_gm = false;
        } else {
            Integer v = a * f[i].c - b * g[j].c;
            if (v != 0) out.push_back({f[i].m, std::move(v)});
            ++i;
            ++j;
            have_gm = false;
        }
    }
    return out;
}

struct Basis {
    std::vector<Poly> polys;
    std::vector<bool> alive;
};

/// Top-reduce f modulo the alive basis elements.
inline void top_reduce(Poly& f, const Basis& basis, const Order& ord)
{
    const auto n = ord.n();
    int steps = 0;
    while (!f.empty()) {
        const Poly* red = nullptr;
        for (std::size_t k = 0; k < basis.polys.size(); ++k) {
            if (!basis.alive[k]) continue;
            if (divides(basis.polys[k].front().m, f.front().m, n)) {
                red = &basis.polys[k];
                break;
            }
        }
        if (!red) break;
        Integer g;
        mpz_gcd(g.get_mpz_t(), f.front().c.get_mpz_t(), red->front().c.get_mpz_t());
        Integer a = red->front().c / g;
        Integer b = f.front().c / g;
        f = combine(f, a, *red, b, quo(f.front().m, red->front().m, n), ord);
        if (++steps % 8 == 0) make_primitive(f);
    }
    make_primitive(f);
}

/// Reduce every term of f (not only the leading one), or only the tail when `keep_lead`.
inline void full_reduce(Poly& f, const std::vector<const Poly*>& reducers, const Order& ord, bool keep_lead = false)
{
    const auto n = ord.n();
    Poly done;
    std::size_t pos = 0;
    if (keep_lead && !f.empty()) {
        done.push_back(std::move(f.front()));
        pos = 1;
    }
    while (pos < f.size()) {
        const Poly* red = nullptr;
        for (auto* r : reducers)
            if (divides(r->front().m, f[pos].m, n)) {
                red = r;
                break;
            }
        if (!red) {
            done.push_back(std::move(f[pos++]));
            continue;
        }
        Integer g;
        mpz_gcd(g.get_mpz_t(), f[pos].c.get_mpz_t(), red->front().c.get_mpz_t());
        Integer a = red->front().c / g;
        Integer b = f[pos].c / g;
        for (auto& t : done) t.c *= a;
        f = combine(f, a, *red, b, quo(f[pos].m, red->front().m, n), ord, pos);
        pos = 0;
    }
    f = std::move(done);
    make_primitive(f);
}

struct Pair {
    std::size_t i, j;
    Mono lcm;
};

/// Gebauer-Moeller update after adding basis element h.
inline void update(Basis& basis, std::vector<Pair>& pairs, std::size_t h, const Order& ord)
{
    const auto n = ord.n();
    const Mono& lh = basis.polys[h].front().m;
    std::vector<Pair> c;
    for (std::size_t g = 0; g < h; ++g)
        if (basis.alive[g]) c.push_back({g, h, lcm(basis.polys[g].front().m, lh, n)});

    auto is_coprime = [&](const Pair& p) { return (basis.polys[p.i].front().m.mask & lh.mask) == 0; };

    std::vector<Pair> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
        const auto& p = c[k];
        bool keep = is_coprime(p);
        if (!keep) {
            keep = true;
            for (std::size_t q = k + 1; q < c.size() && keep; ++q)
                if (divides(c[q].lcm, p.lcm, n)) keep = false;
            for (const auto& q : d)
                if (keep && divides(q.lcm, p.lcm, n)) keep = false;
        }
        if (keep) d.push_back(p);
    }
    std::vector<Pair> kept;
    for (auto& p : pairs) {
        bool drop = divides(lh, p.lcm, n) &&
                    !(lcm(basis.polys[p.i].front().m, lh, n) == p.lcm) &&
                    !(lcm(basis.polys[p.j].front().m, lh, n) == p.lcm);
        if (!drop) kept.push_back(std::move(p));
    }
    for (auto& p : d)
        if (!is_coprime(p)) kept.push_back(std::move(p));
    pairs = std::move(kept);
    for (std::size_t g = 0; g < h; ++g)
        if (basis.alive[g] && divides(lh, basis.polys[g].front().m, n)) basis.alive[g] = false;
}

inline Poly s_polynomial(const Poly& f, const Poly& g, const Mono& l, const Order& ord)
{
    const auto n = ord.n();
    Integer gc;
    mpz_gcd(gc.get_mpz_t(), f.front().c.get_mpz_t(), g.front().c.get_mpz_t());
    Integer a = g.front().c / gc;
    Integer b = f.front().c / gc;
    Poly fs;
    fs.reserve(f.size());
    const auto sf = quo(l, f.front().m, n);
    for (const auto& t : f) fs.push_back({mul(t.m, sf, n), t.c});
    return combine(fs, a, g, b, quo(l, g.front().m, n), ord);
}

/// Buchberger's algorithm for homogeneous input: normal selection strategy,
/// Gebauer-Moeller pair criteria (coprime leading terms, chain criterion).
/// Stops after all pairs of degree <= degree_bound when a bound is given, or as soon as
/// `complete` accepts the leading monomials found so far (checked after each finished degree
/// once no input generators remain).
/// Returns the minimal Groebner basis (leading coefficients arbitrary).
using CompletionTest = std::function<bool(const std::vector<Mono>&)>;

inline std::vector<Poly> minimal_basis(std::vector<Poly> gens, const Order& ord,
                                       std::optional<std::uint32_t> degree_bound = std::nullopt,
                                       const CompletionTest& complete = {})
{
    const auto n = ord.n();
    std::sort(gens.begin(), gens.end(), [](const Poly& a, const Poly& b) { return a.front().m.deg < b.front().m.deg; });
    Basis basis;
    std::vector<Pair> pairs;
    std::size_t next_gen = 0;
    auto add = [&](Poly f) {
        basis.polys.push_back(std::move(f));
        basis.alive.push_back(true);
        update(basis, pairs, basis.polys.size() - 1, ord);
    };
    while (true) {
        // Lowest pending degree among input generators and pairs.
        std::uint32_t deg = UINT32_MAX;
        if (next_gen < gens.size()) deg = gens[next_gen].front().m.deg;
        for (const auto& p : pairs) deg = std::min(deg, p.lcm.deg);
        if (deg == UINT32_MAX || (degree_bound && deg > *degree_bound)) break;

        std::vector<Pair> batch;
        std::vector<Pair> rest;
        for (auto& p : pairs) (p.lcm.deg == deg ? batch : rest).push_back(std::move(p));
        pairs = std::move(rest);
        std::sort(batch.begin(), batch.end(), [&](const Pair& a, const Pair& b) { return ord.cmp(a.lcm, b.lcm) < 0; });

        for (const auto& p : batch) {
            auto s = s_polynomial(basis.polys[p.i], basis.polys[p.j], p.lcm, ord);
            top_reduce(s, basis, ord);
            if (!s.empty()) {
                std::vector<const Poly*> reducers;
                for (std::size_t k = 0; k < basis.polys.size(); ++k)
                    if (basis.alive[k]) reducers.push_back(&basis.polys[k]);
                full_reduce(s, reducers, ord, true);
                add(std::move(s));
            }
        }
        // Pairs created inside this degree are handled by the next round.
        while (next_gen < gens.size() && gens[next_gen].front().m.deg == deg) {
            auto f = std::move(gens[next_gen++]);
            top_reduce(f, basis, ord);
            if (!f.empty()) add(std::move(f));
        }
        if (complete && next_gen == gens.size() && !pairs.empty()) {
            std::uint32_t next = UINT32_MAX;
            for (const auto& p : pairs) next = std::min(next, p.lcm.deg);
            if (next > deg) {
                std::vector<Mono> leads;
                for (std::size_t k = 0; k < basis.polys.size(); ++k)
                    if (basis.alive[k]) leads.push_back(basis.polys[k].front().m);
                if (complete(leads)) break;
            }
        }
    }
    std::vector<Poly> out;
    for (std::size_t k = 0; k < basis.polys.size(); ++k)
        if (basis.alive[k]) out.push_back(std::move(basis.polys[k]));
    return out;
}

inline Poly from_polynomial(const Polynomial& f, const Order& ord)
{
    Integer den = 1;
    for (const auto& [m, c] : f.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    Poly out;
    for (const auto& [m, c] : f.terms()) {
        Rational scaled = c * den;
        out.push_back({make_mono(m, ord.n()), scaled.get_num()});
    }
    std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) { return ord.cmp(a.m, b.m) > 0; });
    make_primitive(out);
    return out;
}

/// g(m) for a monomial m, expanded in the engine representation.
inline Poly image_of_monomial(const GenericMatrix& g, const Monomial& m, const Order& ord)
{
    const auto n = ord.n();
    Poly acc{{Mono{}, Integer(1)}};
    for (const auto& p : m.powers()) {
        for (Exp k = 0; k < p.exp; ++k) {
            // acc * (sum_{i <= j} g_ij x_i), collected through a dense map keyed by monomial.
            std::vector<Term> raw;
            raw.reserve(acc.size() * p.var);
            for (const auto& t : acc)
                for (Var i = 1; i <= p.var; ++i) {
                    Mono x;
                    x.e[i - 1] = 1;
                    x.deg = 1;
                    x.mask = 1u << (i - 1);
                    raw.push_back({mul(t.m, x, n), t.c * g.at(i, p.var)});
                }
            std::sort(raw.begin(), raw.end(), [&](const Term& a, const Term& b) { return ord.cmp(a.m, b.m) > 0; });
            Poly merged;
            for (auto& t : raw) {
                if (!merged.empty() && merged.back().m == t.m) merged.back().c += t.c;
                else merged.push_back(std::move(t));
            }
            std::erase_if(merged, [](const Term& t) { return t.c == 0; });
            acc = std::move(merged);
        }
    }
    return acc;
}

} // namespace engine

/// Reduced Groebner basis of homogeneous polynomials in x_1..x_n: monic, pairwise fully reduced,
/// sorted by leading monomial (descending).
inline std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const TermOrder& ord)
{
    Var n = 0;
    for (const auto& f : gens) {
        if (!f.is_homogeneous()) throw InvalidInput("buchberger accepts homogeneous generators only");
        n = std::max(n, f.max_var());
    }
    if (n > engine::kMaxVars) throw InvalidInput("too many variables for the Groebner engine");
    const engine::Order eo(ord.with_policy(DegreePolicy::Groebner), n);
    std::vector<engine::Poly> input;
    for (const auto& f : gens)
        if (!f.is_zero()) input.push_back(engine::from_polynomial(f, eo));
    auto basis = engine::minimal_basis(std::move(input), eo);

    std::vector<engine::Poly> reduced;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        std::vector<const engine::Poly*> others;
        for (std::size_t l = 0; l < basis.size(); ++l)
            if (l != k) others.push_back(&basis[l]);
        // Leading terms are pairwise non-divisible, so only the tail changes.
        engine::Poly whole = basis[k];
        engine::full_reduce(whole, others, eo);
        reduced.push_back(std::move(whole));
    }
    std::sort(reduced.begin(), reduced.end(),
              [&](const engine::Poly& a, const engine::Poly& b) { return eo.cmp(a.front().m, b.front().m) > 0; });
    std::vector<Polynomial> out;
    for (const auto& f : reduced) {
        Polynomial p;
        const Rational lc(f.front().c);
        for (const auto& t : f) p.add_term(engine::to_monomial(t.m, n), Rational(t.c) / lc);
        out.push_back(std::move(p));
    }
    return out;
}

/// Minimalized leading monomials of a Groebner basis.
inline MonomialIdeal initial_ideal(const std::vector<Polynomial>& gb, const TermOrder& ord)
{
    std::vector<Monomial> lead;
    const auto o = ord.with_policy(DegreePolicy::Groebner);
    for (const auto& f : gb)
        if (!f.is_zero()) lead.push_back(f.leading_monomial(o));
    return MonomialIdeal::minimalize(std::move(lead));
}

} // namespace algshift
