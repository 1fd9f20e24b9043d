#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "monomial.hpp"
#include "term_order.hpp"

namespace algshift {

/// Canonical generator order: degree ascending, lex-descending within a degree.
inline bool degree_then_lex_before(const Monomial& a, const Monomial& b)
{
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return lex_within_degree(a, b) > 0;
}

/// A proper monomial ideal of S, held as its canonical minimal generating set G(I).
/// The zero ideal has no generators; the unit ideal is not representable.
class MonomialIdeal {
public:
    MonomialIdeal() = default;

    /// Divisibility antichain generating the same ideal as `gens`.
    static MonomialIdeal minimalize(std::vector<Monomial> gens)
    {
        for (const auto& g : gens)
            if (g.is_unit()) throw InvalidInput("the unit ideal is not a proper monomial ideal");
        std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
            return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
        });
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        std::vector<Monomial> kept;
        for (auto& g : gens) {
            bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
            if (!redundant) kept.push_back(std::move(g));
        }
        MonomialIdeal out;
        out.gens_ = std::move(kept);
        std::sort(out.gens_.begin(), out.gens_.end(), degree_then_lex_before);
        return out;
    }

    static MonomialIdeal parse(const std::vector<std::string>& gens)
    {
        std::vector<Monomial> m;
        m.reserve(gens.size());
        for (const auto& s : gens) m.push_back(Monomial::parse(s));
        return minimalize(std::move(m));
    }

    const std::vector<Monomial>& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    bool is_zero() const { return gens_.empty(); }

    bool contains(const Monomial& m) const
    {
        return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
    }

    /// J is a subset of this ideal.
    bool contains(const MonomialIdeal& j) const
    {
        return std::all_of(j.gens_.begin(), j.gens_.end(), [&](const Monomial& g) { return contains(g); });
    }

    bool is_squarefree() const
    {
        return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
    }

    /// Largest variable index occurring in a generator (0 for the zero ideal).
    Var max_var() const
    {
        Var v = 0;
        for (const auto& g : gens_) v = std::max(v, g.max_var());
        return v;
    }

    std::vector<Monomial> generators_of_degree(std::uint32_t d) const
    {
        std::vector<Monomial> out;
        for (const auto& g : gens_)
            if (g.degree() == d) out.push_back(g);
        return out;
    }

    /// Ideal generated by G(I) restricted to degrees <= d.
    MonomialIdeal truncated(std::uint32_t d) const
    {
        MonomialIdeal out;
        for (const auto& g : gens_)
            if (g.degree() <= d) out.gens_.push_back(g);
        return out;
    }

    std::vector<std::string> to_strings() const
    {
        std::vector<std::string> out;
        out.reserve(gens_.size());
        for (const auto& g : gens_) out.push_back(g.to_string());
        return out;
    }

    std::string to_string() const
    {
        std::string s = "<";
        for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].to_string();
        return s + ">";
    }

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
    friend std::ostream& operator<<(std::ostream& os, const MonomialIdeal& i) { return os << i.to_string(); }

private:
    std::vector<Monomial> gens_;
};

inline MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b)
{
    auto g = a.generators();
    g.insert(g.end(), b.generators().begin(), b.generators().end());
    return MonomialIdeal::minimalize(std::move(g));
}

inline MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b)
{
    std::vector<Monomial> g;
    for (const auto& x : a.generators())
        for (const auto& y : b.generators()) g.push_back(lcm(x, y));
    return MonomialIdeal::minimalize(std::move(g));
}

/// I : m.
inline MonomialIdeal ideal_quotient(const MonomialIdeal& a, const Monomial& m)
{
    std::vector<Monomial> g;
    for (const auto& x : a.generators()) {
        auto q = x / gcd(x, m);
        if (q.is_unit()) throw InvalidInput("colon ideal is the unit ideal");
        g.push_back(std::move(q));
    }
    return MonomialIdeal::minimalize(std::move(g));
}

/// <phi(m) : m in G(I)>.
inline MonomialIdeal phi_ideal(const MonomialIdeal& i)
{
    std::vector<Monomial> g;
    for (const auto& m : i.generators()) g.push_back(phi(m));
    return MonomialIdeal::minimalize(std::move(g));
}

/// <phi^{-1}(m) : m in G(I)> for a squarefree ideal.
inline MonomialIdeal phi_inv_ideal(const MonomialIdeal& i)
{
    std::vector<Monomial> g;
    for (const auto& m : i.generators()) g.push_back(phi_inv(m));
    return MonomialIdeal::minimalize(std::move(g));
}

/// For every generator m, x_j | m and i < j imply x_i m / x_j in I.
inline bool is_strongly_stable(const MonomialIdeal& ideal)
{
    for (const auto& m : ideal.generators()) {
        for (const auto& p : m.powers()) {
            auto reduced = m / Monomial::variable(p.var);
            for (Var i = 1; i < p.var; ++i)
                if (!ideal.contains(reduced * Monomial::variable(i))) return false;
        }
    }
    return true;
}

/// Squarefree strong stability: the exchange is only required when x_i does not divide m.
inline bool is_sq_strongly_stable(const MonomialIdeal& ideal)
{
    if (!ideal.is_squarefree()) throw InvalidInput("squarefree strong stability needs squarefree generators");
    for (const auto& m : ideal.generators()) {
        for (const auto& p : m.powers()) {
            auto reduced = m / Monomial::variable(p.var);
            for (Var i = 1; i < p.var; ++i) {
                if (m.exponent(i) != 0) continue;
                if (!ideal.contains(reduced * Monomial::variable(i))) return false;
            }
        }
    }
    return true;
}

/// Non-throwing variant: false for non-squarefree ideals.
inline bool is_squarefree_strongly_stable(const MonomialIdeal& ideal)
{
    return ideal.is_squarefree() && is_sq_strongly_stable(ideal);
}

/// I1 > I2 iff the largest monomial of the symmetric difference of G(I1) and G(I2) lies in G(I1).
/// Degrees always compare with the low-degree-larger policy (lower degree is larger).
inline std::strong_ordering ideal_compare(const MonomialIdeal& a, const MonomialIdeal& b, const TermOrder& ord)
{
    const auto o = ord.with_policy(DegreePolicy::LowDegreeLarger);
    const Monomial* best = nullptr;
    bool best_in_a = false;
    auto consider = [&](const Monomial& m, bool in_a) {
        if (!best || o.greater(m, *best)) {
            best = &m;
            best_in_a = in_a;
        }
    };
    for (const auto& m : a.generators())
        if (std::find(b.generators().begin(), b.generators().end(), m) == b.generators().end()) consider(m, true);
    for (const auto& m : b.generators())
        if (std::find(a.generators().begin(), a.generators().end(), m) == a.generators().end()) consider(m, false);
    if (!best) return std::strong_ordering::equal;
    return best_in_a ? std::strong_ordering::greater : std::strong_ordering::less;
}

/// Maximal degree of a minimal generator.
inline std::uint32_t regularity(const MonomialIdeal& ideal)
{
    if (ideal.is_zero()) throw InvalidInput("regularity of the zero ideal is undefined");
    std::uint32_t r = 0;
    for (const auto& g : ideal.generators()) r = std::max(r, g.degree());
    return r;
}

} // namespace algshift
