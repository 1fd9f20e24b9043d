#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace algshift {

using Var = std::uint32_t;
using Exp = std::uint32_t;

struct Power {
    Var var;
    Exp exp;
    friend auto operator<=>(const Power&, const Power&) = default;
};

/// A monomial of S = k[x_1, x_2, ...] stored as a sparse exponent vector:
/// powers sorted by variable, no zero exponents; the unit monomial is empty.
class Monomial {
public:
    Monomial() = default;

    explicit Monomial(std::vector<Power> powers) : powers_(std::move(powers)) { normalize(); }

    Monomial(std::initializer_list<Power> powers) : powers_(powers) { normalize(); }

    static Monomial variable(Var v, Exp e = 1)
    {
        if (v == 0) throw InvalidInput("variable indices start at 1");
        return Monomial({Power{v, e}});
    }

    /// exps[0] is the exponent of x_1.
    static Monomial from_exponents(const std::vector<Exp>& exps)
    {
        std::vector<Power> p;
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] != 0) p.push_back({static_cast<Var>(i + 1), exps[i]});
        return Monomial(std::move(p));
    }

    /// Squarefree monomial prod_{v in vars} x_v.
    static Monomial squarefree(const std::vector<Var>& vars)
    {
        std::vector<Power> p;
        p.reserve(vars.size());
        for (Var v : vars) p.push_back({v, 1});
        Monomial m(std::move(p));
        if (!m.is_squarefree()) throw InvalidInput("repeated variable in squarefree constructor");
        return m;
    }

    const std::vector<Power>& powers() const { return powers_; }
    std::uint32_t degree() const { return degree_; }
    bool is_unit() const { return powers_.empty(); }

    Exp exponent(Var v) const
    {
        auto it = std::lower_bound(powers_.begin(), powers_.end(), v,
                                   [](const Power& p, Var x) { return p.var < x; });
        return (it != powers_.end() && it->var == v) ? it->exp : 0;
    }

    /// m(u) = max{i : x_i | u}; 0 for the unit monomial.
    Var max_var() const { return powers_.empty() ? 0 : powers_.back().var; }
    Var min_var() const { return powers_.empty() ? 0 : powers_.front().var; }

    bool is_squarefree() const
    {
        return std::all_of(powers_.begin(), powers_.end(), [](const Power& p) { return p.exp == 1; });
    }

    std::vector<Var> support() const
    {
        std::vector<Var> s;
        s.reserve(powers_.size());
        for (const auto& p : powers_) s.push_back(p.var);
        return s;
    }

    /// Variable indices with multiplicity, weakly increasing.
    std::vector<Var> indices() const
    {
        std::vector<Var> s;
        s.reserve(degree_);
        for (const auto& p : powers_)
            for (Exp k = 0; k < p.exp; ++k) s.push_back(p.var);
        return s;
    }

    bool divides(const Monomial& other) const
    {
        if (degree_ > other.degree_) return false;
        auto it = other.powers_.begin();
        for (const auto& p : powers_) {
            while (it != other.powers_.end() && it->var < p.var) ++it;
            if (it == other.powers_.end() || it->var != p.var || it->exp < p.exp) return false;
        }
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b)
    {
        return merge(a, b, [](Exp x, Exp y) { return x + y; });
    }

    /// Exact quotient; throws when b does not divide a.
    friend Monomial operator/(const Monomial& a, const Monomial& b)
    {
        if (!b.divides(a)) throw InvalidInput("monomial division is not exact");
        return merge(a, b, [](Exp x, Exp y) { return x - y; });
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b)
    {
        return merge(a, b, [](Exp x, Exp y) { return std::max(x, y); });
    }

    friend Monomial gcd(const Monomial& a, const Monomial& b)
    {
        return merge(a, b, [](Exp x, Exp y) { return std::min(x, y); });
    }

    friend bool coprime(const Monomial& a, const Monomial& b)
    {
        auto i = a.powers_.begin();
        auto j = b.powers_.begin();
        while (i != a.powers_.end() && j != b.powers_.end()) {
            if (i->var == j->var) return false;
            if (i->var < j->var) ++i; else ++j;
        }
        return true;
    }

    /// Structural order used for containers only; not a term order.
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.powers_ == b.powers_; }
    friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.powers_ <=> b.powers_; }

    /// `x1*x4^2`; the unit monomial prints as `1`.
    std::string to_string() const
    {
        if (powers_.empty()) return "1";
        std::string s;
        for (const auto& p : powers_) {
            if (!s.empty()) s += '*';
            s += 'x' + std::to_string(p.var);
            if (p.exp != 1) s += '^' + std::to_string(p.exp);
        }
        return s;
    }

    static Monomial parse(std::string_view text)
    {
        auto fail = [&] { return InvalidInput("malformed monomial: '" + std::string(text) + "'"); };
        auto trim = [](std::string_view s) {
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
            return s;
        };
        std::string_view rest = trim(text);
        if (rest == "1") return {};
        if (rest.empty()) throw fail();
        auto read_uint = [&](std::string_view& s) -> std::uint64_t {
            if (s.empty() || !std::isdigit(static_cast<unsigned char>(s.front()))) throw fail();
            std::uint64_t v = 0;
            while (!s.empty() && std::isdigit(static_cast<unsigned char>(s.front()))) {
                v = v * 10 + static_cast<std::uint64_t>(s.front() - '0');
                if (v > 0xFFFFFFFFull) throw fail();
                s.remove_prefix(1);
            }
            return v;
        };
        std::vector<Power> p;
        while (true) {
            rest = trim(rest);
            if (rest.empty() || rest.front() != 'x') throw fail();
            rest.remove_prefix(1);
            auto v = read_uint(rest);
            if (v == 0) throw fail();
            std::uint64_t e = 1;
            rest = trim(rest);
            if (!rest.empty() && rest.front() == '^') {
                rest.remove_prefix(1);
                rest = trim(rest);
                e = read_uint(rest);
                if (e == 0) throw fail();
            }
            p.push_back({static_cast<Var>(v), static_cast<Exp>(e)});
            rest = trim(rest);
            if (rest.empty()) break;
            if (rest.front() != '*') throw fail();
            rest.remove_prefix(1);
        }
        return Monomial(std::move(p));
    }

    friend std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << m.to_string(); }

private:
    template <class Op>
    static Monomial merge(const Monomial& a, const Monomial& b, Op op)
    {
        Monomial out;
        out.powers_.reserve(a.powers_.size() + b.powers_.size());
        auto i = a.powers_.begin();
        auto j = b.powers_.begin();
        while (i != a.powers_.end() || j != b.powers_.end()) {
            Var v;
            Exp x = 0, y = 0;
            if (j == b.powers_.end() || (i != a.powers_.end() && i->var < j->var)) {
                v = i->var; x = i->exp; ++i;
            } else if (i == a.powers_.end() || j->var < i->var) {
                v = j->var; y = j->exp; ++j;
            } else {
                v = i->var; x = i->exp; y = j->exp; ++i; ++j;
            }
            Exp e = op(x, y);
            if (e != 0) {
                out.powers_.push_back({v, e});
                out.degree_ += e;
            }
        }
        return out;
    }

    void normalize()
    {
        std::sort(powers_.begin(), powers_.end());
        std::vector<Power> merged;
        merged.reserve(powers_.size());
        for (const auto& p : powers_) {
            if (p.var == 0) throw InvalidInput("variable indices start at 1");
            if (p.exp == 0) continue;
            if (!merged.empty() && merged.back().var == p.var) merged.back().exp += p.exp;
            else merged.push_back(p);
        }
        powers_ = std::move(merged);
        degree_ = 0;
        for (const auto& p : powers_) degree_ += p.exp;
    }

    std::vector<Power> powers_;
    std::uint32_t degree_ = 0;
};

/// Phi(prod x_{i_j}) = prod x_{i_j + j - 1} with i_1 <= i_2 <= ...; squarefree, same degree.
inline Monomial phi(const Monomial& m)
{
    std::vector<Power> out;
    out.reserve(m.degree());
    Var shift = 0;
    for (Var i : m.indices()) out.push_back({i + shift++, 1});
    return Monomial(std::move(out));
}

/// Inverse of phi on squarefree monomials: x_{j_1}...x_{j_k} (j_1 < ... < j_k) -> prod x_{j_l - l + 1}.
inline Monomial phi_inv(const Monomial& m)
{
    if (!m.is_squarefree()) throw InvalidInput("phi_inv needs a squarefree monomial, got " + m.to_string());
    std::vector<Power> out;
    Var shift = 0;
    for (const auto& p : m.powers()) out.push_back({p.var - shift++, 1});
    return Monomial(std::move(out));
}

} // namespace algshift

template <>
struct std::hash<algshift::Monomial> {
    std::size_t operator()(const algshift::Monomial& m) const noexcept
    {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (const auto& p : m.powers()) h = (h ^ (p.var * 0x100000001b3ull + p.exp)) * 0xff51afd7ed558ccdull;
        return h;
    }
};
