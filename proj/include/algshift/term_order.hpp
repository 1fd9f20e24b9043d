#pragma once

#include <compare>
#include <functional>
#include <memory>
#include <string>

#include "monomial.hpp"

namespace algshift {

enum class WithinDegree { Lex, Revlex, Plugin };

/// How monomials of different degree compare.
///  Groebner:        lower degree is smaller (a well-order, used by the Groebner engine).
///  LowDegreeLarger: lower degree is larger ("more expensive"); used to compare and sort ideals.
enum class DegreePolicy { Groebner, LowDegreeLarger };

/// Comparator on monomials of equal degree; `greater` means the first argument is larger.
using WithinDegreeComparator = std::function<std::strong_ordering(const Monomial&, const Monomial&)>;

/// Optional faster form of a plug-in comparator on dense exponent vectors of length n
/// (entry i is the exponent of x_{i+1}); returns <0, 0 or >0.
using ExponentComparator = std::function<int(const std::uint16_t*, const std::uint16_t*, std::size_t)>;

inline std::strong_ordering lex_within_degree(const Monomial& a, const Monomial& b)
{
    const auto& pa = a.powers();
    const auto& pb = b.powers();
    std::size_t i = 0, j = 0;
    while (i < pa.size() && j < pb.size()) {
        if (pa[i].var != pb[j].var)
            return pa[i].var < pb[j].var ? std::strong_ordering::greater : std::strong_ordering::less;
        if (pa[i].exp != pb[j].exp) return pa[i].exp <=> pb[j].exp;
        ++i; ++j;
    }
    if (i < pa.size()) return std::strong_ordering::greater;
    if (j < pb.size()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

inline std::strong_ordering revlex_within_degree(const Monomial& a, const Monomial& b)
{
    const auto& pa = a.powers();
    const auto& pb = b.powers();
    auto i = pa.size(), j = pb.size();
    while (i > 0 && j > 0) {
        const auto& x = pa[i - 1];
        const auto& y = pb[j - 1];
        if (x.var != y.var)
            return x.var > y.var ? std::strong_ordering::less : std::strong_ordering::greater;
        if (x.exp != y.exp) return y.exp <=> x.exp;
        --i; --j;
    }
    if (i > 0) return std::strong_ordering::less;
    if (j > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

/// A degree-compatible term order with x_1 > x_2 > ... .
/// Plug-in comparators carry an obligation: they must be term orders on monomials of
/// equal degree and compatible with phi (m > m' implies phi(m) > phi(m')).
/// `is_phi_compatible_on` spot-checks the latter.
class TermOrder {
public:
    static TermOrder lex(DegreePolicy p = DegreePolicy::LowDegreeLarger) { return TermOrder(WithinDegree::Lex, p, "lex", {}); }
    static TermOrder revlex(DegreePolicy p = DegreePolicy::LowDegreeLarger)
    {
        return TermOrder(WithinDegree::Revlex, p, "revlex", {});
    }
    static TermOrder plugin(std::string name, WithinDegreeComparator cmp, DegreePolicy p = DegreePolicy::LowDegreeLarger)
    {
        if (!cmp) throw InvalidInput("plug-in order needs a comparator");
        return TermOrder(WithinDegree::Plugin, p, std::move(name), std::move(cmp));
    }

    /// Same order with a dense comparator the Groebner engine can use directly.
    TermOrder with_exponent_comparator(ExponentComparator dense) const
    {
        TermOrder o = *this;
        o.dense_ = std::move(dense);
        return o;
    }

    const ExponentComparator& exponent_comparator() const { return dense_; }

    WithinDegree kind() const { return kind_; }
    DegreePolicy policy() const { return policy_; }
    const std::string& name() const { return name_; }

    TermOrder with_policy(DegreePolicy p) const
    {
        TermOrder o = *this;
        o.policy_ = p;
        return o;
    }

    std::strong_ordering within_degree(const Monomial& a, const Monomial& b) const
    {
        switch (kind_) {
        case WithinDegree::Lex: return lex_within_degree(a, b);
        case WithinDegree::Revlex: return revlex_within_degree(a, b);
        case WithinDegree::Plugin: return cmp_(a, b);
        }
        return std::strong_ordering::equal;
    }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const
    {
        if (a.degree() != b.degree()) {
            auto by_degree = a.degree() <=> b.degree();
            return policy_ == DegreePolicy::Groebner ? by_degree : 0 <=> by_degree;
        }
        return within_degree(a, b);
    }

    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

private:
    TermOrder(WithinDegree k, DegreePolicy p, std::string name, WithinDegreeComparator cmp)
        : kind_(k), policy_(p), name_(std::move(name)), cmp_(std::move(cmp))
    {
    }

    WithinDegree kind_;
    DegreePolicy policy_;
    std::string name_;
    WithinDegreeComparator cmp_;
    ExponentComparator dense_;
};

inline std::strong_ordering compare(const TermOrder& ord, const Monomial& a, const Monomial& b)
{
    return ord.compare(a, b);
}

namespace detail {

inline std::uint64_t index_sum(const Monomial& m)
{
    std::uint64_t s = 0;
    for (const auto& p : m.powers()) s += std::uint64_t{p.var} * p.exp;
    return s;
}

inline TermOrder index_sum_order(const std::string& name, bool lex_ties)
{
    auto cmp = [lex_ties](const Monomial& a, const Monomial& b) {
        const auto sa = index_sum(a), sb = index_sum(b);
        if (sa != sb) return sb <=> sa;
        return lex_ties ? lex_within_degree(a, b) : revlex_within_degree(a, b);
    };
    auto dense = [lex_ties](const std::uint16_t* a, const std::uint16_t* b, std::size_t n) {
        std::uint64_t sa = 0, sb = 0;
        for (std::size_t i = 0; i < n; ++i) {
            sa += (i + 1) * a[i];
            sb += (i + 1) * b[i];
        }
        if (sa != sb) return sa < sb ? 1 : -1;
        if (lex_ties) {
            for (std::size_t i = 0; i < n; ++i)
                if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
        } else {
            for (std::size_t i = n; i-- > 0;)
                if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        }
        return 0;
    };
    return TermOrder::plugin(name, cmp).with_exponent_comparator(dense);
}

} // namespace detail

/// Smaller variable-index sum first, ties broken by lex. Phi adds the same constant to the
/// index sum of every monomial of a given degree, so the order is phi-compatible.
inline TermOrder index_sum_lex() { return detail::index_sum_order("index-sum-lex", true); }

/// Smaller variable-index sum first, ties broken by revlex.
inline TermOrder index_sum_revlex() { return detail::index_sum_order("index-sum-revlex", false); }

/// Orders selectable by name: "lex", "revlex" (alias "rl"), "index-sum-lex", "index-sum-revlex".
inline TermOrder order_by_name(const std::string& name)
{
    if (name == "lex") return TermOrder::lex();
    if (name == "revlex" || name == "rl") return TermOrder::revlex();
    if (name == "index-sum-lex") return index_sum_lex();
    if (name == "index-sum-revlex") return index_sum_revlex();
    throw InvalidInput("unknown term order '" + name + "'");
}

inline std::vector<std::string> order_names() { return {"lex", "revlex", "index-sum-lex", "index-sum-revlex"}; }

/// All monomials of degree `d` in x_1..x_n, in lex-descending order.
inline std::vector<Monomial> monomials_of_degree(Var n, std::uint32_t d)
{
    std::vector<Monomial> out;
    std::vector<Exp> e(n, 0);
    std::function<void(Var, std::uint32_t)> rec = [&](Var i, std::uint32_t left) {
        if (n == 0) {
            if (left == 0) out.emplace_back();
            return;
        }
        if (i + 1 == n) {
            e[i] = left;
            out.push_back(Monomial::from_exponents(e));
            e[i] = 0;
            return;
        }
        for (std::uint32_t k = left + 1; k-- > 0;) {
            e[i] = k;
            rec(i + 1, left - k);
        }
        e[i] = 0;
    };
    rec(0, d);
    return out;
}

/// Squarefree monomials of degree `d` in x_1..x_n, lex-descending.
inline std::vector<Monomial> squarefree_monomials_of_degree(Var n, std::uint32_t d)
{
    std::vector<Monomial> out;
    std::vector<Var> chosen;
    std::function<void(Var)> rec = [&](Var next) {
        if (chosen.size() == d) {
            out.push_back(Monomial::squarefree(chosen));
            return;
        }
        for (Var v = next; v + (d - chosen.size()) <= n + 1; ++v) {
            chosen.push_back(v);
            rec(v + 1);
            chosen.pop_back();
        }
    };
    rec(1);
    return out;
}

/// Checks m > m' => phi(m) > phi(m') on all pairs of monomials of degree <= max_degree in n variables.
inline bool is_phi_compatible_on(const TermOrder& ord, Var n, std::uint32_t max_degree)
{
    for (std::uint32_t d = 1; d <= max_degree; ++d) {
        auto mons = monomials_of_degree(n, d);
        std::vector<Monomial> images;
        images.reserve(mons.size());
        for (const auto& m : mons) images.push_back(phi(m));
        for (std::size_t i = 0; i < mons.size(); ++i)
            for (std::size_t j = 0; j < mons.size(); ++j)
                if (i != j && ord.within_degree(mons[i], mons[j]) > 0 && ord.within_degree(images[i], images[j]) <= 0)
                    return false;
    }
    return true;
}

} // namespace algshift
