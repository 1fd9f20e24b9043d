#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "binomial.hpp"
#include "hilbert.hpp"
#include "monomial_ideal.hpp"
#include "simplicial_complex.hpp"

namespace algshift {

/// Graded Betti numbers beta_{i,j}; absent entries are zero.
struct BettiTable {
    std::map<std::pair<int, int>, std::int64_t> entries;

    std::int64_t at(int i, int j) const
    {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }

    void add(int i, int j, std::int64_t v)
    {
        if (v == 0) return;
        entries[{i, j}] += v;
    }

    /// sum_i (-1)^i beta_{i,j}
    std::int64_t alternating_sum(int j) const
    {
        std::int64_t s = 0;
        for (const auto& [ij, v] : entries)
            if (ij.second == j) s += (ij.first % 2 == 0 ? v : -v);
        return s;
    }

    friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

namespace detail {

template <class Offset>
BettiTable eliahou_kervaire(const MonomialIdeal& ideal, Offset offset)
{
    BettiTable t;
    for (const auto& u : ideal.generators()) {
        const auto j = static_cast<int>(u.degree());
        const auto a = offset(u);
        for (int i = 0; i <= a; ++i) t.add(i, i + j, binomial(a, i));
    }
    return t;
}

} // namespace detail

/// beta_{i,i+j}(I) = sum over degree-j generators u of C(m(u) - 1, i), m(u) the largest variable index of u.
inline BettiTable ek_betti(const MonomialIdeal& ideal)
{
    if (!is_strongly_stable(ideal)) throw InvalidInput("ek_betti needs a strongly stable ideal, got " + ideal.to_string());
    return detail::eliahou_kervaire(ideal, [](const Monomial& u) { return static_cast<int>(u.max_var()) - 1; });
}

/// beta_{i,i+j}(I) = sum over degree-j generators u of C(m(u) - j, i).
inline BettiTable ek_betti_sqfree(const MonomialIdeal& ideal)
{
    if (!is_squarefree_strongly_stable(ideal))
        throw InvalidInput("ek_betti_sqfree needs a squarefree strongly stable ideal, got " + ideal.to_string());
    return detail::eliahou_kervaire(
        ideal, [](const Monomial& u) { return static_cast<int>(u.max_var()) - static_cast<int>(u.degree()); });
}

/// B_j for 1 <= j <= dmax. values[0] is unused and kept at zero.
struct BSequence {
    std::uint32_t dmax = 0;
    std::vector<std::int64_t> values;

    explicit BSequence(std::uint32_t d = 0) : dmax(d), values(d + 1, 0) {}

    std::int64_t at(std::uint32_t j) const { return j < values.size() ? values[j] : 0; }

    friend bool operator==(const BSequence&, const BSequence&) = default;
};

/// k_i for 1 <= i <= dmax. values[0] is unused and kept at zero.
struct KSequence {
    std::uint32_t dmax = 0;
    std::vector<std::int64_t> values;

    explicit KSequence(std::uint32_t d = 0) : dmax(d), values(d + 1, 0) {}

    /// From (k_1, ..., k_d); dmax = d.
    static KSequence of(const std::vector<std::int64_t>& ks)
    {
        KSequence k(static_cast<std::uint32_t>(ks.size()));
        for (std::size_t i = 0; i < ks.size(); ++i) {
            if (ks[i] < 0) throw InvalidInput("k entries must be nonnegative");
            k.values[i + 1] = ks[i];
        }
        return k;
    }

    std::int64_t at(std::uint32_t i) const { return i < values.size() ? values[i] : 0; }

    /// Largest i with k_i != 0, or 0.
    std::uint32_t last_nonzero() const
    {
        for (auto i = dmax; i > 0; --i)
            if (values[i] != 0) return i;
        return 0;
    }

    friend bool operator==(const KSequence&, const KSequence&) = default;
};

inline BSequence b_from_table(const BettiTable& t, std::uint32_t dmax)
{
    BSequence b(dmax);
    for (std::uint32_t j = 1; j <= dmax; ++j) b.values[j] = t.alternating_sum(static_cast<int>(j));
    return b;
}

/// Coefficients of (1 - x)^n Hilb(I, x), i.e. of 1 - K(S/I; x).
inline BSequence b_sequence_hilbert(const MonomialIdeal& ideal, Var n, std::uint32_t dmax)
{
    const auto num = hilbert_numerator(ideal, n, dmax);
    BSequence b(dmax);
    for (std::uint32_t j = 1; j <= dmax && j < num.size(); ++j) b.values[j] = num[j];
    return b;
}

/// B-sequence through dmax: Eliahou-Kervaire when I is (squarefree) strongly stable, Hilbert series otherwise.
inline BSequence b_sequence(const MonomialIdeal& ideal, Var n, std::uint32_t dmax)
{
    detail::check_support(ideal, n);
    if (is_squarefree_strongly_stable(ideal)) return b_from_table(ek_betti_sqfree(ideal), dmax);
    if (is_strongly_stable(ideal)) return b_from_table(ek_betti(ideal), dmax);
    return b_sequence_hilbert(ideal, n, dmax);
}

/// Coefficients of 1 - (1 - x)^{h_1} sum_i h_i x^i, valid when every vertex is a face.
inline BSequence b_from_h(const HVector& h, std::uint32_t dmax)
{
    if (h.entries.empty() || h.entries[0] != 1) throw InvalidInput("b_from_h needs h_0 = 1");
    const std::int64_t h1 = h.entries.size() > 1 ? h.entries[1] : 0;
    IntPoly hp(h.entries.begin(), h.entries.end());
    auto prod = poly_mul_truncated(one_minus_x_pow(h1, dmax), hp, dmax);
    BSequence b(dmax);
    for (std::uint32_t j = 1; j <= dmax; ++j) b.values[j] = -(j < prod.size() ? prod[j] : 0);
    return b;
}

/// Inverts the B-sequence of a USLI:
/// k_j = B_j - sum_{i=1}^{j} (-1)^i sum_{l=1}^{k_{j-i}} C(k_1 + ... + k_{j-i-1} + l - 1, i).
/// Throws NotRealizable if some k_j would be negative.
inline KSequence k_from_b(const BSequence& b, std::uint32_t dmax)
{
    KSequence k(dmax);
    std::vector<std::int64_t> prefix(dmax + 1, 0); // prefix[m] = k_1 + ... + k_m
    for (std::uint32_t j = 1; j <= dmax; ++j) {
        std::int64_t s = 0;
        for (std::uint32_t i = 1; i < j; ++i) {
            const auto r = j - i;
            std::int64_t inner = 0;
            for (std::int64_t l = 1; l <= k.values[r]; ++l) inner += binomial(prefix[r - 1] + l - 1, i);
            s += (i % 2 == 0 ? inner : -inner);
        }
        const auto kj = b.at(j) - s;
        if (kj < 0)
            throw NotRealizable("B-sequence is not realized by a USLI: k_" + std::to_string(j) + " = " + std::to_string(kj));
        k.values[j] = kj;
        prefix[j] = prefix[j - 1] + kj;
    }
    return k;
}

} // namespace algshift
