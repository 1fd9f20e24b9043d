#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "monomial.hpp"
#include "rational.hpp"
#include "term_order.hpp"

namespace algshift {

/// Exact polynomial over Q: a map from monomial to nonzero coefficient.
class Polynomial {
public:
    using Terms = std::map<Monomial, Rational>;

    Polynomial() = default;
    Polynomial(const Monomial& m, Rational c = 1) { add_term(m, std::move(c)); }
    explicit Polynomial(Terms terms) : terms_(std::move(terms)) { prune(); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, const Rational& c)
    {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    bool is_homogeneous() const
    {
        if (terms_.empty()) return true;
        const auto d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

    Var max_var() const
    {
        Var v = 0;
        for (const auto& [m, c] : terms_) v = std::max(v, m.max_var());
        return v;
    }

    /// The ord-largest monomial with nonzero coefficient.
    Monomial leading_monomial(const TermOrder& ord) const
    {
        if (terms_.empty()) throw InvalidInput("leading monomial of the zero polynomial");
        const Monomial* best = &terms_.begin()->first;
        for (const auto& [m, c] : terms_)
            if (ord.greater(m, *best)) best = &m;
        return *best;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b)
    {
        for (const auto& [m, c] : b.terms_) a.add_term(m, c);
        return a;
    }

    friend Polynomial operator-(Polynomial a, const Polynomial& b)
    {
        for (const auto& [m, c] : b.terms_) a.add_term(m, -c);
        return a;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        Polynomial out;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
        return out;
    }

    friend Polynomial operator*(Polynomial a, const Rational& s)
    {
        if (s == 0) return {};
        for (auto& [m, c] : a.terms_) c *= s;
        return a;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    std::string to_string() const
    {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!s.empty()) s += " + ";
            s += "(" + algshift::to_string(it->second) + ")*" + it->first.to_string();
        }
        return s;
    }

private:
    void prune()
    {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = it->second == 0 ? terms_.erase(it) : std::next(it);
    }

    Terms terms_;
};

/// Upper-triangular change of coordinates g x_j = sum_{i <= j} g_ij x_i with nonzero integer entries.
class GenericMatrix {
public:
    static constexpr std::int64_t kDefaultRange = 1'000'000;

    /// Entries uniform on [-range, range] minus {0}, reproducible from the seed.
    static GenericMatrix sample(Var n, std::uint64_t seed, std::int64_t range = kDefaultRange)
    {
        if (range < 1) throw InvalidInput("coefficient range must be positive");
        GenericMatrix g;
        g.n_ = n;
        g.seed_ = seed;
        g.range_ = range;
        g.entries_.assign(static_cast<std::size_t>(n) * n, Integer(0));
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<std::int64_t> dist(-range, range - 1);
        for (Var j = 0; j < n; ++j)
            for (Var i = 0; i <= j; ++i) {
                auto v = dist(rng);
                if (v >= 0) ++v; // skip zero
                g.entries_[static_cast<std::size_t>(i) * n + j] = Integer(static_cast<long>(v));
            }
        return g;
    }

    /// Unit diagonal and superdiagonal, other entries as in `sample`. Scaling rows and columns by
    /// nonzero constants does not change in(gI) for a monomial ideal I (the diagonal torus fixes I
    /// and only rescales terms), so every generic g is equivalent to one of this form.
    static GenericMatrix sample_normalized(Var n, std::uint64_t seed, std::int64_t range = kDefaultRange)
    {
        auto g = sample(n, seed, range);
        for (Var i = 0; i < n; ++i) {
            g.entries_[static_cast<std::size_t>(i) * n + i] = 1;
            if (i + 1 < n) g.entries_[static_cast<std::size_t>(i) * n + i + 1] = 1;
        }
        return g;
    }

    static GenericMatrix identity(Var n)
    {
        GenericMatrix g;
        g.n_ = n;
        g.entries_.assign(static_cast<std::size_t>(n) * n, Integer(0));
        for (Var i = 0; i < n; ++i) g.entries_[static_cast<std::size_t>(i) * n + i] = 1;
        return g;
    }

    /// Build from explicit rows; entries below the diagonal must vanish and the diagonal must not.
    static GenericMatrix from_rows(const std::vector<std::vector<long>>& rows)
    {
        GenericMatrix g;
        g.n_ = static_cast<Var>(rows.size());
        g.entries_.assign(rows.size() * rows.size(), Integer(0));
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size()) throw InvalidInput("matrix must be square");
            for (std::size_t j = 0; j < rows.size(); ++j) {
                if (i > j && rows[i][j] != 0) throw InvalidInput("matrix must be upper triangular");
                if (i == j && rows[i][j] == 0) throw InvalidInput("diagonal entries must be nonzero");
                g.entries_[i * rows.size() + j] = Integer(rows[i][j]);
            }
        }
        return g;
    }

    Var n() const { return n_; }
    std::uint64_t seed() const { return seed_; }
    std::int64_t range() const { return range_; }

    /// g_ij with 1-based indices.
    const Integer& at(Var i, Var j) const { return entries_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)]; }

    /// g(x_j) as a linear form.
    Polynomial image_of_variable(Var j) const
    {
        Polynomial p;
        for (Var i = 1; i <= j; ++i) p.add_term(Monomial::variable(i), Rational(at(i, j)));
        return p;
    }

private:
    Var n_ = 0;
    std::uint64_t seed_ = 0;
    std::int64_t range_ = 0;
    std::vector<Integer> entries_;
};

/// Substitute x_j -> sum_{i <= j} g_ij x_i and expand.
inline Polynomial apply_change(const GenericMatrix& g, const Polynomial& f)
{
    if (f.max_var() > g.n()) throw InvalidInput("polynomial support exceeds the matrix size");
    Polynomial out;
    for (const auto& [m, c] : f.terms()) {
        Polynomial term(Monomial{}, c);
        for (const auto& p : m.powers()) {
            const auto lin = g.image_of_variable(p.var);
            for (Exp k = 0; k < p.exp; ++k) term = term * lin;
        }
        out = out + term;
    }
    return out;
}

} // namespace algshift
