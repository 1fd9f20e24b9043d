#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <unordered_set>
#include <vector>

#include "binomial.hpp"
#include "error.hpp"

namespace algshift {

using Vertex = std::uint32_t;

/// Largest vertex universe a complex may live on.
inline constexpr Vertex kMaxVertices = 64;

/// A finite subset of {1, ..., 64}, stored as a bitmask (bit v-1 <-> vertex v).
class Face {
public:
    constexpr Face() = default;

    Face(std::initializer_list<Vertex> vs)
    {
        for (Vertex v : vs) insert(v);
    }

    explicit Face(const std::vector<Vertex>& vs)
    {
        for (Vertex v : vs) insert(v);
    }

    static constexpr Face from_bits(std::uint64_t bits)
    {
        Face f;
        f.bits_ = bits;
        return f;
    }

    /// [lo, hi] (empty when lo > hi).
    static Face interval(Vertex lo, Vertex hi)
    {
        Face f;
        for (Vertex v = lo; v <= hi; ++v) f.insert(v);
        return f;
    }

    void insert(Vertex v)
    {
        if (v < 1 || v > kMaxVertices) throw InvalidInput("vertex " + std::to_string(v) + " outside [1, 64]");
        bits_ |= bit(v);
    }
    void erase(Vertex v) { bits_ &= ~bit(v); }

    constexpr std::uint64_t bits() const { return bits_; }
    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    bool contains(Vertex v) const { return v >= 1 && v <= kMaxVertices && (bits_ & bit(v)) != 0; }
    bool subset_of(Face other) const { return (bits_ & ~other.bits_) == 0; }
    Vertex max_vertex() const { return bits_ == 0 ? 0 : static_cast<Vertex>(64 - std::countl_zero(bits_)); }

    Face with(Vertex v) const
    {
        Face f = *this;
        f.insert(v);
        return f;
    }
    Face without(Vertex v) const
    {
        Face f = *this;
        f.erase(v);
        return f;
    }

    std::vector<Vertex> vertices() const
    {
        std::vector<Vertex> out;
        for (auto b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<Vertex>(std::countr_zero(b) + 1));
        return out;
    }

    friend bool operator==(Face a, Face b) { return a.bits_ == b.bits_; }

    /// Lexicographic order on the increasing vertex sequence.
    friend bool operator<(Face a, Face b)
    {
        const auto diff = a.bits_ ^ b.bits_;
        if (diff == 0) return false;
        const auto low = diff & (~diff + 1);
        const auto above = ~((low << 1) - 1);
        // The set holding the first differing vertex is smaller iff the other still has a larger vertex.
        if (a.bits_ & low) return (b.bits_ & above) != 0;
        return (a.bits_ & above) == 0;
    }

    std::string to_string() const
    {
        std::string s = "{";
        bool first = true;
        for (Vertex v : vertices()) {
            s += (first ? "" : ",") + std::to_string(v);
            first = false;
        }
        return s + "}";
    }

    friend std::ostream& operator<<(std::ostream& os, Face f) { return os << f.to_string(); }

private:
    static constexpr std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v - 1); }
    std::uint64_t bits_ = 0;
};

/// A finite simplicial complex on the vertex universe [n], held by its facets.
/// The void complex (no faces) has no facets; {emptyset} has the single facet {}.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    SimplicialComplex(Vertex n, std::vector<Face> facets) : n_(n), facets_(std::move(facets))
    {
        if (n > kMaxVertices) throw InvalidInput("vertex universe larger than 64");
        for (Face f : facets_)
            if (f.max_vertex() > n) throw InvalidInput("facet " + f.to_string() + " not contained in [" + std::to_string(n) + "]");
        canonicalize();
    }

    static SimplicialComplex void_complex(Vertex n) { return SimplicialComplex(n, {}); }
    static SimplicialComplex simplex(Vertex n) { return SimplicialComplex(n, {Face::interval(1, n)}); }

    Vertex n() const { return n_; }
    const std::vector<Face>& facets() const { return facets_; }
    bool is_void() const { return facets_.empty(); }

    /// -1 for {emptyset}; void complexes report -2.
    int dim() const
    {
        int d = -2;
        for (Face f : facets_) d = std::max(d, f.size() - 1);
        return d;
    }

    bool contains(Face f) const
    {
        return std::any_of(facets_.begin(), facets_.end(), [f](Face g) { return f.subset_of(g); });
    }

    /// All faces, sorted by size then lexicographically.
    std::vector<Face> faces() const
    {
        std::unordered_set<std::uint64_t> seen;
        for (Face f : facets_) {
            // Enumerate all submasks of the facet.
            const auto m = f.bits();
            for (std::uint64_t s = m;; s = (s - 1) & m) {
                seen.insert(s);
                if (s == 0) break;
            }
        }
        std::vector<Face> out;
        out.reserve(seen.size());
        for (auto b : seen) out.push_back(Face::from_bits(b));
        std::sort(out.begin(), out.end(), [](Face a, Face b) {
            return a.size() != b.size() ? a.size() < b.size() : a < b;
        });
        return out;
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b)
    {
        return a.n_ == b.n_ && a.facets_ == b.facets_;
    }

    /// Same face sets, ignoring the vertex universe.
    bool same_faces(const SimplicialComplex& other) const { return facets_ == other.facets_; }

    /// Every face of this complex is a face of `other`.
    bool subcomplex_of(const SimplicialComplex& other) const
    {
        return std::all_of(facets_.begin(), facets_.end(), [&](Face f) { return other.contains(f); });
    }

    std::string to_string() const
    {
        std::string s = "[n=" + std::to_string(n_) + "; ";
        for (std::size_t i = 0; i < facets_.size(); ++i) s += (i ? " " : "") + facets_[i].to_string();
        return s + "]";
    }

    friend std::ostream& operator<<(std::ostream& os, const SimplicialComplex& c) { return os << c.to_string(); }

private:
    void canonicalize()
    {
        std::sort(facets_.begin(), facets_.end(), [](Face a, Face b) { return a.size() > b.size(); });
        std::vector<Face> kept;
        for (Face f : facets_) {
            bool covered = std::any_of(kept.begin(), kept.end(), [f](Face g) { return f.subset_of(g); });
            if (!covered) kept.push_back(f);
        }
        std::sort(kept.begin(), kept.end());
        facets_ = std::move(kept);
    }

    Vertex n_ = 0;
    std::vector<Face> facets_;
};

/// (f_{-1}, f_0, ..., f_dim); empty for the void complex.
struct FVector {
    std::vector<std::int64_t> entries;
    friend bool operator==(const FVector&, const FVector&) = default;
};

/// (h_0, ..., h_d) with d = dim + 1.
struct HVector {
    std::vector<std::int64_t> entries;
    friend bool operator==(const HVector&, const HVector&) = default;
};

inline FVector f_vector(const SimplicialComplex& c)
{
    FVector f;
    if (c.is_void()) return f;
    f.entries.assign(static_cast<std::size_t>(c.dim() + 2), 0);
    for (Face face : c.faces()) ++f.entries[static_cast<std::size_t>(face.size())];
    return f;
}

inline HVector h_vector_from_f(const FVector& f)
{
    HVector h;
    if (f.entries.empty()) return h;
    const auto d = static_cast<std::int64_t>(f.entries.size()) - 1;
    for (std::int64_t j = 0; j <= d; ++j) {
        std::int64_t s = 0;
        for (std::int64_t i = 0; i <= j; ++i) {
            std::int64_t term = binomial(d - i, j - i) * f.entries[static_cast<std::size_t>(i)];
            s += ((j - i) % 2 == 0) ? term : -term;
        }
        h.entries.push_back(s);
    }
    return h;
}

inline HVector h_vector(const SimplicialComplex& c) { return h_vector_from_f(f_vector(c)); }

/// Reduced Euler characteristic sum_{j >= -1} (-1)^j f_j.
inline std::int64_t reduced_euler(const SimplicialComplex& c)
{
    const auto f = f_vector(c);
    std::int64_t chi = 0;
    for (std::size_t i = 0; i < f.entries.size(); ++i) {
        // entries[i] = f_{i-1}
        chi += (i % 2 == 1) ? f.entries[i] : -f.entries[i];
    }
    return chi;
}

/// Faces not containing v. Lives on [n-1] when v = n, otherwise on [n].
inline SimplicialComplex antistar(const SimplicialComplex& c, Vertex v)
{
    if (v < 1 || v > c.n()) throw InvalidInput("vertex " + std::to_string(v) + " out of range");
    std::vector<Face> fs;
    for (Face f : c.facets()) fs.push_back(f.without(v));
    return SimplicialComplex(v == c.n() ? c.n() - 1 : c.n(), std::move(fs));
}

/// Faces F with v not in F and F + v in the complex. Same universe convention as antistar.
inline SimplicialComplex link(const SimplicialComplex& c, Vertex v)
{
    if (v < 1 || v > c.n()) throw InvalidInput("vertex " + std::to_string(v) + " out of range");
    std::vector<Face> fs;
    for (Face f : c.facets())
        if (f.contains(v)) fs.push_back(f.without(v));
    return SimplicialComplex(v == c.n() ? c.n() - 1 : c.n(), std::move(fs));
}

/// Join with the single vertex `apex` (apex must not be used), on universe [n_out].
inline SimplicialComplex join_vertex(const SimplicialComplex& c, Vertex apex, Vertex n_out)
{
    std::vector<Face> fs;
    for (Face f : c.facets()) {
        if (f.contains(apex)) throw InvalidInput("apex already a vertex of the complex");
        fs.push_back(f.with(apex));
    }
    return SimplicialComplex(n_out, std::move(fs));
}

/// Cone with apex n + 1, on [n + 1].
inline SimplicialComplex cone(const SimplicialComplex& c) { return join_vertex(c, c.n() + 1, c.n() + 1); }

inline SimplicialComplex unite(const SimplicialComplex& a, const SimplicialComplex& b)
{
    auto fs = a.facets();
    fs.insert(fs.end(), b.facets().begin(), b.facets().end());
    return SimplicialComplex(std::max(a.n(), b.n()), std::move(fs));
}

/// For every face F, i in F and i < j <= n, (F - i) + j is a face. Checking facets suffices.
inline bool is_shifted(const SimplicialComplex& c)
{
    for (Face f : c.facets()) {
        for (Vertex i : f.vertices())
            for (Vertex j = i + 1; j <= c.n(); ++j)
                if (!f.contains(j) && !c.contains(f.without(i).with(j))) return false;
    }
    return true;
}

/// Reduced Betti numbers indexed from -1: entries[i] = beta_{i-1}.
struct BettiNumbers {
    std::vector<std::int64_t> entries;
    std::int64_t total() const
    {
        std::int64_t s = 0;
        for (auto b : entries) s += b;
        return s;
    }
    std::int64_t at(int i) const
    {
        auto k = static_cast<std::size_t>(i + 1);
        return i >= -1 && k < entries.size() ? entries[k] : 0;
    }
    friend bool operator==(const BettiNumbers& a, const BettiNumbers& b)
    {
        auto n = std::max(a.entries.size(), b.entries.size());
        for (std::size_t k = 0; k < n; ++k)
            if (a.at(static_cast<int>(k) - 1) != b.at(static_cast<int>(k) - 1)) return false;
        return true;
    }
};

/// beta_i = number of facets of size i + 1 avoiding vertex n (shifted complexes only).
inline BettiNumbers shifted_betti(const SimplicialComplex& c)
{
    if (!is_shifted(c)) throw InvalidInput("shifted_betti needs a shifted complex, got " + c.to_string());
    BettiNumbers b;
    if (c.is_void()) return b;
    b.entries.assign(static_cast<std::size_t>(c.dim() + 2), 0);
    for (Face f : c.facets())
        if (c.n() == 0 || !f.contains(c.n())) ++b.entries[static_cast<std::size_t>(f.size())];
    return b;
}

} // namespace algshift
