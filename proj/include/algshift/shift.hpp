#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "betti.hpp"
#include "enumeration.hpp"
#include "gin.hpp"
#include "homology.hpp"
#include "stanley_reisner.hpp"
#include "usli.hpp"

namespace algshift {

struct ShiftOptions {
    /// Use Gin_rl(I) = phi^{-1}(I) when I is squarefree strongly stable.
    bool fast_path = true;
    GinOptions gin;
};

/// Reverse lexicographic (symmetric algebraic) shifting of a complex on [n].
inline SimplicialComplex delta_rl(const SimplicialComplex& c, const ShiftOptions& opt = {})
{
    if (c.is_void()) return c;
    const auto n = c.n();
    const auto ideal = stanley_reisner(c);
    if (ideal.is_zero()) return c;
    const auto g = opt.fast_path && is_squarefree_strongly_stable(ideal) ? phi_inv_ideal(ideal)
                                                                         : gin(ideal, n, TermOrder::revlex(), opt.gin);
    const auto shifted = phi_ideal(g);
    if (shifted.max_var() > n)
        throw GinError("phi(Gin_rl(I)) leaves S_[" + std::to_string(n) + "]: " + shifted.to_string());
    return complex_of(shifted, n);
}

/// The part of Delta_ord(I) = phi(Gin_ord(I)) generated in degrees <= degree, exact in those degrees.
/// `complete` is set when the Hilbert series certifies that nothing is generated above.
struct DeltaPrefix {
    MonomialIdeal ideal;
    std::uint32_t degree = 0;
    bool complete = false;
};

inline DeltaPrefix delta_prefix(const MonomialIdeal& ideal, const TermOrder& ord, std::uint32_t degree,
                                const GinOptions& opt = {})
{
    if (ideal.is_zero()) return {{}, degree, true};
    GinOptions bounded = opt;
    bounded.degree_bound = degree;
    const auto n = ideal.max_var();
    const auto g = gin(ideal, n, ord, bounded);
    const bool complete = k_polynomial(g) == k_polynomial(ideal);
    return {phi_ideal(g), degree, complete};
}

/// Delta_ord(I) = phi(Gin_ord(I)), Gin taken in S_[n] with n the largest variable of I.
inline MonomialIdeal delta_generic(const MonomialIdeal& ideal, const TermOrder& ord, const GinOptions& opt = {})
{
    if (ideal.is_zero()) return {};
    return phi_ideal(gin(ideal, ideal.max_var(), ord, opt));
}

inline MonomialIdeal delta_lex(const MonomialIdeal& ideal, const GinOptions& opt = {})
{
    return delta_generic(ideal, TermOrder::lex(), opt);
}

/// Generators of degree <= d.
inline MonomialIdeal prefix(const MonomialIdeal& ideal, std::uint32_t d) { return ideal.truncated(d); }

/// ideal_compare(a, b) using only generators of degree <= d. Exact whenever the generator sets
/// differ in some degree <= d; equal otherwise.
inline std::strong_ordering compare_through(const MonomialIdeal& a, const MonomialIdeal& b, std::uint32_t d,
                                            const TermOrder& ord)
{
    return ideal_compare(a.truncated(d), b.truncated(d), ord);
}

/// ideal_compare(Delta_ord(I), I) for a squarefree strongly stable I, exactly.
/// Delta_ord(I) has the B-sequence of I, so if its generators agreed with G(I) up to reg(I) it would
/// contain I with the same Hilbert function in every S_[n], hence equal I. The first difference thus
/// sits in degree <= reg(I), and a Gin prefix up to reg(I) decides the comparison. Equality is
/// confirmed separately by the Hilbert certificate of the prefix.
struct DeltaComparison {
    std::strong_ordering order = std::strong_ordering::equal;
    DeltaPrefix delta;
};

inline DeltaComparison compare_delta(const MonomialIdeal& ideal, const TermOrder& ord, const GinOptions& opt = {})
{
    if (ideal.is_zero()) return {std::strong_ordering::equal, {{}, 0, true}};
    const auto r = regularity(ideal);
    auto d = delta_prefix(ideal, ord, r, opt);
    const auto c = compare_through(d.ideal, ideal, r, ord);
    if (c == 0 && !(d.complete && d.ideal == ideal))
        throw TheoremViolation("Delta agrees with " + ideal.to_string() + " through degree " + std::to_string(r) +
                               " but is not certified equal");
    return {c, std::move(d)};
}

struct StepRecord {
    std::strong_ordering order = std::strong_ordering::equal; // next versus previous, on the known prefix
    std::optional<std::uint32_t> decided_in_degree;           // lowest degree where the generators differ
};

/// Orbit I, Delta_lex(I), Delta_lex^2(I), ... . The start is exact; iterates are exact in degrees
/// <= working_degree (Delta_lex in those degrees depends only on the input in those degrees).
struct ShiftOrbit {
    MonomialIdeal start;
    std::vector<MonomialIdeal> iterates;
    std::vector<StepRecord> steps;
    std::uint32_t dbound = 0;
    std::uint32_t working_degree = 0;
    std::optional<MonomialIdeal> stabilized_prefix;
    bool certified = false;
    bool fixed_point = false;
};

namespace detail {

inline std::optional<std::uint32_t> first_difference(const MonomialIdeal& a, const MonomialIdeal& b, std::uint32_t d)
{
    for (std::uint32_t e = 1; e <= d; ++e)
        if (a.generators_of_degree(e) != b.generators_of_degree(e)) return e;
    return std::nullopt;
}

} // namespace detail

/// Iterates Delta_lex until (a) a fixed point, (b) two consecutive iterates agree through dbound and
/// match the predicted limit from the B-sequence, or (c) max_steps applications.
/// Throws TheoremViolation if an iterate fails to increase strictly or changes the B-sequence.
inline ShiftOrbit iterate_lex(const MonomialIdeal& start, std::uint32_t max_steps, std::uint32_t dbound,
                              const GinOptions& opt = {})
{
    if (!is_squarefree_strongly_stable(start))
        throw InvalidInput("iterate_lex needs a squarefree strongly stable ideal, got " + start.to_string());
    const auto lex = TermOrder::lex();
    ShiftOrbit orbit;
    orbit.start = start;
    orbit.dbound = dbound;
    orbit.working_degree = start.is_zero() ? dbound : std::max(dbound, regularity(start));
    const auto w = orbit.working_degree;
    if (start.is_zero()) {
        orbit.iterates.push_back(start);
        orbit.steps.push_back({});
        orbit.fixed_point = orbit.certified = true;
        return orbit;
    }
    const auto n0 = start.max_var();
    const auto b0 = b_sequence(start, n0, w);
    const auto predicted = usli_from_k(k_from_b(b_sequence(start, n0, dbound), dbound), dbound).generators;

    MonomialIdeal current = start;
    bool current_complete = true;
    for (std::uint32_t step = 0; step < max_steps; ++step) {
        auto next = delta_prefix(current, lex, w, opt);
        const bool complete = current_complete && next.complete;
        const auto diff = detail::first_difference(next.ideal, current, w);
        StepRecord rec;
        if (diff) {
            rec.order = compare_through(next.ideal, current, w, lex);
            rec.decided_in_degree = diff;
            if (rec.order <= 0)
                throw TheoremViolation("Delta_lex(" + current.to_string() + ") is not lex-larger: " + next.ideal.to_string());
        }
        if (b_sequence(next.ideal, next.ideal.max_var(), w) != b0)
            throw TheoremViolation("Delta_lex changed the B-sequence of " + current.to_string());
        orbit.iterates.push_back(next.ideal);
        orbit.steps.push_back(rec);

        if (!diff && complete) {
            if (!is_usli(current))
                throw TheoremViolation("non-USLI fixed point of Delta_lex: " + current.to_string());
            orbit.fixed_point = orbit.certified = true;
            orbit.stabilized_prefix = current.truncated(dbound);
            break;
        }
        if (current.truncated(dbound) == next.ideal.truncated(dbound) && next.ideal.truncated(dbound) == predicted) {
            orbit.stabilized_prefix = predicted;
            orbit.certified = true;
            break;
        }
        current = std::move(next.ideal);
        current_complete = complete;
    }
    return orbit;
}

/// The limit USLI through dbound, from the B-sequence alone.
inline UsliPrefix limit_usli(const MonomialIdeal& ideal, Var n, std::uint32_t dbound)
{
    return usli_from_k(k_from_b(b_sequence(ideal, n, dbound), dbound), dbound);
}

/// prod x_i^{r_i}, r_i the number of facets of size n - i. Flagged degenerate when [n] itself is a
/// facet (the full simplex, whose ideal is zero).
struct PardueWitness {
    Monomial monomial;
    bool degenerate = false;
};

inline PardueWitness pardue_witness(const SimplicialComplex& c)
{
    if (c.is_void()) throw InvalidInput("pardue_witness needs a nonvoid complex");
    const auto n = c.n();
    std::vector<Exp> r(n, 0);
    bool degenerate = false;
    for (Face f : c.facets()) {
        const auto i = n - f.size();
        if (i == 0) degenerate = true;
        else ++r[i - 1];
    }
    if (degenerate) return {Monomial{}, true};
    return {Monomial::from_exponents(r), false};
}

/// Outcome of checking the four shifting axioms on a corpus.
struct AxiomFailure {
    std::string property;
    SimplicialComplex complex;
    std::optional<SimplicialComplex> other;
    std::string detail;
};

struct AxiomReport {
    std::size_t complexes = 0;
    std::size_t nested_pairs = 0;
    std::size_t passed[4] = {0, 0, 0, 0};
    std::size_t checked[4] = {0, 0, 0, 0};
    std::vector<AxiomFailure> failures;

    bool ok() const { return failures.empty(); }
};

inline std::int64_t nonnegative_betti_sum(const BettiNumbers& b)
{
    std::int64_t s = 0;
    for (int i = 0; i + 1 < static_cast<int>(b.entries.size()); ++i) s += b.at(i);
    return s;
}

/// Removes the star of a random face (and does so `rounds` times), giving a subcomplex.
inline SimplicialComplex random_subcomplex(const SimplicialComplex& c, std::mt19937_64& rng, int rounds = 1)
{
    auto current = c;
    for (int k = 0; k < rounds; ++k) {
        auto faces = current.faces();
        if (faces.empty()) break;
        std::uniform_int_distribution<std::size_t> pick(0, faces.size() - 1);
        const Face drop = faces[pick(rng)];
        std::vector<Face> kept;
        for (Face f : faces)
            if (!drop.subset_of(f)) kept.push_back(f);
        current = SimplicialComplex(current.n(), std::move(kept));
    }
    return current;
}

/// Checks f-vector preservation, cone commutation, monotonicity and the Betti-sum inequality for
/// delta_rl on every complex of `corpus` and on `pairs` nested pairs cut from it.
inline AxiomReport verify_axioms_on(const std::vector<SimplicialComplex>& corpus, std::size_t pairs, std::uint64_t seed,
                                    const ShiftOptions& opt = {})
{
    AxiomReport rep;
    auto fail = [&](std::string prop, const SimplicialComplex& c, std::optional<SimplicialComplex> other, std::string d) {
        rep.failures.push_back({std::move(prop), c, std::move(other), std::move(d)});
    };
    for (const auto& c : corpus) {
        ++rep.complexes;
        const auto d = delta_rl(c, opt);
        ++rep.checked[0];
        if (f_vector(d) == f_vector(c) && is_shifted(d)) ++rep.passed[0];
        else fail("f-vector", c, d, "shift " + d.to_string());
        if (!c.is_void()) {
            ++rep.checked[1];
            const auto lhs = delta_rl(cone(c), opt);
            const auto rhs = cone(d);
            if (lhs.same_faces(rhs)) ++rep.passed[1];
            else fail("cone", c, lhs, "cone of shift " + rhs.to_string());
        }
        ++rep.checked[3];
        const auto src = nonnegative_betti_sum(reduced_betti(c));
        const auto img = nonnegative_betti_sum(shifted_betti(d));
        if (src <= img) ++rep.passed[3];
        else fail("betti-sum", c, d, std::to_string(src) + " > " + std::to_string(img));
    }
    std::mt19937_64 rng(seed);
    std::vector<const SimplicialComplex*> usable;
    for (const auto& c : corpus)
        if (!c.is_void()) usable.push_back(&c);
    for (std::size_t k = 0; k < pairs && !usable.empty(); ++k) {
        const auto& big = *usable[std::uniform_int_distribution<std::size_t>(0, usable.size() - 1)(rng)];
        const auto small = random_subcomplex(big, rng, 1 + static_cast<int>(rng() % 2));
        ++rep.nested_pairs;
        ++rep.checked[2];
        const auto ds = delta_rl(small, opt);
        const auto db = delta_rl(big, opt);
        if (ds.subcomplex_of(db)) ++rep.passed[2];
        else fail("monotone", big, small, "shift of the subcomplex " + ds.to_string() + " not inside " + db.to_string());
    }
    return rep;
}

/// Corpus: every shifted complex on [n] for n <= min(n_max, 5), and `samples` random complexes on [n_max];
/// `samples` nested pairs.
inline AxiomReport verify_axioms(Vertex n_max, std::size_t samples, std::uint64_t seed, const ShiftOptions& opt = {})
{
    std::vector<SimplicialComplex> corpus;
    for (Vertex n = 1; n <= std::min<Vertex>(n_max, 5); ++n)
        enumerate_shifted(n, [&](const SimplicialComplex& c) { corpus.push_back(c); });
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < samples; ++k) corpus.push_back(random_complex(n_max, rng()));
    return verify_axioms_on(corpus, samples, rng(), opt);
}

/// Experiment for the conjecture on orders other than revlex: with k the first degree where ord and
/// revlex disagree and m_1, m_2, ... the squarefree degree-k monomials in revlex order, find the
/// first i_0 with <m_1..m_{i_0}> not a US(ord)I and test whether Delta_ord moves it.
/// The US(ord)I test is bounded: degrees k and k+1, variables x_1..x_window.
struct ConjectureProbe {
    std::string order;
    std::optional<std::uint32_t> degree;
    std::optional<std::size_t> i0;
    MonomialIdeal ideal;
    MonomialIdeal shifted;
    bool shifted_complete = false;
    std::optional<bool> moved;
    std::string note;
};

inline bool is_us_order_ideal_bounded(const MonomialIdeal& ideal, const TermOrder& ord, Var window, std::uint32_t from,
                                      std::uint32_t to)
{
    for (auto d = from; d <= to; ++d) {
        const auto sq = squarefree_monomials_of_degree(window, d);
        for (const auto& m : monomials_of_degree(window, d)) {
            if (!ideal.contains(m)) continue;
            for (const auto& mp : sq)
                if (ord.within_degree(mp, m) > 0 && !ideal.contains(mp)) return false;
        }
    }
    return true;
}

inline ConjectureProbe probe_conjecture(const TermOrder& ord, Var window = 7, std::uint32_t max_degree = 4,
                                        const GinOptions& opt = {})
{
    ConjectureProbe out;
    out.order = ord.name();
    const auto rl = TermOrder::revlex();
    for (std::uint32_t k = 2; k <= max_degree && !out.degree; ++k) {
        const auto mons = monomials_of_degree(window, k);
        for (std::size_t i = 0; i < mons.size() && !out.degree; ++i)
            for (std::size_t j = i + 1; j < mons.size(); ++j)
                if (ord.within_degree(mons[i], mons[j]) != rl.within_degree(mons[i], mons[j])) {
                    out.degree = k;
                    break;
                }
    }
    if (!out.degree) {
        out.note = "agrees with revlex through degree " + std::to_string(max_degree) + " on " + std::to_string(window) + " variables";
        return out;
    }
    const auto k = *out.degree;
    auto seq = squarefree_monomials_of_degree(window, k);
    std::sort(seq.begin(), seq.end(), [&](const Monomial& a, const Monomial& b) { return rl.within_degree(a, b) > 0; });
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        gens.push_back(seq[i]);
        auto ideal = MonomialIdeal::minimalize(gens);
        if (!is_us_order_ideal_bounded(ideal, ord, window, k, k + 1)) {
            out.i0 = i + 1;
            out.ideal = ideal;
            break;
        }
    }
    if (!out.i0) {
        out.note = "no i0 found inside the variable window";
        return out;
    }
    const auto cmp = compare_delta(out.ideal, ord, opt);
    out.shifted = cmp.delta.ideal;
    out.shifted_complete = cmp.delta.complete;
    out.moved = cmp.order != 0;
    return out;
}

} // namespace algshift
