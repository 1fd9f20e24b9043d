#include <gtest/gtest.h>

#include "support.hpp"

using namespace algshift;
using testkit::complex;
using testkit::ideal;

namespace {

const auto kThreePoints = complex(3, {{1}, {2}, {3}});

std::vector<SimplicialComplex> shifted_up_to(Vertex n_max)
{
    std::vector<SimplicialComplex> out;
    for (Vertex n = 1; n <= n_max; ++n)
        for (const auto& c : all_shifted(n))
            if (!c.is_void()) out.push_back(c);
    return out;
}

/// Facets of c of the form [n] minus a set, counted by codimension.
std::size_t facet_count(const SimplicialComplex& c) { return c.facets().size(); }

} // namespace

TEST(DeltaRl, Examples)
{
    EXPECT_EQ(delta_rl(kThreePoints), kThreePoints);
    // The only shifted complex with f = (1, 3, 1).
    EXPECT_EQ(delta_rl(complex(3, {{1, 2}, {3}})), complex(3, {{2, 3}, {1}}));
    EXPECT_EQ(delta_rl(SimplicialComplex::simplex(4)), SimplicialComplex::simplex(4));
    EXPECT_EQ(delta_rl(SimplicialComplex::void_complex(3)), SimplicialComplex::void_complex(3));
    // Two disjoint edges: the shifted complex with f = (1, 4, 2) and nothing above.
    const auto d = delta_rl(complex(4, {{1, 2}, {3, 4}}));
    EXPECT_TRUE(is_shifted(d));
    EXPECT_EQ(f_vector(d), f_vector(complex(4, {{1, 2}, {3, 4}})));
}

TEST(DeltaRl, GroebnerPathOnRandomComplexes)
{
    auto rng = testkit::rng_for(61);
    ShiftOptions slow;
    slow.fast_path = false;
    for (int k = 0; k < 60; ++k) {
        const auto c = random_complex(static_cast<Vertex>(2 + k % 4), rng());
        const auto d = delta_rl(c);
        ASSERT_TRUE(is_shifted(d)) << c;
        ASSERT_EQ(f_vector(d), f_vector(c)) << c;
        ASSERT_EQ(delta_rl(d), d) << c;
        ASSERT_EQ(delta_rl(d, slow), d) << c;
    }
}

TEST(DeltaRl, FastPathMatchesBuchbergerOnShiftedComplexes)
{
    ShiftOptions slow;
    slow.fast_path = false;
    for (const auto& c : shifted_up_to(4)) ASSERT_EQ(delta_rl(c, slow), c) << c;
}

TEST(DeltaLex, Examples)
{
    const auto I = stanley_reisner(kThreePoints);
    EXPECT_EQ(delta_lex(I), ideal({"x1*x2", "x1*x3", "x1*x4", "x2*x3*x4"}));
    EXPECT_EQ(delta_lex(ideal({"x1*x2", "x1*x3"})), ideal({"x1*x2", "x1*x3"}));
    EXPECT_EQ(delta_lex(ideal({"x1", "x2*x3"})), ideal({"x1", "x2*x3"}));
    EXPECT_TRUE(delta_lex(MonomialIdeal{}).is_zero());
    const auto cmp = compare_delta(I, TermOrder::lex());
    EXPECT_TRUE(cmp.order > 0);
    EXPECT_EQ(cmp.delta.ideal.truncated(2), ideal({"x1*x2", "x1*x3", "x1*x4"}));
}

TEST(DeltaLex, PrefixCompleteness)
{
    const auto I = stanley_reisner(kThreePoints);
    const auto low = delta_prefix(I, TermOrder::lex(), 2);
    EXPECT_FALSE(low.complete);
    EXPECT_EQ(low.ideal, ideal({"x1*x2", "x1*x3", "x1*x4"}));
    const auto high = delta_prefix(I, TermOrder::lex(), 3);
    EXPECT_TRUE(high.complete);
    EXPECT_EQ(high.ideal, delta_lex(I));
}

TEST(DeltaLex, TrichotomyOnShiftedComplexes)
{
    for (const auto& c : shifted_up_to(4)) {
        const auto I = stanley_reisner(c);
        const auto cmp = compare_delta(I, TermOrder::lex());
        if (is_usli(I)) ASSERT_TRUE(cmp.order == 0) << c;
        else ASSERT_TRUE(cmp.order > 0) << c;
    }
}

TEST(DeltaLex, PreservesBSequence)
{
    for (const auto& c : shifted_up_to(4)) {
        const auto I = stanley_reisner(c);
        if (I.is_zero()) continue;
        const auto d = delta_lex(I);
        ASSERT_EQ(b_sequence(d, d.max_var(), 6), b_sequence(I, I.max_var(), 6)) << c;
    }
}

TEST(DeltaGeneric, UsliFixedUnderEveryOrder)
{
    const std::vector<TermOrder> orders = {TermOrder::lex(), TermOrder::revlex(), index_sum_lex(), index_sum_revlex()};
    for (const auto& k : {KSequence::of({0, 2}), KSequence::of({1, 1}), KSequence::of({0, 1, 1}), KSequence::of({0, 3, 1})})
        for (const auto& ord : orders) {
            const auto u = usli_from_k(k).generators;
            ASSERT_TRUE(compare_delta(u, ord).order == 0) << u << " " << ord.name();
        }
}

TEST(DeltaGeneric, SquarefreeStronglyStableFixedUnderRevlex)
{
    auto rng = testkit::rng_for(62);
    for (int k = 0; k < 40; ++k) {
        const auto I = testkit::random_sqss_ideal(rng, 2 + k % 4, 3, 3);
        ASSERT_EQ(delta_generic(I, TermOrder::revlex()), I) << I;
    }
}

TEST(IterateLex, ThreePoints)
{
    const auto orbit = iterate_lex(stanley_reisner(kThreePoints), 10, 3);
    ASSERT_TRUE(orbit.certified);
    EXPECT_FALSE(orbit.fixed_point);
    ASSERT_TRUE(orbit.stabilized_prefix.has_value());
    EXPECT_EQ(*orbit.stabilized_prefix, ideal({"x1*x2", "x1*x3", "x1*x4", "x1*x5*x6"}));
    EXPECT_EQ(orbit.iterates.front(), ideal({"x1*x2", "x1*x3", "x1*x4", "x2*x3*x4"}));
    for (const auto& s : orbit.steps)
        if (s.decided_in_degree) EXPECT_TRUE(s.order > 0);
    const auto n = orbit.iterates.size();
    ASSERT_GE(n, 2u);
    EXPECT_EQ(orbit.iterates[n - 1].truncated(3), orbit.iterates[n - 2].truncated(3));
}

TEST(IterateLex, UsliIsAFixedPoint)
{
    const auto u = ideal({"x1*x2", "x1*x3", "x1*x4", "x1*x5*x6"});
    const auto orbit = iterate_lex(u, 5, 3);
    EXPECT_TRUE(orbit.fixed_point);
    EXPECT_TRUE(orbit.certified);
    ASSERT_EQ(orbit.iterates.size(), 1u);
    EXPECT_EQ(orbit.iterates[0], u);
    EXPECT_THROW(iterate_lex(ideal({"x2*x3"}), 3, 3), InvalidInput);
}

TEST(IterateLex, OrbitsReachTheLimit)
{
    for (const auto& c : shifted_up_to(4)) {
        const auto I = stanley_reisner(c);
        if (I.is_zero()) continue;
        const auto orbit = iterate_lex(I, 20, 3);
        ASSERT_TRUE(orbit.certified) << c;
        ASSERT_EQ(*orbit.stabilized_prefix, limit_usli(I, I.max_var(), 3).generators) << c;
        ASSERT_EQ(orbit.fixed_point, is_usli(I)) << c;
    }
}

TEST(LimitUsli, Examples)
{
    const auto I = stanley_reisner(kThreePoints);
    EXPECT_EQ(limit_usli(I, 3, 3).generators, ideal({"x1*x2", "x1*x3", "x1*x4", "x1*x5*x6"}));
    EXPECT_EQ(limit_usli(ideal({"x1*x2", "x1*x3"}), 3, 4).generators, ideal({"x1*x2", "x1*x3"}));
    // Same h-vector, same limit.
    EXPECT_EQ(limit_usli(stanley_reisner(cone(kThreePoints)), 4, 5).generators, limit_usli(I, 3, 5).generators);
}

TEST(PardueWitness, Examples)
{
    EXPECT_EQ(pardue_witness(kThreePoints).monomial, Monomial::parse("x2^3"));
    EXPECT_FALSE(pardue_witness(kThreePoints).degenerate);
    // One facet of codimension 1 and one of codimension 2.
    EXPECT_EQ(pardue_witness(complex(3, {{1, 2}, {3}})).monomial, Monomial::parse("x1*x2"));
    EXPECT_TRUE(pardue_witness(SimplicialComplex::simplex(3)).degenerate);
    EXPECT_THROW(pardue_witness(SimplicialComplex::void_complex(3)), InvalidInput);
    const auto G = gin(stanley_reisner(kThreePoints), 3, TermOrder::lex());
    const auto& gens = G.generators();
    EXPECT_NE(std::find(gens.begin(), gens.end(), pardue_witness(kThreePoints).monomial), gens.end());
}

TEST(PardueWitness, MinimalGeneratorOfLexGin)
{
    for (const auto& c : shifted_up_to(4)) {
        const auto w = pardue_witness(c);
        if (w.degenerate) continue;
        const auto I = stanley_reisner(c);
        const auto G = gin(I, c.n(), TermOrder::lex());
        const auto& gens = G.generators();
        ASSERT_NE(std::find(gens.begin(), gens.end(), w.monomial), gens.end()) << c << " " << w.monomial;
        ASSERT_EQ(w.monomial.degree(), facet_count(c));
        ASSERT_GE(regularity(G), facet_count(c)) << c;
    }
}

TEST(Axioms, HoldOnSmallCorpus)
{
    const auto rep = verify_axioms(4, 40, 63);
    for (const auto& f : rep.failures) ADD_FAILURE() << f.property << " " << f.complex << " " << f.detail;
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.nested_pairs, 40u);
    for (int p = 0; p < 4; ++p) EXPECT_EQ(rep.passed[p], rep.checked[p]);
    EXPECT_GT(rep.checked[0], 40u);
}

TEST(Axioms, Examples)
{
    EXPECT_EQ(delta_rl(cone(kThreePoints)), cone(delta_rl(kThreePoints)));
    const auto boundary = complex(3, {{1, 2}, {1, 3}, {2, 3}});
    EXPECT_EQ(nonnegative_betti_sum(reduced_betti(boundary)), 1);
    EXPECT_EQ(nonnegative_betti_sum(shifted_betti(delta_rl(boundary))), 1);
}

TEST(Axioms, SingleComplexCorpus)
{
    std::vector<SimplicialComplex> corpus = {kThreePoints};
    const auto rep = verify_axioms_on(corpus, 0, 1);
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.complexes, 1u);
}

TEST(ConjectureProbe, Reports)
{
    const auto lex = probe_conjecture(TermOrder::lex());
    ASSERT_TRUE(lex.degree.has_value());
    EXPECT_EQ(*lex.degree, 2u);
    ASSERT_TRUE(lex.i0.has_value());
    ASSERT_TRUE(lex.moved.has_value());
    EXPECT_TRUE(*lex.moved);
    const auto rl = probe_conjecture(TermOrder::revlex());
    EXPECT_FALSE(rl.degree.has_value());
    EXPECT_FALSE(rl.note.empty());
    const auto isl = probe_conjecture(index_sum_lex());
    ASSERT_TRUE(isl.i0.has_value());
    EXPECT_EQ(*isl.i0, 1u);
}

TEST(UsOrderIdeal, BoundedCheck)
{
    EXPECT_TRUE(is_us_order_ideal_bounded(ideal({"x1*x2", "x1*x3"}), TermOrder::lex(), 5, 2, 3));
    EXPECT_FALSE(is_us_order_ideal_bounded(ideal({"x1*x2", "x2*x3"}), TermOrder::lex(), 5, 2, 3));
    for (const auto& k : {KSequence::of({0, 2}), KSequence::of({0, 3, 1}), KSequence::of({1, 0, 2})}) {
        const auto u = usli_from_k(k).generators;
        ASSERT_TRUE(is_us_order_ideal_bounded(u, TermOrder::lex(), u.max_var() + 2, 1, regularity(u))) << u;
    }
}
