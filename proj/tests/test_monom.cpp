#include <gtest/gtest.h>

#include "support.hpp"

using namespace algshift;
using testkit::complex;
using testkit::ideal;

namespace {

Monomial M(const char* s) { return Monomial::parse(s); }

const auto kThreePointsIdeal = ideal({"x1*x2", "x1*x3", "x2*x3"});

/// x1 exponent first (larger wins), then revlex.
TermOrder x1_then_revlex()
{
    return TermOrder::plugin("x1-then-revlex", [](const Monomial& a, const Monomial& b) {
        if (a.exponent(1) != b.exponent(1)) return a.exponent(1) <=> b.exponent(1);
        return revlex_within_degree(a, b);
    });
}

/// Largest element of the symmetric difference, written out with explicit degree handling.
int compare_oracle(const MonomialIdeal& a, const MonomialIdeal& b, const TermOrder& ord)
{
    std::vector<std::pair<Monomial, int>> diff;
    for (const auto& m : a.generators())
        if (std::count(b.generators().begin(), b.generators().end(), m) == 0) diff.push_back({m, 1});
    for (const auto& m : b.generators())
        if (std::count(a.generators().begin(), a.generators().end(), m) == 0) diff.push_back({m, -1});
    if (diff.empty()) return 0;
    auto top = diff.front();
    for (const auto& e : diff) {
        const auto& m = e.first;
        const bool larger = m.degree() < top.first.degree() ||
                            (m.degree() == top.first.degree() && ord.within_degree(m, top.first) > 0);
        if (larger) top = e;
    }
    return top.second;
}

} // namespace

TEST(Monomial, ParsePrintRoundTrip)
{
    EXPECT_EQ(M("x1*x4^2").to_string(), "x1*x4^2");
    EXPECT_EQ(M("x4^2*x1"), M("x1*x4^2"));
    EXPECT_EQ(M("x2*x2"), M("x2^2"));
    EXPECT_EQ(Monomial{}.to_string(), "1");
    EXPECT_EQ(M("x1*x4^2").degree(), 3u);
    for (const char* bad : {"y1", "x0", "x1*", "x1^0", "x", "x1^-2", "x1 x2"}) EXPECT_THROW(M(bad), InvalidInput) << bad;
    auto rng = testkit::rng_for(21);
    for (int k = 0; k < 300; ++k) {
        const auto I = testkit::random_ideal(rng, 7, 4, 5);
        for (const auto& m : I.generators()) ASSERT_EQ(M(m.to_string().c_str()), m);
    }
}

TEST(TermOrder, Examples)
{
    EXPECT_TRUE(TermOrder::lex().compare(M("x1*x3"), M("x2^2")) > 0);
    EXPECT_TRUE(TermOrder::revlex().compare(M("x2^2"), M("x1*x3")) > 0);
    EXPECT_TRUE(TermOrder::lex().compare(M("x1"), M("x1*x2*x3")) > 0);
    EXPECT_TRUE(TermOrder::lex(DegreePolicy::Groebner).compare(M("x1"), M("x1*x2*x3")) < 0);
    EXPECT_TRUE(compare(TermOrder::revlex(), M("x1"), M("x2")) > 0);
}

TEST(TermOrder, TotalOnEachDegree)
{
    for (const auto& ord : {TermOrder::lex(), TermOrder::revlex(), index_sum_lex(), index_sum_revlex()})
        for (int d = 1; d <= 3; ++d) {
            const auto mons = testkit::degree_monomials(4, d);
            for (const auto& a : mons)
                for (const auto& b : mons) {
                    const auto ab = ord.compare(a, b), ba = ord.compare(b, a);
                    ASSERT_EQ(ab == 0, a == b);
                    ASSERT_EQ(ab > 0, ba < 0);
                    for (const auto& c : mons)
                        if (ab > 0 && ord.compare(b, c) > 0) ASSERT_TRUE(ord.compare(a, c) > 0);
                }
            for (Var v = 1; v < 4; ++v) ASSERT_TRUE(ord.compare(Monomial::variable(v), Monomial::variable(v + 1)) > 0);
        }
}

TEST(TermOrder, ByName)
{
    for (const auto& name : order_names()) EXPECT_EQ(order_by_name(name).name(), name);
    EXPECT_EQ(order_by_name("rl").kind(), WithinDegree::Revlex);
    EXPECT_THROW(order_by_name("grevlex"), InvalidInput);
}

TEST(TermOrder, PhiCompatibility)
{
    for (const auto& ord : {TermOrder::lex(), TermOrder::revlex(), index_sum_lex(), index_sum_revlex()})
        EXPECT_TRUE(is_phi_compatible_on(ord, 5, 4)) << ord.name();
    // x1^2 x3 > x1 x2^2 there, but phi gives x1 x2 x5 < x1 x3 x4.
    EXPECT_FALSE(is_phi_compatible_on(x1_then_revlex(), 5, 3));
}

TEST(TermOrder, IndexSumOrdersDisagreeWithRevlexInDegreeTwo)
{
    // x1 x4 has index sum 5 against 6 for x3^2, while revlex looks at x4 first.
    EXPECT_TRUE(TermOrder::revlex().within_degree(M("x3^2"), M("x1*x4")) > 0);
    EXPECT_TRUE(index_sum_lex().within_degree(M("x3^2"), M("x1*x4")) < 0);
    EXPECT_TRUE(index_sum_revlex().within_degree(M("x3^2"), M("x1*x4")) < 0);
}

TEST(Phi, Examples)
{
    EXPECT_EQ(phi(M("x1^3")), M("x1*x2*x3"));
    EXPECT_EQ(phi_inv(M("x1*x2")), M("x1^2"));
    EXPECT_EQ(phi(M("x1*x2")), M("x1*x3"));
    EXPECT_THROW(phi_inv(M("x1^2")), InvalidInput);
}

TEST(Phi, RoundTripAndOrderPreservation)
{
    for (int n = 1; n <= 6; ++n)
        for (int d = 1; d <= 4; ++d) {
            const auto mons = testkit::degree_monomials(n, d);
            for (const auto& m : mons) {
                const auto p = phi(m);
                ASSERT_TRUE(p.is_squarefree());
                ASSERT_EQ(p.degree(), m.degree());
                ASSERT_EQ(phi_inv(p), m);
                ASSERT_EQ(phi(phi_inv(p)), p);
            }
            for (const auto& a : mons)
                for (const auto& b : mons) {
                    ASSERT_EQ(lex_within_degree(a, b), lex_within_degree(phi(a), phi(b)));
                    ASSERT_EQ(revlex_within_degree(a, b), revlex_within_degree(phi(a), phi(b)));
                }
        }
}

TEST(MonomialIdeal, Minimalize)
{
    EXPECT_EQ(ideal({"x1*x2", "x1*x2*x3", "x2*x3"}).to_strings(), (std::vector<std::string>{"x1*x2", "x2*x3"}));
    EXPECT_TRUE(MonomialIdeal::minimalize({}).is_zero());
    EXPECT_EQ(ideal({"x1", "x1^2"}).to_strings(), (std::vector<std::string>{"x1"}));
    EXPECT_THROW(MonomialIdeal::minimalize({Monomial{}}), InvalidInput);
}

TEST(MonomialIdeal, GeneratorsSortedByDegreeThenLex)
{
    auto rng = testkit::rng_for(22);
    const auto ord = TermOrder::lex();
    for (int k = 0; k < 300; ++k) {
        const auto I = testkit::random_ideal(rng, 6, 8, 4);
        const auto& g = I.generators();
        for (std::size_t i = 0; i + 1 < g.size(); ++i) ASSERT_TRUE(ord.compare(g[i], g[i + 1]) > 0) << I;
        for (const auto& a : g)
            for (const auto& b : g)
                if (!(a == b)) ASSERT_FALSE(a.divides(b));
    }
}

TEST(MonomialIdeal, StrongStabilityExamples)
{
    EXPECT_TRUE(is_strongly_stable(ideal({"x1^2", "x1*x2", "x2^2"})));
    EXPECT_FALSE(is_strongly_stable(ideal({"x2^2"})));
    EXPECT_TRUE(is_sq_strongly_stable(kThreePointsIdeal));
    EXPECT_FALSE(is_sq_strongly_stable(ideal({"x2*x3"})));
    EXPECT_THROW(is_sq_strongly_stable(ideal({"x1^2"})), InvalidInput);
    EXPECT_FALSE(is_squarefree_strongly_stable(ideal({"x1^2"})));
}

TEST(MonomialIdeal, StrongStabilityMatchesDefinitionOnAllMonomials)
{
    // The definition quantifies over every monomial of I; check degrees up to reg + 1.
    auto rng = testkit::rng_for(23);
    for (int k = 0; k < 300; ++k) {
        const int n = 4;
        auto I = testkit::random_ideal(rng, n, 4, 3);
        if (k % 3 == 0) I = testkit::squarefree_borel_closure(testkit::random_squarefree_ideal(rng, n, 3, 3));
        bool stable = true, sq_stable = true;
        for (int d = 1; d <= static_cast<int>(regularity(I)) + 1; ++d)
            for (const auto& m : testkit::degree_monomials(n, d)) {
                if (!I.contains(m)) continue;
                for (Var j = 2; j <= n; ++j) {
                    if (m.exponent(j) == 0) continue;
                    for (Var i = 1; i < j; ++i) {
                        const auto e = m / Monomial::variable(j) * Monomial::variable(i);
                        if (!I.contains(e)) {
                            stable = false;
                            if (m.is_squarefree() && m.exponent(i) == 0) sq_stable = false;
                        }
                    }
                }
            }
        ASSERT_EQ(is_strongly_stable(I), stable) << I;
        if (I.is_squarefree()) ASSERT_EQ(is_sq_strongly_stable(I), sq_stable) << I;
    }
}

TEST(IdealCompare, Examples)
{
    const auto lex = TermOrder::lex();
    EXPECT_TRUE(ideal_compare(ideal({"x1^2", "x1*x2", "x1*x3", "x2^3"}), ideal({"x1^2", "x1*x2", "x2^2"}), lex) > 0);
    EXPECT_TRUE(ideal_compare(kThreePointsIdeal, kThreePointsIdeal, lex) == 0);
    EXPECT_TRUE(ideal_compare(ideal({"x1"}), ideal({"x2"}), lex) > 0);
    // The Groebner policy is ignored: comparison always ranks lower degree higher.
    EXPECT_TRUE(ideal_compare(ideal({"x2"}), ideal({"x1*x2"}), TermOrder::lex(DegreePolicy::Groebner)) > 0);
}

TEST(IdealCompare, MatchesOracleAndIsAntisymmetric)
{
    auto rng = testkit::rng_for(24);
    for (const auto& ord : {TermOrder::lex(), TermOrder::revlex(), index_sum_lex()})
        for (int k = 0; k < 300; ++k) {
            const auto a = testkit::random_ideal(rng, 4, 4, 3);
            const auto b = k % 5 == 0 ? a : testkit::random_ideal(rng, 4, 4, 3);
            const auto ab = ideal_compare(a, b, ord);
            const int expect = compare_oracle(a, b, ord);
            ASSERT_EQ(ab > 0 ? 1 : (ab < 0 ? -1 : 0), expect) << a << " vs " << b;
            ASSERT_EQ(ab == 0, a == b);
            ASSERT_EQ(ab > 0, ideal_compare(b, a, ord) < 0);
        }
}

TEST(Regularity, Examples)
{
    EXPECT_EQ(regularity(kThreePointsIdeal), 2u);
    EXPECT_EQ(regularity(ideal({"x1*x2", "x1*x3", "x1*x4*x5*x6*x7"})), 5u);
    EXPECT_EQ(regularity(ideal({"x1"})), 1u);
    EXPECT_THROW(regularity(MonomialIdeal{}), InvalidInput);
}

TEST(DimDegree, Examples)
{
    EXPECT_EQ(dim_degree(kThreePointsIdeal, 3, 2), 3);
    EXPECT_EQ(dim_degree(kThreePointsIdeal, 3, 3), 7);
    EXPECT_EQ(dim_degree(MonomialIdeal{}, 4, 3), 0);
    EXPECT_THROW(dim_degree(kThreePointsIdeal, 2, 2), InvalidInput);
}

TEST(DimDegree, MatchesBruteForceCount)
{
    auto rng = testkit::rng_for(25);
    for (int k = 0; k < 120; ++k) {
        const int n = 1 + k % 5;
        // Large generator counts exercise the Hilbert-series path past the inclusion-exclusion cap.
        const auto I = testkit::random_ideal(rng, n, k % 4 == 0 ? 40 : 6, 4);
        for (int d = 0; d <= 6; ++d) ASSERT_EQ(dim_degree(I, n, d), testkit::count_in_degree(I, n, d)) << I << " d=" << d;
    }
}

TEST(HilbertNumerator, Examples)
{
    EXPECT_EQ(hilbert_numerator(kThreePointsIdeal, 3, 4), (IntPoly{0, 0, 3, -2, 0}));
    EXPECT_EQ(hilbert_numerator(MonomialIdeal{}, 3, 3), (IntPoly{0, 0, 0, 0}));
    EXPECT_EQ(hilbert_numerator(ideal({"x1"}), 1, 3), (IntPoly{0, 1, 0, 0}));
}

TEST(HilbertNumerator, MatchesTruncatedSeriesTimesOneMinusXPower)
{
    auto rng = testkit::rng_for(26);
    for (int k = 0; k < 80; ++k) {
        const int n = 1 + k % 4;
        const auto I = testkit::random_ideal(rng, n, 5, 3);
        const int D = 6;
        std::vector<std::int64_t> series(D + 1);
        for (int d = 0; d <= D; ++d) series[d] = testkit::count_in_degree(I, n, d);
        std::vector<std::int64_t> prod(D + 1, 0);
        for (int i = 0; i <= D; ++i)
            for (int j = 0; j <= n && i + j <= D; ++j) prod[i + j] += series[i] * binomial(n, j) * (j % 2 ? -1 : 1);
        const auto num = hilbert_numerator(I, n, D);
        for (int d = 1; d <= D; ++d) ASSERT_EQ(num[d], prod[d]) << I << " d=" << d;
    }
}

TEST(StanleyReisner, Examples)
{
    EXPECT_EQ(stanley_reisner(complex(3, {{1}, {2}, {3}})), kThreePointsIdeal);
    EXPECT_TRUE(stanley_reisner(SimplicialComplex::simplex(4)).is_zero());
    EXPECT_EQ(complex_of(ideal({"x1*x2", "x1*x3", "x1*x4", "x2*x3*x4"}), 4), complex(4, {{2, 3}, {2, 4}, {3, 4}, {1}}));
    EXPECT_THROW(complex_of(ideal({"x1^2"}), 2), InvalidInput);
    EXPECT_THROW(stanley_reisner(SimplicialComplex::void_complex(3)), InvalidInput);
}

TEST(StanleyReisner, GeneratorsAreMinimalNonfaces)
{
    auto rng = testkit::rng_for(27);
    for (int k = 0; k < 300; ++k) {
        const auto n = static_cast<Vertex>(1 + k % 6);
        const auto c = random_complex(n, rng());
        if (c.is_void()) continue;
        const auto faces = testkit::face_masks(c);
        std::vector<Monomial> minimal_nonfaces;
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
            if (faces.count(s)) continue;
            bool minimal = true;
            for (std::uint64_t b = s; b; b &= b - 1)
                if (!faces.count(s & ~(b & (~b + 1)))) minimal = false;
            if (!minimal) continue;
            std::vector<Var> vs;
            for (Var v = 1; v <= n; ++v)
                if (s >> (v - 1) & 1) vs.push_back(v);
            minimal_nonfaces.push_back(Monomial::squarefree(vs));
        }
        const auto I = stanley_reisner(c);
        ASSERT_EQ(I, MonomialIdeal::minimalize(minimal_nonfaces)) << c;
        ASSERT_EQ(I.size(), minimal_nonfaces.size());
        ASSERT_EQ(complex_of(I, n), c);
    }
}

TEST(StanleyReisner, ShiftedIffSquarefreeStronglyStable)
{
    for (Vertex n = 1; n <= 5; ++n)
        for (const auto& c : all_shifted(n))
            if (!c.is_void()) ASSERT_TRUE(is_squarefree_strongly_stable(stanley_reisner(c))) << c;
    auto rng = testkit::rng_for(28);
    for (int k = 0; k < 400; ++k) {
        const auto c = random_complex(static_cast<Vertex>(1 + k % 6), rng());
        if (c.is_void()) continue;
        ASSERT_EQ(is_shifted(c), is_squarefree_strongly_stable(stanley_reisner(c))) << c;
    }
}

TEST(IdealOperations, SumIntersectionQuotient)
{
    const auto a = ideal({"x1*x2", "x3"});
    const auto b = ideal({"x2*x3", "x1^2"});
    EXPECT_EQ(ideal_sum(a, b), ideal({"x1*x2", "x3", "x1^2"}));
    auto rng = testkit::rng_for(29);
    for (int k = 0; k < 100; ++k) {
        const auto p = testkit::random_ideal(rng, 3, 3, 3);
        const auto q = testkit::random_ideal(rng, 3, 3, 3);
        const auto meet = ideal_intersection(p, q);
        const auto m = Monomial::variable(1 + k % 3);
        if (p.contains(m)) {
            EXPECT_THROW(ideal_quotient(p, m), InvalidInput);
            continue;
        }
        const auto quot = ideal_quotient(p, m);
        for (int d = 0; d <= 5; ++d)
            for (const auto& u : testkit::degree_monomials(3, d)) {
                ASSERT_EQ(meet.contains(u), p.contains(u) && q.contains(u));
                ASSERT_EQ(ideal_sum(p, q).contains(u), p.contains(u) || q.contains(u));
                ASSERT_EQ(quot.contains(u), p.contains(u * m));
            }
    }
}
