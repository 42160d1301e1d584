#include <jwcat/complex.hpp>
#include <jwcat/functor_p.hpp>
#include <jwcat/k0.hpp>
#include <jwcat/reference.hpp>
#include <jwcat/zigzag.hpp>

#include <gtest/gtest.h>

using namespace jwcat;

namespace
{

// Class of a module straight from its basis degrees and vertices.
std::array<LaurentPoly, 2> count(const GradedModule &m)
{
    std::array<LaurentPoly, 2> out;
    for (std::size_t i = 0; i < m.dim(); ++i) out[m.vertex(i)] += LaurentPoly::monomial(m.degree(i));
    return out;
}

KClass exact(const std::array<LaurentPoly, 2> &c, int order = TruncatedSeries::kExact)
{
    return KClass{TruncatedSeries(c[0], order), TruncatedSeries(c[1], order), false};
}

ComplexPtr point(int vertex, int r = 0)
{
    const AlgebraPtr &B = zigzag().B;
    return make_complex(Complex::from_summand(B, projective_summand(B, vertex, r), 0));
}

// q - q^3 + q^5 - ... through the order, written out.
LaurentPoly alternating_odd(int order)
{
    LaurentPoly p;
    for (int e = 1, sign = 1; e <= order; e += 2, sign = -sign) p.add_term(e, sign);
    return p;
}

} // namespace

TEST(Grothendieck, ModuleClasses)
{
    const ZigZag &z = zigzag();
    const LaurentPoly q = LaurentPoly::monomial(1);
    EXPECT_TRUE(class_equal(class_of_module(*z.P2), exact({q, LaurentPoly(1) + LaurentPoly::monomial(2)})));
    EXPECT_TRUE(class_equal(class_of_module(*z.P1), exact({LaurentPoly(1), q})));
    EXPECT_TRUE(class_equal(class_of_module(*z.L1), exact({LaurentPoly(1), {}})));
    for (const ModulePtr &m : {z.P1, z.P2, z.L1, z.L2, z.I2}) {
        EXPECT_TRUE(class_equal(class_of_module(*m), exact(count(*m))));
    }
}

TEST(Grothendieck, ShiftMultipliesByPowerOfQ)
{
    const ZigZag &z = zigzag();
    for (const ModulePtr &m : {z.P1, z.P2, z.I2}) {
        for (int r = -3; r <= 3; ++r) {
            const GradedModule s = shift_internal(*m, r);
            const KClass direct = exact(count(s));
            EXPECT_TRUE(class_equal(class_of_module(s), direct)) << r;
            // Shifting moves every degree the same way, so the class is q^{±r} times the old one.
            const int lift = s.degree(0) - m->degree(0);
            EXPECT_TRUE(class_equal(class_of_module(*m).shifted(lift), direct)) << r;
        }
    }
}

TEST(Grothendieck, EulerOfSmallComplexes)
{
    const ZigZag &z = zigzag();
    EXPECT_TRUE(class_equal(euler_class(Complex::zero(z.B), 10), KClass::zero()));
    EXPECT_TRUE(class_equal(euler_class(*l1_resolution(), 10), exact(count(*z.L1), 10)));
    // Homological shift negates, internal shift multiplies.
    EXPECT_TRUE(class_equal(euler_class(shift(*l1_resolution(), 0, 1), 10), -exact(count(*z.L1), 10)));
    EXPECT_TRUE(class_equal(euler_class(*dual_of_p1_model(), 10),
                            exact(count(*projective_module(z.B, V2, 0)), 10) -
                                exact(count(*projective_module(z.B, V1, -1)), 10)));
}

// Brute-force partial sums of (-1)^k [P(2)<2k+1>].
TEST(Grothendieck, EulerOfPonP1)
{
    const AlgebraPtr &B = zigzag().B;
    for (int order : {5, 9, 33}) {
        const PImage img = P_on_object(point(V1), order + 2);
        std::array<LaurentPoly, 2> sum;
        for (int k = 0; 2 * k + 1 <= order; ++k) {
            const auto c = count(*projective_module(B, V2, 2 * k + 1));
            for (int v : {0, 1}) sum[v] += k % 2 == 0 ? c[v] : -c[v];
        }
        const KClass got = euler_class(*img.output(), order);
        EXPECT_FALSE(got.inverted);
        EXPECT_TRUE(class_equal(got, exact(sum, order))) << got.to_string();

        const auto proj = to_projective_basis(got);
        EXPECT_TRUE(proj[0].is_zero_in_window());
        EXPECT_EQ(proj[1].truncated(order).known_part(), alternating_odd(order));
    }
}

TEST(Grothendieck, ProjectiveBasisRoundTrip)
{
    const ZigZag &z = zigzag();
    for (const ModulePtr &m : {z.P1, z.P2, z.L1, z.L2, z.I2}) {
        const KClass k = class_of_module(*m).truncated(12);
        EXPECT_TRUE(class_equal(from_projective_basis(to_projective_basis(k)), k));
    }
    const auto p1 = to_projective_basis(class_of_module(*z.P1));
    EXPECT_EQ(p1[0].truncated(6).known_part(), LaurentPoly(1));
    EXPECT_TRUE(p1[1].truncated(6).is_zero_in_window());
}

TEST(JonesWenzl, ReferenceColumns)
{
    const SeriesMatrix p = jones_wenzl_reference(7);
    // Column of P(1): (0, q - q^3 + q^5 - q^7); column of P(2): (0, 1).
    EXPECT_TRUE(p[0][0].is_zero_in_window());
    EXPECT_EQ(p[1][0].known_part(), alternating_odd(7));
    EXPECT_TRUE(p[0][1].is_zero_in_window());
    EXPECT_EQ(p[1][1].known_part(), LaurentPoly(1));
}

TEST(JonesWenzl, Idempotent)
{
    const int order = 33;
    const SeriesMatrix p = jones_wenzl_reference(order);
    SeriesMatrix sq;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            sq[i][j] = series_add(series_mul(p[i][0], p[0][j]), series_mul(p[i][1], p[1][j]));
        }
    }
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            EXPECT_EQ(sq[i][j].truncated(order).known_part(), p[i][j].truncated(order).known_part()) << i << j;
        }
    }
    EXPECT_TRUE(series_matrix_equal(series_matmul(p, p), p));
}

TEST(JonesWenzl, AgreesWithEulerClassOfP)
{
    const int order = 15;
    const ZigZag &z = zigzag();
    const SeriesMatrix p = jones_wenzl_reference(order);
    for (int v : {V1, V2}) {
        const KClass before = class_of_module(*z.projective_of(v)).truncated(order);
        const KClass after = euler_class(*P_on_object(point(v), order + 2).output(), order);
        EXPECT_TRUE(class_equal(apply_projective_matrix(p, before), after)) << v;
    }
}

TEST(Completion, MovesExactClassesOnly)
{
    const ZigZag &z = zigzag();
    const KClass k = class_of_module(*z.P2);
    const KClass moved = in_completion(k, true);
    EXPECT_TRUE(moved.inverted);
    EXPECT_TRUE(class_equal(in_completion(moved, false), k));
    EXPECT_THROW(in_completion(k.truncated(5), true), RegimeError);
    EXPECT_FALSE(class_equal(moved, k));
}
