#include <jwcat/functor_ck.hpp>
#include <jwcat/functor_p.hpp>
#include <jwcat/homotopy.hpp>
#include <jwcat/koszul.hpp>
#include <jwcat/proj_homs.hpp>
#include <jwcat/reference.hpp>
#include <jwcat/zigzag.hpp>

#include <gtest/gtest.h>

using namespace jwcat;

namespace
{

constexpr int kWindow = 6;

ComplexPtr point(int vertex, int r = 0)
{
    const AlgebraPtr &B = zigzag().B;
    return make_complex(Complex::from_summand(B, projective_summand(B, vertex, r), 0));
}

ChainMap mult(const ComplexPtr &s, const ComplexPtr &t, std::size_t element)
{
    const ZigZag &z = zigzag();
    const ProjTag a = *s->term(0).summand(0).tag, b = *t->term(0).summand(0).tag;
    ChainMap f{s, t, {{0, left_mult_matrix(z.B, a, b, AlgebraElement(z.B, element))}}};
    f.validate();
    return f;
}

std::vector<ProjTag> tags(const Term &t)
{
    std::vector<ProjTag> out;
    for (std::size_t k = 0; k < t.size(); ++k) out.push_back(*t.summand(k).tag);
    return out;
}

} // namespace

TEST(ProjectorP, OnP2IsP2)
{
    const PImage img = P_on_object(point(V2), kWindow);
    const Complex &x = *img.output();
    EXPECT_EQ(x.lo(), 0);
    EXPECT_EQ(x.hi(), 0);
    EXPECT_EQ(tags(x.term(0)), (std::vector<ProjTag>{{V2, 0}}));
}

// P(2)<2k+1> in degree -k with every map c.
TEST(ProjectorP, OnP1IsPeriodic)
{
    const PImage img = P_on_object(point(V1), kWindow);
    const Complex &x = *img.output();
    ASSERT_LE(x.determined_lo(), -(kWindow - 1));
    const ZigZag &z = zigzag();
    for (int k = 0; k < kWindow; ++k) {
        EXPECT_EQ(tags(x.term(-k)), (std::vector<ProjTag>{{V2, 2 * k + 1}})) << k;
        if (k > 0) {
            const Matrix c = left_mult_matrix(z.B, {V2, 2 * k + 1}, {V2, 2 * k - 1}, AlgebraElement(z.B, z.c));
            EXPECT_EQ(x.d(-k), c) << k;
        }
    }
    EXPECT_EQ(x.hi(), 0);
}

TEST(ProjectorP, OnZeroAndIdentity)
{
    const AlgebraPtr &B = zigzag().B;
    EXPECT_TRUE(P_on_object(make_complex(Complex::zero(B)), kWindow).output()->is_zero());
    const ComplexPtr p1 = point(V1);
    const PImage img = P_on_object(p1, kWindow);
    const ChainMap id = P_on_map(identity_map(p1), img, img);
    const HomotopyResult h = chain_maps_homotopic(id, identity_map(img.output()), kWindow);
    EXPECT_EQ(h.verdict, Verdict::Pass);
}

TEST(ProjectorP, PreservesComposition)
{
    const ZigZag &z = zigzag();
    const ComplexPtr s = point(V2, 2), m = point(V1, 1), t = point(V2, 0);
    const ChainMap b = mult(s, m, z.b), a = mult(m, t, z.a);
    const PImage ps = P_on_object(s, kWindow), pm = P_on_object(m, kWindow), pt = P_on_object(t, kWindow);
    const ChainMap lhs = P_on_map(compose(a, b), ps, pt);
    const ChainMap rhs = compose(P_on_map(a, pm, pt), P_on_map(b, ps, pm));
    EXPECT_EQ(chain_maps_homotopic(lhs, rhs, kWindow).verdict, Verdict::Pass);
    // P kills nothing on P(2): the image of c is not null-homotopic.
    EXPECT_EQ(chain_maps_homotopic(lhs, ChainMap{lhs.source, lhs.target, {}}, kWindow).verdict, Verdict::Fail);
}

TEST(ConvolutionCK, ColumnTermsOnProjectives)
{
    // P(1) (x) theta: paths e(1)->e(2) are a (degree 1); P(2): e(2), c.
    EXPECT_EQ(tags(ck_term(point(V1)->term(0), 1)), (std::vector<ProjTag>{{V2, -1}}));
    const std::vector<ProjTag> p2 = tags(ck_term(point(V2)->term(0), 1));
    EXPECT_EQ(p2.size(), 2u);
}

TEST(ConvolutionCK, KillsP2)
{
    const CKImage img = CK_on_object(point(V2), kWindow);
    img.bicomplex.validate();
    const Complex &x = *img.output();
    for (int i = x.determined_lo(); i <= std::min(x.determined_hi(), kWindow - 1); ++i) {
        EXPECT_EQ(x.term(i).dim(), 0u) << i;
    }
}

TEST(ConvolutionCK, OnP1MatchesModel)
{
    const CKImage img = CK_on_object(point(V1), kWindow);
    const ComplexPtr model = ck_of_p1_model(kWindow);
    EXPECT_EQ(iso_in_homotopy_category(img.output(), model, kWindow).verdict, Verdict::Pass);
    EXPECT_EQ(tags(img.output()->term(0)), (std::vector<ProjTag>{{V1, 0}}));
    EXPECT_EQ(tags(img.output()->term(1)), (std::vector<ProjTag>{{V2, -1}}));
}

TEST(ConvolutionCK, OnZero)
{
    EXPECT_TRUE(CK_on_object(make_complex(Complex::zero(zigzag().B)), kWindow).output()->is_zero());
}

TEST(ConvolutionCK, PreservesComposition)
{
    const ZigZag &z = zigzag();
    const ComplexPtr s = point(V2, 2), m = point(V1, 1), t = point(V2, 0);
    const ChainMap b = mult(s, m, z.b), a = mult(m, t, z.a);
    const CKImage cs = CK_on_object(s, kWindow), cm = CK_on_object(m, kWindow), ct = CK_on_object(t, kWindow);
    const ChainMap lhs = CK_on_map_raw(compose(a, b), cs, ct);
    const ChainMap rhs = compose(CK_on_map_raw(a, cm, ct), CK_on_map_raw(b, cs, cm));
    for (int i = cs.raw->lo(); i <= cs.raw->hi(); ++i) EXPECT_EQ(lhs.at(i), rhs.at(i)) << i;
}

TEST(Theorem, ObjectsAtSmallWindow)
{
    for (int v : {V1, V2}) {
        for (int r : {-1, 0, 2}) {
            const ComplexPtr x = point(v, r);
            const PImage p = P_on_object(x, kWindow + 2);
            const ComplexPtr dp = koszul_D_on_object(p.output());
            const CKImage ckd = CK_on_object(koszul_D_on_object(x), kWindow + 2);
            const IsoResult res = iso_in_homotopy_category(dp, ckd.raw, kWindow);
            EXPECT_EQ(res.verdict, Verdict::Pass) << "vertex " << v << " shift " << r << ": " << res.detail;
        }
    }
}

TEST(Theorem, DPofP2IsShiftedSimpleResolution)
{
    const ComplexPtr dp = koszul_D_on_object(P_on_object(point(V2), kWindow).output());
    EXPECT_EQ(iso_in_homotopy_category(dp, l1_resolution(-2, -2), kWindow).verdict, Verdict::Pass);
}

TEST(ProjectorP, IdempotentWithinWindow)
{
    for (int v : {V1, V2}) {
        const PImage once = P_on_object(point(v), kWindow + 4);
        const PImage twice = P_on_object(once.output(), kWindow + 4);
        const IsoResult r = iso_in_homotopy_category(twice.output(), once.output(), kWindow);
        EXPECT_EQ(r.verdict, Verdict::Pass) << v << ": " << r.detail;
    }
}

TEST(ConvolutionCK, IdentityGoesToIdentity)
{
    const ComplexPtr x = point(V1);
    const CKImage img = CK_on_object(x, kWindow);
    const ChainMap id = CK_on_map_raw(identity_map(x), img, img);
    const ChainMap expect = identity_map(img.raw);
    for (int i = img.raw->lo(); i <= img.raw->hi(); ++i) EXPECT_EQ(id.at(i), expect.at(i)) << i;
}
