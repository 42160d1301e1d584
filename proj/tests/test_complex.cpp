#include <jwcat/complex.hpp>
#include <jwcat/homotopy.hpp>
#include <jwcat/k0.hpp>
#include <jwcat/proj_homs.hpp>
#include <jwcat/reduce.hpp>
#include <jwcat/reference.hpp>
#include <jwcat/zigzag.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <climits>
#include <random>

using namespace jwcat;

namespace
{

std::vector<ProjTag> tags(const Term &t)
{
    std::vector<ProjTag> out;
    for (std::size_t k = 0; k < t.size(); ++k) out.push_back(*t.summand(k).tag);
    return out;
}

ComplexPtr single(int vertex, int r, int degree = 0)
{
    const AlgebraPtr &B = zigzag().B;
    return make_complex(Complex::from_summand(B, projective_summand(B, vertex, r), degree));
}

ComplexPtr contractible(int vertex, int r, int degree)
{
    const auto x = build_complex(0, {TermSpec{{{vertex, r}}}, TermSpec{{{vertex, r}}}}, {{{"1"}}});
    return make_complex(shift(*x, 0, -degree));
}

// Termwise direct sum with block-diagonal differentials, both bounded.
ComplexPtr direct_sum(const std::vector<ComplexPtr> &parts)
{
    int lo = INT32_MAX, hi = INT32_MIN;
    for (const auto &p : parts) {
        if (p->is_zero()) continue;
        lo = std::min(lo, *p->first_nonzero());
        hi = std::max(hi, *p->last_nonzero());
    }
    std::vector<Term> terms;
    for (int i = lo; i <= hi; ++i) {
        std::vector<Summand> s;
        for (const auto &p : parts) {
            if (p->knows_term(i)) {
                for (std::size_t k = 0; k < p->term(i).size(); ++k) s.push_back(p->term(i).summand(k));
            }
        }
        terms.emplace_back(std::move(s));
    }
    std::vector<Matrix> diffs;
    for (int i = lo; i < hi; ++i) {
        Matrix d(terms[static_cast<std::size_t>(i + 1 - lo)].dim(), terms[static_cast<std::size_t>(i - lo)].dim());
        std::size_t r0 = 0, c0 = 0;
        for (const auto &p : parts) {
            const std::size_t src = p->knows_term(i) ? p->term(i).dim() : 0;
            const std::size_t dst = p->knows_term(i + 1) ? p->term(i + 1).dim() : 0;
            if (src && dst) d.set_block(r0, c0, p->d(i));
            r0 += dst;
            c0 += src;
        }
        diffs.push_back(std::move(d));
    }
    return make_complex(Complex(zigzag().B, lo, std::move(terms), std::move(diffs)));
}

// I + N with N mapping summand j into summand i only for i > j: unipotent.
Matrix random_automorphism(std::mt19937 &rng, const Term &t)
{
    Matrix g = Matrix::identity(t.dim());
    std::uniform_int_distribution<int> coef(-2, 2);
    for (std::size_t j = 0; j < t.size(); ++j) {
        for (std::size_t i = j + 1; i < t.size(); ++i) {
            for (const Matrix &h : hom_basis(t.summand(j), t.summand(i))) {
                const int c = coef(rng);
                if (c != 0) add_summand_block(g, t, j, t, i, h, Rational(c));
            }
        }
    }
    return g;
}

ComplexPtr conjugate(std::mt19937 &rng, const Complex &x)
{
    std::vector<Matrix> g;
    std::vector<Term> terms;
    for (int i = x.lo(); i <= x.hi(); ++i) {
        g.push_back(random_automorphism(rng, x.term(i)));
        terms.push_back(x.term(i));
    }
    std::vector<Matrix> diffs;
    for (int i = x.lo(); i < x.hi(); ++i) {
        const std::size_t k = static_cast<std::size_t>(i - x.lo());
        diffs.push_back(g[k + 1] * x.d(i) * *g[k].inverse());
    }
    return make_complex(Complex(x.algebra(), x.lo(), std::move(terms), std::move(diffs)));
}

ComplexPtr random_complex(std::mt19937 &rng, std::vector<ComplexPtr> &minimal_parts)
{
    std::uniform_int_distribution<int> pick(0, 3), deg(-2, 2), sh(-3, 3), vtx(0, 1);
    std::vector<ComplexPtr> parts;
    const int n = 2 + static_cast<int>(rng() % 3);
    for (int k = 0; k < n; ++k) {
        const int d = deg(rng), s = sh(rng), v = vtx(rng);
        switch (pick(rng)) {
        case 0: parts.push_back(l1_resolution(s, d)); minimal_parts.push_back(parts.back()); break;
        case 1: parts.push_back(make_complex(shift(*dual_of_p1_model(), s, d))); minimal_parts.push_back(parts.back()); break;
        case 2: parts.push_back(single(v, s, d)); minimal_parts.push_back(parts.back()); break;
        default: parts.push_back(contractible(v, s, d)); break;
        }
    }
    return direct_sum(parts);
}

} // namespace

TEST(Shift, Conventions)
{
    const ComplexPtr x = dual_of_p1_model(); // P(2) -b-> P(1)<-1> on [0, 1]
    const Complex y = shift(*x, 2, 1);       // (X<2>[1])^j = X^{j+1}<2>
    EXPECT_EQ(y.lo(), -1);
    EXPECT_EQ(tags(y.term(-1)), (std::vector<ProjTag>{{V2, 2}}));
    EXPECT_EQ(tags(y.term(0)), (std::vector<ProjTag>{{V1, 1}}));
    EXPECT_EQ(y.d(-1), x->d(0) * Rational(-1));
    const Complex z = shift(*x, 0, 0);
    EXPECT_EQ(z.lo(), x->lo());
    EXPECT_EQ(z.d(0), x->d(0));
}

TEST(Shift, Composes)
{
    const ComplexPtr x = l1_resolution();
    for (int r = -2; r <= 2; ++r) {
        for (int s = -2; s <= 2; ++s) {
            const Complex a = shift(shift(*x, r, s), 1, 2);
            const Complex b = shift(*x, r + 1, s + 2);
            ASSERT_EQ(a.lo(), b.lo());
            for (int i = a.lo(); i <= a.hi(); ++i) {
                EXPECT_EQ(tags(a.term(i)), tags(b.term(i)));
                if (i < a.hi()) EXPECT_EQ(a.d(i), b.d(i));
            }
        }
    }
}

TEST(Totalization, SingleRowIsUnchanged)
{
    const ComplexPtr x = l1_resolution();
    Bicomplex b(zigzag().B);
    for (int i = x->lo(); i <= x->hi(); ++i) {
        b.set_term(i, 0, x->term(i));
        if (i < x->hi()) b.set_dh(i, 0, x->d(i));
    }
    b.validate();
    const Complex t = total_complex(b, x->lo(), x->hi());
    for (int i = x->lo(); i <= x->hi(); ++i) {
        EXPECT_EQ(tags(t.term(i)), tags(x->term(i)));
        if (i < x->hi()) EXPECT_EQ(t.d(i), x->d(i));
    }
}

TEST(Reduction, IdentityConeVanishes)
{
    const Reduction r = gaussian_reduce(contractible(V2, 1, 0));
    EXPECT_TRUE(r.reduced->is_zero());
    EXPECT_EQ(r.steps, 1u);
}

TEST(Reduction, CKofP2RawModelIsContractible)
{
    const Reduction r = gaussian_reduce(ck_of_p2_raw(8));
    for (int i = r.reduced->determined_lo(); i <= r.reduced->determined_hi(); ++i) {
        EXPECT_EQ(r.reduced->term(i).dim(), 0u) << i;
    }
}

TEST(Reduction, MinimalInputIsUntouched)
{
    const ComplexPtr x = l1_resolution();
    const Reduction r = gaussian_reduce(x);
    EXPECT_EQ(r.steps, 0u);
    EXPECT_TRUE(is_minimal(*x));
    EXPECT_FALSE(is_minimal(*contractible(V1, 0, 0)));
}

TEST(Homology, ExactInteriorAndCokernel)
{
    const ComplexPtr x = l1_resolution();
    EXPECT_TRUE(homology(*x, -1).is_zero());
    EXPECT_TRUE(homology(*x, -2).is_zero());
    EXPECT_EQ(homology(*x, 0).dim(), 1u);
    // Cokernel of b: P(2) -> P(1)<-1>, by rank.
    const ComplexPtr y = dual_of_p1_model();
    const std::size_t coker = y->term(1).dim() - y->d(0).rank();
    EXPECT_EQ(homology(*y, 1).dim(), coker);
    EXPECT_EQ(homology(*y, 0).dim(), y->term(0).dim() - y->d(0).rank());
}

TEST(HomotopyCategory, IsomorphismBasics)
{
    const ComplexPtr x = l1_resolution();
    const IsoResult same = iso_in_homotopy_category(x, x, 8);
    EXPECT_EQ(same.verdict, Verdict::Pass);
    ASSERT_TRUE(same.witness.has_value());
    EXPECT_EQ(iso_in_homotopy_category(single(V1, 0), single(V2, 0), 8).verdict, Verdict::Fail);
}

TEST(HomotopyCategory, MapBasics)
{
    const ZigZag &z = zigzag();
    const ComplexPtr s = single(V2, 0), t = single(V2, -2);
    const ChainMap c{s, t, {{0, left_mult_matrix(z.B, {V2, 0}, {V2, -2}, AlgebraElement(z.B, z.c))}}};
    c.validate();
    const HomotopyResult self = chain_maps_homotopic(c, c, 8);
    EXPECT_EQ(self.verdict, Verdict::Pass);
    EXPECT_EQ(chain_maps_homotopic(c, ChainMap{s, t, {}}, 8).verdict, Verdict::Fail);
}

class RandomComplexes : public ::testing::TestWithParam<unsigned>
{
};

TEST_P(RandomComplexes, ReductionInvariants)
{
    std::mt19937 rng(GetParam());
    std::vector<ComplexPtr> minimal;
    const ComplexPtr plain = random_complex(rng, minimal);
    const ComplexPtr x = conjugate(rng, *plain);
    x->validate();

    const Reduction r = gaussian_reduce(x);
    r.reduced->validate();
    r.f.validate();
    r.g.validate();
    EXPECT_TRUE(is_minimal(*r.reduced));

    // The minimal model is the sum of the minimal pieces.
    std::size_t expect_dim = 0;
    for (const auto &p : minimal) expect_dim += p->total_dim();
    EXPECT_EQ(r.reduced->total_dim(), expect_dim);

    // Homology and class computed piece by piece.
    for (int i = x->lo(); i <= x->hi(); ++i) {
        LaurentPoly expect;
        for (const auto &p : minimal) {
            if (p->knows_term(i)) expect += homology(*p, i).graded_dim();
        }
        EXPECT_EQ(homology(*x, i).graded_dim(), expect) << "degree " << i;
        if (r.reduced->knows_term(i)) EXPECT_EQ(homology(*r.reduced, i).graded_dim(), expect) << "degree " << i;
    }
    KClass sum = KClass::zero();
    for (const auto &p : minimal) sum = sum + euler_class(*p, 20);
    EXPECT_TRUE(class_equal(euler_class(*x, 20), sum));
    EXPECT_TRUE(class_equal(euler_class(*r.reduced, 20), sum));

    EXPECT_EQ(iso_in_homotopy_category(x, plain, 12).verdict, Verdict::Pass);
    const ChainMap gf = compose(r.g, r.f);
    EXPECT_EQ(chain_maps_homotopic(gf, identity_map(x), 12).verdict, Verdict::Pass);
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomComplexes, ::testing::Range(1u, 41u));
