#include <jwcat/homotopy.hpp>
#include <jwcat/k0.hpp>
#include <jwcat/koszul.hpp>
#include <jwcat/proj_homs.hpp>
#include <jwcat/reference.hpp>
#include <jwcat/zigzag.hpp>

#include <gtest/gtest.h>

#include <algorithm>

using namespace jwcat;

namespace
{

ComplexPtr as_complex(const ModulePtr &m, int degree = 0)
{
    return make_complex(Complex::from_module(m, degree));
}

ComplexPtr point(int vertex, int r = 0)
{
    const AlgebraPtr &B = zigzag().B;
    return make_complex(Complex::from_summand(B, projective_summand(B, vertex, r), 0));
}

struct Named
{
    const char *name;
    ModulePtr module;
};

std::vector<Named> modules()
{
    const ZigZag &z = zigzag();
    return {{"P1", z.P1}, {"P2", z.P2}, {"L1", z.L1}, {"L2", z.L2}, {"I2", z.I2}};
}

int other(int v)
{
    return v == V1 ? V2 : V1;
}

std::vector<ProjTag> sorted_tags(const Term &t)
{
    std::vector<ProjTag> out;
    for (std::size_t k = 0; k < t.size(); ++k) out.push_back(*t.summand(k).tag);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST(KoszulDual, SimplesAndInjective)
{
    const ZigZag &z = zigzag();
    EXPECT_EQ(iso_in_homotopy_category(koszul_D_on_object(as_complex(z.L1)), point(V2), 8).verdict, Verdict::Pass);
    EXPECT_EQ(iso_in_homotopy_category(koszul_D_on_object(as_complex(z.L2)), point(V1), 8).verdict, Verdict::Pass);
    EXPECT_EQ(iso_in_homotopy_category(koszul_D_on_object(as_complex(z.I2)), l1_resolution(), 8).verdict,
              Verdict::Pass);
    EXPECT_TRUE(find_isomorphism(z.P2, std::make_shared<const GradedModule>(shift_internal(*z.I2, 2))).has_value());
    EXPECT_FALSE(find_isomorphism(z.P2, z.I2).has_value());
}

// Oracle: one summand P(other vertex)<-s> in degree r+s per basis vector.
TEST(KoszulDual, PlacementCountsOnModules)
{
    for (const auto &[name, m] : modules()) {
        for (int deg : {-1, 0, 2}) {
            const ComplexPtr dx = koszul_D_on_object(as_complex(m, deg));
            std::map<int, std::vector<ProjTag>> expect;
            for (std::size_t i = 0; i < m->dim(); ++i) {
                expect[deg + m->degree(i)].push_back({other(m->vertex(i)), -m->degree(i)});
            }
            std::size_t total = 0;
            for (auto &[p, tags] : expect) {
                std::sort(tags.begin(), tags.end());
                ASSERT_TRUE(dx->knows_term(p)) << name;
                EXPECT_EQ(sorted_tags(dx->term(p)), tags) << name << " degree " << p;
                total += tags.size();
            }
            std::size_t have = 0;
            for (int p = dx->lo(); p <= dx->hi(); ++p) have += dx->term(p).size();
            EXPECT_EQ(have, total) << name;
        }
    }
}

TEST(KoszulDual, OutputIsAComplex)
{
    for (const auto &[name, m] : modules()) {
        const ComplexPtr dx = koszul_D_on_object(as_complex(m));
        EXPECT_NO_THROW(dx->validate()) << name;
    }
    EXPECT_NO_THROW(koszul_D_on_object(l1_resolution(1, 2))->validate());
}

TEST(KoszulDual, InternalShiftLaw)
{
    for (const auto &[name, m] : modules()) {
        const ComplexPtr dm = koszul_D_on_object(as_complex(m));
        for (int r = -3; r <= 3; ++r) {
            const auto shifted = std::make_shared<const GradedModule>(shift_internal(*m, r));
            const ComplexPtr lhs = koszul_D_on_object(as_complex(shifted));
            const ComplexPtr rhs = make_complex(shift(*dm, -r, -r));
            EXPECT_EQ(iso_in_homotopy_category(lhs, rhs, 8).verdict, Verdict::Pass) << name << " r=" << r;
        }
    }
}

TEST(KoszulDual, HomologicalShiftLaw)
{
    const ComplexPtr x = l1_resolution();
    const ComplexPtr dx = koszul_D_on_object(x);
    for (int r = -3; r <= 3; ++r) {
        const ComplexPtr lhs = koszul_D_on_object(make_complex(shift(*x, 0, r)));
        EXPECT_EQ(iso_in_homotopy_category(lhs, make_complex(shift(*dx, 0, r)), 8).verdict, Verdict::Pass) << r;
    }
}

TEST(KoszulDual, DualOfP1)
{
    const Reduction r = D_of_P1();
    // Raw size: P(2) from e(1), P(1)<-1> from b.
    EXPECT_EQ(r.original->total_dim(), 5u);
    const ComplexPtr model = dual_of_p1_model();
    EXPECT_EQ(iso_in_homotopy_category(r.reduced, model, 8).verdict, Verdict::Pass);
    EXPECT_EQ(r.reduced->first_nonzero(), 0);
    EXPECT_EQ(r.reduced->last_nonzero(), 1);
    // H^1 is the cokernel of b: P(2) -> P(1)<-1>, by rank.
    const std::size_t coker = model->term(1).dim() - model->d(0).rank();
    EXPECT_EQ(homology(*r.original, 1).dim(), coker);
    EXPECT_EQ(homology(*r.reduced, 1).dim(), coker);
}

// Oracle: sum of (-1)^{r+s} [P(other v)<-s>] over basis vectors, with the
// class of a projective read off its basis degrees.
TEST(KoszulDual, EulerClass)
{
    const AlgebraPtr &B = zigzag().B;
    for (const auto &[name, m] : modules()) {
        LaurentPoly l[2];
        for (std::size_t i = 0; i < m->dim(); ++i) {
            const int s = m->degree(i);
            const ModulePtr p = projective_module(B, other(m->vertex(i)), -s);
            const Rational sign = s % 2 == 0 ? 1 : -1;
            for (std::size_t j = 0; j < p->dim(); ++j) {
                l[p->vertex(j)] += LaurentPoly::monomial(p->degree(j), sign);
            }
        }
        const KClass expect{TruncatedSeries(l[0]), TruncatedSeries(l[1]), false};
        const KClass got = euler_class(*koszul_D_on_object(as_complex(m)), 20);
        EXPECT_TRUE(class_equal(got, expect)) << name << ": " << got.to_string() << " vs " << expect.to_string();
    }
}

TEST(KoszulDual, Functoriality)
{
    const ZigZag &z = zigzag();
    const ComplexPtr p2 = point(V2), p1 = point(V1, -1), p2s = point(V2, -2);
    const ChainMap b{p2, p1, {{0, left_mult_matrix(z.B, {V2, 0}, {V1, -1}, AlgebraElement(z.B, z.b))}}};
    const ChainMap a{p1, p2s, {{0, left_mult_matrix(z.B, {V1, -1}, {V2, -2}, AlgebraElement(z.B, z.a))}}};
    b.validate();
    a.validate();
    const KoszulImage d2(p2), d1(p1), d2s(p2s);

    const ChainMap id = koszul_D_on_map(identity_map(p2), d2, d2);
    const ChainMap expect_id = identity_map(d2.output());
    for (int i = d2.output()->lo(); i <= d2.output()->hi(); ++i) EXPECT_EQ(id.at(i), expect_id.at(i));

    const ChainMap db = koszul_D_on_map(b, d2, d1), da = koszul_D_on_map(a, d1, d2s);
    db.validate();
    da.validate();
    const ChainMap dab = koszul_D_on_map(compose(a, b), d2, d2s);
    const ChainMap comp = compose(da, db);
    for (int i = d2.output()->lo(); i <= d2.output()->hi(); ++i) EXPECT_EQ(dab.at(i), comp.at(i)) << i;
    // c = ab is not null-homotopic after duality either.
    EXPECT_EQ(chain_maps_homotopic(dab, ChainMap{d2.output(), d2s.output(), {}}, 8).verdict, Verdict::Fail);
}

TEST(KoszulDual, RejectsUnboundedAbove)
{
    EXPECT_ANY_THROW(koszul_D_on_object(ck_of_p2_raw(4)));
}
