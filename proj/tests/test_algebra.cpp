#include <jwcat/bimodule.hpp>
#include <jwcat/path_algebra.hpp>
#include <jwcat/quiver.hpp>
#include <jwcat/zigzag.hpp>

#include <gtest/gtest.h>

#include <map>

using namespace jwcat;

namespace
{

std::size_t idx(const AlgebraPtr &alg, const std::string &name)
{
    const auto i = alg->index_of(name);
    EXPECT_TRUE(i.has_value()) << name;
    return i.value_or(0);
}

std::string product(const AlgebraPtr &alg, const std::string &x, const std::string &y)
{
    const auto p = alg->mul(idx(alg, x), idx(alg, y));
    return p ? alg->basis_name(*p) : "0";
}

// Column of a bimodule map as {label: coefficient}.
std::map<std::string, Rational> image(const BimoduleMap &f, const std::string &src_label)
{
    const auto i = f.source->index_of(src_label);
    EXPECT_TRUE(i.has_value()) << src_label;
    std::map<std::string, Rational> out;
    for (std::size_t r = 0; r < f.matrix.rows(); ++r) {
        if (!f.matrix(r, *i).is_zero()) out[f.target->label(r)] = f.matrix(r, *i);
    }
    return out;
}

} // namespace

TEST(ZigZagAlgebra, GradedDimensionsAndBasis)
{
    const AlgebraPtr &B = zigzag().B;
    EXPECT_EQ(B->graded_dims(), (std::vector<int>{2, 2, 1}));
    EXPECT_EQ(B->dim(), 5u);
    std::map<int, std::vector<std::string>> by_degree;
    for (std::size_t i = 0; i < B->dim(); ++i) by_degree[B->degree(i)].push_back(B->basis_name(i));
    EXPECT_EQ(by_degree[0], (std::vector<std::string>{"e(1)", "e(2)"}));
    EXPECT_EQ(by_degree[1].size(), 2u);
    EXPECT_EQ(by_degree[2], (std::vector<std::string>{"c"}));
}

TEST(ZigZagAlgebra, MultiplicationTable)
{
    const AlgebraPtr &B = zigzag().B;
    EXPECT_EQ(product(B, "a", "b"), "c");
    EXPECT_EQ(product(B, "b", "a"), "0");
    EXPECT_EQ(product(B, "e(1)", "e(1)"), "e(1)");
    EXPECT_EQ(product(B, "e(1)", "e(2)"), "0");
    EXPECT_EQ(product(B, "c", "a"), "0");
    EXPECT_EQ(product(B, "c", "c"), "0");
}

TEST(ZigZagAlgebra, ExhaustivelyAssociative)
{
    for (const AlgebraPtr &alg : {zigzag().B, zigzag().dual.algebra, zigzag().C}) {
        const std::size_t n = alg->dim();
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t k = 0; k < n; ++k) {
                    const auto ij = alg->mul(i, j);
                    const auto jk = alg->mul(j, k);
                    const auto l = ij ? alg->mul(*ij, k) : std::nullopt;
                    const auto r = jk ? alg->mul(i, *jk) : std::nullopt;
                    EXPECT_EQ(l, r) << alg->name() << " " << i << j << k;
                }
            }
        }
    }
}

TEST(ZigZagAlgebra, DegreesAddUnderMultiplication)
{
    const AlgebraPtr &B = zigzag().B;
    for (std::size_t i = 0; i < B->dim(); ++i) {
        for (std::size_t j = 0; j < B->dim(); ++j) {
            if (const auto p = B->mul(i, j)) EXPECT_EQ(B->degree(*p), B->degree(i) + B->degree(j));
        }
    }
}

TEST(PathAlgebra, OneVertexNoArrowsIsTheField)
{
    const AlgebraPtr k = build_path_algebra(Quiver({"x"}, {}), {}, 4, "k");
    EXPECT_EQ(k->dim(), 1u);
    EXPECT_EQ(k->graded_dims(), std::vector<int>{1});
}

TEST(KoszulDualAlgebra, ShapeAndPhi)
{
    const ZigZag &z = zigzag();
    const AlgebraPtr &D = z.dual.algebra;
    EXPECT_EQ(D->graded_dims(), (std::vector<int>{2, 2, 1}));
    EXPECT_EQ(D->basis_name(z.dual.basis_map[z.a]), "a*");
    EXPECT_EQ(D->basis_name(z.dual.basis_map[z.b]), "b*");
    // The only relation of the dual is the product of the two dual arrows in
    // the order opposite to ba = 0 in B.
    ASSERT_EQ(D->relations().size(), 1u);
    const auto &rel = D->relations()[0];
    ASSERT_EQ(rel.size(), 2u);
    EXPECT_EQ(D->quiver().arrows()[static_cast<std::size_t>(rel[0])].name, "b*");
    EXPECT_EQ(D->quiver().arrows()[static_cast<std::size_t>(rel[1])].name, "a*");
}

TEST(KoszulDualAlgebra, PhiIsAnAlgebraIsomorphism)
{
    const ZigZag &z = zigzag();
    const auto &map = z.dual.basis_map;
    std::vector<bool> hit(map.size(), false);
    for (std::size_t i = 0; i < map.size(); ++i) {
        ASSERT_LT(map[i], hit.size());
        EXPECT_FALSE(hit[map[i]]);
        hit[map[i]] = true;
        EXPECT_EQ(z.B->degree(i), z.dual.algebra->degree(map[i]));
    }
    for (std::size_t i = 0; i < map.size(); ++i) {
        for (std::size_t j = 0; j < map.size(); ++j) {
            const auto p = z.B->mul(i, j);
            const auto q = z.dual.algebra->mul(map[i], map[j]);
            EXPECT_EQ(q, p ? std::optional(map[*p]) : std::nullopt);
        }
    }
}

TEST(Theta, DimensionsAndLowestDegree)
{
    const GradedBimodule &th = *zigzag().theta;
    th.validate();
    EXPECT_EQ(th.dim(), 9u); // 3 x 3 path bases
    std::map<int, int> hist;
    for (std::size_t i = 0; i < th.dim(); ++i) ++hist[th.degree(i)];
    EXPECT_EQ(hist, (std::map<int, int>{{-1, 1}, {0, 2}, {1, 3}, {2, 2}, {3, 1}}));
    const auto lowest = th.index_of("e(2)⊗e(2)");
    ASSERT_TRUE(lowest.has_value());
    EXPECT_EQ(th.degree(*lowest), -1);
}

TEST(Theta, OuterActions)
{
    const ZigZag &z = zigzag();
    const GradedBimodule &th = *z.theta;
    const std::size_t base = *th.index_of("e(2)⊗e(2)");
    const Matrix left_b = th.left_action_of_basis(z.b);
    const auto target = th.index_of("b⊗e(2)");
    ASSERT_TRUE(target.has_value());
    for (std::size_t r = 0; r < th.dim(); ++r) EXPECT_EQ(left_b(r, base), Rational(r == *target ? 1 : 0));
    // Right multiplication by b follows the table of B on the second factor.
    const Matrix right_b = th.right_action_of_basis(z.b);
    for (std::size_t i = 0; i < th.dim(); ++i) {
        const std::string label = th.label(i);
        const std::size_t cut = label.find("⊗");
        const std::string left = label.substr(0, cut), right = label.substr(cut + std::string("⊗").size());
        const std::string q = product(z.B, right, "b");
        for (std::size_t r = 0; r < th.dim(); ++r) {
            const bool expect = q != "0" && th.label(r) == left + "⊗" + q;
            EXPECT_EQ(right_b(r, i), Rational(expect ? 1 : 0)) << label;
        }
    }
}

TEST(BimoduleMaps, GeneratorImages)
{
    const ZigZag &z = zigzag();
    for (const BimoduleMap *f : {&z.alpha, &z.beta, &z.gamma}) f->validate();
    using Img = std::map<std::string, Rational>;
    EXPECT_EQ(image(z.alpha, "e(2)"), (Img{{"c⊗e(2)", 1}, {"e(2)⊗c", 1}}));
    // e(1) goes to the only degree-2 tensor through vertex 2 starting and ending at 1.
    EXPECT_EQ(image(z.alpha, "e(1)"), (Img{{"b⊗a", 1}}));
    EXPECT_EQ(image(z.beta, "e(2)⊗e(2)"), (Img{{"c⊗e(2)", 1}, {"e(2)⊗c", -1}}));
    EXPECT_EQ(image(z.gamma, "e(2)⊗e(2)"), (Img{{"c⊗e(2)", 1}, {"e(2)⊗c", 1}}));
}

TEST(BimoduleMaps, ConsecutiveCompositionsVanish)
{
    const ZigZag &z = zigzag();
    EXPECT_TRUE(compose(z.beta, z.alpha).matrix.is_zero());
    EXPECT_TRUE(compose(z.gamma, z.beta).matrix.is_zero());
    EXPECT_TRUE(compose(z.beta, z.gamma).matrix.is_zero());
    EXPECT_FALSE(compose(z.gamma, z.alpha).matrix.is_zero() && compose(z.gamma, z.gamma).matrix.is_zero() &&
                 z.gamma.matrix.is_zero());
}
