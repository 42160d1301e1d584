#include <jwcat/zigzag.hpp>

#include <stdexcept>

namespace jwcat
{

KoszulDual koszul_dual(const AlgebraPtr &alg, const std::string &name)
{
    const Quiver &q = alg->quiver();
    const int nv = q.num_vertices();
    std::vector<int> sigma(static_cast<std::size_t>(nv), -1);
    auto bind = [&](int from, int to) {
        auto &slot = sigma[static_cast<std::size_t>(from)];
        if (slot >= 0 && slot != to) throw std::invalid_argument("koszul_dual: unsupported algebra shape");
        slot = to;
    };
    for (const auto &arr : q.arrows()) {
        if (arr.degree != 1) throw std::invalid_argument("koszul_dual: unsupported algebra shape (arrow degree)");
        bind(arr.source, arr.target);
        bind(arr.target, arr.source);
    }
    for (int v = 0; v < nv; ++v) {
        if (sigma[static_cast<std::size_t>(v)] < 0) sigma[static_cast<std::size_t>(v)] = v;
    }

    std::vector<Arrow> dual_arrows;
    for (const auto &arr : q.arrows()) dual_arrows.push_back(Arrow{arr.name + "*", arr.target, arr.source, 1});
    Quiver dq(q.vertices(), dual_arrows);

    // Dual relations: (xy)* = y* x* for every composable xy that is not a relation.
    std::vector<std::vector<int>> rels;
    for (int x = 0; x < q.num_arrows(); ++x) {
        for (int y = 0; y < q.num_arrows(); ++y) {
            if (q.arrows()[static_cast<std::size_t>(x)].source != q.arrows()[static_cast<std::size_t>(y)].target) {
                continue;
            }
            if (alg->word_vanishes({x, y})) continue;
            rels.push_back({y, x});
        }
    }
    auto dual = std::make_shared<const GradedAlgebra>(dq, rels, alg->d_max(), name);

    KoszulDual out{dual, sigma, {}};
    for (std::size_t i = 0; i < alg->dim(); ++i) {
        const Path &p = alg->path(i);
        Path dp{sigma[static_cast<std::size_t>(p.source)], sigma[static_cast<std::size_t>(p.target)], p.arrows};
        const auto j = dual->index_of(dp);
        if (!j) throw std::invalid_argument("koszul_dual: phi does not extend to the algebra");
        out.basis_map.push_back(*j);
    }
    return out;
}

namespace
{

std::vector<Rational> theta_vector(const GradedBimodule &theta, const std::vector<std::pair<std::string, int>> &terms)
{
    std::vector<Rational> v(theta.dim());
    for (const auto &[label, coeff] : terms) {
        const auto idx = theta.index_of(label);
        if (!idx) throw std::logic_error("theta has no basis vector " + label);
        v[*idx] += coeff;
    }
    return v;
}

// Bimodule map out of the regular bimodule, fixed by the images of the idempotents.
BimoduleMap map_from_regular(const BimodulePtr &reg, const BimodulePtr &target, int degree,
                             const std::vector<std::vector<Rational>> &idempotent_images)
{
    const auto &alg = reg->left_algebra();
    Matrix m(target->dim(), reg->dim());
    for (std::size_t j = 0; j < reg->dim(); ++j) {
        const int t = alg->path(j).target;
        m.set_col(j, target->right_action_of_basis(j) * idempotent_images[static_cast<std::size_t>(t)]);
    }
    return BimoduleMap{reg, target, degree, std::move(m)};
}

// Bimodule endomorphism of theta fixed by the image of e(2) (x) e(2).
BimoduleMap map_from_theta(const BimodulePtr &theta, int degree, const std::vector<Rational> &generator_image,
                           const AlgebraPtr &alg)
{
    Matrix m(theta->dim(), theta->dim());
    for (std::size_t j = 0; j < theta->dim(); ++j) {
        const std::string &label = theta->label(j);
        const auto sep = label.find("⊗");
        const auto p = alg->index_of(label.substr(0, sep));
        const auto q = alg->index_of(label.substr(sep + std::string("⊗").size()));
        m.set_col(j, theta->left_action_of_basis(*p) * (theta->right_action_of_basis(*q) * generator_image));
    }
    return BimoduleMap{theta, theta, degree, std::move(m)};
}

ZigZag build()
{
    ZigZag z;
    Quiver q({"1", "2"}, {Arrow{"a", V1, V2, 1}, Arrow{"b", V2, V1, 1}});
    auto b = std::make_shared<GradedAlgebra>(q, std::vector<std::vector<int>>{{ARROW_B, ARROW_A}}, 4, "B");
    b->set_alias("ab", "c");
    z.B = b;
    z.e1 = z.B->idempotent(V1);
    z.e2 = z.B->idempotent(V2);
    z.a = z.B->arrow(ARROW_A);
    z.b = z.B->arrow(ARROW_B);
    z.c = *z.B->index_of("c");

    z.dual = koszul_dual(z.B, "B!");

    Quiver cq({"*"}, {Arrow{"x", 0, 0, 2}});
    z.C = std::make_shared<const GradedAlgebra>(cq, std::vector<std::vector<int>>{{0, 0}}, 4, "C");
    z.c_one = z.C->idempotent(0);
    z.c_x = z.C->arrow(0);

    z.regular = std::make_shared<const GradedBimodule>(regular_bimodule(z.B));
    z.theta = std::make_shared<const GradedBimodule>(outer_tensor_bimodule(z.B, V2, V2, -1));
    z.regular->validate();
    z.theta->validate();

    const auto &th = *z.theta;
    z.alpha = map_from_regular(z.regular, z.theta, 1,
                               {theta_vector(th, {{"b⊗a", 1}}), theta_vector(th, {{"c⊗e(2)", 1}, {"e(2)⊗c", 1}})});
    z.beta = map_from_theta(z.theta, 2, theta_vector(th, {{"c⊗e(2)", 1}, {"e(2)⊗c", -1}}), z.B);
    z.gamma = map_from_theta(z.theta, 2, theta_vector(th, {{"c⊗e(2)", 1}, {"e(2)⊗c", 1}}), z.B);
    z.alpha.validate();
    z.beta.validate();
    z.gamma.validate();

    // P(2) as a (C, B)-bimodule.
    const GradedModule p2 = projective(z.B, V2);
    {
        const std::size_t n = p2.dim();
        std::vector<int> lv(n, 0);
        Matrix xl(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            const auto src = z.B->index_of(p2.label(j));
            if (const auto k = z.B->mul(z.c, *src)) {
                for (std::size_t r = 0; r < n; ++r) {
                    if (p2.label(r) == z.B->basis_name(*k)) xl(r, j) = 1;
                }
            }
        }
        z.p2_over_c = std::make_shared<const GradedBimodule>(z.C, z.B, p2.degrees(), lv, p2.vertices(),
                                                             std::vector<Matrix>{xl}, p2.actions(), p2.labels());
        z.p2_over_c->validate();
    }

    z.P1 = std::make_shared<const GradedModule>(projective(z.B, V1));
    z.P2 = std::make_shared<const GradedModule>(p2);
    z.L1 = std::make_shared<const GradedModule>(simple(z.B, V1));
    z.L2 = std::make_shared<const GradedModule>(simple(z.B, V2));
    z.I2 = std::make_shared<const GradedModule>(shift_internal(p2, -2));
    z.C_free = std::make_shared<const GradedModule>(projective(z.C, 0));
    z.C_simple = std::make_shared<const GradedModule>(simple(z.C, 0));
    return z;
}

} // namespace

const ZigZag &zigzag()
{
    static const ZigZag instance = build();
    return instance;
}

} // namespace jwcat
