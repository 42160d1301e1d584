#include <jwcat/proj_homs.hpp>

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace jwcat
{

const std::vector<std::size_t> &paths_with_target(const AlgebraPtr &alg, int vertex)
{
    static std::mutex mu;
    static std::map<std::pair<const GradedAlgebra *, int>, std::vector<std::size_t>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.try_emplace({alg.get(), vertex});
    if (inserted) {
        for (std::size_t i = 0; i < alg->dim(); ++i) {
            if (alg->path(i).target == vertex) it->second.push_back(i);
        }
    }
    return it->second;
}

Matrix left_mult_matrix(const AlgebraPtr &alg, const ProjTag &src, const ProjTag &dst, const AlgebraElement &x)
{
    const auto &sp = paths_with_target(alg, src.vertex);
    const auto &dp = paths_with_target(alg, dst.vertex);
    Matrix m(dp.size(), sp.size());
    for (const auto &[p, coeff] : x.coeffs()) {
        const Path &path = alg->path(p);
        if (path.source != src.vertex || path.target != dst.vertex || alg->degree(p) != src.shift - dst.shift) {
            throw std::invalid_argument("left_mult_matrix: element does not define a degree-zero map");
        }
        for (std::size_t j = 0; j < sp.size(); ++j) {
            if (const auto k = alg->mul(p, sp[j])) {
                const auto it = std::find(dp.begin(), dp.end(), *k);
                m(static_cast<std::size_t>(it - dp.begin()), j) += coeff;
            }
        }
    }
    return m;
}

AlgebraElement block_element(const AlgebraPtr &alg, const ProjTag &src, const ProjTag &dst, const Matrix &block)
{
    const auto &dp = paths_with_target(alg, dst.vertex);
    AlgebraElement x(alg);
    for (std::size_t r = 0; r < dp.size(); ++r) x.add(dp[r], block(r, 0));
    (void)src;
    return x;
}

std::vector<Matrix> hom_basis(const Summand &src, const Summand &dst)
{
    const AlgebraPtr &alg = src.module->algebra();
    if (src.tag && dst.tag) {
        std::vector<Matrix> out;
        const int deg = src.tag->shift - dst.tag->shift;
        for (std::size_t p = 0; p < alg->dim(); ++p) {
            const Path &path = alg->path(p);
            if (path.source == src.tag->vertex && path.target == dst.tag->vertex && alg->degree(p) == deg) {
                out.push_back(left_mult_matrix(alg, *src.tag, *dst.tag, AlgebraElement(alg, p)));
            }
        }
        return out;
    }
    std::vector<Matrix> out;
    for (auto &h : hom_space_in_degree(src.module, dst.module, 0)) out.push_back(std::move(h.matrix));
    return out;
}

bool block_invertible(const Summand &src, const Summand &dst, const Matrix &block)
{
    if (src.dim() != dst.dim() || src.dim() == 0) return false;
    if (src.tag && dst.tag) {
        // Degree-zero endomorphisms of P(v)<k> are scalars plus nothing else.
        return *src.tag == *dst.tag && !block(0, 0).is_zero();
    }
    return block.inverse().has_value();
}

Matrix summand_block(const Matrix &m, const Term &src, std::size_t a, const Term &dst, std::size_t b)
{
    return m.block(dst.offset(b), src.offset(a), dst.summand(b).dim(), src.summand(a).dim());
}

void add_summand_block(Matrix &m, const Term &src, std::size_t a, const Term &dst, std::size_t b, const Matrix &block,
                       const Rational &scale)
{
    m.add_block(dst.offset(b), src.offset(a), block, scale);
}

} // namespace jwcat
