#include <jwcat/cmodule.hpp>

#include <jwcat/zigzag.hpp>

#include <stdexcept>

namespace jwcat
{

namespace
{

std::vector<std::size_t> vertex_two_part(const GradedModule &m)
{
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        if (m.vertex(i) == V2) idx.push_back(i);
    }
    return idx;
}

} // namespace

GradedModule apply_pi(const GradedModule &m)
{
    const auto &z = zigzag();
    if (m.algebra() != z.B) throw std::invalid_argument("apply_pi: module is not over B");
    const auto idx = vertex_two_part(m);
    const Matrix act_c = m.action_of(AlgebraElement(z.B, z.c));
    std::vector<int> deg, vtx;
    std::vector<std::string> labels;
    Matrix x(idx.size(), idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) {
        deg.push_back(m.degree(idx[j]) - 1);
        vtx.push_back(0);
        labels.push_back(m.label(idx[j]));
        for (std::size_t r = 0; r < idx.size(); ++r) x(r, j) = act_c(idx[r], idx[j]);
    }
    return GradedModule(z.C, deg, vtx, {x}, labels);
}

ModuleHom apply_pi(const ModuleHom &f, const ModulePtr &pi_source, const ModulePtr &pi_target)
{
    const auto src = vertex_two_part(*f.source);
    const auto tgt = vertex_two_part(*f.target);
    Matrix m(tgt.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
        for (std::size_t r = 0; r < tgt.size(); ++r) m(r, c) = f.matrix(tgt[r], src[c]);
    }
    return ModuleHom{pi_source, pi_target, f.degree, std::move(m)};
}

GradedModule apply_iota(const GradedModule &m)
{
    const auto &z = zigzag();
    if (m.algebra() != z.C) throw std::invalid_argument("apply_iota: module is not over C");
    return shift_internal(tensor_with_bimodule(m, *z.p2_over_c), 1);
}

} // namespace jwcat
