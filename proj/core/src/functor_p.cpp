#include <jwcat/functor_p.hpp>

#include <jwcat/cmodule.hpp>
#include <jwcat/proj_homs.hpp>
#include <jwcat/zigzag.hpp>

#include <stdexcept>

namespace jwcat
{

namespace
{

std::vector<std::size_t> vertex_two(const Term &t)
{
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < t.dim(); ++i) {
        if (t.vertex(i) == V2) idx.push_back(i);
    }
    return idx;
}

Matrix restrict_to(const Matrix &m, const std::vector<std::size_t> &rows, const std::vector<std::size_t> &cols)
{
    Matrix out(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = m(rows[r], cols[c]);
    }
    return out;
}

// The element of B corresponding to an element of C = End(P(2)).
AlgebraElement to_B(const AlgebraElement &x)
{
    const ZigZag &z = zigzag();
    AlgebraElement out(z.B);
    out.add(z.e2, x.coeff(z.c_one));
    out.add(z.c, x.coeff(z.c_x));
    return out;
}

Matrix iota_matrix(const Matrix &m, const Term &src_c, const Term &dst_c, const Term &src_b, const Term &dst_b)
{
    const ZigZag &z = zigzag();
    Matrix out(dst_b.dim(), src_b.dim());
    for (std::size_t a = 0; a < src_c.size(); ++a) {
        for (std::size_t b = 0; b < dst_c.size(); ++b) {
            const Matrix blk = summand_block(m, src_c, a, dst_c, b);
            if (blk.is_zero()) continue;
            const AlgebraElement e = to_B(block_element(z.C, *src_c.summand(a).tag, *dst_c.summand(b).tag, blk));
            add_summand_block(out, src_b, a, dst_b, b,
                              left_mult_matrix(z.B, *src_b.summand(a).tag, *dst_b.summand(b).tag, e));
        }
    }
    return out;
}

Term iota_term(const Term &t)
{
    const ZigZag &z = zigzag();
    std::vector<Summand> out;
    for (const auto &s : t.summands()) {
        if (!s.tag) throw std::invalid_argument("iota: term is not a sum of tagged free modules");
        out.push_back(projective_summand(z.B, V2, s.tag->shift + 1));
    }
    return Term(std::move(out));
}

} // namespace

ComplexPtr pi_on_complex(const ComplexPtr &x)
{
    const ZigZag &z = zigzag();
    if (x->algebra() != z.B) throw std::invalid_argument("pi: complex is not over B");
    std::vector<Term> terms;
    std::vector<Matrix> diffs;
    for (int i = x->lo(); i <= x->hi(); ++i) {
        const Term &t = x->term(i);
        auto m = std::make_shared<const GradedModule>(apply_pi(t.module(z.B)));
        terms.push_back(m->dim() ? Term({Summand{m, std::nullopt, {}}}) : Term());
        if (i < x->hi()) diffs.push_back(restrict_to(x->d(i), vertex_two(x->term(i + 1)), vertex_two(t)));
    }
    return make_complex(Complex(z.C, x->lo(), std::move(terms), std::move(diffs), x->open_lo(), x->open_hi()));
}

ComplexPtr iota_on_free_complex(const ComplexPtr &f)
{
    const ZigZag &z = zigzag();
    std::vector<Term> terms;
    std::vector<Matrix> diffs;
    for (int i = f->lo(); i <= f->hi(); ++i) terms.push_back(iota_term(f->term(i)));
    for (int i = f->lo(); i < f->hi(); ++i) {
        const auto k = static_cast<std::size_t>(i - f->lo());
        diffs.push_back(iota_matrix(f->d(i), f->term(i), f->term(i + 1), terms[k], terms[k + 1]));
    }
    Complex out(z.B, f->lo(), std::move(terms), std::move(diffs), f->open_lo(), f->open_hi());
    if (out.open_lo()) out = out.with_tail(detect_tail(out, Side::Left));
    return make_complex(std::move(out));
}

PImage P_on_object(const ComplexPtr &x, int depth)
{
    if (x->open_hi()) throw RegimeError("P: input must be bounded above");
    PImage out{x, pi_on_complex(x), {}, {}, {}};
    out.resolution = resolve(out.pi, depth);
    out.raw = iota_on_free_complex(out.resolution.F);
    out.reduction = gaussian_reduce(out.raw);
    return out;
}

ChainMap P_on_map(const ChainMap &f, const PImage &src, const PImage &dst)
{
    ChainMap pf{src.pi, dst.pi, {}};
    for (int i = src.input->lo(); i <= src.input->hi(); ++i) {
        pf.maps[i] = restrict_to(f.at(i), vertex_two(dst.input->term(i)), vertex_two(src.input->term(i)));
    }
    const ChainMap lifted = lift_chain_map(src.resolution, dst.resolution, pf);
    ChainMap raw{src.raw, dst.raw, {}};
    for (const auto &[i, m] : lifted.maps) {
        const Complex &F = *src.resolution.F;
        const Complex &G = *dst.resolution.F;
        raw.maps[i] = iota_matrix(m, F.term(i), G.term(i), src.raw->term(i), dst.raw->term(i));
    }
    return compose(dst.reduction.f, compose(raw, src.reduction.g));
}

} // namespace jwcat
