#include <jwcat/functor_ck.hpp>

#include <jwcat/proj_homs.hpp>
#include <jwcat/zigzag.hpp>

#include <algorithm>
#include <stdexcept>

namespace jwcat
{

namespace
{

// theta basis vector j is p (x) q.
struct ThetaIndex
{
    std::vector<std::pair<std::size_t, std::size_t>> pq;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
};

const ThetaIndex &theta_index()
{
    static const ThetaIndex idx = [] {
        const ZigZag &z = zigzag();
        const std::string sep = "⊗";
        ThetaIndex out;
        for (std::size_t j = 0; j < z.theta->dim(); ++j) {
            const std::string &label = z.theta->label(j);
            const auto at = label.find(sep);
            const auto p = z.B->index_of(label.substr(0, at));
            const auto q = z.B->index_of(label.substr(at + sep.size()));
            if (!p || !q) throw std::logic_error("theta label " + label + " does not name two paths");
            out.pq.emplace_back(*p, *q);
            out.index[{*p, *q}] = j;
        }
        return out;
    }();
    return idx;
}

// Paths p in e(v)Be(2), in basis order.
const std::vector<std::size_t> &theta_paths(int v)
{
    static const std::vector<std::vector<std::size_t>> paths = [] {
        const ZigZag &z = zigzag();
        std::vector<std::vector<std::size_t>> out(2);
        for (std::size_t i = 0; i < z.B->dim(); ++i) {
            const Path &p = z.B->path(i);
            if (p.source == V2) out[static_cast<std::size_t>(p.target)].push_back(i);
        }
        return out;
    }();
    return paths.at(static_cast<std::size_t>(v));
}

std::size_t position_of(const std::vector<std::size_t> &v, std::size_t x)
{
    const auto it = std::find(v.begin(), v.end(), x);
    if (it == v.end()) throw std::logic_error("CK: path outside e(v)Be(2)");
    return static_cast<std::size_t>(it - v.begin());
}

// Index of the first theta summand of each summand of x.
std::vector<std::size_t> first_summands(const Term &x)
{
    std::vector<std::size_t> out;
    std::size_t n = 0;
    for (const auto &s : x.summands()) {
        out.push_back(n);
        n += theta_paths(s.tag->vertex).size();
    }
    return out;
}

ProjTag theta_tag(const ProjTag &t, std::size_t p, int m)
{
    return ProjTag{V2, t.shift + zigzag().B->degree(p) - 1 - (2 * m - 1)};
}

void require_tagged(const Term &t)
{
    if (!t.all_tagged()) throw std::invalid_argument("CK: input terms must be sums of tagged projectives");
}

// f (x) id on column m, for f: S -> T.
Matrix tensor_column(const Matrix &f, const Term &S, const Term &T, int m)
{
    if (m == 0) return f;
    const ZigZag &z = zigzag();
    const Term CS = ck_term(S, m);
    const Term CT = ck_term(T, m);
    const auto fs = first_summands(S);
    const auto ft = first_summands(T);
    Matrix out(CT.dim(), CS.dim());
    for (std::size_t a = 0; a < S.size(); ++a) {
        for (std::size_t b = 0; b < T.size(); ++b) {
            const Matrix blk = summand_block(f, S, a, T, b);
            if (blk.is_zero()) continue;
            const AlgebraElement x = block_element(z.B, *S.summand(a).tag, *T.summand(b).tag, blk);
            const auto &ps = theta_paths(S.summand(a).tag->vertex);
            const auto &pt = theta_paths(T.summand(b).tag->vertex);
            for (std::size_t i = 0; i < ps.size(); ++i) {
                const AlgebraElement y = x * AlgebraElement(z.B, ps[i]);
                for (const auto &[pp, coeff] : y.coeffs()) {
                    const std::size_t k = ft[b] + position_of(pt, pp);
                    const std::size_t kk = fs[a] + i;
                    add_summand_block(out, CS, kk, CT, k, Matrix::identity(CS.summand(kk).dim()), coeff);
                }
            }
        }
    }
    return out;
}

// Adds, for each theta basis vector p' (x) q' in `image`, left multiplication
// by q' from summand src of S into the summand of p' below `first`.
void add_theta_image(Matrix &out, const Term &S, std::size_t src, const Term &T, std::size_t first, int v,
                     const std::vector<Rational> &image)
{
    const ZigZag &z = zigzag();
    const ThetaIndex &ti = theta_index();
    for (std::size_t j = 0; j < image.size(); ++j) {
        if (image[j].is_zero()) continue;
        const auto [p, q] = ti.pq[j];
        const std::size_t k = first + position_of(theta_paths(v), p);
        const Matrix blk =
            left_mult_matrix(z.B, *S.summand(src).tag, *T.summand(k).tag, AlgebraElement(z.B, q, image[j]));
        add_summand_block(out, S, src, T, k, blk);
    }
}

// Vertical differential from column m to m+1 over the term x.
Matrix ck_differential(const Term &x, int m)
{
    const ZigZag &z = zigzag();
    const Term S = ck_term(x, m);
    const Term T = ck_term(x, m + 1);
    const auto ft = first_summands(x);
    Matrix out(T.dim(), S.dim());
    if (m == 0) {
        for (std::size_t a = 0; a < x.size(); ++a) {
            const int v = x.summand(a).tag->vertex;
            add_theta_image(out, S, a, T, ft[a], v, z.alpha.matrix.col(z.B->idempotent(v)));
        }
        return out;
    }
    const Matrix &phi = (m % 2 == 1 ? z.beta : z.gamma).matrix;
    const auto fs = first_summands(x);
    for (std::size_t a = 0; a < x.size(); ++a) {
        const int v = x.summand(a).tag->vertex;
        const auto &ps = theta_paths(v);
        for (std::size_t i = 0; i < ps.size(); ++i) {
            const std::size_t g = theta_index().index.at({ps[i], z.e2});
            add_theta_image(out, S, fs[a] + i, T, ft[a], v, phi.col(g));
        }
    }
    return out;
}

} // namespace

Term ck_term(const Term &x, int m)
{
    require_tagged(x);
    if (m == 0) return x;
    const ZigZag &z = zigzag();
    std::vector<Summand> out;
    for (const auto &s : x.summands()) {
        for (std::size_t p : theta_paths(s.tag->vertex)) {
            const ProjTag t = theta_tag(*s.tag, p, m);
            out.push_back(projective_summand(z.B, t.vertex, t.shift));
        }
    }
    return Term(std::move(out));
}

CKImage CK_on_object(const ComplexPtr &x, int depth)
{
    const ZigZag &z = zigzag();
    if (x->algebra() != z.B) throw std::invalid_argument("CK: input must be a complex over B");
    if (x->open_lo()) throw RegimeError("CK: input must be bounded below");
    if (depth < 1) throw std::invalid_argument("CK: depth must be positive");
    CKImage out;
    out.input = x;
    out.depth = depth;
    out.bicomplex = Bicomplex(z.B);
    if (x->is_zero()) {
        out.raw = make_complex(Complex::zero(z.B));
        out.reduction = gaussian_reduce(out.raw);
        return out;
    }
    const int h_lo = x->lo();
    const int h_hi = x->open_hi() ? x->determined_hi() : x->hi();
    for (int h = h_lo; h <= h_hi; ++h) {
        const Term &t = x->term(h);
        require_tagged(t);
        for (int m = 0; m <= depth; ++m) {
            out.bicomplex.set_term(h, m, ck_term(t, m));
            if (h < h_hi) out.bicomplex.set_dh(h, m, tensor_column(x->d(h), t, x->term(h + 1), m));
            if (m < depth) out.bicomplex.set_dv(h, m, ck_differential(t, m));
        }
    }
    const int hi = x->open_hi() ? std::min(h_lo + depth, h_hi) : h_lo + depth;
    Complex raw = total_complex(out.bicomplex, h_lo, std::max(hi, h_lo), false, true);
    raw = raw.with_tail(detect_tail(raw, Side::Right));
    out.raw = make_complex(std::move(raw));
    out.reduction = gaussian_reduce(out.raw);
    return out;
}

ChainMap CK_on_map_raw(const ChainMap &f, const CKImage &src, const CKImage &dst)
{
    ChainMap out{src.raw, dst.raw, {}};
    const Complex &X = *src.input;
    const Complex &Y = *dst.input;
    const int lo = std::max(src.raw->lo(), dst.raw->lo());
    const int hi = std::min(src.raw->hi(), dst.raw->hi());
    for (int t = lo; t <= hi; ++t) {
        Matrix m(dst.raw->term(t).dim(), src.raw->term(t).dim());
        for (const auto &[key, term] : src.bicomplex.terms()) {
            const auto [h, col] = key;
            if (h + col != t || term.empty() || !Y.knows_term(h)) continue;
            const Term &target = dst.bicomplex.term(h, col);
            if (target.empty()) continue;
            const Matrix blk = tensor_column(f.at(h), X.term(h), Y.term(h), col);
            m.add_block(total_offset(dst.bicomplex, h, col), total_offset(src.bicomplex, h, col), blk);
        }
        out.maps[t] = std::move(m);
    }
    return out;
}

ChainMap CK_on_map(const ChainMap &f, const CKImage &src, const CKImage &dst)
{
    return compose(dst.reduction.f, compose(CK_on_map_raw(f, src, dst), src.reduction.g));
}

} // namespace jwcat
