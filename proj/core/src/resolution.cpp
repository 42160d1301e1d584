#include <jwcat/resolution.hpp>

#include <jwcat/proj_homs.hpp>

#include <stdexcept>

namespace jwcat
{

namespace
{

using Vec = std::vector<Rational>;
using Type = std::pair<int, int>; // (internal degree, vertex)

// Right action of a basis path on a space given by per-arrow matrices.
Matrix path_action(const AlgebraPtr &alg, std::size_t p, const std::vector<Matrix> &arrow_actions,
                   const std::vector<int> &vertices)
{
    const Path &path = alg->path(p);
    const std::size_t n = vertices.size();
    if (path.arrows.empty()) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            if (vertices[i] == path.source) m(i, i) = 1;
        }
        return m;
    }
    Matrix m = Matrix::identity(n);
    for (int a : path.arrows) m = arrow_actions[static_cast<std::size_t>(a)] * m;
    return m;
}

Matrix block_diag(const Matrix &a, const Matrix &b)
{
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    m.set_block(0, 0, a);
    m.set_block(a.rows(), a.cols(), b);
    return m;
}

// Differential cone^i -> cone^{i+1} of cone(phi) for phi: F -> X, where
// cone^i = F^{i+1} + X^i.
Matrix cone_d(const Matrix &dF_next, const Matrix &phi_next, const Matrix &dX, std::size_t f_next, std::size_t f_next2,
              std::size_t x_i, std::size_t x_next)
{
    Matrix m(f_next2 + x_next, f_next + x_i);
    if (f_next2 && f_next) m.add_block(0, 0, dF_next, -1);
    if (x_next && f_next) m.add_block(f_next2, 0, phi_next);
    if (x_next && x_i) m.add_block(f_next2, f_next, dX);
    return m;
}

std::optional<Type> type_of(const Vec &v, const std::vector<int> &deg, const std::vector<int> &vtx)
{
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) return Type{deg[i], vtx[i]};
    }
    return std::nullopt;
}

const Matrix &get_or(const std::map<int, Matrix> &m, int i, const Matrix &fallback)
{
    const auto it = m.find(i);
    return it == m.end() ? fallback : it->second;
}

} // namespace

Resolution resolve(const ComplexPtr &x, int depth)
{
    if (x->open_hi()) throw std::invalid_argument("resolve: complex must be bounded above");
    const AlgebraPtr &alg = x->algebra();
    const int arrows = alg->quiver().num_arrows();
    const int top = x->hi();
    int stop = x->lo() - depth;
    if (x->open_lo()) stop = std::max(stop, x->lo() + 1);

    std::map<int, Term> F;
    std::map<int, Matrix> dF, phi;
    const Term empty;
    const Matrix none;
    bool finished = false;
    int i = top;
    for (; i >= stop; --i) {
        const Term &Fn = F.count(i + 1) ? F.at(i + 1) : empty;
        const Term &Fn2 = F.count(i + 2) ? F.at(i + 2) : empty;
        const Term &Xi = x->term(i);
        const Term &Xn = x->term(i + 1);
        if (i < x->lo() && !x->open_lo() && Fn.empty()) {
            finished = true;
            break;
        }
        const std::size_t fn = Fn.dim(), xi = Xi.dim();
        const Matrix dc = cone_d(get_or(dF, i + 1, none), get_or(phi, i + 1, none), x->d(i), fn, Fn2.dim(), xi, Xn.dim());

        std::vector<int> deg(Fn.degrees()), vtx(Fn.vertices());
        deg.insert(deg.end(), Xi.degrees().begin(), Xi.degrees().end());
        vtx.insert(vtx.end(), Xi.vertices().begin(), Xi.vertices().end());
        const std::size_t n = fn + xi;
        std::vector<Matrix> act;
        for (int a = 0; a < arrows; ++a) act.push_back(block_diag(Fn.action(a), Xi.action(a)));

        // Kernel of the cone differential, block by block.
        std::map<Type, std::vector<std::size_t>> blocks;
        for (std::size_t j = 0; j < n; ++j) blocks[{deg[j], vtx[j]}].push_back(j);
        std::vector<Vec> kernel;
        for (const auto &[t, idx] : blocks) {
            Matrix sub(dc.rows(), idx.size());
            for (std::size_t c = 0; c < idx.size(); ++c) {
                for (std::size_t r = 0; r < dc.rows(); ++r) sub(r, c) = dc(r, idx[c]);
            }
            for (const auto &v : sub.nullspace()) {
                Vec full(n);
                for (std::size_t c = 0; c < idx.size(); ++c) full[idx[c]] = v[c];
                kernel.push_back(std::move(full));
            }
        }
        // Already covered: image of X^{i-1} and the radical part of the kernel.
        std::map<Type, std::vector<Vec>> covered;
        const Matrix dXprev = x->d(i - 1);
        for (std::size_t c = 0; c < dXprev.cols(); ++c) {
            Vec v(n);
            for (std::size_t r = 0; r < xi; ++r) v[fn + r] = dXprev(r, c);
            if (const auto t = type_of(v, deg, vtx)) covered[*t].push_back(std::move(v));
        }
        std::map<Type, std::vector<Vec>> candidates;
        for (const auto &k : kernel) {
            candidates[*type_of(k, deg, vtx)].push_back(k);
            for (int a = 0; a < arrows; ++a) {
                Vec v = act[static_cast<std::size_t>(a)] * k;
                if (const auto t = type_of(v, deg, vtx)) covered[*t].push_back(std::move(v));
            }
        }

        std::vector<Summand> gens;
        std::vector<Vec> images;
        for (const auto &[t, cands] : candidates) {
            const auto chosen = extend_basis(covered[t], cands, n);
            for (auto c : chosen) {
                gens.push_back(projective_summand(alg, t.second, t.first));
                images.push_back(cands[c]);
            }
        }
        const Term Fi(gens);
        Matrix dFi(fn, Fi.dim()), phii(xi, Fi.dim());
        for (std::size_t g = 0; g < gens.size(); ++g) {
            const auto &paths = paths_with_target(alg, gens[g].tag->vertex);
            for (std::size_t pj = 0; pj < paths.size(); ++pj) {
                const Vec img = path_action(alg, paths[pj], act, vtx) * images[g];
                const std::size_t col = Fi.offset(g) + pj;
                for (std::size_t r = 0; r < fn; ++r) dFi(r, col) = img[r];
                for (std::size_t r = 0; r < xi; ++r) phii(r, col) = -img[fn + r];
            }
        }
        F[i] = Fi;
        dF[i] = dFi;
        phi[i] = phii;
        if (i < x->lo() && !x->open_lo() && Fi.empty()) {
            finished = true;
            break;
        }
    }

    // Keep the computed range; drop zero terms below the lowest generator when finished.
    int lo = F.empty() ? top : F.begin()->first;
    if (finished) {
        while (lo < top && F.count(lo) && F.at(lo).empty()) ++lo;
    }
    std::vector<Term> terms;
    std::vector<Matrix> diffs;
    for (int j = lo; j <= top; ++j) {
        terms.push_back(F.count(j) ? F.at(j) : Term());
        if (j > lo) diffs.push_back(dF.count(j - 1) ? dF.at(j - 1) : Matrix(terms.back().dim(), terms[terms.size() - 2].dim()));
    }
    auto fc = make_complex(Complex(alg, lo, std::move(terms), std::move(diffs), !finished, false));
    ChainMap ph{fc, x, {}};
    for (int j = lo; j <= top; ++j) {
        if (phi.count(j)) ph.maps[j] = phi.at(j);
    }
    return Resolution{x, fc, ph, finished};
}

Complex projective_resolution_B(const GradedModule &m, int depth)
{
    auto x = make_complex(Complex::from_module(std::make_shared<const GradedModule>(m), 0));
    return *resolve(x, depth).F;
}

Complex projective_resolution_C(const GradedModule &m, int depth)
{
    return projective_resolution_B(m, depth);
}

ChainMap lift_chain_map(const Resolution &src, const Resolution &dst, const ChainMap &f)
{
    const Complex &F = *src.F;
    const Complex &G = *dst.F;
    const Complex &Y = *dst.source;
    const AlgebraPtr &alg = F.algebra();
    const int arrows = alg->quiver().num_arrows();
    ChainMap out{src.F, dst.F, {}};
    std::map<int, Matrix> h; // h^i: F^i -> Y^{i-1}

    const int lo = G.open_lo() ? std::max(F.lo(), G.lo()) : F.lo();
    for (int i = F.hi(); i >= lo; --i) {
        const Term &Fi = F.term(i);
        const Term &Gi = G.term(i);
        const Term &Gn = G.term(i + 1);
        const Term &Yp = Y.term(i - 1);
        const Matrix dFi = F.d(i);
        const Matrix fn = out.at(i + 1);
        const Matrix hn = h.count(i + 1) ? h.at(i + 1) : Matrix(Y.term(i).dim(), F.term(i + 1).dim());
        const Matrix phiX = src.phi.at(i);
        const Matrix fi = f.at(i);

        // cone_Y^{i-1} = G^i + Y^{i-1} -> cone_Y^i = G^{i+1} + Y^i.
        const Matrix dc = cone_d(G.d(i), dst.phi.at(i), Y.d(i - 1), Gi.dim(), Gn.dim(), Yp.dim(), Y.term(i).dim());
        std::vector<int> deg(Gi.degrees()), vtx(Gi.vertices());
        deg.insert(deg.end(), Yp.degrees().begin(), Yp.degrees().end());
        vtx.insert(vtx.end(), Yp.vertices().begin(), Yp.vertices().end());
        std::vector<Matrix> act;
        for (int a = 0; a < arrows; ++a) act.push_back(block_diag(Gi.action(a), Yp.action(a)));

        Matrix fi_tilde(Gi.dim(), Fi.dim());
        Matrix hi(Yp.dim(), Fi.dim());
        for (std::size_t s = 0; s < Fi.size(); ++s) {
            const std::size_t gcol = Fi.offset(s);
            const ProjTag tag = *Fi.summand(s).tag;
            // Target (-f^{i+1} dF e, f phi e + h^{i+1} dF e) in cone_Y^i.
            Vec de = dFi.col(gcol);
            Vec t1 = fn * de;
            Vec t2 = fi * phiX.col(gcol);
            const Vec t3 = hn * de;
            for (std::size_t r = 0; r < t2.size(); ++r) t2[r] += t3[r];
            Vec target(Gn.dim() + t2.size());
            for (std::size_t r = 0; r < Gn.dim(); ++r) target[r] = -t1[r];
            for (std::size_t r = 0; r < t2.size(); ++r) target[Gn.dim() + r] = t2[r];

            std::vector<std::size_t> cols;
            for (std::size_t j = 0; j < deg.size(); ++j) {
                if (deg[j] == tag.shift && vtx[j] == tag.vertex) cols.push_back(j);
            }
            Matrix sub(dc.rows(), cols.size());
            for (std::size_t c = 0; c < cols.size(); ++c) {
                for (std::size_t r = 0; r < dc.rows(); ++r) sub(r, c) = dc(r, cols[c]);
            }
            const auto sol = sub.solve(target);
            if (!sol) throw std::logic_error("lift_chain_map: no lift in degree " + std::to_string(i));
            Vec z(deg.size());
            for (std::size_t c = 0; c < cols.size(); ++c) z[cols[c]] = (*sol)[c];
            const auto &paths = paths_with_target(alg, tag.vertex);
            for (std::size_t pj = 0; pj < paths.size(); ++pj) {
                const Vec img = path_action(alg, paths[pj], act, vtx) * z;
                for (std::size_t r = 0; r < Gi.dim(); ++r) fi_tilde(r, gcol + pj) = img[r];
                for (std::size_t r = 0; r < Yp.dim(); ++r) hi(r, gcol + pj) = -img[Gi.dim() + r];
            }
        }
        out.maps[i] = std::move(fi_tilde);
        h[i] = std::move(hi);
    }
    return out;
}

} // namespace jwcat
