#include <jwcat/graded_module.hpp>

#include <jwcat/bimodule.hpp>
#include <jwcat/linear_system.hpp>

#include <algorithm>
#include <stdexcept>

namespace jwcat
{

GradedModule::GradedModule(AlgebraPtr alg, std::vector<int> degrees, std::vector<int> vertices,
                           std::vector<Matrix> actions, std::vector<std::string> labels)
    : alg_(std::move(alg)), degrees_(std::move(degrees)), vertices_(std::move(vertices)),
      actions_(std::move(actions)), labels_(std::move(labels))
{
    if (vertices_.size() != degrees_.size()) throw std::invalid_argument("GradedModule: inconsistent basis data");
    if (labels_.empty()) {
        for (std::size_t i = 0; i < degrees_.size(); ++i) labels_.push_back("m" + std::to_string(i));
    }
    if (labels_.size() != degrees_.size()) throw std::invalid_argument("GradedModule: label count mismatch");
    if (actions_.size() != static_cast<std::size_t>(alg_->quiver().num_arrows())) {
        throw std::invalid_argument("GradedModule: one action matrix per arrow required");
    }
    for (const auto &a : actions_) {
        if (a.rows() != dim() || a.cols() != dim()) throw std::invalid_argument("GradedModule: action shape");
    }
}

GradedModule GradedModule::zero(AlgebraPtr alg)
{
    std::vector<Matrix> acts(static_cast<std::size_t>(alg->quiver().num_arrows()), Matrix(0, 0));
    return GradedModule(std::move(alg), {}, {}, std::move(acts), {});
}

Matrix GradedModule::action_of_basis(std::size_t path_index) const
{
    const Path &p = alg_->path(path_index);
    if (p.arrows.empty()) {
        Matrix m(dim(), dim());
        for (std::size_t i = 0; i < dim(); ++i) {
            if (vertices_[i] == p.source) m(i, i) = 1;
        }
        return m;
    }
    Matrix m = Matrix::identity(dim());
    for (int a : p.arrows) m = action(a) * m;
    return m;
}

Matrix GradedModule::action_of(const AlgebraElement &x) const
{
    if (x.parent() && x.parent() != alg_) throw std::invalid_argument("action_of: element from another algebra");
    Matrix m(dim(), dim());
    for (const auto &[i, c] : x.coeffs()) m.add_block(0, 0, action_of_basis(i), c);
    return m;
}

LaurentPoly GradedModule::graded_dim(std::optional<int> vertex) const
{
    LaurentPoly p;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (!vertex || vertices_[i] == *vertex) p.add_term(degrees_[i], 1);
    }
    return p;
}

std::optional<int> GradedModule::min_degree() const
{
    if (degrees_.empty()) return std::nullopt;
    return *std::min_element(degrees_.begin(), degrees_.end());
}

std::optional<int> GradedModule::max_degree() const
{
    if (degrees_.empty()) return std::nullopt;
    return *std::max_element(degrees_.begin(), degrees_.end());
}

void GradedModule::validate() const
{
    const auto &q = alg_->quiver();
    for (std::size_t i = 0; i < dim(); ++i) {
        if (vertices_[i] < 0 || vertices_[i] >= q.num_vertices()) throw std::logic_error("module: bad vertex label");
    }
    for (int x = 0; x < q.num_arrows(); ++x) {
        const auto &arr = q.arrows()[static_cast<std::size_t>(x)];
        const Matrix &m = action(x);
        for (std::size_t c = 0; c < dim(); ++c) {
            for (std::size_t r = 0; r < dim(); ++r) {
                if (m(r, c).is_zero()) continue;
                if (vertices_[c] != arr.target || vertices_[r] != arr.source || degrees_[r] != degrees_[c] + arr.degree) {
                    throw std::logic_error("module: action of " + arr.name + " does not respect grading or vertices");
                }
            }
        }
    }
    for (const auto &rel : alg_->relations()) {
        if (!(action(rel[1]) * action(rel[0])).is_zero()) {
            throw std::logic_error("module: a relation acts nontrivially");
        }
    }
}

void ModuleHom::validate() const
{
    if (matrix.rows() != target->dim() || matrix.cols() != source->dim()) {
        throw std::logic_error("ModuleHom: matrix shape mismatch");
    }
    for (std::size_t c = 0; c < matrix.cols(); ++c) {
        for (std::size_t r = 0; r < matrix.rows(); ++r) {
            if (matrix(r, c).is_zero()) continue;
            if (target->degree(r) != source->degree(c) + degree || target->vertex(r) != source->vertex(c)) {
                throw std::logic_error("ModuleHom: map does not respect grading or vertices");
            }
        }
    }
    for (int x = 0; x < source->algebra()->quiver().num_arrows(); ++x) {
        if (!(matrix * source->action(x) == target->action(x) * matrix)) {
            throw std::logic_error("ModuleHom: map does not commute with the action");
        }
    }
}

ModuleHom compose(const ModuleHom &g, const ModuleHom &f)
{
    return ModuleHom{f.source, g.target, f.degree + g.degree, g.matrix * f.matrix};
}

GradedModule shift_internal(const GradedModule &m, int r)
{
    std::vector<int> deg = m.degrees();
    for (auto &d : deg) d += r;
    return GradedModule(m.algebra(), deg, m.vertices(), m.actions(), m.labels());
}

GradedModule direct_sum(const std::vector<const GradedModule *> &parts)
{
    if (parts.empty()) throw std::invalid_argument("direct_sum: no summands");
    const AlgebraPtr &alg = parts.front()->algebra();
    std::vector<int> deg, vtx;
    std::vector<std::string> labels;
    std::size_t n = 0;
    for (const auto *p : parts) {
        if (p->algebra() != alg) throw std::invalid_argument("direct_sum: mixed algebras");
        deg.insert(deg.end(), p->degrees().begin(), p->degrees().end());
        vtx.insert(vtx.end(), p->vertices().begin(), p->vertices().end());
        labels.insert(labels.end(), p->labels().begin(), p->labels().end());
        n += p->dim();
    }
    std::vector<Matrix> acts;
    for (int x = 0; x < alg->quiver().num_arrows(); ++x) {
        Matrix m(n, n);
        std::size_t off = 0;
        for (const auto *p : parts) {
            m.set_block(off, off, p->action(x));
            off += p->dim();
        }
        acts.push_back(std::move(m));
    }
    return GradedModule(alg, deg, vtx, acts, labels);
}

GradedModule projective(const AlgebraPtr &alg, int vertex)
{
    if (vertex < 0 || vertex >= alg->quiver().num_vertices()) throw std::invalid_argument("projective: unknown vertex");
    std::vector<std::size_t> paths;
    for (std::size_t i = 0; i < alg->dim(); ++i) {
        if (alg->path(i).target == vertex) paths.push_back(i);
    }
    std::vector<int> deg, vtx;
    std::vector<std::string> labels;
    for (auto i : paths) {
        deg.push_back(alg->degree(i));
        vtx.push_back(alg->path(i).source);
        labels.push_back(alg->basis_name(i));
    }
    const std::size_t n = paths.size();
    std::vector<Matrix> acts;
    for (int x = 0; x < alg->quiver().num_arrows(); ++x) {
        Matrix m(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            if (const auto k = alg->mul(paths[j], alg->arrow(x))) {
                const auto it = std::find(paths.begin(), paths.end(), *k);
                m(static_cast<std::size_t>(it - paths.begin()), j) = 1;
            }
        }
        acts.push_back(std::move(m));
    }
    return GradedModule(alg, deg, vtx, acts, labels);
}

GradedModule simple(const AlgebraPtr &alg, int vertex)
{
    if (vertex < 0 || vertex >= alg->quiver().num_vertices()) throw std::invalid_argument("simple: unknown vertex");
    std::vector<Matrix> acts(static_cast<std::size_t>(alg->quiver().num_arrows()), Matrix(1, 1));
    return GradedModule(alg, {0}, {vertex}, acts,
                        {"L(" + alg->quiver().vertices()[static_cast<std::size_t>(vertex)] + ")"});
}

std::vector<ModuleHom> hom_space_in_degree(const ModulePtr &m, const ModulePtr &n, int degree)
{
    if (m->algebra() != n->algebra()) throw std::invalid_argument("hom_space: modules over different algebras");
    // Unknowns are the admissible matrix entries (r, c).
    std::vector<std::pair<std::size_t, std::size_t>> vars;
    std::vector<std::vector<long>> var_of(n->dim(), std::vector<long>(m->dim(), -1));
    for (std::size_t c = 0; c < m->dim(); ++c) {
        for (std::size_t r = 0; r < n->dim(); ++r) {
            if (n->degree(r) == m->degree(c) + degree && n->vertex(r) == m->vertex(c)) {
                var_of[r][c] = static_cast<long>(vars.size());
                vars.emplace_back(r, c);
            }
        }
    }
    if (vars.empty()) return {};
    LinearSystem sys(vars.size());
    for (int x = 0; x < m->algebra()->quiver().num_arrows(); ++x) {
        const Matrix &a = m->action(x);
        const Matrix &b = n->action(x);
        // (f a - b f)(r, c) = 0
        for (std::size_t r = 0; r < n->dim(); ++r) {
            for (std::size_t c = 0; c < m->dim(); ++c) {
                SparseRow row;
                for (std::size_t k = 0; k < m->dim(); ++k) {
                    if (!a(k, c).is_zero() && var_of[r][k] >= 0) row[static_cast<std::size_t>(var_of[r][k])] += a(k, c);
                }
                for (std::size_t k = 0; k < n->dim(); ++k) {
                    if (!b(r, k).is_zero() && var_of[k][c] >= 0) row[static_cast<std::size_t>(var_of[k][c])] -= b(r, k);
                }
                if (!row.empty()) sys.add_equation(std::move(row));
            }
        }
    }
    std::vector<ModuleHom> out;
    for (const auto &v : sys.nullspace()) {
        Matrix f(n->dim(), m->dim());
        for (std::size_t i = 0; i < vars.size(); ++i) f(vars[i].first, vars[i].second) = v[i];
        out.push_back(ModuleHom{m, n, degree, std::move(f)});
    }
    return out;
}

std::vector<ModuleHom> hom_space(const ModulePtr &m, const ModulePtr &n)
{
    std::vector<ModuleHom> out;
    if (m->is_zero() || n->is_zero()) return out;
    const int lo = *n->min_degree() - *m->max_degree();
    const int hi = *n->max_degree() - *m->min_degree();
    for (int d = lo; d <= hi; ++d) {
        auto part = hom_space_in_degree(m, n, d);
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
}

std::optional<ModuleHom> find_isomorphism(const ModulePtr &m, const ModulePtr &n)
{
    if (m->dim() != n->dim() || m->algebra() != n->algebra()) return std::nullopt;
    for (int v = 0; v < m->algebra()->quiver().num_vertices(); ++v) {
        if (!(m->graded_dim(v) == n->graded_dim(v))) return std::nullopt;
    }
    if (m->is_zero()) return ModuleHom{m, n, 0, Matrix(0, 0)};
    const auto basis = hom_space_in_degree(m, n, 0);
    if (basis.empty()) return std::nullopt;
    // Deterministic pseudo-random combinations; a generic one is invertible
    // whenever any is.
    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    for (int attempt = 0; attempt < 12; ++attempt) {
        Matrix f(n->dim(), m->dim());
        for (const auto &h : basis) {
            state = state * 6364136223846793005ULL + 1442695040888963407ULL;
            const auto coeff = static_cast<std::int64_t>((state >> 33) % 19) - 9;
            f.add_block(0, 0, h.matrix, Rational(attempt == 0 ? 1 : coeff));
        }
        if (f.inverse()) return ModuleHom{m, n, 0, std::move(f)};
    }
    return std::nullopt;
}

GradedModule tensor_with_bimodule(const GradedModule &m, const GradedBimodule &w)
{
    if (m.algebra() != w.left_algebra()) throw std::invalid_argument("tensor_with_bimodule: algebra mismatch");
    const AlgebraPtr &right = w.right_algebra();
    // Pairs (i, k) with matching middle vertex.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::vector<long>> pair_of(m.dim(), std::vector<long>(w.dim(), -1));
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t k = 0; k < w.dim(); ++k) {
            if (m.vertex(i) == w.left_vertex(k)) {
                pair_of[i][k] = static_cast<long>(pairs.size());
                pairs.emplace_back(i, k);
            }
        }
    }
    const std::size_t np = pairs.size();
    if (np == 0) return GradedModule::zero(right);

    // Balancing relations (m.x) (x) w - m (x) (x.w).
    std::vector<std::vector<Rational>> rel_rows;
    for (int x = 0; x < m.algebra()->quiver().num_arrows(); ++x) {
        const Matrix &ma = m.action(x);
        const Matrix &wa = w.left_action(x);
        for (std::size_t i = 0; i < m.dim(); ++i) {
            for (std::size_t k = 0; k < w.dim(); ++k) {
                std::vector<Rational> row(np);
                bool any = false;
                for (std::size_t i2 = 0; i2 < m.dim(); ++i2) {
                    if (!ma(i2, i).is_zero() && pair_of[i2][k] >= 0) {
                        row[static_cast<std::size_t>(pair_of[i2][k])] += ma(i2, i);
                        any = true;
                    }
                }
                for (std::size_t k2 = 0; k2 < w.dim(); ++k2) {
                    if (!wa(k2, k).is_zero() && pair_of[i][k2] >= 0) {
                        row[static_cast<std::size_t>(pair_of[i][k2])] -= wa(k2, k);
                        any = true;
                    }
                }
                if (any) rel_rows.push_back(std::move(row));
            }
        }
    }
    Matrix rel(rel_rows.size(), np);
    for (std::size_t r = 0; r < rel_rows.size(); ++r) {
        for (std::size_t c = 0; c < np; ++c) rel(r, c) = rel_rows[r][c];
    }
    const auto pivots = rref(rel);
    std::vector<bool> is_pivot(np, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::size_t> keep;
    std::vector<long> coord(np, -1);
    for (std::size_t c = 0; c < np; ++c) {
        if (!is_pivot[c]) {
            coord[c] = static_cast<long>(keep.size());
            keep.push_back(c);
        }
    }
    auto project = [&](std::vector<Rational> v) {
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            const Rational f = v[pivots[r]];
            if (f.is_zero()) continue;
            for (std::size_t c = 0; c < np; ++c) {
                if (!rel(r, c).is_zero()) v[c] -= f * rel(r, c);
            }
        }
        std::vector<Rational> out(keep.size());
        for (std::size_t j = 0; j < keep.size(); ++j) out[j] = v[keep[j]];
        return out;
    };

    const std::size_t n = keep.size();
    std::vector<int> deg, vtx;
    std::vector<std::string> labels;
    for (auto c : keep) {
        const auto [i, k] = pairs[c];
        deg.push_back(m.degree(i) + w.degree(k));
        vtx.push_back(w.right_vertex(k));
        labels.push_back(m.label(i) + "⊗" + w.label(k));
    }
    std::vector<Matrix> acts;
    for (int y = 0; y < right->quiver().num_arrows(); ++y) {
        const Matrix &wr = w.right_action(y);
        Matrix a(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            const auto [i, k] = pairs[keep[j]];
            std::vector<Rational> v(np);
            for (std::size_t k2 = 0; k2 < w.dim(); ++k2) {
                if (!wr(k2, k).is_zero() && pair_of[i][k2] >= 0) v[static_cast<std::size_t>(pair_of[i][k2])] += wr(k2, k);
            }
            a.set_col(j, project(std::move(v)));
        }
        acts.push_back(std::move(a));
    }
    return GradedModule(right, deg, vtx, acts, labels);
}

namespace
{

// (degree, vertex) of a homogeneous vector; throws on mixed support.
std::pair<int, int> homogeneous_type(const GradedModule &m, const std::vector<Rational> &v)
{
    std::optional<std::pair<int, int>> t;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        const std::pair<int, int> ti{m.degree(i), m.vertex(i)};
        if (t && *t != ti) throw std::invalid_argument("subquotient: vector is not homogeneous");
        t = ti;
    }
    if (!t) throw std::invalid_argument("subquotient: zero vector in basis");
    return *t;
}

} // namespace

GradedModule subquotient(const GradedModule &m, const std::vector<std::vector<Rational>> &k,
                         const std::vector<std::vector<Rational>> &i)
{
    const std::size_t dim = m.dim();
    std::vector<std::vector<Rational>> ibasis;
    for (auto idx : extend_basis({}, i, dim)) ibasis.push_back(i[idx]);
    std::vector<std::vector<Rational>> chosen;
    for (auto idx : extend_basis(ibasis, k, dim)) chosen.push_back(k[idx]);
    const std::size_t n = chosen.size();
    if (n == 0) return GradedModule::zero(m.algebra());

    Matrix cols(dim, ibasis.size() + n);
    for (std::size_t c = 0; c < ibasis.size(); ++c) cols.set_col(c, ibasis[c]);
    for (std::size_t c = 0; c < n; ++c) cols.set_col(ibasis.size() + c, chosen[c]);

    std::vector<int> deg, vtx;
    std::vector<std::string> labels;
    for (std::size_t c = 0; c < n; ++c) {
        const auto [d, v] = homogeneous_type(m, chosen[c]);
        deg.push_back(d);
        vtx.push_back(v);
        labels.push_back("h" + std::to_string(c));
    }
    std::vector<Matrix> acts;
    for (int x = 0; x < m.algebra()->quiver().num_arrows(); ++x) {
        Matrix a(n, n);
        for (std::size_t c = 0; c < n; ++c) {
            const auto img = m.action(x) * chosen[c];
            const auto sol = cols.solve(img);
            if (!sol) throw std::invalid_argument("subquotient: span is not closed under the action");
            for (std::size_t r = 0; r < n; ++r) a(r, c) = (*sol)[ibasis.size() + r];
        }
        acts.push_back(std::move(a));
    }
    return GradedModule(m.algebra(), deg, vtx, acts, labels);
}

} // namespace jwcat
