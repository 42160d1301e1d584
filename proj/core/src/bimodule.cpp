#include <jwcat/bimodule.hpp>

#include <stdexcept>

namespace jwcat
{

GradedBimodule::GradedBimodule(AlgebraPtr left, AlgebraPtr right, std::vector<int> degrees,
                               std::vector<int> left_vertices, std::vector<int> right_vertices,
                               std::vector<Matrix> left_actions, std::vector<Matrix> right_actions,
                               std::vector<std::string> labels)
    : left_(std::move(left)), right_(std::move(right)), degrees_(std::move(degrees)),
      left_vertices_(std::move(left_vertices)), right_vertices_(std::move(right_vertices)),
      left_actions_(std::move(left_actions)), right_actions_(std::move(right_actions)), labels_(std::move(labels))
{
    const std::size_t n = degrees_.size();
    if (left_vertices_.size() != n || right_vertices_.size() != n || labels_.size() != n) {
        throw std::invalid_argument("GradedBimodule: inconsistent basis data");
    }
    if (left_actions_.size() != static_cast<std::size_t>(left_->quiver().num_arrows()) ||
        right_actions_.size() != static_cast<std::size_t>(right_->quiver().num_arrows())) {
        throw std::invalid_argument("GradedBimodule: one action matrix per arrow required");
    }
}

Matrix GradedBimodule::left_action_of_basis(std::size_t path_index) const
{
    const Path &p = left_->path(path_index);
    const std::size_t n = dim();
    if (p.arrows.empty()) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            if (left_vertices_[i] == p.source) m(i, i) = 1;
        }
        return m;
    }
    Matrix m = Matrix::identity(n);
    for (int a : p.arrows) m = m * left_action(a);
    return m;
}

Matrix GradedBimodule::right_action_of_basis(std::size_t path_index) const
{
    const Path &p = right_->path(path_index);
    const std::size_t n = dim();
    if (p.arrows.empty()) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            if (right_vertices_[i] == p.source) m(i, i) = 1;
        }
        return m;
    }
    Matrix m = Matrix::identity(n);
    for (int a : p.arrows) m = right_action(a) * m;
    return m;
}

std::optional<std::size_t> GradedBimodule::index_of(const std::string &label) const
{
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) return i;
    }
    return std::nullopt;
}

namespace
{

void check_arrow_matrix(const Matrix &m, const std::vector<int> &deg, const std::vector<int> &vtx, int from_vertex,
                        int to_vertex, int shift, const std::vector<int> *keep_from, const std::vector<int> *keep_to,
                        const std::string &what)
{
    for (std::size_t c = 0; c < m.cols(); ++c) {
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (m(r, c).is_zero()) continue;
            bool ok = vtx[c] == from_vertex && vtx[r] == to_vertex && deg[r] == deg[c] + shift;
            // The other side's vertex must be untouched.
            if (keep_from && keep_to) ok = ok && (*keep_from)[c] == (*keep_to)[r];
            if (!ok) throw std::logic_error(what + ": action does not respect grading or vertices");
        }
    }
}

} // namespace

void GradedBimodule::validate() const
{
    const auto &lq = left_->quiver();
    const auto &rq = right_->quiver();
    for (int x = 0; x < lq.num_arrows(); ++x) {
        const auto &arr = lq.arrows()[static_cast<std::size_t>(x)];
        check_arrow_matrix(left_action(x), degrees_, left_vertices_, arr.source, arr.target, arr.degree,
                           &right_vertices_, &right_vertices_, "bimodule left action " + arr.name);
    }
    for (int y = 0; y < rq.num_arrows(); ++y) {
        const auto &arr = rq.arrows()[static_cast<std::size_t>(y)];
        check_arrow_matrix(right_action(y), degrees_, right_vertices_, arr.target, arr.source, arr.degree,
                           &left_vertices_, &left_vertices_, "bimodule right action " + arr.name);
    }
    for (const auto &rel : left_->relations()) {
        if (!(left_action(rel[0]) * left_action(rel[1])).is_zero()) {
            throw std::logic_error("bimodule: a left relation acts nontrivially");
        }
    }
    for (const auto &rel : right_->relations()) {
        if (!(right_action(rel[1]) * right_action(rel[0])).is_zero()) {
            throw std::logic_error("bimodule: a right relation acts nontrivially");
        }
    }
    for (int x = 0; x < lq.num_arrows(); ++x) {
        for (int y = 0; y < rq.num_arrows(); ++y) {
            if (!(left_action(x) * right_action(y) == right_action(y) * left_action(x))) {
                throw std::logic_error("bimodule: left and right actions do not commute");
            }
        }
    }
}

void BimoduleMap::validate() const
{
    if (matrix.rows() != target->dim() || matrix.cols() != source->dim()) {
        throw std::logic_error("BimoduleMap: matrix shape mismatch");
    }
    for (std::size_t c = 0; c < matrix.cols(); ++c) {
        for (std::size_t r = 0; r < matrix.rows(); ++r) {
            if (matrix(r, c).is_zero()) continue;
            if (target->degree(r) != source->degree(c) + degree || target->left_vertex(r) != source->left_vertex(c) ||
                target->right_vertex(r) != source->right_vertex(c)) {
                throw std::logic_error("BimoduleMap: map does not respect grading or vertices");
            }
        }
    }
    for (int x = 0; x < source->left_algebra()->quiver().num_arrows(); ++x) {
        if (!(matrix * source->left_action(x) == target->left_action(x) * matrix)) {
            throw std::logic_error("BimoduleMap: not a left module map");
        }
    }
    for (int y = 0; y < source->right_algebra()->quiver().num_arrows(); ++y) {
        if (!(matrix * source->right_action(y) == target->right_action(y) * matrix)) {
            throw std::logic_error("BimoduleMap: not a right module map");
        }
    }
}

BimoduleMap compose(const BimoduleMap &g, const BimoduleMap &f)
{
    if (f.target.get() != g.source.get() && f.target->dim() != g.source->dim()) {
        throw std::invalid_argument("compose: bimodule maps are not composable");
    }
    return BimoduleMap{f.source, g.target, f.degree + g.degree, g.matrix * f.matrix};
}

GradedBimodule regular_bimodule(const AlgebraPtr &alg)
{
    const std::size_t n = alg->dim();
    std::vector<int> deg, lv, rv;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) {
        deg.push_back(alg->degree(i));
        lv.push_back(alg->path(i).target);
        rv.push_back(alg->path(i).source);
        labels.push_back(alg->basis_name(i));
    }
    std::vector<Matrix> left, right;
    for (int x = 0; x < alg->quiver().num_arrows(); ++x) {
        Matrix l(n, n), r(n, n);
        const std::size_t xi = alg->arrow(x);
        for (std::size_t j = 0; j < n; ++j) {
            if (const auto k = alg->mul(xi, j)) l(*k, j) = 1;
            if (const auto k = alg->mul(j, xi)) r(*k, j) = 1;
        }
        left.push_back(std::move(l));
        right.push_back(std::move(r));
    }
    return GradedBimodule(alg, alg, deg, lv, rv, left, right, labels);
}

GradedBimodule outer_tensor_bimodule(const AlgebraPtr &alg, int u, int v, int shift)
{
    std::vector<std::size_t> ps, qs;
    for (std::size_t i = 0; i < alg->dim(); ++i) {
        if (alg->path(i).source == u) ps.push_back(i);
        if (alg->path(i).target == v) qs.push_back(i);
    }
    std::vector<int> deg, lv, rv;
    std::vector<std::string> labels;
    for (auto p : ps) {
        for (auto q : qs) {
            deg.push_back(alg->degree(p) + alg->degree(q) + shift);
            lv.push_back(alg->path(p).target);
            rv.push_back(alg->path(q).source);
            labels.push_back(alg->basis_name(p) + "⊗" + alg->basis_name(q));
        }
    }
    const std::size_t n = deg.size();
    auto index = [&](std::size_t pi, std::size_t qi) { return pi * qs.size() + qi; };
    auto find = [](const std::vector<std::size_t> &v, std::size_t x) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] == x) return i;
        }
        return std::nullopt;
    };
    std::vector<Matrix> left, right;
    for (int x = 0; x < alg->quiver().num_arrows(); ++x) {
        Matrix l(n, n), r(n, n);
        const std::size_t xi = alg->arrow(x);
        for (std::size_t pi = 0; pi < ps.size(); ++pi) {
            for (std::size_t qi = 0; qi < qs.size(); ++qi) {
                if (const auto k = alg->mul(xi, ps[pi])) l(index(*find(ps, *k), qi), index(pi, qi)) = 1;
                if (const auto k = alg->mul(qs[qi], xi)) r(index(pi, *find(qs, *k)), index(pi, qi)) = 1;
            }
        }
        left.push_back(std::move(l));
        right.push_back(std::move(r));
    }
    return GradedBimodule(alg, alg, deg, lv, rv, left, right, labels);
}

} // namespace jwcat
