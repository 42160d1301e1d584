#include <jwcat/path_algebra.hpp>

#include <algorithm>

namespace jwcat
{

GradedAlgebra::GradedAlgebra(Quiver q, std::vector<std::vector<int>> relations, int d_max, std::string name)
    : name_(std::move(name)), quiver_(std::move(q)), relations_(std::move(relations)), d_max_(d_max)
{
    for (const auto &rel : relations_) {
        if (rel.size() != 2) throw ConstructionError("relations must be paths of length 2");
        const auto &left = quiver_.arrows().at(static_cast<std::size_t>(rel[0]));
        const auto &right = quiver_.arrows().at(static_cast<std::size_t>(rel[1]));
        if (left.source != right.target) {
            throw ConstructionError("relation " + left.name + right.name + " is not a composable path");
        }
    }

    std::vector<Path> layer;
    for (int v = 0; v < quiver_.num_vertices(); ++v) layer.push_back(Path{v, v, {}});
    for (int len = 0; !layer.empty(); ++len) {
        if (len > d_max_) {
            throw ConstructionError("path algebra '" + name_ + "' has nonzero paths beyond length " +
                                    std::to_string(d_max_));
        }
        for (const auto &p : layer) basis_.push_back(p);
        std::vector<Path> next;
        for (const auto &p : layer) {
            for (int a = 0; a < quiver_.num_arrows(); ++a) {
                const auto &arr = quiver_.arrows()[static_cast<std::size_t>(a)];
                if (arr.source != p.target) continue;
                Path np{p.source, arr.target, {a}};
                np.arrows.insert(np.arrows.end(), p.arrows.begin(), p.arrows.end());
                if (!word_vanishes(np.arrows)) next.push_back(std::move(np));
            }
        }
        layer = std::move(next);
    }

    for (const auto &p : basis_) {
        int d = 0;
        for (int a : p.arrows) d += quiver_.arrows()[static_cast<std::size_t>(a)].degree;
        degrees_.push_back(d);
    }
    // Keep the basis sorted by degree; arrows of degree > 1 can reorder layers.
    std::vector<std::size_t> order(basis_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return degrees_[x] < degrees_[y]; });
    std::vector<Path> sorted;
    std::vector<int> sorted_deg;
    for (auto i : order) {
        sorted.push_back(basis_[i]);
        sorted_deg.push_back(degrees_[i]);
    }
    basis_ = std::move(sorted);
    degrees_ = std::move(sorted_deg);

    for (int v = 0; v < quiver_.num_vertices(); ++v) idempotents_.push_back(*index_of(Path{v, v, {}}));
    for (int a = 0; a < quiver_.num_arrows(); ++a) {
        const auto &arr = quiver_.arrows()[static_cast<std::size_t>(a)];
        const auto idx = index_of(Path{arr.source, arr.target, {a}});
        if (!idx) throw ConstructionError("arrow '" + arr.name + "' vanishes");
        arrow_basis_.push_back(*idx);
    }

    table_.assign(basis_.size(), std::vector<std::optional<std::size_t>>(basis_.size()));
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        for (std::size_t j = 0; j < basis_.size(); ++j) {
            const Path &p = basis_[i];
            const Path &q2 = basis_[j];
            if (p.source != q2.target) continue;
            Path pq{q2.source, p.target, p.arrows};
            pq.arrows.insert(pq.arrows.end(), q2.arrows.begin(), q2.arrows.end());
            if (word_vanishes(pq.arrows)) continue;
            table_[i][j] = index_of(pq);
        }
    }
}

bool GradedAlgebra::word_vanishes(const std::vector<int> &word) const
{
    for (std::size_t k = 0; k + 1 < word.size(); ++k) {
        for (const auto &rel : relations_) {
            if (word[k] == rel[0] && word[k + 1] == rel[1]) return true;
        }
    }
    return false;
}

int GradedAlgebra::max_degree() const
{
    return degrees_.empty() ? 0 : degrees_.back();
}

std::vector<int> GradedAlgebra::graded_dims() const
{
    std::vector<int> dims(static_cast<std::size_t>(max_degree() + 1), 0);
    for (int d : degrees_) ++dims[static_cast<std::size_t>(d)];
    return dims;
}

std::optional<std::size_t> GradedAlgebra::index_of(const Path &p) const
{
    const auto it = std::find(basis_.begin(), basis_.end(), p);
    if (it == basis_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - basis_.begin());
}

std::optional<std::size_t> GradedAlgebra::index_of(const std::string &name) const
{
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (basis_name(i) == name) return i;
    }
    // Unaliased spelling is accepted too.
    for (const auto &[i, alias] : aliases_) {
        std::string raw;
        for (int a : basis_[i].arrows) raw += quiver_.arrows()[static_cast<std::size_t>(a)].name;
        if (raw == name) return i;
    }
    return std::nullopt;
}

std::string GradedAlgebra::basis_name(std::size_t i) const
{
    if (const auto it = aliases_.find(i); it != aliases_.end()) return it->second;
    const Path &p = basis_.at(i);
    if (p.arrows.empty()) return "e(" + quiver_.vertices()[static_cast<std::size_t>(p.source)] + ")";
    std::string out;
    for (int a : p.arrows) out += quiver_.arrows()[static_cast<std::size_t>(a)].name;
    return out;
}

void GradedAlgebra::set_alias(const std::string &path_word, const std::string &alias)
{
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (basis_name(i) == path_word) {
            aliases_[i] = alias;
            return;
        }
    }
    throw ConstructionError("set_alias: no basis path named '" + path_word + "'");
}

AlgebraPtr build_path_algebra(const Quiver &q, const std::vector<std::vector<std::string>> &relations, int d_max,
                              const std::string &name)
{
    std::vector<std::vector<int>> rels;
    for (const auto &word : relations) {
        std::vector<int> r;
        for (const auto &n : word) {
            const auto idx = q.arrow_index(n);
            if (!idx) throw ConstructionError("relation mentions unknown arrow '" + n + "'");
            r.push_back(*idx);
        }
        rels.push_back(std::move(r));
    }
    return std::make_shared<const GradedAlgebra>(q, std::move(rels), d_max, name);
}

AlgebraElement::AlgebraElement(AlgebraPtr parent, std::size_t basis_index, Rational c) : parent_(std::move(parent))
{
    add(basis_index, c);
}

AlgebraElement AlgebraElement::named(const AlgebraPtr &parent, const std::string &name)
{
    const auto idx = parent->index_of(name);
    if (!idx) throw std::invalid_argument("no basis element named '" + name + "' in " + parent->name());
    return AlgebraElement(parent, *idx);
}

Rational AlgebraElement::coeff(std::size_t i) const
{
    const auto it = coeffs_.find(i);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

std::optional<int> AlgebraElement::homogeneous_degree() const
{
    std::optional<int> d;
    for (const auto &[i, c] : coeffs_) {
        const int di = parent_->degree(i);
        if (d && *d != di) return std::nullopt;
        d = di;
    }
    return d;
}

void AlgebraElement::add(std::size_t i, const Rational &c)
{
    if (c.is_zero()) return;
    if (!parent_ || i >= parent_->dim()) throw std::out_of_range("AlgebraElement: basis index out of range");
    auto [it, inserted] = coeffs_.try_emplace(i, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

namespace
{
void require_same(const AlgebraPtr &x, const AlgebraPtr &y)
{
    if (x && y && x != y) throw std::invalid_argument("algebra elements from different algebras");
}
} // namespace

AlgebraElement &AlgebraElement::operator+=(const AlgebraElement &o)
{
    require_same(parent_, o.parent_);
    if (!parent_) parent_ = o.parent_;
    for (const auto &[i, c] : o.coeffs_) add(i, c);
    return *this;
}

AlgebraElement &AlgebraElement::operator-=(const AlgebraElement &o)
{
    require_same(parent_, o.parent_);
    if (!parent_) parent_ = o.parent_;
    for (const auto &[i, c] : o.coeffs_) add(i, -c);
    return *this;
}

AlgebraElement &AlgebraElement::operator*=(const Rational &s)
{
    if (s.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto &[i, c] : coeffs_) c *= s;
    return *this;
}

AlgebraElement operator*(const AlgebraElement &x, const AlgebraElement &y)
{
    return multiply(x, y);
}

AlgebraElement multiply(const AlgebraElement &x, const AlgebraElement &y)
{
    if (!x.parent() || !y.parent() || x.parent() != y.parent()) {
        throw std::invalid_argument("multiply: elements belong to different algebras");
    }
    AlgebraElement out(x.parent());
    for (const auto &[i, ci] : x.coeffs()) {
        for (const auto &[j, cj] : y.coeffs()) {
            if (const auto k = x.parent()->mul(i, j)) out.add(*k, ci * cj);
        }
    }
    return out;
}

bool operator==(const AlgebraElement &x, const AlgebraElement &y)
{
    if (x.coeffs_.empty() && y.coeffs_.empty()) return true;
    return x.parent_ == y.parent_ && x.coeffs_ == y.coeffs_;
}

std::string AlgebraElement::to_string() const
{
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto &[i, c] : coeffs_) {
        Rational mag = c;
        if (c < Rational(0)) {
            out += first ? "-" : " - ";
            mag = -c;
        } else if (!first) {
            out += " + ";
        }
        first = false;
        if (!mag.is_one()) out += mag.to_string() + "*";
        out += parent_->basis_name(i);
    }
    return out;
}

} // namespace jwcat
