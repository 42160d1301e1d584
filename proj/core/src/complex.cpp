#include <jwcat/complex.hpp>

#include <jwcat/series.hpp>

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace jwcat
{

ModulePtr projective_module(const AlgebraPtr &alg, int vertex, int shift)
{
    static std::mutex mu;
    static std::map<std::tuple<const GradedAlgebra *, int, int>, ModulePtr> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto &slot = cache[{alg.get(), vertex, shift}];
    if (!slot) slot = std::make_shared<const GradedModule>(shift_internal(projective(alg, vertex), shift));
    return slot;
}

Summand projective_summand(const AlgebraPtr &alg, int vertex, int shift, std::string label)
{
    return Summand{projective_module(alg, vertex, shift), ProjTag{vertex, shift}, std::move(label)};
}

Term::Term(std::vector<Summand> summands) : summands_(std::move(summands))
{
    for (const auto &s : summands_) {
        offsets_.push_back(dim_);
        for (std::size_t i = 0; i < s.module->dim(); ++i) {
            degrees_.push_back(s.module->degree(i));
            vertices_.push_back(s.module->vertex(i));
        }
        dim_ += s.module->dim();
    }
}

bool Term::all_tagged() const
{
    return std::all_of(summands_.begin(), summands_.end(), [](const Summand &s) { return s.tag.has_value(); });
}

std::size_t Term::owner(std::size_t i) const
{
    const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), i);
    return static_cast<std::size_t>(it - offsets_.begin()) - 1;
}

Matrix Term::action(int arrow) const
{
    Matrix m(dim_, dim_);
    for (std::size_t k = 0; k < summands_.size(); ++k) m.set_block(offsets_[k], offsets_[k], summands_[k].module->action(arrow));
    return m;
}

GradedModule Term::module(const AlgebraPtr &alg) const
{
    if (summands_.empty()) return GradedModule::zero(alg);
    std::vector<const GradedModule *> parts;
    for (const auto &s : summands_) parts.push_back(s.module.get());
    return direct_sum(parts);
}

std::string to_string(Regime r)
{
    switch (r) {
    case Regime::Bounded:
        return "bounded";
    case Regime::Left:
        return "D<";
    case Regime::Right:
        return "D>";
    }
    return "?";
}

Complex::Complex(AlgebraPtr alg, int lo, std::vector<Term> terms, std::vector<Matrix> diffs, bool open_lo,
                 bool open_hi, std::optional<Tail> tail, bool check)
    : alg_(std::move(alg)), lo_(lo), terms_(std::move(terms)), diffs_(std::move(diffs)), open_lo_(open_lo),
      open_hi_(open_hi), tail_(std::move(tail))
{
    if (open_lo_ && open_hi_) throw std::invalid_argument("Complex: open on both sides is not supported");
    const std::size_t expect = terms_.empty() ? 0 : terms_.size() - 1;
    if (diffs_.size() != expect) throw std::invalid_argument("Complex: need one differential between consecutive terms");
    for (std::size_t k = 0; k < diffs_.size(); ++k) {
        if (diffs_[k].rows() != terms_[k + 1].dim() || diffs_[k].cols() != terms_[k].dim()) {
            throw std::invalid_argument("Complex: differential shape mismatch at degree " +
                                        std::to_string(lo_ + static_cast<int>(k)));
        }
    }
    if (check) validate();
}

Complex Complex::zero(const AlgebraPtr &alg)
{
    return Complex(alg, 0, {}, {});
}

Complex Complex::from_summand(const AlgebraPtr &alg, Summand s, int degree)
{
    return Complex(alg, degree, {Term({std::move(s)})}, {});
}

Complex Complex::from_module(const ModulePtr &m, int degree)
{
    return from_summand(m->algebra(), Summand{m, std::nullopt, {}}, degree);
}

Regime Complex::regime() const noexcept
{
    if (open_lo_) return Regime::Left;
    if (open_hi_) return Regime::Right;
    return Regime::Bounded;
}

bool Complex::knows_term(int i) const noexcept
{
    if (i >= lo_ && i <= hi()) return true;
    if (i < lo_) return !open_lo_;
    return !open_hi_;
}

const Term &Complex::term(int i) const
{
    static const Term empty;
    if (i >= lo_ && i <= hi()) return terms_[static_cast<std::size_t>(i - lo_)];
    if (!knows_term(i)) throw WindowError("complex term in degree " + std::to_string(i) + " lies beyond the window");
    return empty;
}

Matrix Complex::d(int i) const
{
    if (i >= lo_ && i + 1 <= hi()) return diffs_[static_cast<std::size_t>(i - lo_)];
    if (!knows_differential(i)) {
        throw WindowError("differential in degree " + std::to_string(i) + " lies beyond the window");
    }
    return Matrix(term(i + 1).dim(), term(i).dim());
}

bool Complex::is_zero() const
{
    return !open_lo_ && !open_hi_ && total_dim() == 0;
}

std::size_t Complex::total_dim() const
{
    std::size_t n = 0;
    for (const auto &t : terms_) n += t.dim();
    return n;
}

std::optional<int> Complex::first_nonzero() const
{
    for (int i = lo_; i <= hi(); ++i) {
        if (!term(i).empty()) return i;
    }
    return std::nullopt;
}

std::optional<int> Complex::last_nonzero() const
{
    for (int i = hi(); i >= lo_; --i) {
        if (!term(i).empty()) return i;
    }
    return std::nullopt;
}

void Complex::validate() const
{
    for (std::size_t k = 0; k + 1 < diffs_.size(); ++k) {
        if (!(diffs_[k + 1] * diffs_[k]).is_zero()) {
            throw std::logic_error("complex: d^2 != 0 at degree " + std::to_string(lo_ + static_cast<int>(k)));
        }
    }
    const int arrows = alg_->quiver().num_arrows();
    for (std::size_t k = 0; k < diffs_.size(); ++k) {
        const Term &src = terms_[k];
        const Term &dst = terms_[k + 1];
        const Matrix &m = diffs_[k];
        for (std::size_t c = 0; c < m.cols(); ++c) {
            for (std::size_t r = 0; r < m.rows(); ++r) {
                if (m(r, c).is_zero()) continue;
                if (src.degree(c) != dst.degree(r) || src.vertex(c) != dst.vertex(r)) {
                    throw std::logic_error("complex: differential is not homogeneous of degree 0");
                }
            }
        }
        for (int x = 0; x < arrows; ++x) {
            if (!(m * src.action(x) == dst.action(x) * m)) {
                throw std::logic_error("complex: differential is not a module map at degree " +
                                       std::to_string(lo_ + static_cast<int>(k)));
            }
        }
    }
}

Complex Complex::trimmed(int new_lo, int new_hi, bool new_open_lo, bool new_open_hi) const
{
    if (new_lo < lo_ || new_hi > hi()) throw std::invalid_argument("Complex::trimmed: range exceeds stored terms");
    std::vector<Term> terms;
    std::vector<Matrix> diffs;
    for (int i = new_lo; i <= new_hi; ++i) {
        terms.push_back(term(i));
        if (i < new_hi) diffs.push_back(d(i));
    }
    return Complex(alg_, new_lo, std::move(terms), std::move(diffs), new_open_lo, new_open_hi, tail_, false);
}

Complex Complex::with_tail(std::optional<Tail> tail) const
{
    Complex out = *this;
    out.tail_ = std::move(tail);
    return out;
}

Summand shift_summand(const Summand &s, int r)
{
    if (r == 0) return s;
    if (s.tag) {
        return Summand{projective_module(s.module->algebra(), s.tag->vertex, s.tag->shift + r),
                       ProjTag{s.tag->vertex, s.tag->shift + r}, s.label};
    }
    return Summand{std::make_shared<const GradedModule>(shift_internal(*s.module, r)), std::nullopt, s.label};
}

Term shift_term(const Term &t, int r)
{
    std::vector<Summand> out;
    for (const auto &s : t.summands()) out.push_back(shift_summand(s, r));
    return Term(std::move(out));
}

Complex shift(const Complex &x, int internal, int homological)
{
    std::vector<Term> terms;
    std::vector<Matrix> diffs;
    const Rational sign = homological % 2 == 0 ? Rational(1) : Rational(-1);
    for (int i = x.lo(); i <= x.hi(); ++i) {
        terms.push_back(shift_term(x.term(i), internal));
        if (i < x.hi()) diffs.push_back(x.d(i) * sign);
    }
    std::optional<Tail> tail = x.tail();
    if (tail) {
        tail->anchor -= homological;
        for (auto &t : tail->block) t = shift_term(t, internal);
    }
    return Complex(x.algebra(), x.lo() - homological, std::move(terms), std::move(diffs), x.open_lo(), x.open_hi(),
                   std::move(tail), false);
}

Matrix ChainMap::at(int i) const
{
    if (const auto it = maps.find(i); it != maps.end()) return it->second;
    const std::size_t r = target->knows_term(i) ? target->term(i).dim() : 0;
    const std::size_t c = source->knows_term(i) ? source->term(i).dim() : 0;
    return Matrix(r, c);
}

void ChainMap::validate() const
{
    const int lo = std::min(source->lo(), target->lo()) - 1;
    const int hi = std::max(source->hi(), target->hi());
    for (int i = lo; i <= hi; ++i) {
        if (!source->knows_differential(i) || !target->knows_differential(i)) continue;
        if (!(target->d(i) * at(i) == at(i + 1) * source->d(i))) {
            throw std::logic_error("chain map does not commute with differentials at degree " + std::to_string(i));
        }
    }
}

ChainMap identity_map(const ComplexPtr &x)
{
    ChainMap f{x, x, {}};
    for (int i = x->lo(); i <= x->hi(); ++i) f.maps[i] = Matrix::identity(x->term(i).dim());
    return f;
}

ChainMap compose(const ChainMap &g, const ChainMap &f)
{
    ChainMap out{f.source, g.target, {}};
    for (const auto &[i, m] : f.maps) {
        if (g.maps.count(i)) out.maps[i] = g.maps.at(i) * m;
    }
    return out;
}

ChainMap operator-(const ChainMap &f, const ChainMap &g)
{
    ChainMap out{f.source, f.target, f.maps};
    for (const auto &[i, m] : g.maps) {
        if (out.maps.count(i)) {
            out.maps[i] -= m;
        } else {
            out.maps[i] = m * Rational(-1);
        }
    }
    return out;
}

ChainMap operator*(const ChainMap &f, const Rational &s)
{
    ChainMap out = f;
    for (auto &[i, m] : out.maps) m *= s;
    return out;
}

Matrix Homotopy::at(int i) const
{
    if (const auto it = maps.find(i); it != maps.end()) return it->second;
    const std::size_t r = target->knows_term(i - 1) ? target->term(i - 1).dim() : 0;
    const std::size_t c = source->knows_term(i) ? source->term(i).dim() : 0;
    return Matrix(r, c);
}

bool witnesses(const Homotopy &h, const ChainMap &f, const ChainMap &g, int lo, int hi)
{
    for (int i = lo; i <= hi; ++i) {
        const Matrix lhs = f.at(i) - g.at(i);
        const Matrix rhs = h.target->d(i - 1) * h.at(i) + h.at(i + 1) * h.source->d(i);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

const Term &Bicomplex::term(int h, int v) const
{
    static const Term empty;
    const auto it = terms_.find({h, v});
    return it == terms_.end() ? empty : it->second;
}

Matrix Bicomplex::dh(int h, int v) const
{
    if (const auto it = dh_.find({h, v}); it != dh_.end()) return it->second;
    return Matrix(term(h + 1, v).dim(), term(h, v).dim());
}

Matrix Bicomplex::dv(int h, int v) const
{
    if (const auto it = dv_.find({h, v}); it != dv_.end()) return it->second;
    return Matrix(term(h, v + 1).dim(), term(h, v).dim());
}

void Bicomplex::validate() const
{
    for (const auto &[key, t] : terms_) {
        const auto [h, v] = key;
        if (!(dh(h + 1, v) * dh(h, v)).is_zero()) throw std::logic_error("bicomplex: dh^2 != 0");
        if (!(dv(h, v + 1) * dv(h, v)).is_zero()) throw std::logic_error("bicomplex: dv^2 != 0");
        if (!(dh(h, v + 1) * dv(h, v) == dv(h + 1, v) * dh(h, v))) {
            throw std::logic_error("bicomplex: squares do not commute at (" + std::to_string(h) + ", " +
                                   std::to_string(v) + ")");
        }
    }
}

namespace
{

std::vector<std::pair<int, int>> antidiagonal(const Bicomplex &b, int t)
{
    std::vector<std::pair<int, int>> keys;
    for (const auto &[key, term] : b.terms()) {
        if (key.first + key.second == t && !term.empty()) keys.push_back(key);
    }
    return keys; // map order sorts by h
}

} // namespace

std::size_t total_offset(const Bicomplex &b, int h, int v)
{
    std::size_t off = 0;
    for (const auto &key : antidiagonal(b, h + v)) {
        if (key.first >= h) break;
        off += b.term(key.first, key.second).dim();
    }
    return off;
}

std::size_t total_summand_offset(const Bicomplex &b, int h, int v)
{
    std::size_t off = 0;
    for (const auto &key : antidiagonal(b, h + v)) {
        if (key.first >= h) break;
        off += b.term(key.first, key.second).size();
    }
    return off;
}

Complex total_complex(const Bicomplex &b, int lo, int hi, bool open_lo, bool open_hi)
{
    std::vector<Term> terms;
    for (int t = lo; t <= hi; ++t) {
        std::vector<Summand> summands;
        for (const auto &key : antidiagonal(b, t)) {
            const auto &s = b.term(key.first, key.second).summands();
            summands.insert(summands.end(), s.begin(), s.end());
        }
        terms.emplace_back(std::move(summands));
    }
    std::vector<Matrix> diffs;
    for (int t = lo; t < hi; ++t) {
        Matrix m(terms[static_cast<std::size_t>(t + 1 - lo)].dim(), terms[static_cast<std::size_t>(t - lo)].dim());
        for (const auto &[h, v] : antidiagonal(b, t)) {
            const std::size_t col = total_offset(b, h, v);
            if (!b.term(h + 1, v).empty()) m.add_block(total_offset(b, h + 1, v), col, b.dh(h, v));
            if (!b.term(h, v + 1).empty()) {
                m.add_block(total_offset(b, h, v + 1), col, b.dv(h, v), h % 2 == 0 ? Rational(1) : Rational(-1));
            }
        }
        diffs.push_back(std::move(m));
    }
    return Complex(b.algebra(), lo, std::move(terms), std::move(diffs), open_lo, open_hi);
}

GradedModule homology(const Complex &x, int i)
{
    const bool determined = (!x.open_lo() || i >= x.determined_lo()) && (!x.open_hi() || i <= x.determined_hi());
    if (!determined) throw WindowError("homology in degree " + std::to_string(i) + " is not determined by the window");
    const Term &t = x.term(i);
    const GradedModule m = t.module(x.algebra());
    if (t.empty()) return m;
    const Matrix out = x.d(i);
    const Matrix in = x.d(i - 1);

    // Kernel blockwise by (degree, vertex) so the basis stays homogeneous.
    std::map<std::pair<int, int>, std::vector<std::size_t>> blocks;
    for (std::size_t j = 0; j < t.dim(); ++j) blocks[{t.degree(j), t.vertex(j)}].push_back(j);
    std::vector<std::vector<Rational>> kernel;
    for (const auto &[key, idx] : blocks) {
        Matrix sub(out.rows(), idx.size());
        for (std::size_t c = 0; c < idx.size(); ++c) {
            for (std::size_t r = 0; r < out.rows(); ++r) sub(r, c) = out(r, idx[c]);
        }
        for (const auto &v : sub.nullspace()) {
            std::vector<Rational> full(t.dim());
            for (std::size_t c = 0; c < idx.size(); ++c) full[idx[c]] = v[c];
            kernel.push_back(std::move(full));
        }
    }
    std::vector<std::vector<Rational>> image;
    for (std::size_t c = 0; c < in.cols(); ++c) {
        auto v = in.col(c);
        if (std::any_of(v.begin(), v.end(), [](const Rational &r) { return !r.is_zero(); })) image.push_back(std::move(v));
    }
    return subquotient(m, kernel, image);
}

} // namespace jwcat

namespace jwcat
{

namespace
{

std::optional<std::vector<ProjTag>> sorted_tag_list(const Term &t)
{
    std::vector<ProjTag> out;
    for (const auto &s : t.summands()) {
        if (!s.tag) return std::nullopt;
        out.push_back(*s.tag);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Shift s with a == b<s>, if the terms are nonzero and tagged.
std::optional<int> relative_shift(const Term &a, const Term &b)
{
    const auto ta = sorted_tag_list(a);
    const auto tb = sorted_tag_list(b);
    if (!ta || !tb || ta->size() != tb->size() || ta->empty()) return std::nullopt;
    const int s = ta->front().shift - tb->front().shift;
    for (std::size_t k = 0; k < ta->size(); ++k) {
        if ((*ta)[k].vertex != (*tb)[k].vertex || (*ta)[k].shift != (*tb)[k].shift + s) return std::nullopt;
    }
    return s;
}

bool matches_shifted(const Term &a, const Term &b, int s)
{
    if (a.empty() && b.empty()) return true;
    const auto r = relative_shift(a, b);
    return r && *r == s;
}

} // namespace

bool same_summands(const Term &a, const Term &b)
{
    if (a.empty() && b.empty()) return true;
    const auto r = relative_shift(a, b);
    return r && *r == 0;
}

std::optional<Tail> detect_tail(const Complex &x, Side side, int max_period, int extra_periods)
{
    const bool left = side == Side::Left;
    if (left ? !x.open_lo() : !x.open_hi()) return std::nullopt;
    const int dlo = x.determined_lo();
    const int dhi = x.determined_hi();
    // Step away from the open side.
    const int dir = left ? 1 : -1;
    const int edge = left ? dlo : dhi;
    auto inside = [&](int j) { return j >= dlo && j <= dhi; };

    for (int p = 1; p <= max_period; ++p) {
        if (!inside(edge + dir * (p * (extra_periods + 1) - 1))) continue;
        std::optional<int> shift;
        for (int k = 0; k < p && !shift; ++k) {
            shift = relative_shift(x.term(edge + dir * k), x.term(edge + dir * (k + p)));
        }
        if (!shift) {
            // A run of zero terms is a tail with any shift; record it as 0.
            bool zero = true;
            for (int k = 0; k < 2 * p; ++k) zero = zero && x.term(edge + dir * k).empty();
            if (!zero) continue;
            shift = 0;
        }
        // j runs away from the open side while term(j) == term(j + dir*p)<shift>.
        int j = edge;
        while (inside(j + dir * p) && matches_shifted(x.term(j), x.term(j + dir * p), *shift)) j += dir;
        const int covered = (j - edge) * dir + p; // degrees in the periodic region
        if (covered < p * (extra_periods + 1)) continue;
        Tail t;
        t.side = side;
        t.period = p;
        t.internal_shift = *shift;
        // Innermost block: [j, j+p) on the left, (j-p, j] on the right.
        t.anchor = left ? j : j - p + 1;
        for (int k = 0; k < p; ++k) t.block.push_back(x.term(t.anchor + k));
        return t;
    }
    return std::nullopt;
}

} // namespace jwcat
