#include <jwcat/reduce.hpp>

#include <jwcat/proj_homs.hpp>

namespace jwcat
{

namespace
{

using Index = std::vector<std::size_t>;

Matrix select(const Matrix &m, const Index &rows, const Index &cols)
{
    Matrix out(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = m(rows[r], cols[c]);
    }
    return out;
}

// Basis indices of summand k, and of all the others.
std::pair<Index, Index> split(const Term &t, std::size_t k)
{
    Index in, out;
    for (std::size_t i = 0; i < t.dim(); ++i) (t.owner(i) == k ? in : out).push_back(i);
    return {in, out};
}

Term without(const Term &t, std::size_t k)
{
    std::vector<Summand> s = t.summands();
    s.erase(s.begin() + static_cast<std::ptrdiff_t>(k));
    return Term(std::move(s));
}

bool invertible_component(const Matrix &d, const Term &src, std::size_t a, const Term &dst, std::size_t b)
{
    const Summand &sa = src.summand(a);
    const Summand &sb = dst.summand(b);
    if (sa.dim() != sb.dim() || sa.dim() == 0) return false;
    if (sa.tag && sb.tag) return *sa.tag == *sb.tag && !d(dst.offset(b), src.offset(a)).is_zero();
    return block_invertible(sa, sb, summand_block(d, src, a, dst, b));
}

struct Pivot
{
    std::size_t k, a, b;
};

std::optional<Pivot> find_pivot(const std::vector<Term> &terms, const std::vector<Matrix> &diffs)
{
    for (std::size_t k = 0; k < diffs.size(); ++k) {
        const Term &src = terms[k];
        const Term &dst = terms[k + 1];
        for (std::size_t a = 0; a < src.size(); ++a) {
            for (std::size_t b = 0; b < dst.size(); ++b) {
                if (invertible_component(diffs[k], src, a, dst, b)) return Pivot{k, a, b};
            }
        }
    }
    return std::nullopt;
}

} // namespace

bool is_minimal(const Complex &x)
{
    std::vector<Term> terms = x.terms();
    std::vector<Matrix> diffs;
    for (int i = x.lo(); i < x.hi(); ++i) diffs.push_back(x.d(i));
    return !find_pivot(terms, diffs).has_value();
}

Reduction gaussian_reduce(const ComplexPtr &x, std::size_t budget)
{
    std::vector<Term> terms = x->terms();
    std::vector<Matrix> diffs;
    for (int i = x->lo(); i < x->hi(); ++i) diffs.push_back(x->d(i));
    const std::size_t n = terms.size();
    std::vector<Matrix> F(n), G(n);
    std::vector<Matrix> H(n); // H[k]: X^k -> X^{k-1}, original bases
    for (std::size_t k = 0; k < n; ++k) {
        F[k] = Matrix::identity(terms[k].dim());
        G[k] = Matrix::identity(terms[k].dim());
        H[k] = Matrix(k == 0 ? 0 : terms[k - 1].dim(), terms[k].dim());
    }

    std::size_t steps = 0;
    while (const auto piv = find_pivot(terms, diffs)) {
        if (++steps > budget) throw BudgetError("gaussian_reduce: step budget exhausted");
        const std::size_t k = piv->k;
        const Term &T = terms[k];
        const Term &U = terms[k + 1];
        const auto [A, C] = split(T, piv->a);
        const auto [B, D] = split(U, piv->b);
        const Matrix &d = diffs[k];
        const Matrix phi_inv = *select(d, B, A).inverse();
        const Matrix delta = select(d, B, C);
        const Matrix gamma = select(d, D, A);
        const Matrix eps = select(d, D, C);
        const Matrix gp = gamma * phi_inv;

        // Equivalence data for this single cancellation.
        Matrix fk(C.size(), T.dim());
        for (std::size_t r = 0; r < C.size(); ++r) fk(r, C[r]) = 1;
        Matrix fk1(D.size(), U.dim());
        for (std::size_t r = 0; r < D.size(); ++r) {
            fk1(r, D[r]) = 1;
            for (std::size_t c = 0; c < B.size(); ++c) fk1(r, B[c]) = -gp(r, c);
        }
        const Matrix pd = phi_inv * delta;
        Matrix gk(T.dim(), C.size());
        for (std::size_t c = 0; c < C.size(); ++c) {
            gk(C[c], c) = 1;
            for (std::size_t r = 0; r < A.size(); ++r) gk(A[r], c) = -pd(r, c);
        }
        Matrix gk1(U.dim(), D.size());
        for (std::size_t c = 0; c < D.size(); ++c) gk1(D[c], c) = 1;
        Matrix h(T.dim(), U.dim());
        for (std::size_t r = 0; r < A.size(); ++r) {
            for (std::size_t c = 0; c < B.size(); ++c) h(A[r], B[c]) = phi_inv(r, c);
        }

        H[k + 1] += G[k] * h * F[k + 1];
        F[k] = fk * F[k];
        F[k + 1] = fk1 * F[k + 1];
        G[k] = G[k] * gk;
        G[k + 1] = G[k + 1] * gk1;

        Matrix new_d = eps - gp * delta;
        if (k > 0) {
            Index all_prev(terms[k - 1].dim());
            for (std::size_t i = 0; i < all_prev.size(); ++i) all_prev[i] = i;
            diffs[k - 1] = select(diffs[k - 1], C, all_prev);
        }
        if (k + 1 < diffs.size()) {
            Index all_next(terms[k + 2].dim());
            for (std::size_t i = 0; i < all_next.size(); ++i) all_next[i] = i;
            diffs[k + 1] = select(diffs[k + 1], all_next, D);
        }
        diffs[k] = std::move(new_d);
        terms[k] = without(T, piv->a);
        terms[k + 1] = without(terms[k + 1], piv->b);
    }

    Complex red(x->algebra(), x->lo(), terms, diffs, x->open_lo(), x->open_hi());
    // Cancellations change the terms, so the periodic pattern is re-read.
    if (x->open_lo() || x->open_hi()) red = red.with_tail(detect_tail(red, x->open_lo() ? Side::Left : Side::Right));
    auto reduced = make_complex(std::move(red));
    Reduction out{x, reduced, ChainMap{x, reduced, {}}, ChainMap{reduced, x, {}}, Homotopy{x, x, {}}, steps};
    for (std::size_t k = 0; k < n; ++k) {
        const int i = x->lo() + static_cast<int>(k);
        out.f.maps[i] = F[k];
        out.g.maps[i] = G[k];
        if (k > 0) out.h.maps[i] = H[k];
    }
    return out;
}

} // namespace jwcat
