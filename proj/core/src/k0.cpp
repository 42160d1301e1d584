#include <jwcat/k0.hpp>

#include <jwcat/zigzag.hpp>

#include <algorithm>

namespace jwcat
{

namespace
{

TruncatedSeries shift_series(const TruncatedSeries &s, int k)
{
    return s.shifted(k);
}

LaurentPoly vertex_part(const Term &t, int vertex, bool inverted)
{
    LaurentPoly p;
    for (std::size_t i = 0; i < t.dim(); ++i) {
        if (t.vertex(i) == vertex) p.add_term(inverted ? -t.degree(i) : t.degree(i), 1);
    }
    return p;
}

void require_same_side(const KClass &x, const KClass &y)
{
    if (x.inverted != y.inverted) throw std::invalid_argument("classes live in different completions");
}

} // namespace

KClass KClass::zero(bool inverted) { return KClass{TruncatedSeries::zero(), TruncatedSeries::zero(), inverted}; }

KClass KClass::truncated(int order) const { return KClass{l1.truncated(order), l2.truncated(order), inverted}; }

KClass KClass::shifted(int r) const
{
    const int k = inverted ? -r : r;
    return KClass{shift_series(l1, k), shift_series(l2, k), inverted};
}

KClass KClass::operator-() const { return KClass{-l1, -l2, inverted}; }

KClass operator+(const KClass &x, const KClass &y)
{
    require_same_side(x, y);
    return KClass{x.l1 + y.l1, x.l2 + y.l2, x.inverted};
}

std::string KClass::to_string() const
{
    auto part = [&](const TruncatedSeries &s) {
        if (!inverted) return "(" + s.to_string() + ")";
        // Stored in u = q^-1; print in q.
        std::string body = s.known_part().bar().to_string();
        if (!s.is_exact()) body += " + O(q^" + std::to_string(-(s.order() + 1)) + ")";
        return "(" + body + ")";
    };
    return part(l1) + "[L(1)] + " + part(l2) + "[L(2)]";
}

bool class_equal(const KClass &x, const KClass &y)
{
    return x.inverted == y.inverted && series_equal(x.l1, y.l1) && series_equal(x.l2, y.l2);
}

KClass in_completion(const KClass &k, bool inverted)
{
    if (k.inverted == inverted) return k;
    if (!k.l1.is_exact() || !k.l2.is_exact()) {
        throw RegimeError("in_completion: only exact classes move between completions");
    }
    return KClass{TruncatedSeries(k.l1.known_part().bar()), TruncatedSeries(k.l2.known_part().bar()), inverted};
}

int class_agreement(const KClass &x, const KClass &y)
{
    require_same_side(x, y);
    return std::min(agreement_order(x.l1, y.l1), agreement_order(x.l2, y.l2));
}

KClass class_of_module(const GradedModule &m, bool inverted)
{
    LaurentPoly p1 = m.graded_dim(V1);
    LaurentPoly p2 = m.graded_dim(V2);
    if (inverted) {
        p1 = p1.bar();
        p2 = p2.bar();
    }
    return KClass{TruncatedSeries(p1), TruncatedSeries(p2), inverted};
}

KClass class_of_term(const Term &t, bool inverted)
{
    return KClass{TruncatedSeries(vertex_part(t, V1, inverted)), TruncatedSeries(vertex_part(t, V2, inverted)),
                  inverted};
}

KClass euler_class(const Complex &x, int order)
{
    if (x.open_lo() && x.open_hi()) throw RegimeError("euler_class: complex is open on both sides");
    const bool inverted = x.open_hi();
    auto sign = [](int j) { return j % 2 == 0 ? Rational(1) : Rational(-1); };
    auto signed_term = [&](const Term &t, int j) {
        const KClass k = class_of_term(t, inverted);
        return sign(j) == Rational(1) ? k : -k;
    };

    KClass sum = KClass::zero(inverted);
    if (!x.open_lo() && !x.open_hi()) {
        for (int j = x.lo(); j <= x.hi(); ++j) sum = sum + signed_term(x.term(j), j);
        return sum.truncated(order);
    }
    if (!x.tail()) throw WindowError("euler_class: open complex without a periodic tail");
    const Tail &t = *x.tail();
    if ((t.side == Side::Left) != x.open_lo()) throw RegimeError("euler_class: tail on the bounded side");

    // Stored part on the bounded side of the anchored block.
    const int first = t.side == Side::Left ? t.anchor + t.period : x.lo();
    const int last = t.side == Side::Left ? x.hi() : t.anchor - 1;
    for (int j = first; j <= last; ++j) sum = sum + signed_term(x.term(j), j);

    KClass block = KClass::zero(inverted);
    for (int k = 0; k < t.period; ++k) block = block + signed_term(t.block[static_cast<std::size_t>(k)], t.anchor + k);

    bool vanishing = true;
    for (const auto &b : t.block) vanishing = vanishing && b.empty();
    if (vanishing) return sum.truncated(order);

    // Each further period multiplies by r = (-1)^period q^shift.
    const int step = inverted ? -t.internal_shift : t.internal_shift;
    if (step <= 0) throw RegimeError("euler_class: tail does not converge in the completion");
    const Rational rsign = t.period % 2 == 0 ? Rational(1) : Rational(-1);
    const int block_min = std::min(block.l1.valuation().value_or(0), block.l2.valuation().value_or(0));
    const int reach = std::max(0, order - block_min + step);
    // 1/(1 - r) truncated to what the order needs.
    const TruncatedSeries one_minus_r(LaurentPoly(1) - LaurentPoly::monomial(step, rsign));
    const TruncatedSeries geom = series_invert(one_minus_r.truncated(reach)).truncated(reach);
    sum = sum + KClass{block.l1 * geom, block.l2 * geom, inverted};
    return sum.truncated(order);
}

std::array<TruncatedSeries, 2> to_projective_basis(const KClass &k)
{
    const int s = k.inverted ? -1 : 1;
    const TruncatedSeries q(LaurentPoly::monomial(s));
    const TruncatedSeries one_q2(LaurentPoly(1) + LaurentPoly::monomial(2 * s));
    return {one_q2 * k.l1 - q * k.l2, k.l2 - q * k.l1};
}

KClass from_projective_basis(const std::array<TruncatedSeries, 2> &x, bool inverted)
{
    const int s = inverted ? -1 : 1;
    const TruncatedSeries q(LaurentPoly::monomial(s));
    const TruncatedSeries one_q2(LaurentPoly(1) + LaurentPoly::monomial(2 * s));
    return KClass{x[0] + q * x[1], q * x[0] + one_q2 * x[1], inverted};
}

SeriesMatrix jones_wenzl_reference(int order)
{
    const TruncatedSeries inv = series_invert(TruncatedSeries(quantum_two(), order + 2)).truncated(order);
    SeriesMatrix m;
    m[0][0] = TruncatedSeries::zero(order);
    m[0][1] = TruncatedSeries::zero(order);
    m[1][0] = inv;
    m[1][1] = TruncatedSeries(LaurentPoly(1), order);
    return m;
}

SeriesMatrix series_matmul(const SeriesMatrix &a, const SeriesMatrix &b)
{
    SeriesMatrix out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    }
    return out;
}

bool series_matrix_equal(const SeriesMatrix &a, const SeriesMatrix &b)
{
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            if (!series_equal(a[i][j], b[i][j])) return false;
        }
    }
    return true;
}

KClass apply_projective_matrix(const SeriesMatrix &m, const KClass &k)
{
    if (k.inverted) throw RegimeError("projective matrices act on the q-completion only");
    const auto x = to_projective_basis(k);
    return from_projective_basis({m[0][0] * x[0] + m[0][1] * x[1], m[1][0] * x[0] + m[1][1] * x[1]});
}

} // namespace jwcat
