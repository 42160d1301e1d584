#include <jwcat/laurent.hpp>
#include <jwcat/matrix.hpp>
#include <jwcat/rational.hpp>
#include <jwcat/series.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace jwcat;

namespace
{

// Determinant by cofactor expansion; slow but independent of elimination.
Rational cofactor_det(const std::vector<std::vector<Rational>> &m)
{
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Rational det = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::vector<Rational>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Rational> row;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != c) row.push_back(m[r][k]);
            }
            minor.push_back(row);
        }
        const Rational term = m[0][c] * cofactor_det(minor);
        det = c % 2 == 0 ? det + term : det - term;
    }
    return det;
}

Matrix random_matrix(std::mt19937 &rng, std::size_t rows, std::size_t cols, int spread = 3)
{
    std::uniform_int_distribution<int> dist(-spread, spread);
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
    }
    return m;
}

std::vector<std::vector<Rational>> rows_of(const Matrix &m)
{
    std::vector<std::vector<Rational>> out(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
    }
    return out;
}

TruncatedSeries poly(const char *text, int order = TruncatedSeries::kExact)
{
    return TruncatedSeries(LaurentPoly::parse(text), order);
}

} // namespace

TEST(Rational, NormalizesSignAndLowestTerms)
{
    const Rational x(6, -4);
    EXPECT_EQ(x.num(), -3);
    EXPECT_EQ(x.den(), 2);
    EXPECT_EQ(Rational::parse("-3/2"), x);
    EXPECT_EQ(x.to_string(), "-3/2");
    EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
    EXPECT_EQ(Rational(2, 3).inverse(), Rational(3, 2));
}

TEST(Rational, DivisionByZeroThrows)
{
    EXPECT_ANY_THROW(Rational(1, 0));
    EXPECT_ANY_THROW(Rational(0).inverse());
}

TEST(Rational, OverflowIsReportedNotWrapped)
{
    const Rational big(std::int64_t{1} << 62);
    EXPECT_THROW(big * big, ArithmeticOverflow);
}

TEST(Laurent, ProductIdentities)
{
    EXPECT_EQ(LaurentPoly::parse("1 + q") * LaurentPoly::parse("1 - q"), LaurentPoly::parse("1 - q^2"));
    EXPECT_EQ(LaurentPoly::monomial(1) * LaurentPoly::monomial(-1), LaurentPoly(1));
}

TEST(Laurent, ParseRendersBack)
{
    for (const char *s : {"q^-1 + 2 + q^3", "-q - 3/2*q^2", "0", "1"}) {
        EXPECT_EQ(LaurentPoly::parse(s).to_string(), s);
    }
    EXPECT_EQ(LaurentPoly::parse("q^-2").bar(), LaurentPoly::monomial(2));
}

TEST(Series, InverseOfQuantumTwo)
{
    const int order = 21;
    const TruncatedSeries two = poly("q^-1 + q");
    const TruncatedSeries inv = series_invert(two.truncated(order + 2));
    // Coefficients of q/(1+q^2), derived by hand: (-1)^k at q^(2k+1).
    for (int e = 0; e <= order; ++e) {
        const Rational expect = e % 2 == 1 ? Rational((e / 2) % 2 == 0 ? 1 : -1) : Rational(0);
        EXPECT_EQ(inv.coeff(e), expect) << "q^" << e;
    }
    EXPECT_EQ(inv.valuation(), 1);
    // Telescoping: the product is 1 wherever it is determined.
    const TruncatedSeries one = inv * two;
    EXPECT_TRUE(series_equal(one, TruncatedSeries(LaurentPoly(1), one.order())));
    EXPECT_GE(one.order(), order - 1);
}

TEST(Series, TrivialInverses)
{
    EXPECT_TRUE(series_equal(series_invert(poly("1")), poly("1")));
    EXPECT_TRUE(series_equal(series_invert(poly("q^2")), poly("q^-2")));
}

TEST(Series, NotInvertibleWithoutLeadingTerm)
{
    EXPECT_THROW(series_invert(poly("0", 5)), NoInverseError);
}

TEST(Series, OrderTracksWhatIsKnown)
{
    const TruncatedSeries x = poly("1 + q", 4);
    const TruncatedSeries y = poly("q^-2", TruncatedSeries::kExact);
    EXPECT_EQ((x * y).order(), 2);
    EXPECT_EQ((x + y).order(), 4);
    EXPECT_FALSE(series_equal(poly("1", 3), poly("1 + q^2", 3)));
    EXPECT_TRUE(series_equal(poly("1", 1), poly("1 + q^2", 1)));
}

TEST(MatrixProperties, RankMatchesDeterminant)
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + trial % 4;
        const Matrix m = random_matrix(rng, n, n, trial % 3 == 0 ? 1 : 3);
        const Rational det = cofactor_det(rows_of(m));
        EXPECT_EQ(m.rank() == n, !det.is_zero());
        if (const auto inv = m.inverse()) {
            EXPECT_EQ(m * *inv, Matrix::identity(n));
            EXPECT_EQ(*inv * m, Matrix::identity(n));
        } else {
            EXPECT_TRUE(det.is_zero());
        }
    }
}

TEST(MatrixProperties, NullspaceIsKernelOfFullDimension)
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const Matrix m = random_matrix(rng, 1 + trial % 3, 2 + trial % 4, 2);
        const auto ns = m.nullspace();
        EXPECT_EQ(ns.size() + m.rank(), m.cols());
        for (const auto &v : ns) {
            for (const Rational &x : m * v) EXPECT_TRUE(x.is_zero());
        }
    }
}

TEST(MatrixProperties, SolveReproducesRightHandSide)
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const Matrix m = random_matrix(rng, 3, 4);
        std::vector<Rational> x(4);
        for (auto &v : x) v = static_cast<int>(rng() % 5) - 2;
        const auto b = m * x;
        const auto sol = m.solve(b);
        ASSERT_TRUE(sol.has_value());
        EXPECT_EQ(m * *sol, b);
    }
}
