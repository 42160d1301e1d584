#include <jwcat/matrix.hpp>

#include <sstream>
#include <stdexcept>

namespace jwcat
{

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::column(const std::vector<Rational> &v)
{
    Matrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

bool Matrix::is_zero() const
{
    for (const auto &x : data_) {
        if (!x.is_zero()) return false;
    }
    return true;
}

std::vector<Rational> Matrix::col(std::size_t c) const
{
    std::vector<Rational> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

void Matrix::set_col(std::size_t c, const std::vector<Rational> &v)
{
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    Matrix out(nr, nc);
    for (std::size_t r = 0; r < nr; ++r) {
        for (std::size_t c = 0; c < nc; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
    }
    return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix &m)
{
    for (std::size_t r = 0; r < m.rows_; ++r) {
        for (std::size_t c = 0; c < m.cols_; ++c) (*this)(r0 + r, c0 + c) = m(r, c);
    }
}

void Matrix::add_block(std::size_t r0, std::size_t c0, const Matrix &m, const Rational &scale)
{
    for (std::size_t r = 0; r < m.rows_; ++r) {
        for (std::size_t c = 0; c < m.cols_; ++c) {
            if (!m(r, c).is_zero()) (*this)(r0 + r, c0 + c) += scale * m(r, c);
        }
    }
}

Matrix Matrix::transpose() const
{
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    }
    return out;
}

Matrix &Matrix::operator+=(const Matrix &o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix +: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Matrix &Matrix::operator-=(const Matrix &o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix -: shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

Matrix &Matrix::operator*=(const Rational &s)
{
    for (auto &x : data_) x *= s;
    return *this;
}

Matrix operator*(const Matrix &a, const Matrix &b)
{
    if (a.cols_ != b.rows_) {
        throw std::invalid_argument("Matrix *: shape mismatch " + std::to_string(a.rows_) + "x" +
                                    std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                                    std::to_string(b.cols_));
    }
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational &aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Rational &bkj = b(k, j);
                if (!bkj.is_zero()) out(i, j) += aik * bkj;
            }
        }
    }
    return out;
}

std::vector<Rational> operator*(const Matrix &a, const std::vector<Rational> &v)
{
    if (a.cols_ != v.size()) throw std::invalid_argument("Matrix * vector: shape mismatch");
    std::vector<Rational> out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (!a(i, k).is_zero() && !v[k].is_zero()) out[i] += a(i, k) * v[k];
        }
    }
    return out;
}

std::vector<std::size_t> rref(Matrix &m)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
        std::size_t p = row;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != row) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        }
        const Rational inv = m(row, c).inverse();
        for (std::size_t j = c; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, c).is_zero()) continue;
            const Rational f = m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j) {
                if (!m(row, j).is_zero()) m(r, j) -= f * m(row, j);
            }
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

std::size_t Matrix::rank() const
{
    Matrix copy = *this;
    return rref(copy).size();
}

std::vector<std::vector<Rational>> Matrix::nullspace() const
{
    Matrix r = *this;
    const auto pivots = rref(r);
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols_);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Matrix> Matrix::inverse() const
{
    if (rows_ != cols_) return std::nullopt;
    const std::size_t n = rows_;
    Matrix aug(n, 2 * n);
    aug.set_block(0, 0, *this);
    aug.set_block(0, n, identity(n));
    const auto pivots = rref(aug);
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
    return aug.block(0, n, n, n);
}

std::optional<std::vector<Rational>> Matrix::solve(const std::vector<Rational> &b) const
{
    Matrix aug(rows_, cols_ + 1);
    aug.set_block(0, 0, *this);
    for (std::size_t r = 0; r < rows_; ++r) aug(r, cols_) = b[r];
    const auto pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<Rational> x(cols_);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, cols_);
    return x;
}

std::string Matrix::to_string() const
{
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        os << "[";
        for (std::size_t c = 0; c < cols_; ++c) {
            if (c) os << ", ";
            os << (*this)(r, c);
        }
        os << "]\n";
    }
    return os.str();
}

std::vector<std::size_t> extend_basis(const std::vector<std::vector<Rational>> &base,
                                      const std::vector<std::vector<Rational>> &candidates,
                                      std::size_t dim)
{
    // Incremental echelon basis stored as (pivot, normalized row).
    std::vector<std::pair<std::size_t, std::vector<Rational>>> echelon;
    auto reduce = [&](std::vector<Rational> v) {
        for (const auto &[p, row] : echelon) {
            if (v[p].is_zero()) continue;
            const Rational f = v[p];
            for (std::size_t j = 0; j < dim; ++j) {
                if (!row[j].is_zero()) v[j] -= f * row[j];
            }
        }
        return v;
    };
    auto insert = [&](std::vector<Rational> v) {
        v = reduce(std::move(v));
        std::size_t p = 0;
        while (p < dim && v[p].is_zero()) ++p;
        if (p == dim) return false;
        const Rational inv = v[p].inverse();
        for (auto &x : v) x *= inv;
        echelon.emplace_back(p, std::move(v));
        return true;
    };
    for (const auto &v : base) insert(v);
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (insert(candidates[i])) chosen.push_back(i);
    }
    return chosen;
}

std::size_t rank_of_vectors(const std::vector<std::vector<Rational>> &vectors, std::size_t dim)
{
    return extend_basis({}, vectors, dim).size();
}

} // namespace jwcat
