#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <jwcat/rational.hpp>

namespace jwcat
{

// Dense row-major matrix over the rationals. Column vectors are the
// convention throughout: a map V -> W is stored as dim W x dim V.
class Matrix
{
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
    static Matrix column(const std::vector<Rational> &v);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Rational &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const;
    std::vector<Rational> col(std::size_t c) const;
    void set_col(std::size_t c, const std::vector<Rational> &v);

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix &m);
    void add_block(std::size_t r0, std::size_t c0, const Matrix &m, const Rational &scale = 1);
    Matrix transpose() const;

    Matrix &operator+=(const Matrix &);
    Matrix &operator-=(const Matrix &);
    Matrix &operator*=(const Rational &);
    friend Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Rational &s) { return a *= s; }
    friend Matrix operator*(const Matrix &a, const Matrix &b);
    friend std::vector<Rational> operator*(const Matrix &a, const std::vector<Rational> &v);
    friend bool operator==(const Matrix &, const Matrix &) = default;

    std::size_t rank() const;
    // Columns spanning the kernel.
    std::vector<std::vector<Rational>> nullspace() const;
    std::optional<Matrix> inverse() const;
    // Some x with A x = b, if one exists.
    std::optional<std::vector<Rational>> solve(const std::vector<Rational> &b) const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

// Reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(Matrix &m);

// Selects from `candidates` (in order) vectors that are independent modulo
// span(base) and each other. Returns indices into `candidates`.
std::vector<std::size_t> extend_basis(const std::vector<std::vector<Rational>> &base,
                                      const std::vector<std::vector<Rational>> &candidates,
                                      std::size_t dim);

std::size_t rank_of_vectors(const std::vector<std::vector<Rational>> &vectors, std::size_t dim);

} // namespace jwcat
