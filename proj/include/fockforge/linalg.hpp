#pragma once

// Exact dense linear algebra over Q: row echelon bases, kernels, intersections.
// Pivoting picks the first nonzero entry; no magnitude heuristics are needed
// since all arithmetic is exact.

#include <span>
#include <vector>

#include <json.hpp>

#include "fockforge/rational.hpp"

namespace fockforge {

using Vector = std::vector<Rational>;

class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    std::span<const Rational> row(int i) const { return {data_.data() + static_cast<std::size_t>(i) * cols_, static_cast<std::size_t>(cols_)}; }

    Matrix transpose() const;
    Vector apply(std::span<const Rational> v) const;
    bool is_zero() const;
    bool is_symmetric() const;

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(const Rational& c);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    bool operator==(const Matrix& other) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> data_;
};

// Reduced row echelon basis of a growing subspace of Q^dim.
class EchelonBasis {
public:
    explicit EchelonBasis(int dim) : dim_(dim) {}

    int ambient_dim() const { return dim_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<Vector>& rows() const { return rows_; }

    // Returns true when v was not already in the span.
    bool insert(Vector v);
    bool contains(Vector v) const;
    // Remainder of v after elimination against the current pivots.
    Vector reduce(Vector v) const;

private:
    int dim_;
    std::vector<Vector> rows_;
    std::vector<int> pivots_;
};

bool is_zero(std::span<const Rational> v);
int rank(const Matrix& a);
// Basis of {x : a x = 0}, one vector per free column of the RREF.
std::vector<Vector> nullspace(const Matrix& a);
// Basis of span(u) intersected with span(w), both in Q^dim.
std::vector<Vector> intersect(const std::vector<Vector>& u, const std::vector<Vector>& w, int dim);
int span_dim(const std::vector<Vector>& vectors, int dim);

// Dense row-major export with rational strings.
nlohmann::json to_json(const Matrix& a);

}  // namespace fockforge
