#include "fockforge/linalg.hpp"

#include <stdexcept>

namespace fockforge {

Matrix Matrix::identity(int n) {
    Matrix id(n, n);
    for (int i = 0; i < n; ++i) id.at(i, i) = 1;
    return id;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0) t.at(j, i) = at(i, j);
    return t;
}

Vector Matrix::apply(std::span<const Rational> v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix/vector size mismatch");
    Vector out(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (v[j] != 0 && at(i, j) != 0) out[i] += at(i, j) * v[j];
    return out;
}

bool Matrix::is_zero() const { return fockforge::is_zero(data_); }

bool Matrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

Matrix& Matrix::operator+=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (other.data_[k] != 0) data_[k] += other.data_[k];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k)
        if (other.data_[k] != 0) data_[k] -= other.data_[k];
    return *this;
}

Matrix& Matrix::operator*=(const Rational& c) {
    for (auto& x : data_)
        if (x != 0) x *= c;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
    Matrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Rational& x = a.at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < b.cols(); ++j)
                if (b.at(k, j) != 0) out.at(i, j) += x * b.at(k, j);
        }
    return out;
}

bool is_zero(std::span<const Rational> v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Vector EchelonBasis::reduce(Vector v) const {
    if (static_cast<int>(v.size()) != dim_) throw std::invalid_argument("vector has the wrong dimension");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const int piv = pivots_[r];
        if (v[piv] == 0) continue;
        const Rational factor = v[piv];
        const Vector& row = rows_[r];
        for (int j = 0; j < dim_; ++j)
            if (row[j] != 0) v[j] -= factor * row[j];
    }
    return v;
}

bool EchelonBasis::contains(Vector v) const { return is_zero(reduce(std::move(v))); }

bool EchelonBasis::insert(Vector v) {
    v = reduce(std::move(v));
    int piv = 0;
    while (piv < dim_ && v[piv] == 0) ++piv;
    if (piv == dim_) return false;
    const Rational inv = 1 / v[piv];
    for (auto& x : v)
        if (x != 0) x *= inv;
    // Keep the basis fully reduced: clear the new pivot column elsewhere.
    for (auto& row : rows_) {
        if (row[piv] == 0) continue;
        const Rational factor = row[piv];
        for (int j = 0; j < dim_; ++j)
            if (v[j] != 0) row[j] -= factor * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
}

namespace {

using IntRow = std::vector<Integer>;

// Clears denominators row by row; the row space is unchanged.
std::vector<IntRow> integer_rows(const Matrix& a) {
    std::vector<IntRow> rows;
    for (int i = 0; i < a.rows(); ++i) {
        Integer den = 1;
        for (const auto& x : a.row(i))
            if (x != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        IntRow row(static_cast<std::size_t>(a.cols()));
        bool nonzero = false;
        for (int j = 0; j < a.cols(); ++j) {
            const Rational& x = a.at(i, j);
            if (x == 0) continue;
            row[j] = x.get_num() * (den / x.get_den());
            nonzero = true;
        }
        if (nonzero) rows.push_back(std::move(row));
    }
    return rows;
}

void divide_content(IntRow& row) {
    Integer g = 0;
    for (const auto& x : row)
        if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : row)
            if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// Fraction-free reduced echelon form over Z: every pivot column is zero
// outside its pivot row. Returns the pivot columns; rows are trimmed to the rank.
std::vector<int> integer_rref(std::vector<IntRow>& rows, int cols) {
    std::vector<int> pivots;
    std::size_t rank = 0;
    for (int col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t sel = rank;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[sel], rows[rank]);
        const IntRow& piv = rows[rank];
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            IntRow& row = rows[i];
            Integer g;
            mpz_gcd(g.get_mpz_t(), piv[col].get_mpz_t(), row[col].get_mpz_t());
            const Integer a = piv[col] / g, b = row[col] / g;
            for (int j = 0; j < cols; ++j) {
                if (row[j] != 0) row[j] *= a;
                if (piv[j] != 0) row[j] -= b * piv[j];
            }
            divide_content(row);
        }
        pivots.push_back(col);
        ++rank;
    }
    rows.resize(rank);
    return pivots;
}

}  // namespace

int rank(const Matrix& a) {
    auto rows = integer_rows(a);
    return static_cast<int>(integer_rref(rows, a.cols()).size());
}

std::vector<Vector> nullspace(const Matrix& a) {
    auto rows = integer_rows(a);
    const std::vector<int> pivots = integer_rref(rows, a.cols());
    std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (int free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v(static_cast<std::size_t>(a.cols()));
        v[free] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            if (rows[k][free] != 0) {
                Rational x(rows[k][free], rows[k][pivots[k]]);
                x.canonicalize();
                v[pivots[k]] = -x;
            }
        basis.push_back(std::move(v));
    }
    return basis;
}

int span_dim(const std::vector<Vector>& vectors, int dim) {
    EchelonBasis e(dim);
    for (const auto& v : vectors) e.insert(v);
    return e.rank();
}

std::vector<Vector> intersect(const std::vector<Vector>& u, const std::vector<Vector>& w, int dim) {
    if (u.empty() || w.empty()) return {};
    // Solve sum_i a_i u_i - sum_j b_j w_j = 0; columns are the generators.
    const int nu = static_cast<int>(u.size()), nw = static_cast<int>(w.size());
    Matrix system(dim, nu + nw);
    for (int i = 0; i < nu; ++i)
        for (int k = 0; k < dim; ++k) system.at(k, i) = u[i][k];
    for (int j = 0; j < nw; ++j)
        for (int k = 0; k < dim; ++k) system.at(k, nu + j) = -w[j][k];
    EchelonBasis out(dim);
    for (const Vector& sol : nullspace(system)) {
        Vector x(static_cast<std::size_t>(dim));
        for (int i = 0; i < nu; ++i)
            if (sol[i] != 0)
                for (int k = 0; k < dim; ++k) x[k] += sol[i] * u[i][k];
        out.insert(std::move(x));
    }
    return out.rows();
}

nlohmann::json to_json(const Matrix& a) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < a.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < a.cols(); ++j) row.push_back(to_string(a.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace fockforge
