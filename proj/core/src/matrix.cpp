#include "orbidouble/matrix.hpp"

#include <stdexcept>
#include <string>

namespace orbidouble {

Matrix Matrix::identity(std::size_t n, std::uint64_t p) {
    Matrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1 % p;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::uint64_t p) {
    Fp f(p);
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows[0].size();
    Matrix m(r, c, p);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("Matrix::from_rows: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = f.reduce(rows[i][j]);
    }
    return m;
}

static void check_same_field(const Matrix& a, const Matrix& b, const char* op) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument(std::string(op) + ": modulus mismatch");
}

Matrix Matrix::mul(const Matrix& o) const {
    check_same_field(*this, o, "Matrix::mul");
    if (cols_ != o.rows_) throw std::invalid_argument("Matrix::mul: shape mismatch");
    Matrix r(rows_, o.cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint64_t v = at(i, k);
            if (v == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                r.at(i, j) = (r.at(i, j) + v * o.at(k, j)) % p_;
            }
        }
    }
    return r;
}

Matrix Matrix::add(const Matrix& o) const {
    check_same_field(*this, o, "Matrix::add");
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("Matrix::add: shape mismatch");
    Matrix r(rows_, cols_, p_);
    for (std::size_t i = 0; i < e_.size(); ++i) {
        std::uint64_t s = e_[i] + o.e_[i];
        r.e_[i] = s >= p_ ? s - p_ : s;
    }
    return r;
}

Matrix Matrix::sub(const Matrix& o) const {
    check_same_field(*this, o, "Matrix::sub");
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("Matrix::sub: shape mismatch");
    Matrix r(rows_, cols_, p_);
    for (std::size_t i = 0; i < e_.size(); ++i)
        r.e_[i] = e_[i] >= o.e_[i] ? e_[i] - o.e_[i] : e_[i] + p_ - o.e_[i];
    return r;
}

Matrix Matrix::scaled(std::uint64_t c) const {
    Matrix r(rows_, cols_, p_);
    c %= p_;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = (e_[i] * c) % p_;
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(cols_, rows_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::kron(const Matrix& o) const {
    check_same_field(*this, o, "Matrix::kron");
    Matrix r(rows_ * o.rows_, cols_ * o.cols_, p_);
    for (std::size_t i1 = 0; i1 < rows_; ++i1)
        for (std::size_t j1 = 0; j1 < cols_; ++j1) {
            std::uint64_t v = at(i1, j1);
            if (v == 0) continue;
            for (std::size_t i2 = 0; i2 < o.rows_; ++i2)
                for (std::size_t j2 = 0; j2 < o.cols_; ++j2)
                    r.at(i1 * o.rows_ + i2, j1 * o.cols_ + j2) = (v * o.at(i2, j2)) % p_;
        }
    return r;
}

bool Matrix::is_zero() const {
    for (auto v : e_)
        if (v != 0) return false;
    return true;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1u % p_ : 0u)) return false;
    return true;
}

bool Matrix::is_scalar(std::uint64_t* scalar_out) const {
    if (rows_ != cols_) return false;
    std::uint64_t c = rows_ == 0 ? 1 % p_ : at(0, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? c : 0u)) return false;
    if (scalar_out) *scalar_out = c;
    return true;
}

RrefResult rref(const Matrix& m) {
    RrefResult res;
    res.reduced = m;
    Matrix& a = res.reduced;
    Fp f(m.modulus());
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t piv = row;
        while (piv < a.rows() && a.at(piv, col) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(row, j));
        std::uint64_t s = f.inv(a.at(row, col));
        for (std::size_t j = 0; j < a.cols(); ++j) a.at(row, j) = f.mul(a.at(row, j), s);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row) continue;
            std::uint64_t v = a.at(i, col);
            if (v == 0) continue;
            for (std::size_t j = 0; j < a.cols(); ++j)
                a.at(i, j) = f.sub(a.at(i, j), f.mul(v, a.at(row, j)));
        }
        res.pivot_cols.push_back(col);
        ++row;
    }
    res.rank = res.pivot_cols.size();
    return res;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel_basis(const Matrix& m) {
    RrefResult r = rref(m);
    Fp f(m.modulus());
    std::vector<std::size_t> free_cols;
    {
        std::size_t k = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (k < r.pivot_cols.size() && r.pivot_cols[k] == j)
                ++k;
            else
                free_cols.push_back(j);
        }
    }
    Matrix basis(m.cols(), free_cols.size(), m.modulus());
    for (std::size_t b = 0; b < free_cols.size(); ++b) {
        std::size_t j = free_cols[b];
        basis.at(j, b) = 1;
        for (std::size_t i = 0; i < r.rank; ++i)
            basis.at(r.pivot_cols[i], b) = f.neg(r.reduced.at(i, j));
    }
    return basis;
}

Matrix column_space_basis(const Matrix& m) {
    RrefResult r = rref(m.transpose());
    Matrix basis(m.rows(), r.rank, m.modulus());
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = 0; j < m.rows(); ++j) basis.at(j, i) = r.reduced.at(i, j);
    return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    std::size_t n = m.rows();
    Matrix aug = hcat(m, Matrix::identity(n, m.modulus()));
    RrefResult r = rref(aug);
    for (std::size_t i = 0; i < n; ++i)
        if (i >= r.pivot_cols.size() || r.pivot_cols[i] != i) return std::nullopt;
    Matrix inv(n, n, m.modulus());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.reduced.at(i, n + j);
    return inv;
}

bool is_invertible(const Matrix& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: row count mismatch");
    check_same_field(a, b, "solve");
    Matrix aug = hcat(a, b);
    RrefResult r = rref(aug);
    // Inconsistent iff some pivot lands in the b-block.
    for (std::size_t c : r.pivot_cols)
        if (c >= a.cols()) return std::nullopt;
    Matrix x(a.cols(), b.cols(), a.modulus());
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.at(r.pivot_cols[i], j) = r.reduced.at(i, a.cols() + j);
    return x;
}

LinearSolution solve_linear(const Matrix& a, const Matrix& b_column) {
    if (b_column.cols() != 1)
        throw std::invalid_argument("solve_linear: right-hand side must be a column");
    LinearSolution out;
    out.kernel = kernel_basis(a);
    out.particular = solve(a, b_column);
    return out;
}

Matrix kron_swap_matrix(std::size_t d_left, std::size_t d_right, std::uint64_t p) {
    Matrix s(d_left * d_right, d_left * d_right, p);
    for (std::size_t i = 0; i < d_left; ++i)
        for (std::size_t j = 0; j < d_right; ++j) s.at(j * d_left + i, i * d_right + j) = 1 % p;
    return s;
}

Matrix hcat(const Matrix& a, const Matrix& b) {
    check_same_field(a, b, "hcat");
    if (a.rows() != b.rows()) throw std::invalid_argument("hcat: row count mismatch");
    Matrix r(a.rows(), a.cols() + b.cols(), a.modulus());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

} // namespace orbidouble
