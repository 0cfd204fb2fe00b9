#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "orbidouble/fp.hpp"

namespace orbidouble {

/// Dense row-major matrix over F_p. Zero-row / zero-column shapes are legal
/// and show up routinely (skyscraper fibers), so every routine has to cope.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0), p_(2) {}
    Matrix(std::size_t rows, std::size_t cols, std::uint64_t p)
        : rows_(rows), cols_(cols), p_(p), e_(rows * cols, 0) {}

    static Matrix identity(std::size_t n, std::uint64_t p);
    static Matrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, std::uint64_t p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint64_t modulus() const { return p_; }
    Fp field() const { return Fp(p_); }

    std::uint64_t& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    std::uint64_t at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    Matrix mul(const Matrix& o) const;
    Matrix add(const Matrix& o) const;
    Matrix sub(const Matrix& o) const;
    Matrix scaled(std::uint64_t c) const;
    Matrix transpose() const;

    /// Kronecker product, left factor major:
    /// (A kron B)[(i1*B.rows+i2), (j1*B.cols+j2)] = A[i1,j1] * B[i2,j2].
    /// This convention makes the tensor product strictly associative.
    Matrix kron(const Matrix& o) const;

    bool is_zero() const;
    bool is_identity() const;
    bool is_scalar(std::uint64_t* scalar_out = nullptr) const;

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && e_ == o.e_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

private:
    std::size_t rows_, cols_;
    std::uint64_t p_;
    std::vector<std::uint64_t> e_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

/// Reduced row echelon form over F_p.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Columns form a basis of ker(m). Deterministic: the standard basis read
/// off the rref, free columns in ascending order.
Matrix kernel_basis(const Matrix& m);

/// Canonical basis of the column space: reduced column echelon form,
/// one basis vector per column. Depends only on the subspace.
Matrix column_space_basis(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);
bool is_invertible(const Matrix& m);

/// Any solution X of A X = B, or nullopt when inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

/// Full solution set of A x = b: a particular solution (absent when the
/// system is inconsistent) plus a kernel basis describing the affine space.
struct LinearSolution {
    std::optional<Matrix> particular; // column vector
    Matrix kernel;                    // columns span ker(A)
    bool consistent() const { return particular.has_value(); }
};
LinearSolution solve_linear(const Matrix& a, const Matrix& b_column);

/// Permutation matrix implementing the perfect shuffle
/// e_i kron e_j |-> e_j kron e_i for fiber dimensions (d_left, d_right).
Matrix kron_swap_matrix(std::size_t d_left, std::size_t d_right, std::uint64_t p);

/// Horizontal concatenation [a | b].
Matrix hcat(const Matrix& a, const Matrix& b);

} // namespace orbidouble
