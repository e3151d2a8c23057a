#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "monrep/field.hpp"

namespace monrep {

/// Dense matrix over a runtime Field, row-major.  All dimensions may be zero;
/// a d x 0 or 0 x d matrix is the identity of the empty product in block code.
class Matrix {
public:
    Matrix() : field_(Field::prime(101)), rows_(0), cols_(0) {}
    Matrix(Field f, int rows, int cols);

    static Matrix identity(Field f, int n);
    static Matrix from_int_rows(Field f, const std::vector<std::vector<std::int64_t>>& rows);
    /// Builds the matrix whose columns are the given ambient-sized vectors.
    static Matrix from_columns(Field f, int ambient, const std::vector<std::vector<Scalar>>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar& at(int r, int c) { return a_[std::size_t(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return a_[std::size_t(r) * cols_ + c]; }

    Matrix mul(const Matrix& rhs) const;
    Matrix add(const Matrix& rhs) const;
    Matrix sub(const Matrix& rhs) const;
    Matrix neg() const;
    Matrix scale(const Scalar& s) const;
    Matrix transpose() const;

    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
    std::vector<Scalar> col(int j) const;
    void set_col(int j, const std::vector<Scalar>& v);

    bool is_zero() const;
    bool is_identity() const;

    static Matrix hstack(const std::vector<Matrix>& blocks); // same row count
    static Matrix vstack(const std::vector<Matrix>& blocks); // same col count
    static Matrix block_diag(const std::vector<Matrix>& blocks);

    /// Copies `src` into this matrix with upper-left corner at (r0, c0).
    void paste(int r0, int c0, const Matrix& src);
    Matrix slice(int r0, int rcount, int c0, int ccount) const;

    std::string to_string() const;

    friend bool operator==(const Matrix&, const Matrix&);

private:
    Field field_;
    int rows_, cols_;
    std::vector<Scalar> a_;
};

bool operator==(const Matrix& lhs, const Matrix& rhs);

/// Reduced row echelon form (pivot entries 1, pivot columns cleared).
/// Prime mode uses Gauss-Jordan; rational mode clears denominators and runs
/// fraction-free (Bareiss) forward elimination before the Jordan phase so
/// intermediate entries stay minors of the input.
struct Rref {
    Matrix mat;
    std::vector<int> pivot_cols;
};
Rref rref(const Matrix& m);

int rank(const Matrix& m);

/// Canonical basis of the null space {v : m v = 0}, one column per basis
/// vector, derived from the RREF free columns (deterministic).
Matrix kernel_basis_matrix(const Matrix& m);

/// Solves a * x = b for the matrix unknown x; std::nullopt when inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

} // namespace monrep
