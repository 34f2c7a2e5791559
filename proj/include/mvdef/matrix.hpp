#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mvdef/rational.hpp"

namespace mvdef {

// Sparse vector: (index, value) pairs, sorted by index, values nonzero.
using SparseVec = std::vector<std::pair<int, Rational>>;

SparseVec sv_axpy(const SparseVec& a, const Rational& c, const SparseVec& b); // a + c*b
SparseVec sv_scale(const SparseVec& a, const Rational& c);
Rational sv_dot(const SparseVec& a, const SparseVec& b);
Rational sv_get(const SparseVec& a, int idx);

// Sparse matrix over the rationals, stored as rows of sorted (col, value) pairs.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), row_(rows) {}

    static Matrix identity(int n);
    static Matrix from_rows(int cols, std::vector<SparseVec> rows);
    static Matrix from_columns(int rows, const std::vector<SparseVec>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    long nnz() const;

    // Adds v to the (r,c) entry; erases it if the sum is zero.
    void add(int r, int c, const Rational& v);
    void set(int r, int c, const Rational& v);
    Rational at(int r, int c) const;
    const SparseVec& row(int r) const { return row_[r]; }
    SparseVec column(int c) const;

    Matrix transpose() const;
    Matrix multiply(const Matrix& rhs) const;
    SparseVec apply(const SparseVec& x) const; // matrix * vector
    bool is_zero() const;
    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && row_ == o.row_; }

private:
    int rows_, cols_;
    std::vector<SparseVec> row_;
};

struct RrefResult {
    Matrix reduced;        // reduced row echelon form, zero rows dropped to the bottom
    std::vector<int> pivots; // pivot column per pivot row, strictly increasing
};

RrefResult rref(const Matrix& m);
int rank(const Matrix& m); // forward elimination only, cheaper than rref

// Basis of {x : m x = 0}, one vector per free column in increasing column
// order; the free coordinate of each basis vector is 1.
std::vector<SparseVec> kernel_basis(const Matrix& m);

// Canonical solution of m x = b: coordinates at free columns are zero.
// nullopt when b is outside the column span.
std::optional<SparseVec> solve(const Matrix& m, const SparseVec& b);

// (b in column span of m, witness coordinates if so).
std::pair<bool, std::optional<SparseVec>> image_membership(const Matrix& m, const SparseVec& b);

} // namespace mvdef
