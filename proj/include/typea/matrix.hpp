#ifndef TYPEA_MATRIX_HPP
#define TYPEA_MATRIX_HPP

#include <optional>
#include <vector>

#include "typea/rational.hpp"

namespace typea {

using Vec = std::vector<Rational>;

/// Dense matrix over the rationals, row-major. All arithmetic is exact.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
    Matrix(int rows, int cols, std::vector<Rational> entries);

    static Matrix identity(int n);
    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool operator==(const Matrix& o) const = default;

    Matrix operator*(const Matrix& o) const;
    Vec apply(const Vec& v) const;

    /// Horizontal concatenation [this | o].
    Matrix hcat(const Matrix& o) const;
    /// Vertical concatenation [this; o].
    Matrix vcat(const Matrix& o) const;

    bool is_zero() const;

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

/// Row rank, computed by exact Gaussian elimination.
int rank(const Matrix& m);

/// Basis of the right null space {x : m x = 0}, as column vectors.
/// Empty when m is injective.
std::vector<Vec> kernel_basis(const Matrix& m);

/// Some x with m x = b, or nullopt when the system is inconsistent.
/// Throws std::invalid_argument on a dimension mismatch.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

/// Columns of m restricted to a maximal independent subset (image basis).
Matrix column_space_basis(const Matrix& m);

/// Exact determinant of a square matrix.
Rational determinant(Matrix m);

/// Cokernel data for m : K^cols -> K^rows. Returns a projection matrix
/// p (c x rows, c = rows - rank m) and a section s (rows x c) with
/// p s = id_c and p m = 0, identifying coker m with K^c.
struct CokernelData {
    Matrix projection;
    Matrix section;
};
CokernelData cokernel(const Matrix& m);

} // namespace typea

#endif
