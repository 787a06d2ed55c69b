#include "typea/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace typea {

Matrix::Matrix(int rows, int cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != static_cast<size_t>(rows) * cols)
        throw std::invalid_argument("matrix: entry count does not match shape");
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& x = at(i, k);
            if (typea::is_zero(x)) continue;
            for (int j = 0; j < o.cols_; ++j)
                if (!typea::is_zero(o.at(k, j))) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

Vec Matrix::apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_)
        throw std::invalid_argument("matrix apply: shape mismatch");
    Vec r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (!typea::is_zero(at(i, j))) r[i] += at(i, j) * v[j];
    return r;
}

Matrix Matrix::hcat(const Matrix& o) const {
    if (rows_ != o.rows_) throw std::invalid_argument("hcat: row mismatch");
    Matrix r(rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

Matrix Matrix::vcat(const Matrix& o) const {
    if (cols_ != o.cols_) throw std::invalid_argument("vcat: column mismatch");
    Matrix r(rows_ + o.rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (int i = 0; i < o.rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!typea::is_zero(x)) return false;
    return true;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Matrix& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!is_zero(m.at(i, col))) { p = i; break; }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
        Rational inv = Rational(1) / m.at(row, col);
        for (int j = col; j < m.cols(); ++j) m.at(row, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || is_zero(m.at(i, col))) continue;
            Rational f = m.at(i, col);
            for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

int rank(const Matrix& m) {
    Matrix c = m;
    return static_cast<int>(rref(c).size());
}

std::vector<Vec> kernel_basis(const Matrix& m) {
    Matrix r = m;
    std::vector<int> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots) is_pivot[p] = true;

    std::vector<Vec> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vec v(m.cols());
        v[free] = 1;
        for (size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -r.at(static_cast<int>(i), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
    if (static_cast<int>(b.size()) != m.rows())
        throw std::invalid_argument("solve: rhs length does not match rows");
    Matrix rhs(m.rows(), 1);
    for (int i = 0; i < m.rows(); ++i) rhs.at(i, 0) = b[i];
    Matrix aug = m.hcat(rhs);
    std::vector<int> pivots = rref(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    Vec x(m.cols());
    for (size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = aug.at(static_cast<int>(i), m.cols());
    return x;
}

Matrix column_space_basis(const Matrix& m) {
    Matrix r = m;
    std::vector<int> pivots = rref(r);
    Matrix b(m.rows(), static_cast<int>(pivots.size()));
    for (size_t j = 0; j < pivots.size(); ++j)
        for (int i = 0; i < m.rows(); ++i)
            b.at(i, static_cast<int>(j)) = m.at(i, pivots[j]);
    return b;
}

Rational determinant(Matrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
    Rational det = 1;
    int n = m.rows();
    for (int col = 0; col < n; ++col) {
        int p = -1;
        for (int i = col; i < n; ++i)
            if (!is_zero(m.at(i, col))) { p = i; break; }
        if (p < 0) return Rational(0);
        if (p != col) {
            for (int j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(col, j));
            det = -det;
        }
        det *= m.at(col, col);
        Rational inv = Rational(1) / m.at(col, col);
        for (int i = col + 1; i < n; ++i) {
            if (is_zero(m.at(i, col))) continue;
            Rational f = m.at(i, col) * inv;
            for (int j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
        }
    }
    return det;
}

CokernelData cokernel(const Matrix& m) {
    // Extend an image basis to a full basis by standard vectors; the added
    // directions index the cokernel.
    Matrix img = column_space_basis(m);
    Matrix full = img;
    std::vector<int> added;
    int r = img.cols();
    for (int e = 0; e < m.rows() && full.cols() < m.rows(); ++e) {
        Matrix cand(m.rows(), 1);
        cand.at(e, 0) = 1;
        Matrix trial = full.hcat(cand);
        if (rank(trial) == trial.cols()) {
            full = trial;
            added.push_back(e);
        }
    }
    int c = static_cast<int>(added.size());
    if (r + c != m.rows()) throw std::logic_error("cokernel: basis extension failed");

    // Rows r..r+c-1 of full^{-1} express coordinates along the added vectors.
    Matrix aug = full.hcat(Matrix::identity(m.rows()));
    rref(aug);
    CokernelData data{Matrix(c, m.rows()), Matrix(m.rows(), c)};
    for (int i = 0; i < c; ++i) {
        for (int j = 0; j < m.rows(); ++j)
            data.projection.at(i, j) = aug.at(r + i, m.rows() + j);
        data.section.at(added[i], i) = 1;
    }
    return data;
}

} // namespace typea
