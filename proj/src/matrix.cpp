#include "artin/matrix.hpp"

#include <algorithm>

#include "artin/errors.hpp"

namespace artin {

Mat::Mat(std::size_t rows, std::size_t cols, FieldSpec field)
    : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)), field_(field) {}

Mat Mat::identity(std::size_t n, FieldSpec field) {
    Mat m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool Mat::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x == 0; });
}

Mat Mat::mul(const Mat& o) const {
    if (cols_ != o.rows_) throw semantic_error("matrix dimension mismatch in mul");
    Mat r(rows_, o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Rational& y = o.at(k, j);
                if (y != 0) r.at(i, j) += x * y;
            }
        }
    for (auto& v : r.a_) v = field_.reduce(v);
    return r;
}

Vec Mat::apply(const Vec& v) const {
    if (v.size() != cols_) throw semantic_error("matrix dimension mismatch in apply");
    Vec r(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != 0 && v[j] != 0) s += at(i, j) * v[j];
        r[i] = field_.reduce(s);
    }
    return r;
}

Mat Mat::rref(std::vector<std::size_t>* pivots) const {
    Mat m = *this;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t piv = rows_;
        for (std::size_t i = row; i < rows_; ++i)
            if (m.at(i, col) != 0) { piv = i; break; }
        if (piv == rows_) continue;
        if (piv != row)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(row, j));
        Rational inv = field_.inv(m.at(row, col));
        for (std::size_t j = col; j < cols_; ++j)
            m.at(row, j) = field_.mul(m.at(row, j), inv);
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == row) continue;
            Rational f = m.at(i, col);
            if (f == 0) continue;
            for (std::size_t j = col; j < cols_; ++j)
                m.at(i, j) = field_.sub(m.at(i, j), f * m.at(row, j));
        }
        if (pivots) pivots->push_back(col);
        ++row;
    }
    return m;
}

std::size_t Mat::rank() const {
    std::vector<std::size_t> pivots;
    rref(&pivots);
    return pivots.size();
}

std::vector<Vec> Mat::kernel_basis() const {
    std::vector<std::size_t> pivots;
    Mat r = rref(&pivots);
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v(cols_, Rational(0));
        v[free_col] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = field_.neg(r.at(k, free_col));
        basis.push_back(std::move(v));
    }
    return basis;
}

Mat Mat::submatrix(const std::vector<std::size_t>& row_idx,
                   const std::vector<std::size_t>& col_idx) const {
    Mat m(row_idx.size(), col_idx.size(), field_);
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j)
            m.at(i, j) = at(row_idx[i], col_idx[j]);
    return m;
}

void RowSpace::reduce(Vec& v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Rational& c = v[pivot_of_row_[k]];
        if (c == 0) continue;
        Rational f = c;  // rows are monic at their pivot
        for (std::size_t j = 0; j < width_; ++j)
            if (rows_[k][j] != 0) v[j] = field_.sub(v[j], f * rows_[k][j]);
    }
}

bool RowSpace::add(Vec v) {
    if (v.size() != width_) throw semantic_error("row width mismatch");
    reduce(v);
    std::size_t piv = width_;
    for (std::size_t j = 0; j < width_; ++j)
        if (field_.reduce(v[j]) != 0) { piv = j; break; }
    if (piv == width_) return false;
    Rational inv = field_.inv(v[piv]);
    for (auto& x : v) x = field_.mul(x, inv);
    // Back-substitute into existing rows so lookups stay a single pass.
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        Rational f = rows_[k][piv];
        if (f == 0) continue;
        for (std::size_t j = 0; j < width_; ++j)
            if (v[j] != 0) rows_[k][j] = field_.sub(rows_[k][j], f * v[j]);
    }
    rows_.push_back(std::move(v));
    pivot_of_row_.push_back(piv);
    return true;
}

bool RowSpace::contains(Vec v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(),
                       [&](const Rational& x) { return field_.reduce(x) == 0; });
}

}  // namespace artin
