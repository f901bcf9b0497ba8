#pragma once

#include <cstddef>
#include <vector>

#include "artin/field.hpp"

namespace artin {

using Vec = std::vector<Rational>;

// Dense matrix over an exact field; plain Gaussian elimination throughout.
// Dimensions stay in the low hundreds here, so no fraction-free tricks.
class Mat {
  public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols, FieldSpec field);
    static Mat identity(std::size_t n, FieldSpec field);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const;

    Mat mul(const Mat& o) const;
    Vec apply(const Vec& v) const;  // matrix * column vector

    std::size_t rank() const;

    // Reduced row echelon form; pivot columns appended to *pivots when given.
    Mat rref(std::vector<std::size_t>* pivots = nullptr) const;

    // Basis of the right kernel, one column vector per element, in order of
    // ascending free column index (deterministic).
    std::vector<Vec> kernel_basis() const;

    Mat submatrix(const std::vector<std::size_t>& row_idx,
                  const std::vector<std::size_t>& col_idx) const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
    FieldSpec field_;
};

// Incrementally maintained row space in echelon form; used for span growth
// and for greedy independence picking.
class RowSpace {
  public:
    explicit RowSpace(std::size_t width, FieldSpec field) : width_(width), field_(field) {}

    // Reduces v against the current rows; inserts the remainder if nonzero.
    // Returns true when the dimension grew.
    bool add(Vec v);
    bool contains(Vec v) const;
    std::size_t dim() const { return rows_.size(); }
    std::size_t width() const { return width_; }
    const std::vector<Vec>& rows() const { return rows_; }
    void clear() { rows_.clear(); pivot_of_row_.clear(); }

  private:
    std::size_t width_;
    FieldSpec field_;
    std::vector<Vec> rows_;                  // each with leading coefficient 1
    std::vector<std::size_t> pivot_of_row_;  // strictly increasing? no: insertion kept sorted
    void reduce(Vec& v) const;
};

}  // namespace artin
