#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "ffldl/field.hpp"

namespace ffldl {

/* Dense row-major matrix over a prime field.
 *
 * A Matrix is a plain value; it keeps a pointer to the PrimeField it was
 * built with, which must outlive it.  Slicing (block) copies, and sub-results
 * are written back with set_block — there are no aliased views.
 */
class Matrix {
public:
    Matrix(const PrimeField& f, std::size_t rows, std::size_t cols)
        : field_(&f), rows_(rows), cols_(cols), data_(rows * cols) {}

    /// Build from row-major integer values (reduced mod p).
    static Matrix from_values(const PrimeField& f, std::size_t rows, std::size_t cols,
                              std::initializer_list<std::uint64_t> vals) {
        if (vals.size() != rows * cols)
            throw DimensionMismatch("from_values: expected " + std::to_string(rows * cols) +
                                    " entries, got " + std::to_string(vals.size()));
        Matrix m(f, rows, cols);
        std::size_t k = 0;
        for (std::uint64_t v : vals) m.data_[k++] = f.element(v);
        return m;
    }

    static Matrix identity(const PrimeField& f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
        return m;
    }

    const PrimeField& field() const { return *field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldElement operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    FieldElement& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    std::span<const FieldElement> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::span<FieldElement> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

    /// Copy of the half-open block [r0,r1) x [c0,c1).
    Matrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
        check_block(r0, r1, c0, c1);
        Matrix b(*field_, r1 - r0, c1 - c0);
        for (std::size_t i = r0; i < r1; ++i)
            for (std::size_t j = c0; j < c1; ++j) b(i - r0, j - c0) = (*this)(i, j);
        return b;
    }

    /// Write src into the block with upper-left corner (r0, c0).
    void set_block(std::size_t r0, std::size_t c0, const Matrix& src) {
        check_block(r0, r0 + src.rows(), c0, c0 + src.cols());
        for (std::size_t i = 0; i < src.rows(); ++i)
            for (std::size_t j = 0; j < src.cols(); ++j) (*this)(r0 + i, c0 + j) = src(i, j);
    }

    Matrix transposed() const {
        Matrix t(*field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    bool is_zero() const {
        for (const FieldElement& e : data_)
            if (e.value != 0) return false;
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.field_->modulus() == b.field_->modulus() && a.rows_ == b.rows_ &&
               a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    void check_block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
        if (r0 > r1 || r1 > rows_ || c0 > c1 || c1 > cols_)
            throw DimensionMismatch("block range out of bounds");
    }

    const PrimeField* field_;
    std::size_t rows_, cols_;
    std::vector<FieldElement> data_;
};

} // namespace ffldl
