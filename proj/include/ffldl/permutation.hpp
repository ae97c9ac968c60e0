#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

#include "ffldl/matrix.hpp"

namespace ffldl {

/* Permutation stored as an image array.
 *
 * Convention used throughout the library: image(i) = j means "row i of the
 * source becomes row j of the result" when the permutation is applied.  The
 * dense matrix of P therefore has a 1 at (image(i), i), so that
 * permute_rows(P, B) == dense(P) * B and applying the transpose of P means
 * applying inverse().  Permutations stay in image form everywhere; to_dense
 * exists for verification only.
 */
class Permutation {
public:
    explicit Permutation(std::size_t n) : image_(n) {
        std::iota(image_.begin(), image_.end(), std::size_t{0});
    }

    static Permutation from_image(std::vector<std::size_t> image) {
        std::vector<char> seen(image.size(), 0);
        for (std::size_t v : image) {
            if (v >= image.size() || seen[v]) throw BadBlockSizes("image array is not a bijection");
            seen[v] = 1;
        }
        Permutation p(image.size());
        p.image_ = std::move(image);
        return p;
    }

    static Permutation transposition(std::size_t n, std::size_t i, std::size_t j) {
        Permutation p(n);
        std::swap(p.image_[i], p.image_[j]);
        return p;
    }

    /// Cyclic shift moving index i to the front: (i, 0, 1, ..., i-1, i+1, ...).
    static Permutation cycle_to_front(std::size_t i, std::size_t n) {
        Permutation p(n);
        p.image_[i] = 0;
        for (std::size_t k = 0; k < i; ++k) p.image_[k] = k + 1;
        return p;
    }

    std::size_t size() const { return image_.size(); }
    std::size_t image(std::size_t i) const { return image_[i]; }
    const std::vector<std::size_t>& image_array() const { return image_; }

    bool is_identity() const {
        for (std::size_t i = 0; i < image_.size(); ++i)
            if (image_[i] != i) return false;
        return true;
    }

    Permutation inverse() const {
        Permutation p(image_.size());
        for (std::size_t i = 0; i < image_.size(); ++i) p.image_[image_[i]] = i;
        return p;
    }

    /// dense(compose(P, Q)) == dense(P) * dense(Q): apply Q first, then P.
    friend Permutation compose(const Permutation& p, const Permutation& q) {
        if (p.size() != q.size()) throw DimensionMismatch("compose: size mismatch");
        Permutation r(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) r.image_[i] = p.image_[q.image_[i]];
        return r;
    }

    Matrix to_dense(const PrimeField& f) const {
        Matrix m(f, size(), size());
        for (std::size_t i = 0; i < size(); ++i) m(image_[i], i) = f.one();
        return m;
    }

private:
    std::vector<std::size_t> image_;
};

/// dense(P) * B: row i of B lands at row P.image(i).
inline Matrix permute_rows(const Permutation& p, const Matrix& b) {
    if (p.size() != b.rows()) throw DimensionMismatch("permute_rows: size mismatch");
    Matrix r(b.field(), b.rows(), b.cols());
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r(p.image(i), j) = b(i, j);
    return r;
}

/// dense(P)^T * B.
inline Matrix permute_rows_inv(const Permutation& p, const Matrix& b) {
    if (p.size() != b.rows()) throw DimensionMismatch("permute_rows_inv: size mismatch");
    Matrix r(b.field(), b.rows(), b.cols());
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) = b(p.image(i), j);
    return r;
}

/// B * dense(P)^T: column j of B lands at column P.image(j).
inline Matrix permute_cols(const Permutation& p, const Matrix& b) {
    if (p.size() != b.cols()) throw DimensionMismatch("permute_cols: size mismatch");
    Matrix r(b.field(), b.rows(), b.cols());
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r(i, p.image(j)) = b(i, j);
    return r;
}

/// B * dense(P).
inline Matrix permute_cols_inv(const Permutation& p, const Matrix& b) {
    if (p.size() != b.cols()) throw DimensionMismatch("permute_cols_inv: size mismatch");
    Matrix r(b.field(), b.rows(), b.cols());
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) = b(i, p.image(j));
    return r;
}

/// dense(P) * C * dense(P)^T, i.e. entry (i, j) moves to (image(i), image(j)).
inline Matrix conjugate_sym(const Permutation& p, const Matrix& c) {
    if (p.size() != c.rows() || p.size() != c.cols())
        throw DimensionMismatch("conjugate_sym: size mismatch");
    Matrix r(c.field(), c.rows(), c.cols());
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) r(p.image(i), p.image(j)) = c(i, j);
    return r;
}

inline Permutation direct_sum(const Permutation& p, const Permutation& q) {
    std::vector<std::size_t> image(p.size() + q.size());
    for (std::size_t i = 0; i < p.size(); ++i) image[i] = p.image(i);
    for (std::size_t i = 0; i < q.size(); ++i) image[p.size() + i] = p.size() + q.image(i);
    return Permutation::from_image(std::move(image));
}

/// P acting on indices [offset, offset + P.size()), identity elsewhere.
inline Permutation embed(const Permutation& p, std::size_t offset, std::size_t total) {
    if (offset + p.size() > total) throw DimensionMismatch("embed: permutation does not fit");
    Permutation r(total);
    std::vector<std::size_t> image(total);
    for (std::size_t i = 0; i < total; ++i) image[i] = i;
    for (std::size_t i = 0; i < p.size(); ++i) image[offset + i] = offset + p.image(i);
    return Permutation::from_image(std::move(image));
}

} // namespace ffldl
