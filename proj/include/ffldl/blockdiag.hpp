#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "ffldl/matrix.hpp"
#include "ffldl/permutation.hpp"

namespace ffldl {

/* Block diagonal middle factor of the symmetric factorization.
 *
 * Three block shapes appear:
 *   Scalar(d)      the 1x1 block [d], d != 0
 *   AntiDiag(x)    the 2x2 block [0 x; x 0], x != 0
 *   AntiTri(c, d)  the 2x2 block [0 c; c d], c != 0, d != 0 (characteristic 2
 *                  only, where [0 c; c d] cannot be split into 1x1 pivots)
 */
struct ScalarBlock {
    FieldElement d;
};

struct AntiDiagBlock {
    FieldElement x;
};

struct AntiTriBlock {
    FieldElement c;
    FieldElement d;
};

using DiagBlock = std::variant<ScalarBlock, AntiDiagBlock, AntiTriBlock>;

inline std::size_t block_order(const DiagBlock& b) {
    return std::holds_alternative<ScalarBlock>(b) ? 1 : 2;
}

class BlockDiag {
public:
    BlockDiag() = default;

    void push(DiagBlock b) {
        offsets_.push_back(order_);
        order_ += block_order(b);
        blocks_.push_back(b);
    }

    void append(const BlockDiag& other) {
        for (const DiagBlock& b : other.blocks_) push(b);
    }

    std::size_t block_count() const { return blocks_.size(); }
    std::size_t order() const { return order_; }
    const DiagBlock& block(std::size_t k) const { return blocks_[k]; }
    /// Row/column offset of block k within the dense form.
    std::size_t offset(std::size_t k) const { return offsets_[k]; }

    bool has_antitriangular() const {
        for (const DiagBlock& b : blocks_)
            if (std::holds_alternative<AntiTriBlock>(b)) return true;
        return false;
    }

    Matrix to_dense(const PrimeField& f) const {
        Matrix m(f, order_, order_);
        for (std::size_t k = 0; k < blocks_.size(); ++k) {
            const std::size_t t = offsets_[k];
            if (const auto* s = std::get_if<ScalarBlock>(&blocks_[k])) {
                m(t, t) = s->d;
            } else if (const auto* a = std::get_if<AntiDiagBlock>(&blocks_[k])) {
                m(t, t + 1) = a->x;
                m(t + 1, t) = a->x;
            } else {
                const auto& at = std::get<AntiTriBlock>(blocks_[k]);
                m(t, t + 1) = at.c;
                m(t + 1, t) = at.c;
                m(t + 1, t + 1) = at.d;
            }
        }
        return m;
    }

    /* Support pattern Psi: the 0/1 matrix with ones where the dense form of D
     * is structurally nonzero as a pivot.  Scalar contributes (t,t); the 2x2
     * blocks contribute the antidiagonal pair (t,t+1), (t+1,t).  The d entry
     * of an AntiTri block is not part of the support.
     */
    std::vector<std::pair<std::size_t, std::size_t>> support() const {
        std::vector<std::pair<std::size_t, std::size_t>> s;
        for (std::size_t k = 0; k < blocks_.size(); ++k) {
            const std::size_t t = offsets_[k];
            if (std::holds_alternative<ScalarBlock>(blocks_[k])) {
                s.emplace_back(t, t);
            } else {
                s.emplace_back(t, t + 1);
                s.emplace_back(t + 1, t);
            }
        }
        return s;
    }

    /* Returns D^-1 * X without forming D^-1 densely.  Multiplications by
     * inverses count like any other field multiplication.
     *
     *   Scalar(d):     row t        -> d^-1 * row t
     *   AntiDiag(x):   rows t, t+1  -> x^-1 * (row t+1, row t)
     *   AntiTri(c, d): inverse is [-d/c^2, 1/c; 1/c, 0], so
     *                  row t   -> -d c^-2 * row t + c^-1 * row t+1
     *                  row t+1 -> c^-1 * row t
     */
    Matrix inverse_apply(const Matrix& x) const {
        if (x.rows() != order_) throw DimensionMismatch("inverse_apply: row count mismatch");
        const PrimeField& f = x.field();
        Matrix r(f, x.rows(), x.cols());
        for (std::size_t k = 0; k < blocks_.size(); ++k) {
            const std::size_t t = offsets_[k];
            if (const auto* s = std::get_if<ScalarBlock>(&blocks_[k])) {
                const FieldElement di = f.inv(s->d);
                for (std::size_t j = 0; j < x.cols(); ++j) r(t, j) = f.mul(di, x(t, j));
            } else if (const auto* a = std::get_if<AntiDiagBlock>(&blocks_[k])) {
                const FieldElement xi = f.inv(a->x);
                for (std::size_t j = 0; j < x.cols(); ++j) {
                    r(t, j) = f.mul(xi, x(t + 1, j));
                    r(t + 1, j) = f.mul(xi, x(t, j));
                }
            } else {
                const auto& at = std::get<AntiTriBlock>(blocks_[k]);
                const FieldElement ci = f.inv(at.c);
                const FieldElement top = f.neg(f.mul(at.d, f.mul(ci, ci)));
                for (std::size_t j = 0; j < x.cols(); ++j) {
                    r(t, j) = f.add(f.mul(top, x(t, j)), f.mul(ci, x(t + 1, j)));
                    r(t + 1, j) = f.mul(ci, x(t, j));
                }
            }
        }
        return r;
    }

private:
    std::vector<DiagBlock> blocks_;
    std::vector<std::size_t> offsets_;
    std::size_t order_ = 0;
};

/* Result of the symmetric factorization of an N x N matrix A of rank r:
 *
 *     A = dense(P) * [L; 0] * D * [L; 0]^T * dense(P)^T
 *
 * where L is N x r unit lower triangular in its top r rows (ones on the
 * diagonal, zero above) and D is block diagonal of order r.
 */
struct Factorization {
    Permutation perm;
    Matrix lower;   ///< N x r, unit triangular on top.
    BlockDiag diag; ///< order r.
    std::size_t rank = 0;

    std::size_t dimension() const { return lower.rows(); }

    Matrix reconstruct() const {
        const PrimeField& f = lower.field();
        const std::size_t n = lower.rows();
        Matrix ld(f, n, rank);
        const Matrix d = diag.to_dense(f);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < rank; ++j) {
                FieldElement acc = f.zero();
                for (std::size_t k = 0; k < rank; ++k)
                    acc = f.add(acc, f.mul(lower(i, k), d(k, j)));
                ld(i, j) = acc;
            }
        Matrix a(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                FieldElement acc = f.zero();
                for (std::size_t k = 0; k < rank; ++k)
                    acc = f.add(acc, f.mul(ld(i, k), lower(j, k)));
                a(i, j) = acc;
            }
        return conjugate_sym(perm, a);
    }
};

} // namespace ffldl
