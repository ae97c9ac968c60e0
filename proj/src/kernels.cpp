#include "ffldl/kernels.hpp"

#include "ffldl/errors.hpp"

namespace ffldl {

void gemm_sub(Matrix& c, const Matrix& a, const Matrix& b) {
    if (a.rows() != c.rows() || b.cols() != c.cols() || a.cols() != b.rows())
        throw DimensionMismatch("gemm_sub: incompatible shapes");
    const PrimeField& f = c.field();
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) {
            FieldElement acc = c(i, j);
            for (std::size_t k = 0; k < a.cols(); ++k)
                acc = f.sub(acc, f.mul(a(i, k), b(k, j)));
            c(i, j) = acc;
        }
}

namespace {

/* Entry of op(T) respecting the triangle and unit-diagonal conventions. */
FieldElement tri_entry(const Matrix& t, Uplo uplo, bool trans, bool unit, std::size_t i,
                       std::size_t j) {
    if (trans) std::swap(i, j);
    if (i == j) return unit ? t.field().one() : t(i, i);
    const bool stored = (uplo == Uplo::Lower) ? (i > j) : (i < j);
    return stored ? t(i, j) : t.field().zero();
}

} // namespace

void trmm_sub(Matrix& c, const Matrix& t, Uplo uplo, bool trans, bool unit, const Matrix& b) {
    if (t.rows() != t.cols() || t.cols() != b.rows() || c.rows() != b.rows() ||
        c.cols() != b.cols())
        throw DimensionMismatch("trmm_sub: incompatible shapes");
    const PrimeField& f = c.field();
    const std::size_t n = t.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) {
            FieldElement acc = c(i, j);
            /* op(T) row i is nonzero for k <= i (effective lower) or k >= i. */
            const bool lower = (uplo == Uplo::Lower) != trans;
            const std::size_t k0 = lower ? 0 : i;
            const std::size_t k1 = lower ? i + 1 : n;
            for (std::size_t k = k0; k < k1; ++k) {
                if (k == i && unit) {
                    acc = f.sub(acc, b(k, j));
                    continue;
                }
                acc = f.sub(acc, f.mul(tri_entry(t, uplo, trans, unit, i, k), b(k, j)));
            }
            c(i, j) = acc;
        }
}

void trsm_inplace(const Matrix& t, Uplo uplo, bool trans, bool unit, Matrix& b) {
    if (t.rows() != t.cols() || t.cols() != b.rows())
        throw DimensionMismatch("trsm_inplace: incompatible shapes");
    const PrimeField& f = b.field();
    const std::size_t n = t.rows();
    const bool lower = (uplo == Uplo::Lower) != trans;
    /* Forward substitution for effective-lower op(T), backward otherwise. */
    for (std::size_t step = 0; step < n; ++step) {
        const std::size_t i = lower ? step : n - 1 - step;
        FieldElement piv_inv = f.one();
        if (!unit) {
            const FieldElement piv = tri_entry(t, uplo, trans, unit, i, i);
            if (f.is_zero(piv)) throw SingularTriangular("trsm_inplace: zero diagonal");
            piv_inv = f.inv(piv);
        }
        for (std::size_t j = 0; j < b.cols(); ++j) {
            FieldElement acc = b(i, j);
            const std::size_t k0 = lower ? 0 : i + 1;
            const std::size_t k1 = lower ? i : n;
            for (std::size_t k = k0; k < k1; ++k)
                acc = f.sub(acc, f.mul(tri_entry(t, uplo, trans, unit, i, k), b(k, j)));
            b(i, j) = unit ? acc : f.mul(piv_inv, acc);
        }
    }
}

void syrdk_sub(Matrix& c, const Matrix& g, const BlockDiag& d) {
    if (c.rows() != c.cols() || g.rows() != c.rows() || g.cols() != d.order())
        throw DimensionMismatch("syrdk_sub: incompatible shapes");
    const PrimeField& f = c.field();
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) {
            FieldElement acc = c(i, j);
            for (std::size_t k = 0; k < d.block_count(); ++k) {
                const std::size_t t = d.offset(k);
                if (const auto* s = std::get_if<ScalarBlock>(&d.block(k))) {
                    acc = f.sub(acc, f.mul(f.mul(g(i, t), s->d), g(j, t)));
                } else if (const auto* a = std::get_if<AntiDiagBlock>(&d.block(k))) {
                    acc = f.sub(acc, f.mul(f.mul(g(i, t), a->x), g(j, t + 1)));
                    acc = f.sub(acc, f.mul(f.mul(g(i, t + 1), a->x), g(j, t)));
                } else {
                    const auto& at = std::get<AntiTriBlock>(d.block(k));
                    acc = f.sub(acc, f.mul(f.mul(g(i, t), at.c), g(j, t + 1)));
                    acc = f.sub(acc, f.mul(f.mul(g(i, t + 1), at.c), g(j, t)));
                    acc = f.sub(acc, f.mul(f.mul(g(i, t + 1), at.d), g(j, t + 1)));
                }
            }
            c(i, j) = acc;
        }
}

void syrdk_sub(Matrix& c, const Matrix& g, std::span<const FieldElement> d) {
    if (c.rows() != c.cols() || g.rows() != c.rows() || g.cols() != d.size())
        throw DimensionMismatch("syrdk_sub: incompatible shapes");
    const PrimeField& f = c.field();
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) {
            FieldElement acc = c(i, j);
            for (std::size_t k = 0; k < d.size(); ++k)
                acc = f.sub(acc, f.mul(f.mul(g(i, k), d[k]), g(j, k)));
            c(i, j) = acc;
        }
}

void syr2k_sub(Matrix& c, const Matrix& a, const Matrix& b) {
    if (c.rows() != c.cols() || a.cols() != c.rows() || b.cols() != c.rows() ||
        a.rows() != b.rows())
        throw DimensionMismatch("syr2k_sub: incompatible shapes");
    const PrimeField& f = c.field();
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) {
            FieldElement acc = c(i, j);
            for (std::size_t k = 0; k < a.rows(); ++k) {
                acc = f.sub(acc, f.mul(a(k, i), b(k, j)));
                acc = f.sub(acc, f.mul(b(k, i), a(k, j)));
            }
            c(i, j) = acc;
        }
}

} // namespace ffldl
