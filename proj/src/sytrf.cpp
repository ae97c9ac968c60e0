#include "ffldl/sytrf.hpp"

#include <algorithm>
#include <numeric>

#include "ffldl/errors.hpp"
#include "ffldl/kernels.hpp"
#include "ffldl/plduq.hpp"
#include "ffldl/trssyr2k.hpp"

namespace ffldl {

namespace {

Factorization dispatch(const Matrix& a, const SytrfConfig& cfg);
Factorization zero_leading(const Matrix& y, const Matrix& z, const SytrfConfig& cfg);

/* Iterative Crout elimination with symmetric pivoting.
 *
 * The input is never modified; residuals are recomputed on demand from the
 * stored multipliers, Crout style.  `order` maps current position to original
 * row: positions [0, r) hold committed pivots, [r, front) rows that went
 * pivotless (their residual row is identically zero and stays so), and
 * [front, n) rows still to process.  `lmat` is indexed by (original row,
 * pivot column).
 *
 * Each step looks at the residual column c of the front row.  If c vanishes
 * the row joins the pivotless band.  If the diagonal entry is nonzero it is
 * committed as a 1x1 pivot.  Otherwise the first row j with c_j != 0 is
 * paired with the front row into a 2x2 pivot: over odd characteristic the
 * partner diagonal y can always be folded into the multipliers (via y/2),
 * leaving an AntiDiag block; over characteristic 2 with y != 0 no strictly
 * antidiagonal 2x2 pivot exists and an AntiTri block is emitted instead.
 */
Factorization crout_base(const Matrix& a) {
    const PrimeField& f = a.field();
    const std::size_t n = a.rows();

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    Matrix lmat(f, n, n);
    BlockDiag diag;

    std::vector<FieldElement> v(n), c(n), v2(n), d2(n);
    /* Residual of original row `row` against original column `col`, using the
     * D-folded coefficients of the column's owner in `weights`.
     */
    const auto residual = [&](std::size_t row, std::size_t col, std::size_t r,
                              const std::vector<FieldElement>& weights) {
        FieldElement acc = a(row, col);
        for (std::size_t k = 0; k < r; ++k) acc = f.sub(acc, f.mul(lmat(row, k), weights[k]));
        return acc;
    };
    /* out = (prefix of length r of lmat row `row`) * D, blockwise. */
    const auto fold_diag = [&](std::size_t row, std::vector<FieldElement>& out) {
        for (std::size_t k = 0; k < diag.block_count(); ++k) {
            const std::size_t t = diag.offset(k);
            const FieldElement ut = lmat(row, t);
            if (const auto* s = std::get_if<ScalarBlock>(&diag.block(k))) {
                out[t] = f.mul(ut, s->d);
            } else if (const auto* ad = std::get_if<AntiDiagBlock>(&diag.block(k))) {
                out[t] = f.mul(lmat(row, t + 1), ad->x);
                out[t + 1] = f.mul(ut, ad->x);
            } else {
                const auto& at = std::get<AntiTriBlock>(diag.block(k));
                out[t] = f.mul(lmat(row, t + 1), at.c);
                out[t + 1] = f.add(f.mul(ut, at.c), f.mul(lmat(row, t + 1), at.d));
            }
        }
    };

    std::size_t r = 0;
    std::size_t front = 0;
    while (front < n) {
        const std::size_t p1 = order[front];
        fold_diag(p1, v);
        std::size_t j = n;
        for (std::size_t i = front; i < n; ++i) {
            c[i] = residual(order[i], p1, r, v);
            if (j == n && !f.is_zero(c[i])) j = i;
        }
        if (j == n) { /* zero residual row: defer, no pivot here */
            ++front;
            continue;
        }

        if (j == front) {
            const FieldElement x = c[front];
            const FieldElement xi = f.inv(x);
            diag.push(ScalarBlock{x});
            lmat(p1, r) = f.one();
            for (std::size_t i = front + 1; i < n; ++i) lmat(order[i], r) = f.mul(xi, c[i]);
            std::rotate(order.begin() + r, order.begin() + front, order.begin() + front + 1);
            ++r;
            ++front;
            continue;
        }

        /* 2x2 pivot pairing the front row with row j. */
        const std::size_t p2 = order[j];
        const FieldElement x = c[j];
        const FieldElement xi = f.inv(x);
        fold_diag(p2, v2);
        for (std::size_t i = front; i < n; ++i) d2[i] = residual(order[i], p2, r, v2);
        const FieldElement y = d2[j];

        FieldElement y_eff = y;
        if (!f.is_char_two()) {
            y_eff = f.halve(y);
            diag.push(AntiDiagBlock{x});
            lmat(p2, r) = f.mul(xi, y_eff);
        } else {
            if (f.is_zero(y))
                diag.push(AntiDiagBlock{x});
            else
                diag.push(AntiTriBlock{x, y});
            lmat(p2, r) = f.zero();
        }
        lmat(p1, r) = f.one();
        lmat(p1, r + 1) = f.zero();
        lmat(p2, r + 1) = f.one();
        for (std::size_t i = front + 1; i < n; ++i) {
            if (i == j) continue;
            const FieldElement l2 = f.mul(xi, c[i]);
            lmat(order[i], r) = f.mul(xi, f.sub(d2[i], f.mul(y_eff, l2)));
            lmat(order[i], r + 1) = l2;
        }
        std::rotate(order.begin() + r, order.begin() + front, order.begin() + front + 1);
        std::rotate(order.begin() + r + 1, order.begin() + j, order.begin() + j + 1);
        r += 2;
        front += 2;
    }

    Matrix lower(f, n, r);
    for (std::size_t pos = 0; pos < n; ++pos)
        for (std::size_t k = 0; k < r; ++k) lower(pos, k) = lmat(order[pos], k);
    return Factorization{Permutation::from_image(std::move(order)), std::move(lower),
                         std::move(diag), r};
}

/// res(i, j) = d_i^-1 * m(i, j).
Matrix scale_rows_by_inverse(std::span<const FieldElement> d, const Matrix& m) {
    const PrimeField& f = m.field();
    Matrix res(f, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const FieldElement di = f.inv(d[i]);
        for (std::size_t j = 0; j < m.cols(); ++j) res(i, j) = f.mul(di, m(i, j));
    }
    return res;
}

/* Factor T = [0 Y; Y^t Z] (Y of shape m x n, m > 0, n > 0).
 *
 * A rank profile revealing LU of Y pairs each of its r pivots with the
 * matching row of Z into a 2x2 antidiagonal pivot of T.  In the coordinates
 * of that LU (core rows/columns of Y, conjugated Z), with
 * Y = [L1; M1] diag(d) [U1 V1] and Z' = [C1 C2; C2^t C3]:
 *
 *   - X solves X^t U1 + U1^t X = C1 (minus a characteristic 2 correction
 *     U1^t diag(delta) U1 that makes the diagonal solvable; the deltas end
 *     up inside AntiTri pivot blocks),
 *   - G1 = X^t diag(d)^-1 and Y2 = U1^-t (C2 - X^t V1) with G2 = Y2^t diag(d)^-1
 *     are the multipliers of the Z rows against the pivot pairs,
 *   - the trailing problem C3 - Y2^t V1 - V1^t Y2 (- V1^t diag(delta) V1) is
 *     factored recursively.
 *
 * The rows of L interleave Y pivot rows with their Z partners so that each
 * 2x2 block [0 d_i; d_i delta_i] sits on the diagonal of D.
 */
Factorization zero_leading_pairs(const Matrix& y, const Matrix& z, const SytrfConfig& cfg) {
    const PrimeField& f = z.field();
    const std::size_t m = y.rows();
    const std::size_t nz = z.rows();

    const PlduqFactorization py = plduq(y);
    const std::size_t r = py.rank;
    const Matrix l1 = py.l1();
    const Matrix m1 = py.m1();
    const Matrix u1 = py.u1();
    const Matrix v1 = py.v1();
    const std::span<const FieldElement> d(py.diag);

    const Matrix cp = conjugate_sym(py.col_perm.inverse(), z);
    Matrix c1 = cp.block(0, r, 0, r);
    Matrix c2 = cp.block(0, r, r, nz);
    Matrix c3 = cp.block(r, nz, r, nz);

    std::vector<FieldElement> delta(r, f.zero());
    if (f.is_char_two()) {
        /* delta_i = C1(i,i) - sum_{j<i} delta_j U1(j,i)^2 zeroes the diagonal
         * of C1 - U1^t diag(delta) U1, which characteristic 2 requires.
         */
        for (std::size_t i = 0; i < r; ++i) {
            FieldElement acc = c1(i, i);
            for (std::size_t j = 0; j < i; ++j)
                acc = f.sub(acc, f.mul(f.mul(delta[j], u1(j, i)), u1(j, i)));
            delta[i] = acc;
        }
        syrdk_sub(c1, u1.transposed(), delta);
    }

    Matrix x = trssyr2k(u1, c1);
    const Matrix g1 = scale_rows_by_inverse(d, x).transposed();
    if (f.is_char_two()) {
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = i; j < r; ++j)
                x(i, j) = f.add(x(i, j), f.mul(delta[i], u1(i, j)));
    }

    trmm_sub(c2, x, Uplo::Upper, /*trans=*/true, /*unit=*/false, v1);
    trsm_inplace(u1, Uplo::Upper, /*trans=*/true, /*unit=*/true, c2); /* c2 is now Y2 */

    syr2k_sub(c3, c2, v1);
    if (f.is_char_two()) syrdk_sub(c3, v1.transposed(), delta);
    const Matrix g2 = scale_rows_by_inverse(d, c2).transposed();

    const Factorization f3 = dispatch(c3, cfg);
    const std::size_t r3 = f3.rank;
    const Matrix g2h = permute_rows_inv(f3.perm, g2);
    const Matrix v1h = permute_rows_inv(f3.perm, v1.transposed());

    const std::size_t total = m + nz;
    const std::size_t rank = 2 * r + r3;
    Matrix lower(f, total, rank);
    std::vector<std::size_t> image(total);
    for (std::size_t i = 0; i < r; ++i) {
        image[2 * i] = py.row_perm.image(i);
        image[2 * i + 1] = m + py.col_perm.image(i);
        for (std::size_t j = 0; j < r; ++j) {
            lower(2 * i, 2 * j) = l1(i, j);
            lower(2 * i + 1, 2 * j) = g1(i, j);
            lower(2 * i + 1, 2 * j + 1) = u1(j, i);
        }
    }
    /* Below the pairs sit three groups.  The trailing factor's pivot rows
     * complete the rank; then come the pivotless rows, which must appear in
     * ascending original order: Y's pivotless rows live in the leading band
     * and therefore go before the trailing factor's pivotless rows.
     */
    for (std::size_t k = 0; k < nz - r; ++k) {
        const std::size_t row = k < r3 ? 2 * r + k : 2 * r + (m - r) + k;
        image[row] = m + py.col_perm.image(r + f3.perm.image(k));
        for (std::size_t j = 0; j < r; ++j) {
            lower(row, 2 * j) = g2h(k, j);
            lower(row, 2 * j + 1) = v1h(k, j);
        }
        for (std::size_t t = 0; t < r3; ++t) lower(row, 2 * r + t) = f3.lower(k, t);
    }
    for (std::size_t t = 0; t < m - r; ++t) {
        image[2 * r + r3 + t] = py.row_perm.image(r + t);
        for (std::size_t j = 0; j < r; ++j) lower(2 * r + r3 + t, 2 * j) = m1(t, j);
    }

    BlockDiag bd;
    for (std::size_t i = 0; i < r; ++i) {
        if (f.is_char_two() && !f.is_zero(delta[i]))
            bd.push(AntiTriBlock{d[i], delta[i]});
        else
            bd.push(AntiDiagBlock{d[i]});
    }
    bd.append(f3.diag);

    return Factorization{Permutation::from_image(std::move(image)), std::move(lower),
                         std::move(bd), rank};
}

Factorization zero_leading(const Matrix& y, const Matrix& z, const SytrfConfig& cfg) {
    const PrimeField& f = z.field();
    const std::size_t m = y.rows();
    const std::size_t nz = z.rows();
    if (m == 0) return dispatch(z, cfg);
    if (nz == 0)
        return Factorization{Permutation(m), Matrix(f, m, 0), BlockDiag{}, 0};
    if (y.is_zero()) {
        /* T = diag(0, Z): factor Z and pull only its pivot rows ahead of the
         * zero rows.  Pivotless rows must stay in ascending original order or
         * an enclosing recursion would pair its off-diagonal rows wrongly.
         */
        const Factorization f3 = dispatch(z, cfg);
        const std::size_t r3 = f3.rank;
        std::vector<std::size_t> image(m + nz);
        for (std::size_t k = 0; k < r3; ++k) image[k] = m + f3.perm.image(k);
        for (std::size_t t = 0; t < m; ++t) image[r3 + t] = t;
        for (std::size_t k = r3; k < nz; ++k) image[m + k] = m + f3.perm.image(k);
        Matrix lower(f, m + nz, r3);
        lower.set_block(0, 0, f3.lower.block(0, r3, 0, r3));
        lower.set_block(r3 + m, 0, f3.lower.block(r3, nz, 0, r3));
        return Factorization{Permutation::from_image(std::move(image)), std::move(lower),
                             f3.diag, f3.rank};
    }
    return zero_leading_pairs(y, z, cfg);
}

/* Halving recursion.  Factor the leading block, propagate its permutation
 * and multipliers through the off-diagonal block, and hand the bordered
 * trailing problem [0 Y; Y^t Z] to the zero-leading step.
 */
Factorization recursive_step(const Matrix& a, const SytrfConfig& cfg) {
    const PrimeField& f = a.field();
    const std::size_t n = a.rows();
    const std::size_t m = n / 2;

    const Factorization f1 = dispatch(a.block(0, m, 0, m), cfg);
    const std::size_t r1 = f1.rank;
    const Matrix l1 = f1.lower.block(0, r1, 0, r1);
    const Matrix m1 = f1.lower.block(r1, m, 0, r1);

    const Matrix bp = permute_rows_inv(f1.perm, a.block(0, m, m, n));
    Matrix x = bp.block(0, r1, 0, n - m);
    trsm_inplace(l1, Uplo::Lower, /*trans=*/false, /*unit=*/true, x);
    Matrix y = bp.block(r1, m, 0, n - m);
    gemm_sub(y, m1, x);
    const Matrix g = f1.diag.inverse_apply(x).transposed();
    Matrix z = a.block(m, n, m, n);
    syrdk_sub(z, g, f1.diag);

    const Factorization f2 = zero_leading(y, z, cfg);

    Matrix below(f, n - r1, r1);
    below.set_block(0, 0, m1);
    below.set_block(m - r1, 0, g);
    const Matrix n1 = permute_rows_inv(f2.perm, below);

    const std::size_t rank = r1 + f2.rank;
    Matrix lower(f, n, rank);
    lower.set_block(0, 0, l1);
    lower.set_block(r1, 0, n1);
    lower.set_block(r1, r1, f2.lower);

    BlockDiag diag = f1.diag;
    diag.append(f2.diag);
    return Factorization{
        compose(embed(f1.perm, 0, n), embed(f2.perm, r1, n)), std::move(lower),
        std::move(diag), rank};
}

Factorization dispatch(const Matrix& a, const SytrfConfig& cfg) {
    switch (cfg.variant) {
    case Variant::Crout:
        return crout_base(a);
    case Variant::Recursive:
        if (a.rows() <= 1) return crout_base(a);
        return recursive_step(a, cfg);
    case Variant::Cascade:
    default:
        /* a 1x1 block cannot be halved, whatever the threshold says */
        if (a.rows() <= cfg.base_case_threshold || a.rows() <= 1) return crout_base(a);
        return recursive_step(a, cfg);
    }
}

} // namespace

Factorization ldlt(const Matrix& a, const SytrfConfig& config) {
    if (a.rows() != a.cols()) throw DimensionMismatch("ldlt: matrix must be square");
    if (!a.is_symmetric()) throw NotSymmetric("ldlt: matrix must be symmetric");
    return dispatch(a, config);
}

Factorization ldlt_zero_leading(const Matrix& y, const Matrix& z, const SytrfConfig& config) {
    if (z.rows() != z.cols()) throw DimensionMismatch("ldlt_zero_leading: Z must be square");
    if (y.cols() != z.rows())
        throw DimensionMismatch("ldlt_zero_leading: Y and Z have mismatched widths");
    if (y.field().modulus() != z.field().modulus())
        throw DimensionMismatch("ldlt_zero_leading: operands over different fields");
    if (!z.is_symmetric()) throw NotSymmetric("ldlt_zero_leading: Z must be symmetric");
    return zero_leading(y, z, config);
}

} // namespace ffldl
