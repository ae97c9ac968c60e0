#include "ffldl/plduq.hpp"

#include "ffldl/errors.hpp"

namespace ffldl {

Matrix PlduqFactorization::reconstruct() const {
    const PrimeField& f = lower.field();
    const std::size_t m = lower.rows();
    const std::size_t n = upper.cols();
    Matrix k(f, m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            FieldElement acc = f.zero();
            for (std::size_t t = 0; t < rank; ++t)
                acc = f.add(acc, f.mul(f.mul(lower(i, t), diag[t]), upper(t, j)));
            k(i, j) = acc;
        }
    return permute_rows(row_perm, permute_cols(col_perm, k));
}

Matrix PlduqFactorization::rank_profile() const {
    const PrimeField& f = lower.field();
    Matrix r(f, lower.rows(), upper.cols());
    for (std::size_t k = 0; k < rank; ++k) r(row_perm.image(k), col_perm.image(k)) = f.one();
    return r;
}

/* Crout elimination with in-place packed storage.  W starts as a copy of B;
 * when pivot k is placed at (row pr[k], column pc[k]), column pc[k] below the
 * pivot row receives the scaled multipliers L(., k) and row pr[k] right of
 * the pivot the scaled coefficients U(k, .); d[k] holds the pivot itself.
 * Rows whose updated residual vanishes keep explicit zeros in the remaining
 * columns and become the M1 block.
 */
PlduqFactorization plduq(const Matrix& b) {
    const PrimeField& f = b.field();
    const std::size_t m = b.rows();
    const std::size_t n = b.cols();
    Matrix w = b;

    std::vector<std::size_t> pr, pc, mrows;
    std::vector<FieldElement> d;
    std::vector<char> col_is_pivot(n, 0);

    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t r = pr.size();
        /* Crout update of row i over the non-pivot columns:
         * u_j = W(i,j) - sum_k L(i,k) d_k U(k,j).
         */
        std::size_t first_nonzero = n;
        for (std::size_t j = 0; j < n; ++j) {
            if (col_is_pivot[j]) continue;
            FieldElement acc = w(i, j);
            for (std::size_t k = 0; k < r; ++k)
                acc = f.sub(acc, f.mul(f.mul(w(i, pc[k]), d[k]), w(pr[k], j)));
            w(i, j) = acc;
            if (first_nonzero == n && !f.is_zero(acc)) first_nonzero = j;
        }
        if (first_nonzero == n) {
            mrows.push_back(i);
            continue;
        }

        const std::size_t jp = first_nonzero;
        const FieldElement x = w(i, jp);
        const FieldElement xi = f.inv(x);
        /* Scale the pivot row into U coefficients. */
        for (std::size_t j = 0; j < n; ++j)
            if (!col_is_pivot[j] && j != jp) w(i, j) = f.mul(xi, w(i, j));
        /* Crout update of the pivot column for the rows still to come, then
         * scale into L multipliers.
         */
        for (std::size_t i2 = i + 1; i2 < m; ++i2) {
            FieldElement acc = w(i2, jp);
            for (std::size_t k = 0; k < r; ++k)
                acc = f.sub(acc, f.mul(f.mul(w(i2, pc[k]), d[k]), w(pr[k], jp)));
            w(i2, jp) = f.mul(xi, acc);
        }
        pr.push_back(i);
        pc.push_back(jp);
        d.push_back(x);
        col_is_pivot[jp] = 1;
    }

    const std::size_t r = pr.size();
    std::vector<std::size_t> row_image(m), col_image(n);
    for (std::size_t k = 0; k < r; ++k) row_image[k] = pr[k];
    for (std::size_t t = 0; t < mrows.size(); ++t) row_image[r + t] = mrows[t];
    std::vector<std::size_t> npcols;
    for (std::size_t j = 0; j < n; ++j)
        if (!col_is_pivot[j]) npcols.push_back(j);
    for (std::size_t k = 0; k < r; ++k) col_image[k] = pc[k];
    for (std::size_t t = 0; t < npcols.size(); ++t) col_image[r + t] = npcols[t];

    /* Gather the packed storage into dense factors.  Rows that went pivotless
     * before pivot k was found already hold an explicit zero at column pc[k],
     * so a plain read gives the right M1 entries.
     */
    Matrix lower(f, m, r);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t k = 0; k < r; ++k) {
            if (a == k)
                lower(a, k) = f.one();
            else if (a > k)
                lower(a, k) = w(row_image[a], pc[k]);
        }
    Matrix upper(f, r, n);
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t a = 0; a < n; ++a) {
            if (a == k)
                upper(k, a) = f.one();
            else if (a > k)
                upper(k, a) = w(pr[k], col_image[a]);
        }

    return PlduqFactorization{Permutation::from_image(std::move(row_image)),
                              Permutation::from_image(std::move(col_image)),
                              std::move(lower),
                              std::move(d),
                              std::move(upper),
                              r};
}

} // namespace ffldl
