#pragma once

#include <vector>

#include "ffldl/matrix.hpp"
#include "ffldl/permutation.hpp"

namespace ffldl {

/* Rank revealing LU decomposition of a rectangular m x n matrix B:
 *
 *     B = dense(P) * ( [L1; M1] * diag(d) * [U1 V1] ) * dense(Q)^t
 *
 * with L1 (r x r) unit lower triangular, U1 (r x r) unit upper triangular,
 * M1 ((m-r) x r), V1 (r x (n-r)) and nonzero pivots d.  Row k of the middle
 * product corresponds to row row_perm.image(k) of B, column k to column
 * col_perm.image(k).
 *
 * Pivots are chosen Crout style, rows in order and the leftmost nonzero
 * column of each updated row, so that the pivot positions
 * (row_perm.image(k), col_perm.image(k)) are exactly the support of the rank
 * profile matrix of B.
 */
struct PlduqFactorization {
    Permutation row_perm;
    Permutation col_perm;
    Matrix lower;                   ///< m x r, [L1; M1].
    std::vector<FieldElement> diag; ///< r pivots.
    Matrix upper;                   ///< r x n, [U1 V1].
    std::size_t rank = 0;

    Matrix l1() const { return lower.block(0, rank, 0, rank); }
    Matrix m1() const { return lower.block(rank, lower.rows(), 0, rank); }
    Matrix u1() const { return upper.block(0, rank, 0, rank); }
    Matrix v1() const { return upper.block(0, rank, rank, upper.cols()); }

    Matrix reconstruct() const;
    /// The 0/1 rank profile matrix revealed by the pivot positions.
    Matrix rank_profile() const;
};

PlduqFactorization plduq(const Matrix& b);

} // namespace ffldl
