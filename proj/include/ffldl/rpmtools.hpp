#pragma once

#include "ffldl/blockdiag.hpp"
#include "ffldl/matrix.hpp"

namespace ffldl {

/* The rank profile matrix of an m x n matrix A is the unique 0/1 matrix R
 * with at most one 1 per row and column such that every leading submatrix of
 * R has the same rank as the corresponding leading submatrix of A.  This
 * routine computes it directly from the definition: one Gaussian elimination
 * per row count, recording pivot columns, then inclusion/exclusion on the
 * rank table.  Quartic and oblivious to how the factorizations pivot, which
 * is the point: it is the reference the fast paths are checked against.
 */
Matrix rank_profile_bruteforce(const Matrix& a);

/// Pi = dense(P) * support(D) * dense(P)^t as a 0/1 matrix: where the pivots
/// of the factorization landed in A.
Matrix pivoting_matrix(const Factorization& f);

/// True when F reconstructs A and its pivoting matrix equals the rank
/// profile matrix of A.
bool verify_revealing(const Factorization& f, const Matrix& a);

struct StrictifyStats {
    std::size_t blocks_converted = 0;
    std::size_t entries_touched = 0; ///< individual writes to rows/columns of L
};

/* Rewrite every characteristic 2 AntiTri block [0 c; c d] of F into the pair
 * of scalar pivots diag(d, -c^2/d), adjusting two columns of L and composing
 * a transposition into P per block.  The reconstruction is preserved exactly;
 * the pivoting matrix generally is not, so a factorization that revealed the
 * rank profile matrix may stop doing so.  Cost is O(dimension) per block.
 * Throws WrongCharacteristic over odd characteristic if an AntiTri block is
 * present (they cannot arise there).
 */
void strictify(Factorization& f, StrictifyStats* stats = nullptr);

} // namespace ffldl
