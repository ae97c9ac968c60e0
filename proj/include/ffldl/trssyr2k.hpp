#pragma once

#include "ffldl/matrix.hpp"

namespace ffldl {

/* Solve X^t * U + U^t * X = C for the upper triangular unknown X, where U is
 * n x n unit upper triangular and C is n x n symmetric.  Only the upper
 * triangle of U is read.
 *
 * Over odd characteristic the solution with upper triangular X is unique.
 * Over characteristic 2 the diagonal of X^t * U + U^t * X is forced to zero,
 * so a solution exists iff the (recursively updated) diagonal of C vanishes;
 * CharTwoNonzeroDiagonal is thrown otherwise, and the returned X has zero
 * diagonal.
 */
Matrix trssyr2k(const Matrix& u, const Matrix& c);

/// In-place form: C is overwritten by X (explicit zeros below the diagonal).
void trssyr2k_inplace(const Matrix& u, Matrix& c);

} // namespace ffldl
