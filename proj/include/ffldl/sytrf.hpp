#pragma once

#include "ffldl/blockdiag.hpp"
#include "ffldl/matrix.hpp"

namespace ffldl {

enum class Variant {
    Recursive, ///< halving recursion all the way down to 1x1 base cases
    Crout,     ///< iterative Crout elimination on the whole matrix
    Cascade,   ///< recursion that switches to Crout at the threshold
};

struct SytrfConfig {
    Variant variant = Variant::Cascade;
    std::size_t base_case_threshold = 64;
};

/* Symmetric indefinite factorization of A (n x n, symmetric, any rank):
 *
 *     A = dense(P) * L * D * L^t * dense(P)^t
 *
 * with L n x rank(A), unit lower triangular in its top rank(A) rows, and D
 * block diagonal (Scalar / AntiDiag blocks; AntiTri blocks can appear over
 * characteristic 2, where some inputs admit nothing stricter).  Pivots are
 * chosen so that P together with the support of D reveals the rank profile
 * matrix of A: the 0/1 matrix with a one at (i, j) exactly where the rank of
 * the leading i x j submatrix exceeds that of its three predecessors.
 */
Factorization ldlt(const Matrix& a, const SytrfConfig& config = {});

/* Factorization of the bordered matrix
 *
 *     T = [0   Y]     with Y of shape m x n and Z symmetric n x n,
 *         [Y^t Z]
 *
 * whose leading m x m block is zero.  This is the recursion step used by
 * ldlt after a rank deficient leading block; it is exposed for direct use
 * and testing.  The returned factorization has dimension m + n.
 */
Factorization ldlt_zero_leading(const Matrix& y, const Matrix& z, const SytrfConfig& config = {});

} // namespace ffldl
