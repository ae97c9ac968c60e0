#include "ffldl/trssyr2k.hpp"

#include "ffldl/errors.hpp"
#include "ffldl/kernels.hpp"

namespace ffldl {

namespace {

/* Recursive worker; c holds the current symmetric right hand side and is
 * replaced by the triangular solution block by block:
 *
 *   [X1^t    0 ] [U1 U2]   [U1^t    0 ] [X1 X2]   [C1 C2  ]
 *   [X2^t X3^t] [ 0 U3] + [U2^t U3^t] [ 0 X3] = [C2^t C3]
 *
 * giving X1 from (U1, C1), then X2 = U1^-t (C2 - X1^t U2), then X3 from
 * (U3, C3 - X2^t U2 - U2^t X2).
 */
void solve_block(const Matrix& u, Matrix& c) {
    const PrimeField& f = c.field();
    const std::size_t n = c.rows();
    if (n == 1) {
        if (f.is_char_two()) {
            if (!f.is_zero(c(0, 0)))
                throw CharTwoNonzeroDiagonal("trssyr2k: diagonal entry has no solution");
            return;
        }
        c(0, 0) = f.halve(c(0, 0));
        return;
    }
    const std::size_t n1 = n / 2;
    const Matrix u1 = u.block(0, n1, 0, n1);
    const Matrix u2 = u.block(0, n1, n1, n);
    const Matrix u3 = u.block(n1, n, n1, n);

    Matrix c1 = c.block(0, n1, 0, n1);
    solve_block(u1, c1);

    Matrix c2 = c.block(0, n1, n1, n);
    trmm_sub(c2, c1, Uplo::Upper, /*trans=*/true, /*unit=*/false, u2);
    trsm_inplace(u1, Uplo::Upper, /*trans=*/true, /*unit=*/true, c2);

    Matrix c3 = c.block(n1, n, n1, n);
    syr2k_sub(c3, c2, u2);
    solve_block(u3, c3);

    c.set_block(0, 0, c1);
    c.set_block(0, n1, c2);
    c.set_block(n1, 0, Matrix(f, n - n1, n1));
    c.set_block(n1, n1, c3);
}

} // namespace

void trssyr2k_inplace(const Matrix& u, Matrix& c) {
    if (u.rows() != u.cols() || c.rows() != c.cols() || u.rows() != c.rows())
        throw DimensionMismatch("trssyr2k: operands must be square of equal order");
    if (u.field().modulus() != c.field().modulus())
        throw DimensionMismatch("trssyr2k: operands over different fields");
    const PrimeField& f = c.field();
    for (std::size_t i = 0; i < u.rows(); ++i)
        if (u(i, i) != f.one()) throw NonUnitTriangular("trssyr2k: U must have unit diagonal");
    if (!c.is_symmetric()) throw NotSymmetric("trssyr2k: C must be symmetric");
    if (c.rows() == 0) return;
    solve_block(u, c);
    /* The recursion leaves zeros below the diagonal of every off-diagonal
     * block; clear the strictly lower diagonal remnants of the 1x1 bases.
     */
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < i; ++j) c(i, j) = f.zero();
}

Matrix trssyr2k(const Matrix& u, const Matrix& c) {
    Matrix x = c;
    trssyr2k_inplace(u, x);
    return x;
}

} // namespace ffldl
