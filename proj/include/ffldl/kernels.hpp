#pragma once

#include <span>

#include "ffldl/blockdiag.hpp"
#include "ffldl/matrix.hpp"

namespace ffldl {

enum class Uplo { Lower, Upper };

/// C <- C - A * B.  Performs exactly rows(A) * cols(B) * cols(A) multiplications.
void gemm_sub(Matrix& c, const Matrix& a, const Matrix& b);

/* C <- C - op(T) * B where T is triangular.  Only the `uplo` triangle of T is
 * read (the other triangle may hold unrelated data); the diagonal is taken to
 * be all ones when `unit` is set.  op(T) = T^t when `trans` is set.
 */
void trmm_sub(Matrix& c, const Matrix& t, Uplo uplo, bool trans, bool unit, const Matrix& b);

/// B <- op(T)^-1 * B by substitution; same triangle/op rules as trmm_sub.
void trsm_inplace(const Matrix& t, Uplo uplo, bool trans, bool unit, Matrix& b);

/// C <- C - G * D * G^t with block diagonal D of order cols(G).  Both
/// triangles of C are written.
void syrdk_sub(Matrix& c, const Matrix& g, const BlockDiag& d);

/// C <- C - G * diag(d) * G^t.
void syrdk_sub(Matrix& c, const Matrix& g, std::span<const FieldElement> d);

/// C <- C - A^t * B - B^t * A for k x n operands A, B.
void syr2k_sub(Matrix& c, const Matrix& a, const Matrix& b);

} // namespace ffldl
