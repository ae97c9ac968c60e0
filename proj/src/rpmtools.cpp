#include "ffldl/rpmtools.hpp"

#include "ffldl/errors.hpp"

namespace ffldl {

namespace {

/* Pivot-column flags of the row echelon form of the first `rows` rows of A,
 * by plain left-to-right Gaussian elimination with row swaps.  The prefix
 * sums of the flags are the ranks of the leading (rows x j) submatrices.
 */
std::vector<char> pivot_columns(const Matrix& a, std::size_t rows) {
    const PrimeField& f = a.field();
    const std::size_t n = a.cols();
    Matrix w = a.block(0, rows, 0, n);
    std::vector<char> is_pivot(n, 0);
    std::size_t next_row = 0;
    for (std::size_t j = 0; j < n && next_row < rows; ++j) {
        std::size_t p = rows;
        for (std::size_t i = next_row; i < rows; ++i)
            if (!f.is_zero(w(i, j))) {
                p = i;
                break;
            }
        if (p == rows) continue;
        for (std::size_t t = 0; t < n; ++t) std::swap(w(next_row, t), w(p, t));
        const FieldElement inv = f.inv(w(next_row, j));
        for (std::size_t i = next_row + 1; i < rows; ++i) {
            if (f.is_zero(w(i, j))) continue;
            const FieldElement factor = f.mul(inv, w(i, j));
            for (std::size_t t = j; t < n; ++t)
                w(i, t) = f.sub(w(i, t), f.mul(factor, w(next_row, t)));
        }
        is_pivot[j] = 1;
        ++next_row;
    }
    return is_pivot;
}

} // namespace

Matrix rank_profile_bruteforce(const Matrix& a) {
    const PrimeField& f = a.field();
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    /* ranks[i][j] = rank of the leading i x j submatrix. */
    std::vector<std::vector<std::size_t>> ranks(m + 1, std::vector<std::size_t>(n + 1, 0));
    for (std::size_t i = 1; i <= m; ++i) {
        const std::vector<char> piv = pivot_columns(a, i);
        for (std::size_t j = 1; j <= n; ++j) ranks[i][j] = ranks[i][j - 1] + (piv[j - 1] ? 1 : 0);
    }
    Matrix r(f, m, n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (ranks[i + 1][j + 1] + ranks[i][j] > ranks[i][j + 1] + ranks[i + 1][j])
                r(i, j) = f.one();
    return r;
}

Matrix pivoting_matrix(const Factorization& f) {
    const PrimeField& field = f.lower.field();
    const std::size_t n = f.dimension();
    Matrix pi(field, n, n);
    for (const auto& [a, b] : f.diag.support())
        pi(f.perm.image(a), f.perm.image(b)) = field.one();
    return pi;
}

bool verify_revealing(const Factorization& f, const Matrix& a) {
    return f.reconstruct() == a && pivoting_matrix(f) == rank_profile_bruteforce(a);
}

void strictify(Factorization& f, StrictifyStats* stats) {
    const PrimeField& field = f.lower.field();
    Matrix& l = f.lower;
    const std::size_t n = l.rows();
    StrictifyStats local;

    BlockDiag rebuilt;
    for (std::size_t k = 0; k < f.diag.block_count(); ++k) {
        const auto* at = std::get_if<AntiTriBlock>(&f.diag.block(k));
        if (at == nullptr) {
            rebuilt.push(f.diag.block(k));
            continue;
        }
        if (!field.is_char_two())
            throw WrongCharacteristic("strictify: AntiTri block over odd characteristic");
        const std::size_t t = f.diag.offset(k);
        const FieldElement c = at->c;
        const FieldElement dd = at->d;

        /* Normalize the 2x2 pivot rows of L to the identity: col t -= x*col t+1
         * with x = L(t+1, t).  Over characteristic 2 this column operation
         * conjugates [0 c; c d] to itself, so D needs no compensation.
         */
        const FieldElement x = l(t + 1, t);
        if (!field.is_zero(x)) {
            for (std::size_t i = t + 1; i < n; ++i) {
                l(i, t) = field.sub(l(i, t), field.mul(x, l(i, t + 1)));
                ++local.entries_touched;
            }
        }
        /* Swap the two pivot positions: prefix columns of rows t, t+1 swap
         * and later rows swap their (t, t+1) column pair; the 2x2 identity
         * block is invariant.  The block becomes [d c; c 0] and P absorbs
         * the transposition.
         */
        for (std::size_t j = 0; j < t; ++j) {
            std::swap(l(t, j), l(t + 1, j));
            local.entries_touched += 2;
        }
        for (std::size_t i = t + 2; i < n; ++i) {
            std::swap(l(i, t), l(i, t + 1));
            local.entries_touched += 2;
        }
        f.perm = compose(f.perm, Permutation::transposition(n, t, t + 1));
        /* Eliminate the remaining coupling: col t += (c/d)*col t+1 turns
         * [d c; c 0] into diag(d, -c^2/d).
         */
        const FieldElement cd = field.mul(c, field.inv(dd));
        for (std::size_t i = t + 1; i < n; ++i) {
            l(i, t) = field.add(l(i, t), field.mul(cd, l(i, t + 1)));
            ++local.entries_touched;
        }
        rebuilt.push(ScalarBlock{dd});
        rebuilt.push(ScalarBlock{field.neg(field.mul(field.mul(c, c), field.inv(dd)))});
        ++local.blocks_converted;
    }
    f.diag = std::move(rebuilt);
    if (stats != nullptr) *stats = local;
}

} // namespace ffldl
