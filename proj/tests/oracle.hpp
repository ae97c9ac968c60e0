#pragma once

/* Test-side reference implementations.  Everything here is deliberately
 * naive, works on raw residues with its own modular arithmetic, and shares
 * no code with the library kernels, so that a bug in the library cannot hide
 * behind the same bug in its oracle.  Quartic and worse complexity is fine:
 * these only ever see small matrices.
 */

#include <cstdint>
#include <random>
#include <vector>

#include "ffldl/matrix.hpp"

namespace oracle {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<__uint128_t>(a) * b) % p);
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

/// a * b with a plain triple loop; does not touch the field's counter.
inline ffldl::Matrix matmul(const ffldl::Matrix& a, const ffldl::Matrix& b) {
    const std::uint64_t p = a.field().modulus();
    ffldl::Matrix c(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            std::uint64_t s = 0;
            for (std::size_t k = 0; k < a.cols(); ++k)
                s = (s + mulmod(a(i, k).value, b(k, j).value, p)) % p;
            c(i, j) = ffldl::FieldElement{s};
        }
    return c;
}

/// Rank of the leading rows x cols submatrix by fresh Gaussian elimination.
inline std::size_t rank(const ffldl::Matrix& a, std::size_t rows, std::size_t cols) {
    const std::uint64_t p = a.field().modulus();
    std::vector<std::vector<std::uint64_t>> w(rows, std::vector<std::uint64_t>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) w[i][j] = a(i, j).value;
    std::size_t r = 0;
    for (std::size_t j = 0; j < cols && r < rows; ++j) {
        std::size_t pivot = r;
        while (pivot < rows && w[pivot][j] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(w[pivot], w[r]);
        const std::uint64_t xi = invmod(w[r][j], p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (w[i][j] == 0) continue;
            const std::uint64_t f = mulmod(w[i][j], xi, p);
            for (std::size_t k = j; k < cols; ++k)
                w[i][k] = submod(w[i][k], mulmod(f, w[r][k], p), p);
        }
        ++r;
    }
    return r;
}

inline std::size_t rank(const ffldl::Matrix& a) { return rank(a, a.rows(), a.cols()); }

/* Rank profile matrix straight from its definition: entry (i, j) is one
 * exactly when the leading (i+1) x (j+1) rank exceeds the ranks of the three
 * neighbouring leading submatrices.  One elimination per entry; use only on
 * tiny inputs.
 */
inline ffldl::Matrix rank_profile(const ffldl::Matrix& a) {
    ffldl::Matrix r(a.field(), a.rows(), a.cols());
    const ffldl::FieldElement one = a.field().one();
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const std::size_t full = rank(a, i + 1, j + 1);
            const std::size_t up = i == 0 ? 0 : rank(a, i, j + 1);
            const std::size_t left = j == 0 ? 0 : rank(a, i + 1, j);
            const std::size_t corner = (i == 0 || j == 0) ? 0 : rank(a, i, j);
            if (full + corner > up + left) r(i, j) = one;
        }
    return r;
}

inline ffldl::Matrix random_matrix(const ffldl::PrimeField& f, std::size_t rows,
                                   std::size_t cols, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, f.modulus() - 1);
    ffldl::Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = ffldl::FieldElement{dist(rng)};
    return m;
}

inline ffldl::Matrix random_symmetric(const ffldl::PrimeField& f, std::size_t n,
                                      std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, f.modulus() - 1);
    ffldl::Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            const ffldl::FieldElement v{dist(rng)};
            m(i, j) = v;
            m(j, i) = v;
        }
    return m;
}

/// Symmetric with rank at most r: X^t * S * X for random X (r x n), S symmetric.
inline ffldl::Matrix random_symmetric_low_rank(const ffldl::PrimeField& f, std::size_t n,
                                               std::size_t r, std::mt19937_64& rng) {
    const ffldl::Matrix x = random_matrix(f, r, n, rng);
    const ffldl::Matrix s = random_symmetric(f, r, rng);
    return matmul(x.transposed(), matmul(s, x));
}

inline ffldl::Matrix random_unit_triangular(const ffldl::PrimeField& f, std::size_t n,
                                            bool upper, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, f.modulus() - 1);
    ffldl::Matrix m = ffldl::Matrix::identity(f, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const ffldl::FieldElement v{dist(rng)};
            if (upper)
                m(i, j) = v;
            else
                m(j, i) = v;
        }
    return m;
}

} // namespace oracle
