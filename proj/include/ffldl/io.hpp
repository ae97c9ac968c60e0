#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ffldl/blockdiag.hpp"
#include "ffldl/matrix.hpp"

namespace ffldl {

/* Plain text matrix format:
 *
 *     SymMat n p          (or: Mat m n p)
 *     <row of n values>
 *     ...
 *
 * Values are canonical residues separated by single spaces.  SymMat inputs
 * must actually be symmetric.  emit(parse(s)) reproduces s byte for byte for
 * canonically formatted files.
 */
struct MatrixFile {
    bool symmetric = false;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::uint64_t modulus = 0;
    std::vector<std::uint64_t> values; ///< row major canonical residues

    static MatrixFile parse(std::istream& in);
    static MatrixFile from(const Matrix& m, bool symmetric);
    void emit(std::ostream& out) const;
    /// Materialize over f; throws ParseError if f has a different modulus.
    Matrix bind(const PrimeField& f) const;
};

/* Plain text factorization format:
 *
 *     Factorization n p
 *     rank r
 *     P <n images>
 *     L
 *     <n rows of r values>
 *     D
 *     S d | A x | T c d       (one block per line, orders summing to r)
 */
struct FactorizationFile {
    struct Block {
        char tag = 'S';
        std::uint64_t a = 0;
        std::uint64_t b = 0;
    };

    std::size_t dimension = 0;
    std::uint64_t modulus = 0;
    std::size_t rank = 0;
    std::vector<std::size_t> perm_image;
    std::vector<std::uint64_t> lower; ///< dimension x rank, row major
    std::vector<Block> blocks;

    static FactorizationFile parse(std::istream& in);
    static FactorizationFile from(const Factorization& f);
    void emit(std::ostream& out) const;
    Factorization bind(const PrimeField& f) const;
};

} // namespace ffldl
