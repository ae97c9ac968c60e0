#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "ffldl/matrix.hpp"
#include "ffldl/sytrf.hpp"

namespace ffldl {

/* Random symmetric 0/1 rook placement of the given rank: at most one 1 per
 * row and per column, symmetric as a matrix (fixed points on the diagonal,
 * transposed pairs off it).  These are exactly the rank profile matrices of
 * symmetric matrices.
 */
Matrix random_symmetric_rook(const PrimeField& f, std::size_t n, std::size_t rank,
                             std::mt19937_64& rng);

/* Symmetric matrix whose rank profile matrix equals the given symmetric rook
 * placement R, built as Lbar * D_R * Lbar^t with Lbar random unit lower
 * triangular and D_R carrying random nonzero values on the support of R
 * (pairs may get an extra diagonal perturbation, which over characteristic 2
 * forces AntiTri pivots).  Unit triangular congruence preserves every leading
 * submatrix rank, so the construction is exact by design; for n <= 64 the
 * result is nevertheless checked against the brute force rank profile and
 * redrawn on a mismatch, with OracleMismatchExhausted after a few attempts.
 */
Matrix matrix_with_rank_profile(const Matrix& rook, std::mt19937_64& rng);

/// Symmetric matrix of the given rank whose leading k x k minors are nonzero
/// for all k <= rank; its rank profile matrix is I_rank padded with zeros.
Matrix generic_symmetric(const PrimeField& f, std::size_t n, std::size_t rank,
                         std::mt19937_64& rng);

/// Uniform random symmetric matrix (rank is whatever it comes out to be).
Matrix dense_random_symmetric(const PrimeField& f, std::size_t n, std::mt19937_64& rng);

/* Effective Gfops of a rank revealing factorization: the classical operation
 * count r^3/3 + n^2 r - r^2 n scaled by 1e9 * seconds.  For full rank this is
 * the familiar n^3/3 over time.  Throws NonpositiveTime when seconds <= 0.
 */
double effective_gfops(std::size_t n, std::size_t rank, double seconds);

struct BenchResult {
    std::size_t n = 0;
    std::size_t rank = 0;
    std::uint64_t modulus = 0;
    std::string variant;
    double seconds = 0.0;
    std::uint64_t mul_count = 0;
    double gfops = 0.0;
};

std::string variant_name(Variant v);

/* One timed factorization.  kind selects the input: "rpm-half" (random rank
 * profile, rank n/2), "rpm-full" (random rank profile, full rank), "generic"
 * (generic full rank), "dense" (uniform symmetric).  The field's
 * multiplication counter is reset before the run and reported after.
 */
BenchResult run_bench(const PrimeField& f, const std::string& kind, std::size_t n,
                      const SytrfConfig& config, std::uint64_t seed);

/// CSV with header n,r,field,variant,seconds,mul_count,effective_gfops.
void write_csv(std::ostream& out, const std::vector<BenchResult>& results);

} // namespace ffldl
