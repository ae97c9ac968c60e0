#include "ffldl/genbench.hpp"

#include <chrono>
#include <numeric>
#include <ostream>
#include <sstream>

#include "ffldl/errors.hpp"
#include "ffldl/rpmtools.hpp"

namespace ffldl {

namespace {

FieldElement random_element(const PrimeField& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, f.modulus() - 1);
    return f.element(dist(rng));
}

FieldElement random_nonzero(const PrimeField& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(1, f.modulus() - 1);
    return f.element(dist(rng));
}

Matrix random_unit_lower(const PrimeField& f, std::size_t n, std::mt19937_64& rng) {
    Matrix l(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        l(i, i) = f.one();
        for (std::size_t j = 0; j < i; ++j) l(i, j) = random_element(f, rng);
    }
    return l;
}

/// Lbar * mid * Lbar^t by plain triple loops.
Matrix sandwich(const Matrix& lbar, const Matrix& mid) {
    const PrimeField& f = lbar.field();
    const std::size_t n = lbar.rows();
    Matrix tmp(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            FieldElement acc = f.zero();
            for (std::size_t k = 0; k <= i; ++k) acc = f.add(acc, f.mul(lbar(i, k), mid(k, j)));
            tmp(i, j) = acc;
        }
    Matrix a(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            FieldElement acc = f.zero();
            for (std::size_t k = 0; k <= j; ++k) acc = f.add(acc, f.mul(tmp(i, k), lbar(j, k)));
            a(i, j) = acc;
        }
    return a;
}

Matrix matrix_with_rank_profile_once(const Matrix& rook, std::mt19937_64& rng) {
    const PrimeField& f = rook.field();
    const std::size_t n = rook.rows();
    Matrix mid(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rook(i, i) == f.one()) mid(i, i) = random_nonzero(f, rng);
        for (std::size_t j = i + 1; j < n; ++j)
            if (rook(i, j) == f.one()) {
                const FieldElement c = random_nonzero(f, rng);
                mid(i, j) = c;
                mid(j, i) = c;
                /* Perturbing the partner diagonal keeps every leading rank of
                 * mid intact but makes the pivot block antitriangular, which
                 * over characteristic 2 cannot be split.
                 */
                if (rng() % 2 == 0) mid(j, j) = random_nonzero(f, rng);
            }
    }
    return sandwich(random_unit_lower(f, n, rng), mid);
}

} // namespace

Matrix random_symmetric_rook(const PrimeField& f, std::size_t n, std::size_t rank,
                             std::mt19937_64& rng) {
    if (rank > n) throw BadRank("random_symmetric_rook: rank exceeds dimension");
    Matrix r(f, n, n);
    std::vector<std::size_t> avail(n);
    std::iota(avail.begin(), avail.end(), std::size_t{0});
    const auto take = [&](std::size_t pos) {
        const std::size_t v = avail[pos];
        avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(pos));
        return v;
    };
    std::size_t left = rank;
    while (left > 0) {
        const std::size_t u = take(rng() % avail.size());
        if (left == 1 || avail.empty() || rng() % 2 == 0) {
            r(u, u) = f.one();
            left -= 1;
        } else {
            const std::size_t w = take(rng() % avail.size());
            r(u, w) = f.one();
            r(w, u) = f.one();
            left -= 2;
        }
    }
    return r;
}

Matrix matrix_with_rank_profile(const Matrix& rook, std::mt19937_64& rng) {
    const std::size_t n = rook.rows();
    constexpr int attempts = 4;
    for (int t = 0; t < attempts; ++t) {
        Matrix a = matrix_with_rank_profile_once(rook, rng);
        if (n > 64 || rank_profile_bruteforce(a) == rook) return a;
    }
    throw OracleMismatchExhausted("matrix_with_rank_profile: construction kept missing the target");
}

Matrix generic_symmetric(const PrimeField& f, std::size_t n, std::size_t rank,
                         std::mt19937_64& rng) {
    if (rank > n) throw BadRank("generic_symmetric: rank exceeds dimension");
    Matrix mid(f, n, n);
    for (std::size_t i = 0; i < rank; ++i) mid(i, i) = random_nonzero(f, rng);
    return sandwich(random_unit_lower(f, n, rng), mid);
}

Matrix dense_random_symmetric(const PrimeField& f, std::size_t n, std::mt19937_64& rng) {
    Matrix a(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = random_element(f, rng);
        for (std::size_t j = i + 1; j < n; ++j) {
            const FieldElement v = random_element(f, rng);
            a(i, j) = v;
            a(j, i) = v;
        }
    }
    return a;
}

double effective_gfops(std::size_t n, std::size_t rank, double seconds) {
    if (!(seconds > 0.0)) throw NonpositiveTime("effective_gfops: nonpositive duration");
    const double nn = static_cast<double>(n);
    const double rr = static_cast<double>(rank);
    return (rr * rr * rr / 3.0 + nn * nn * rr - rr * rr * nn) / (1e9 * seconds);
}

std::string variant_name(Variant v) {
    switch (v) {
    case Variant::Recursive:
        return "recursive";
    case Variant::Crout:
        return "crout";
    case Variant::Cascade:
    default:
        return "cascade";
    }
}

BenchResult run_bench(const PrimeField& f, const std::string& kind, std::size_t n,
                      const SytrfConfig& config, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Matrix a(f, 0, 0);
    if (kind == "rpm-half")
        a = matrix_with_rank_profile(random_symmetric_rook(f, n, n / 2, rng), rng);
    else if (kind == "rpm-full")
        a = matrix_with_rank_profile(random_symmetric_rook(f, n, n, rng), rng);
    else if (kind == "generic")
        a = generic_symmetric(f, n, n, rng);
    else if (kind == "dense")
        a = dense_random_symmetric(f, n, rng);
    else
        throw Error("run_bench: unknown input kind '" + kind + "'");

    f.reset_mul_count();
    const auto start = std::chrono::steady_clock::now();
    const Factorization fac = ldlt(a, config);
    const auto stop = std::chrono::steady_clock::now();
    const double seconds = std::chrono::duration<double>(stop - start).count();

    BenchResult res;
    res.n = n;
    res.rank = fac.rank;
    res.modulus = f.modulus();
    res.variant = variant_name(config.variant);
    res.seconds = seconds;
    res.mul_count = f.mul_count();
    res.gfops = effective_gfops(n, fac.rank, seconds);
    return res;
}

void write_csv(std::ostream& out, const std::vector<BenchResult>& results) {
    out << "n,r,field,variant,seconds,mul_count,effective_gfops\n";
    for (const BenchResult& r : results) {
        std::ostringstream line;
        line.precision(6);
        line << r.n << ',' << r.rank << ',' << r.modulus << ',' << r.variant << ','
             << std::scientific << r.seconds << ',' << r.mul_count << ',' << r.gfops;
        out << line.str() << '\n';
    }
}

} // namespace ffldl
