#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ffldl/errors.hpp"
#include "ffldl/genbench.hpp"
#include "ffldl/io.hpp"
#include "ffldl/rpmtools.hpp"
#include "ffldl/sytrf.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_usage = 2;
constexpr int exit_not_symmetric = 3;
constexpr int exit_parse = 4;
constexpr int exit_bench = 5;

ffldl::Variant variant_from_name(const std::string& name) {
    if (name == "recursive") return ffldl::Variant::Recursive;
    if (name == "crout") return ffldl::Variant::Crout;
    return ffldl::Variant::Cascade;
}

/* --threshold wins; otherwise RPM_LDLT_THRESHOLD is consulted.  A malformed
 * environment value is a usage error.
 */
int resolve_threshold(const CLI::Option* flag, ffldl::SytrfConfig& cfg) {
    if (flag->count() > 0) return exit_ok;
    const char* env = std::getenv("RPM_LDLT_THRESHOLD");
    if (env == nullptr) return exit_ok;
    const std::string s(env);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        std::cerr << "RPM_LDLT_THRESHOLD is not a nonnegative integer: '" << s << "'\n";
        return exit_usage;
    }
    cfg.base_case_threshold = std::stoull(s);
    return exit_ok;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ffldl::ParseError("cannot open '" + path + "' for reading");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int write_out(const std::string& path, const std::string& payload) {
    if (path == "-") {
        std::cout << payload;
        return exit_ok;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open '" << path << "' for writing\n";
        return exit_usage;
    }
    out << payload;
    return exit_ok;
}

int run_gen(const std::string& kind, std::size_t n, std::size_t rank, std::uint64_t modulus,
            std::uint64_t seed, const std::string& output) {
    std::optional<ffldl::PrimeField> field;
    try {
        field.emplace(modulus);
    } catch (const ffldl::NotPrime& e) {
        std::cerr << e.what() << '\n';
        return exit_usage;
    }
    if (rank > n) {
        std::cerr << "requested rank " << rank << " exceeds dimension " << n << '\n';
        return exit_usage;
    }
    std::mt19937_64 rng(seed);
    ffldl::Matrix a(*field, 0, 0);
    if (kind == "rpm-random")
        a = ffldl::matrix_with_rank_profile(ffldl::random_symmetric_rook(*field, n, rank, rng),
                                            rng);
    else if (kind == "generic")
        a = ffldl::generic_symmetric(*field, n, rank, rng);
    else
        a = ffldl::dense_random_symmetric(*field, n, rng);

    std::ostringstream ss;
    ffldl::MatrixFile::from(a, true).emit(ss);
    return write_out(output, ss.str());
}

int run_factor(const std::string& input, const std::string& output,
               const ffldl::SytrfConfig& cfg) {
    std::istringstream in(slurp(input));
    const ffldl::MatrixFile mf = ffldl::MatrixFile::parse(in);
    const ffldl::PrimeField field(mf.modulus);
    const ffldl::Matrix a = mf.bind(field);
    const ffldl::Factorization f = ffldl::ldlt(a, cfg);
    std::ostringstream ss;
    ffldl::FactorizationFile::from(f).emit(ss);
    return write_out(output, ss.str());
}

/// Structural sanity of L: unit diagonal and zeros above it in the top rank rows.
bool unit_lower_top(const ffldl::Factorization& f) {
    const ffldl::PrimeField& field = f.lower.field();
    for (std::size_t i = 0; i < f.rank; ++i) {
        if (f.lower(i, i) != field.one()) return false;
        for (std::size_t j = i + 1; j < f.rank; ++j)
            if (!field.is_zero(f.lower(i, j))) return false;
    }
    return true;
}

int run_verify(const std::string& matrix_path, const std::string& factorization_path,
               bool check_rpm) {
    std::istringstream min(slurp(matrix_path));
    const ffldl::MatrixFile mf = ffldl::MatrixFile::parse(min);
    std::istringstream fin(slurp(factorization_path));
    const ffldl::FactorizationFile ff = ffldl::FactorizationFile::parse(fin);
    if (mf.rows != mf.cols || ff.dimension != mf.rows)
        throw ffldl::ParseError("matrix and factorization dimensions disagree");

    const ffldl::PrimeField field(mf.modulus);
    const ffldl::Matrix a = mf.bind(field);
    const ffldl::Factorization f = ff.bind(field);

    if (!unit_lower_top(f)) {
        std::cout << "FAIL: L is not unit lower triangular in its top rank rows\n";
        return exit_verify_failed;
    }
    if (f.reconstruct() != a) {
        std::cout << "FAIL: factorization does not reconstruct the matrix\n";
        return exit_verify_failed;
    }
    if (check_rpm && ffldl::pivoting_matrix(f) != ffldl::rank_profile_bruteforce(a)) {
        std::cout << "FAIL: pivoting matrix does not match the rank profile matrix\n";
        return exit_verify_failed;
    }
    std::cout << "OK: rank " << f.rank << (check_rpm ? ", rank profile matrix revealed" : "")
              << '\n';
    return exit_ok;
}

int run_bench(const std::string& kind, const std::vector<std::size_t>& sizes,
              std::uint64_t modulus, std::uint64_t seed, const ffldl::SytrfConfig& cfg,
              const std::string& output) {
    try {
        const ffldl::PrimeField field(modulus);
        std::vector<ffldl::BenchResult> results;
        results.reserve(sizes.size());
        for (std::size_t n : sizes)
            results.push_back(ffldl::run_bench(field, kind, n, cfg, seed));
        std::ostringstream ss;
        ffldl::write_csv(ss, results);
        return write_out(output, ss.str());
    } catch (const ffldl::Error& e) {
        std::cerr << "bench failed: " << e.what() << '\n';
        return exit_bench;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rank profile revealing symmetric factorization over prime fields"};
    app.require_subcommand(1);

    std::string kind;
    std::size_t n = 0;
    std::size_t rank = SIZE_MAX;
    std::uint64_t modulus = 8388593;
    std::uint64_t seed = 1;
    std::string input;
    std::string output = "-";
    std::string factorization_path;
    std::string variant = "cascade";
    bool check_rpm = false;
    std::vector<std::size_t> sizes;

    CLI::App* gen = app.add_subcommand("gen", "generate a symmetric test matrix");
    gen->add_option("--kind", kind, "input family")
        ->required()
        ->check(CLI::IsMember({"rpm-random", "generic", "dense-random"}));
    gen->add_option("-n,--size", n, "matrix dimension")->required();
    gen->add_option("--rank", rank, "target rank (defaults to n)");
    gen->add_option("--modulus", modulus, "prime modulus");
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("-o,--output", output, "output file, - for stdout");

    CLI::App* factor = app.add_subcommand("factor", "factor a symmetric matrix");
    factor->add_option("-i,--input", input, "matrix file")->required();
    factor->add_option("-o,--output", output, "factorization file, - for stdout");
    factor->add_option("--variant", variant, "algorithm variant")
        ->check(CLI::IsMember({"recursive", "crout", "cascade"}));
    CLI::Option* factor_threshold =
        factor->add_option("--threshold", "cascade base case threshold");

    CLI::App* verify = app.add_subcommand("verify", "check a factorization against a matrix");
    verify->add_option("-i,--input", input, "matrix file")->required();
    verify->add_option("-f,--factorization", factorization_path, "factorization file")
        ->required();
    verify->add_flag("--check-rpm", check_rpm,
                     "also require the pivots to reveal the rank profile matrix");

    CLI::App* bench = app.add_subcommand("bench", "time factorizations and emit CSV");
    bench->add_option("--kind", kind, "input family")
        ->required()
        ->check(CLI::IsMember({"rpm-half", "rpm-full", "generic", "dense"}));
    bench->add_option("-n,--size", sizes, "matrix dimensions")->required();
    bench->add_option("--modulus", modulus, "prime modulus");
    bench->add_option("--seed", seed, "random seed");
    bench->add_option("--variant", variant, "algorithm variant")
        ->check(CLI::IsMember({"recursive", "crout", "cascade"}));
    CLI::Option* bench_threshold = bench->add_option("--threshold", "cascade base case threshold");
    bench->add_option("-o,--output", output, "CSV file, - for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (app.got_subcommand(gen))
            return run_gen(kind, n, rank == SIZE_MAX ? n : rank, modulus, seed, output);
        if (app.got_subcommand(factor)) {
            ffldl::SytrfConfig cfg;
            cfg.variant = variant_from_name(variant);
            if (factor_threshold->count() > 0)
                cfg.base_case_threshold = factor_threshold->as<std::size_t>();
            if (const int rc = resolve_threshold(factor_threshold, cfg); rc != exit_ok)
                return rc;
            return run_factor(input, output, cfg);
        }
        if (app.got_subcommand(verify)) return run_verify(input, factorization_path, check_rpm);
        if (app.got_subcommand(bench)) {
            ffldl::SytrfConfig cfg;
            cfg.variant = variant_from_name(variant);
            if (bench_threshold->count() > 0)
                cfg.base_case_threshold = bench_threshold->as<std::size_t>();
            if (const int rc = resolve_threshold(bench_threshold, cfg); rc != exit_ok) return rc;
            return run_bench(kind, sizes, modulus, seed, cfg, output);
        }
    } catch (const ffldl::NotSymmetric& e) {
        std::cerr << e.what() << '\n';
        return exit_not_symmetric;
    } catch (const ffldl::ParseError& e) {
        std::cerr << e.what() << '\n';
        return exit_parse;
    } catch (const ffldl::NotPrime& e) {
        std::cerr << e.what() << '\n';
        return exit_parse;
    } catch (const ffldl::Error& e) {
        std::cerr << e.what() << '\n';
        return exit_parse;
    }
    return exit_ok;
}
