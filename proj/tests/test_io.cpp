#include <doctest.h>

#include <random>
#include <sstream>

#include "ffldl/io.hpp"
#include "ffldl/sytrf.hpp"
#include "oracle.hpp"

using namespace ffldl;

namespace {

MatrixFile parse_matrix(const std::string& text) {
    std::istringstream in(text);
    return MatrixFile::parse(in);
}

FactorizationFile parse_factorization(const std::string& text) {
    std::istringstream in(text);
    return FactorizationFile::parse(in);
}

std::string emit_matrix(const MatrixFile& mf) {
    std::ostringstream out;
    mf.emit(out);
    return out.str();
}

std::string emit_factorization(const FactorizationFile& ff) {
    std::ostringstream out;
    ff.emit(out);
    return out.str();
}

} // namespace

TEST_SUITE("io") {

TEST_CASE("matrix files round-trip byte for byte") {
    const PrimeField f(11);
    std::mt19937_64 rng(61);
    const Matrix sym = oracle::random_symmetric(f, 4, rng);
    const std::string text = emit_matrix(MatrixFile::from(sym, true));
    const MatrixFile back = parse_matrix(text);
    CHECK(emit_matrix(back) == text);
    CHECK(back.bind(f) == sym);
    CHECK(back.symmetric);

    const Matrix rect = oracle::random_matrix(f, 3, 5, rng);
    const std::string rtext = emit_matrix(MatrixFile::from(rect, false));
    const MatrixFile rback = parse_matrix(rtext);
    CHECK(emit_matrix(rback) == rtext);
    CHECK(rback.bind(f) == rect);
    CHECK_FALSE(rback.symmetric);
}

TEST_CASE("matrix file format by example") {
    const PrimeField f(7);
    const std::string text = emit_matrix(MatrixFile::from(Matrix::identity(f, 2), true));
    CHECK(text == "SymMat 2 7\n1 0\n0 1\n");

    const MatrixFile mf = parse_matrix("Mat 2 3 5\n0 1 2\n3 4 0\n");
    CHECK(mf.rows == 2);
    CHECK(mf.cols == 3);
    CHECK(mf.modulus == 5);
    CHECK(mf.values == std::vector<std::uint64_t>{0, 1, 2, 3, 4, 0});
}

TEST_CASE("matrix parse failures") {
    CHECK_THROWS_AS(parse_matrix("Banana 2 7\n"), ParseError);
    CHECK_THROWS_AS(parse_matrix("SymMat 2 7\n1 0\n0"), ParseError);    // truncated
    CHECK_THROWS_AS(parse_matrix("SymMat 2 7\n1 9\n9 1\n"), ParseError); // 9 >= 7
    CHECK_THROWS_AS(parse_matrix("SymMat 2 7\n1 2\n3 1\n"), ParseError); // asymmetric
    CHECK_THROWS_AS(parse_matrix("SymMat 2 1\n0 0\n0 0\n"), ParseError); // silly modulus
    CHECK_THROWS_AS(parse_matrix("Mat 2 2 7\n1 x 0 1\n"), ParseError);

    const PrimeField f(7);
    Matrix asym(f, 2, 2);
    asym(0, 1) = f.one();
    CHECK_THROWS_AS(MatrixFile::from(asym, true), NotSymmetric);
    CHECK_THROWS_AS(parse_matrix("SymMat 2 11\n1 0\n0 1\n").bind(f), ParseError);
}

TEST_CASE("factorization files round-trip through parse, bind and emit") {
    for (std::uint64_t p : {2ull, 7ull, 8388593ull}) {
        const PrimeField f(p);
        std::mt19937_64 rng(p + 62);
        for (std::size_t n : {1, 3, 6, 9}) {
            const Matrix a = oracle::random_symmetric_low_rank(f, n, (2 * n) / 3, rng);
            const Factorization fac = ldlt(a);
            const std::string text = emit_factorization(FactorizationFile::from(fac));
            const FactorizationFile back = parse_factorization(text);
            CHECK(emit_factorization(back) == text);
            const Factorization bound = back.bind(f);
            CHECK(bound.rank == fac.rank);
            CHECK(bound.lower == fac.lower);
            CHECK(bound.reconstruct() == a);
        }
    }
}

TEST_CASE("factorization file format by example") {
    const PrimeField f(7);
    // ldlt of [[0,0],[0,3]]: pivot at (1,1), P = (1 0), L = [1; 0], D = S 3
    const Factorization fac = ldlt(Matrix::from_values(f, 2, 2, {0, 0, 0, 3}));
    CHECK(emit_factorization(FactorizationFile::from(fac)) ==
          "Factorization 2 7\n"
          "rank 1\n"
          "P 1 0\n"
          "L\n1\n0\n"
          "D\nS 3\n");
}

TEST_CASE("factorization parse failures") {
    const std::string good =
        "Factorization 2 7\nrank 1\nP 1 0\nL\n1\n0\nD\nS 3\n";
    CHECK_NOTHROW(parse_factorization(good));

    CHECK_THROWS_AS(parse_factorization("Fact 2 7\n"), ParseError);
    CHECK_THROWS_AS(parse_factorization("Factorization 2 7\nrank 3\n"), ParseError);
    CHECK_THROWS_AS(parse_factorization("Factorization 2 7\nrank 1\nP 1 2\nL\n1\n0\nD\nS 3\n"),
                    ParseError); // image out of range
    CHECK_THROWS_AS(parse_factorization("Factorization 2 7\nrank 1\nP 1 0\nL\n1\n9\nD\nS 3\n"),
                    ParseError); // non-canonical residue
    CHECK_THROWS_AS(parse_factorization("Factorization 2 7\nrank 1\nP 1 0\nL\n1\n0\nD\nQ 3\n"),
                    ParseError); // unknown tag
    CHECK_THROWS_AS(parse_factorization("Factorization 2 7\nrank 1\nP 1 0\nL\n1\n0\nD\nS 0\n"),
                    ParseError); // zero pivot
    CHECK_THROWS_AS(parse_factorization("Factorization 2 7\nrank 1\nP 1 0\nL\n1\n0\nD\nA 3\n"),
                    ParseError); // order-2 block exceeds rank 1
    CHECK_THROWS_AS(parse_factorization("Factorization 2 7\nrank 1\nP 1 0\nL\n1\n0\nD\n"),
                    ParseError); // missing block

    // a duplicated permutation image only surfaces at bind time
    const PrimeField f(7);
    const FactorizationFile dupe =
        parse_factorization("Factorization 2 7\nrank 1\nP 1 1\nL\n1\n0\nD\nS 3\n");
    CHECK_THROWS_AS(dupe.bind(f), ParseError);
    const PrimeField g(11);
    CHECK_THROWS_AS(parse_factorization(good).bind(g), ParseError);
}

} // TEST_SUITE
