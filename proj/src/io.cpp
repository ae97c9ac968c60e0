#include "ffldl/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "ffldl/errors.hpp"
#include "ffldl/permutation.hpp"

namespace ffldl {

namespace {

template <typename T>
T expect_number(std::istream& in, const char* what) {
    T v{};
    if (!(in >> v)) throw ParseError(std::string("expected ") + what);
    return v;
}

std::string expect_word(std::istream& in, const char* what) {
    std::string w;
    if (!(in >> w)) throw ParseError(std::string("expected ") + what);
    return w;
}

void expect_keyword(std::istream& in, const char* kw) {
    const std::string w = expect_word(in, kw);
    if (w != kw) throw ParseError(std::string("expected '") + kw + "', got '" + w + "'");
}

void check_residue(std::uint64_t v, std::uint64_t modulus, const char* what) {
    if (v >= modulus) throw ParseError(std::string(what) + " is not a canonical residue");
}

} // namespace

MatrixFile MatrixFile::parse(std::istream& in) {
    MatrixFile mf;
    const std::string head = expect_word(in, "matrix header");
    if (head == "SymMat") {
        mf.symmetric = true;
        mf.rows = expect_number<std::size_t>(in, "dimension");
        mf.cols = mf.rows;
    } else if (head == "Mat") {
        mf.symmetric = false;
        mf.rows = expect_number<std::size_t>(in, "row count");
        mf.cols = expect_number<std::size_t>(in, "column count");
    } else {
        throw ParseError("unknown matrix header '" + head + "'");
    }
    mf.modulus = expect_number<std::uint64_t>(in, "modulus");
    if (mf.modulus < 2) throw ParseError("modulus must be at least 2");
    mf.values.resize(mf.rows * mf.cols);
    for (std::uint64_t& v : mf.values) {
        v = expect_number<std::uint64_t>(in, "matrix entry");
        check_residue(v, mf.modulus, "matrix entry");
    }
    if (mf.symmetric)
        for (std::size_t i = 0; i < mf.rows; ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (mf.values[i * mf.cols + j] != mf.values[j * mf.cols + i])
                    throw ParseError("SymMat contents are not symmetric");
    return mf;
}

MatrixFile MatrixFile::from(const Matrix& m, bool symmetric) {
    if (symmetric && !m.is_symmetric())
        throw NotSymmetric("MatrixFile: SymMat requested for an asymmetric matrix");
    MatrixFile mf;
    mf.symmetric = symmetric;
    mf.rows = m.rows();
    mf.cols = m.cols();
    mf.modulus = m.field().modulus();
    mf.values.reserve(mf.rows * mf.cols);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) mf.values.push_back(m(i, j).value);
    return mf;
}

void MatrixFile::emit(std::ostream& out) const {
    if (symmetric)
        out << "SymMat " << rows << ' ' << modulus << '\n';
    else
        out << "Mat " << rows << ' ' << cols << ' ' << modulus << '\n';
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            if (j != 0) out << ' ';
            out << values[i * cols + j];
        }
        out << '\n';
    }
}

Matrix MatrixFile::bind(const PrimeField& f) const {
    if (f.modulus() != modulus) throw ParseError("matrix bound to a field with another modulus");
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = f.element(values[i * cols + j]);
    return m;
}

FactorizationFile FactorizationFile::parse(std::istream& in) {
    FactorizationFile ff;
    expect_keyword(in, "Factorization");
    ff.dimension = expect_number<std::size_t>(in, "dimension");
    ff.modulus = expect_number<std::uint64_t>(in, "modulus");
    if (ff.modulus < 2) throw ParseError("modulus must be at least 2");
    expect_keyword(in, "rank");
    ff.rank = expect_number<std::size_t>(in, "rank");
    if (ff.rank > ff.dimension) throw ParseError("rank exceeds dimension");
    expect_keyword(in, "P");
    ff.perm_image.resize(ff.dimension);
    for (std::size_t& v : ff.perm_image) {
        v = expect_number<std::size_t>(in, "permutation image");
        if (v >= ff.dimension) throw ParseError("permutation image out of range");
    }
    expect_keyword(in, "L");
    ff.lower.resize(ff.dimension * ff.rank);
    for (std::uint64_t& v : ff.lower) {
        v = expect_number<std::uint64_t>(in, "L entry");
        check_residue(v, ff.modulus, "L entry");
    }
    expect_keyword(in, "D");
    std::size_t order = 0;
    while (order < ff.rank) {
        Block b;
        const std::string tag = expect_word(in, "D block tag");
        if (tag.size() != 1 || (tag[0] != 'S' && tag[0] != 'A' && tag[0] != 'T'))
            throw ParseError("unknown D block tag '" + tag + "'");
        b.tag = tag[0];
        b.a = expect_number<std::uint64_t>(in, "D block value");
        check_residue(b.a, ff.modulus, "D block value");
        if (b.a == 0) throw ParseError("D block pivot must be nonzero");
        if (b.tag == 'T') {
            b.b = expect_number<std::uint64_t>(in, "D block value");
            check_residue(b.b, ff.modulus, "D block value");
            if (b.b == 0) throw ParseError("AntiTri diagonal must be nonzero");
        }
        order += (b.tag == 'S') ? 1 : 2;
        ff.blocks.push_back(b);
    }
    if (order != ff.rank) throw ParseError("D block orders exceed the rank");
    return ff;
}

FactorizationFile FactorizationFile::from(const Factorization& f) {
    FactorizationFile ff;
    ff.dimension = f.dimension();
    ff.modulus = f.lower.field().modulus();
    ff.rank = f.rank;
    ff.perm_image = f.perm.image_array();
    ff.lower.reserve(ff.dimension * ff.rank);
    for (std::size_t i = 0; i < ff.dimension; ++i)
        for (std::size_t j = 0; j < ff.rank; ++j) ff.lower.push_back(f.lower(i, j).value);
    for (std::size_t k = 0; k < f.diag.block_count(); ++k) {
        Block b;
        if (const auto* s = std::get_if<ScalarBlock>(&f.diag.block(k))) {
            b.tag = 'S';
            b.a = s->d.value;
        } else if (const auto* a = std::get_if<AntiDiagBlock>(&f.diag.block(k))) {
            b.tag = 'A';
            b.a = a->x.value;
        } else {
            const auto& at = std::get<AntiTriBlock>(f.diag.block(k));
            b.tag = 'T';
            b.a = at.c.value;
            b.b = at.d.value;
        }
        ff.blocks.push_back(b);
    }
    return ff;
}

void FactorizationFile::emit(std::ostream& out) const {
    out << "Factorization " << dimension << ' ' << modulus << '\n';
    out << "rank " << rank << '\n';
    out << "P";
    for (std::size_t v : perm_image) out << ' ' << v;
    out << '\n';
    out << "L\n";
    for (std::size_t i = 0; i < dimension; ++i) {
        for (std::size_t j = 0; j < rank; ++j) {
            if (j != 0) out << ' ';
            out << lower[i * rank + j];
        }
        out << '\n';
    }
    out << "D\n";
    for (const Block& b : blocks) {
        out << b.tag << ' ' << b.a;
        if (b.tag == 'T') out << ' ' << b.b;
        out << '\n';
    }
}

Factorization FactorizationFile::bind(const PrimeField& f) const {
    if (f.modulus() != modulus)
        throw ParseError("factorization bound to a field with another modulus");
    Matrix lmat(f, dimension, rank);
    for (std::size_t i = 0; i < dimension; ++i)
        for (std::size_t j = 0; j < rank; ++j) lmat(i, j) = f.element(lower[i * rank + j]);
    BlockDiag diag;
    for (const Block& b : blocks) {
        if (b.tag == 'S')
            diag.push(ScalarBlock{f.element(b.a)});
        else if (b.tag == 'A')
            diag.push(AntiDiagBlock{f.element(b.a)});
        else
            diag.push(AntiTriBlock{f.element(b.a), f.element(b.b)});
    }
    std::vector<std::size_t> image = perm_image;
    Permutation perm = [&] {
        try {
            return Permutation::from_image(std::move(image));
        } catch (const Error&) {
            throw ParseError("permutation images do not form a bijection");
        }
    }();
    return Factorization{std::move(perm), std::move(lmat), std::move(diag), rank};
}

} // namespace ffldl
