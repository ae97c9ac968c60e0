#pragma once

#include <stdexcept>
#include <string>

namespace ffldl {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPrime : Error {
    using Error::Error;
};
struct ZeroInverse : Error {
    using Error::Error;
};
struct CharTwoDivision : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct BadBlockSizes : Error {
    using Error::Error;
};
struct NotSymmetric : Error {
    using Error::Error;
};
struct NonUnitTriangular : Error {
    using Error::Error;
};
struct SingularTriangular : Error {
    using Error::Error;
};
struct CharTwoNonzeroDiagonal : Error {
    using Error::Error;
};
struct WrongCharacteristic : Error {
    using Error::Error;
};
struct BadRank : Error {
    using Error::Error;
};
struct OracleMismatchExhausted : Error {
    using Error::Error;
};
struct NonpositiveTime : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

} // namespace ffldl
