#pragma once

#include <stdexcept>
#include <string>

namespace varlingam {

/// Base of every exception this library throws.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or inconsistent input (bad files, shapes, names). CLI exit code 2.
class DataError : public Error {
public:
    using Error::Error;
};

/// Input that is structurally fine but numerically unusable. CLI exit code 3.
class NumericalError : public Error {
public:
    using Error::Error;
};

class NonFinite final : public DataError {
public:
    NonFinite() : DataError("matrix contains NaN or infinity") {}
};

class DegenerateShape final : public DataError {
public:
    explicit DegenerateShape(const std::string& what) : DataError(what) {}
};

class DuplicateNames final : public DataError {
public:
    explicit DuplicateNames(const std::string& name)
        : DataError("duplicate variable name: " + name) {}
};

class LengthMismatch final : public DataError {
public:
    LengthMismatch(std::ptrdiff_t a, std::ptrdiff_t b)
        : DataError("vector lengths differ: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

class ShapeMismatch final : public DataError {
public:
    explicit ShapeMismatch(const std::string& what) : DataError(what) {}
};

class EmptyFile final : public DataError {
public:
    explicit EmptyFile(const std::string& path) : DataError("empty input file: " + path) {}
};

class RaggedRows final : public DataError {
public:
    RaggedRows(std::ptrdiff_t row, std::size_t got, std::size_t expected)
        : DataError("row " + std::to_string(row) + " has " + std::to_string(got) +
                    " fields, expected " + std::to_string(expected)) {}
};

class ParseError final : public DataError {
public:
    ParseError(std::ptrdiff_t row, std::ptrdiff_t col, const std::string& token)
        : DataError("cannot parse field at row " + std::to_string(row) + ", column " +
                    std::to_string(col) + ": '" + token + "'"),
          row(row), col(col) {}
    std::ptrdiff_t row;
    std::ptrdiff_t col;
};

class InvalidDensity final : public DataError {
public:
    explicit InvalidDensity(double d)
        : DataError("edge density must lie in (0, 1], got " + std::to_string(d)) {}
};

class ZeroVariance final : public NumericalError {
public:
    explicit ZeroVariance(std::ptrdiff_t column = -1)
        : NumericalError(column < 0 ? std::string("vector has zero variance")
                                    : "column " + std::to_string(column) + " has zero variance"),
          column(column) {}
    std::ptrdiff_t column;
};

class InsufficientSamples final : public NumericalError {
public:
    explicit InsufficientSamples(const std::string& what) : NumericalError(what) {}
};

class SingularDesign final : public NumericalError {
public:
    explicit SingularDesign(const std::string& what) : NumericalError(what) {}
};

class NonStationary final : public NumericalError {
public:
    NonStationary() : NumericalError("could not rescale lag coefficients to a stationary process") {}
};

}  // namespace varlingam
