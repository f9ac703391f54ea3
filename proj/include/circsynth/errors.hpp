#pragma once

#include <stdexcept>
#include <string>

namespace circsynth {

struct SingularMatrix : std::runtime_error {
    SingularMatrix() : std::runtime_error("matrix is singular") {}
};

struct NotPowerOfTwo : std::runtime_error {
    explicit NotPowerOfTwo(std::size_t n)
        : std::runtime_error("dimension " + std::to_string(n) + " is not a power of two") {}
};

struct NotCirculantAtBlockSize : std::runtime_error {
    explicit NotCirculantAtBlockSize(std::size_t block_size)
        : std::runtime_error("matrix is not block-circulant at block size " +
                             std::to_string(block_size)) {}
};

struct NotUnitUpperTriangular : std::runtime_error {
    NotUnitUpperTriangular() : std::runtime_error("matrix is not unit upper-triangular") {}
};

struct ZeroRow : std::runtime_error {
    explicit ZeroRow(std::size_t row)
        : std::runtime_error("row " + std::to_string(row) + " is all-zero") {}
};

struct DepthBudgetExceeded : std::runtime_error {
    DepthBudgetExceeded() : std::runtime_error("depth budget exceeded") {}
};

struct NoCandidateSucceeded : std::runtime_error {
    NoCandidateSucceeded() : std::runtime_error("no candidate produced a circuit") {}
};

struct FixtureMismatch : std::runtime_error {
    explicit FixtureMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    std::size_t line;
};

}  // namespace circsynth
