#ifndef CRMIN_ERRORS_HPP
#define CRMIN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace crmin {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Arithmetic between series living in different variable frames.
struct FrameMismatchError : Error {
    explicit FrameMismatchError(const std::string& msg) : Error(msg) {}
};

// An operation would produce a series known to precision 0 or less.
struct PrecisionUnderflowError : Error {
    explicit PrecisionUnderflowError(const std::string& msg) : Error(msg) {}
};

// Expression or spec-file syntax error. `position` is a 0-based byte
// offset into the offending text.
struct ParseError : Error {
    std::size_t position;
    ParseError(std::size_t pos, const std::string& msg)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// Semantic rejection of an input (bad manifold data, zero series where a
// nonzero one is required, ...). `witness` names the offending monomial
// or item when one exists.
struct ValidationError : Error {
    std::string witness;
    explicit ValidationError(const std::string& msg, std::string witness_monomial = "")
        : Error(msg), witness(std::move(witness_monomial)) {}
};

// The requested computation is meaningful but the truncation order is too
// small to certify it. `stage` identifies the pipeline step that ran dry.
struct InsufficientPrecisionError : Error {
    std::string stage;
    explicit InsufficientPrecisionError(const std::string& msg, std::string at_stage = "")
        : Error(msg), stage(std::move(at_stage)) {}
};

} // namespace crmin

#endif
