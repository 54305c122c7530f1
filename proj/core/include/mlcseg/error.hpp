#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mlcseg {

// Base for every error the library reports to callers.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input text (matrix or results file) could not be parsed.
class ParseError : public Error {
public:
    enum class Kind {
        MalformedHeader,
        RaggedRow,
        NegativeEntry,
        NonInteger,
        MissingRow,
        TrailingData,
        MalformedRecord,
    };

    ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& what);

    Kind kind() const noexcept { return kind_; }
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    Kind kind_;
    std::size_t line_;
    std::size_t column_;
};

const char* to_string(ParseError::Kind kind) noexcept;

// An exhaustive search was asked to run on an instance that is too large.
class RefusalError : public Error {
public:
    RefusalError(double estimated_nodes, const std::string& what)
        : Error(what), estimated_nodes_(estimated_nodes) {}

    double estimated_nodes() const noexcept { return estimated_nodes_; }

private:
    double estimated_nodes_;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace mlcseg
