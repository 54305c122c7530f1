#include "mlcseg/error.hpp"

namespace mlcseg {

ParseError::ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& what)
    : Error(std::string(to_string(kind)) + " at line " + std::to_string(line) + ", column " +
            std::to_string(column) + ": " + what),
      kind_(kind),
      line_(line),
      column_(column) {}

const char* to_string(ParseError::Kind kind) noexcept {
    switch (kind) {
        case ParseError::Kind::MalformedHeader: return "MalformedHeader";
        case ParseError::Kind::RaggedRow: return "RaggedRow";
        case ParseError::Kind::NegativeEntry: return "NegativeEntry";
        case ParseError::Kind::NonInteger: return "NonInteger";
        case ParseError::Kind::MissingRow: return "MissingRow";
        case ParseError::Kind::TrailingData: return "TrailingData";
        case ParseError::Kind::MalformedRecord: return "MalformedRecord";
    }
    return "ParseError";
}

}  // namespace mlcseg
