#include "eksr/core/error.hpp"

namespace eksr {

const char* to_string(ParseErrorKind kind) {
    switch (kind) {
    case ParseErrorKind::MalformedHeader: return "malformed header";
    case ParseErrorKind::MissingHeader: return "missing header";
    case ParseErrorKind::WrongLiteralCount: return "wrong literal count";
    case ParseErrorKind::DuplicateVariable: return "duplicate variable in clause";
    case ParseErrorKind::VariableOutOfRange: return "variable out of range";
    case ParseErrorKind::ClauseCountMismatch: return "clause count mismatch";
    case ParseErrorKind::MalformedAssignment: return "malformed assignment";
    case ParseErrorKind::BitstringLengthMismatch: return "bitstring length mismatch";
    case ParseErrorKind::MissingAssignment: return "missing assignment";
    case ParseErrorKind::EndpointNotSatisfying: return "endpoint does not satisfy formula";
    case ParseErrorKind::UnexpectedLine: return "unexpected line";
    }
    return "parse error";
}

static std::string format_parse_error(ParseErrorKind kind, int line, const std::string& detail) {
    std::string msg = "line " + std::to_string(line) + ": " + to_string(kind);
    if (!detail.empty()) msg += " (" + detail + ")";
    return msg;
}

ParseError::ParseError(ParseErrorKind kind, int line, const std::string& detail)
    : Error(format_parse_error(kind, line, detail)), kind_(kind), line_(line) {}

}  // namespace eksr
