#pragma once

#include <stdexcept>
#include <string>

namespace relwave {

/// Syntax problem in a scenario file; carries the 1-based line number
/// (0 when the problem is file-wide).
struct ParseError : std::runtime_error {
    int line;
    ParseError(const std::string& msg, int line_no)
        : std::runtime_error(msg), line(line_no) {}
};

/// A well-formed input whose values fail a contract.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Filesystem trouble reading inputs or writing results.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace relwave
