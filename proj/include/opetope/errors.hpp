#pragma once

#include <stdexcept>
#include <string>

namespace opetope {

/// Violation of a derivation-rule precondition or a structural invariant.
/// CLI exit code 1.
class RuleError : public std::runtime_error {
public:
    explicit RuleError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed textual input. CLI exit code 2.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
    ParseError(const std::string& msg, int line, int col)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                             std::to_string(col) + ")"),
          line_(line),
          col_(col) {}
    int line() const { return line_; }
    int column() const { return col_; }

private:
    int line_ = -1;
    int col_ = -1;
};

}  // namespace opetope
