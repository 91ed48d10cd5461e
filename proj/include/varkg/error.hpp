#pragma once

#include <stdexcept>
#include <string>

namespace varkg {

/**
 * Raised for problems with user-supplied input: unreadable files, malformed
 * headers, bad configuration. The CLI maps these to exit code 1.
 */
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/** Fatal parse failure with the 1-based line where it happened (0 = whole file). */
class ParseError : public InputError {
public:
    ParseError(std::size_t line, const std::string& message)
        : InputError(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/** Internal invariant violation; the CLI maps these to exit code 2. */
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace varkg
