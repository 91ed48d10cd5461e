#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace varkg {

enum class Severity { warning, error };

/** One problem found while reading a text input; line_number is 1-based. */
struct ParseDiagnostic {
    std::size_t line_number = 1;
    Severity severity = Severity::error;
    std::string message;
};

struct ParseOptions {
    /** Abort with ParseError at the first error-level diagnostic. */
    bool strict = false;
};

std::string to_string(Severity severity);
std::string to_string(const ParseDiagnostic& diagnostic);

std::vector<std::string_view> split(std::string_view text, char sep);
std::vector<std::string_view> split_whitespace(std::string_view text);

/**
 * Column split used by both VCF and CADD readers: tabs first, falling back to
 * runs of blanks when the tab split yields fewer than min_fields columns.
 */
std::vector<std::string_view> split_columns(std::string_view line, std::size_t min_fields);

std::string_view trim(std::string_view text);

/** Strips a trailing '\r' so CRLF files read like LF files. */
inline std::string_view chomp(std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
}

}  // namespace varkg
