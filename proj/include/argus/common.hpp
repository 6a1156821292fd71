#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace argus {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Syntax error in one of the text formats; line and column are 1-based.
class ParseError : public Error {
public:
    ParseError(std::string message, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column), reason_(std::move(message)) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string reason_;
};

/// Well-formed input that cannot be evaluated (type errors, mismatched reports).
class EvaluationError : public Error {
public:
    using Error::Error;
};

struct Diagnostic {
    std::string code;
    std::string message;

    bool operator==(const Diagnostic&) const = default;
};

std::string format_diagnostics(const std::vector<Diagnostic>& diagnostics);

/// Decodes UTF-8 into code points; invalid sequences become U+FFFD.
std::u32string decode_utf8(std::string_view text);
std::string encode_utf8(std::u32string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace argus
