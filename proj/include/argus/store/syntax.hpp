#pragma once

// Character-level scanning shared by the Turtle, AQL and GSN readers.

#include "argus/common.hpp"
#include "argus/store/term.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

namespace argus::store::syntax {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    bool at_end() const noexcept { return pos_ >= text_.size(); }
    char peek(std::size_t ahead = 0) const noexcept {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }
    bool starts_with(std::string_view s) const noexcept { return text_.substr(pos_).starts_with(s); }
    char advance();
    void advance(std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) {
            advance();
        }
    }
    /// Skips whitespace and `#` comments.
    void skip_trivia();

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    std::size_t offset() const noexcept { return pos_; }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_, column_); }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

using PrefixTable = std::map<std::string, std::string, std::less<>>;

bool is_name_start(char c);
bool is_name_char(char c);

/// `<...>` at the cursor.
std::string read_iriref(Cursor& cursor);
/// `prefix:local` at the cursor, resolved against `prefixes`.
Iri read_prefixed_name(Cursor& cursor, const PrefixTable& prefixes);
/// A bare word of letters, digits and '_'.
std::string read_word(Cursor& cursor);
/// `"..."` with escapes; rejects long strings and language tags; resolves `^^datatype`.
Literal read_string_literal(Cursor& cursor, const PrefixTable& prefixes);
/// Bare integer or decimal.
Literal read_number(Cursor& cursor);

/// Reads an IRI, prefixed name, `a`, literal, or number. Flags blank nodes and
/// collections as unsupported constructs.
Term read_term(Cursor& cursor, const PrefixTable& prefixes, bool allow_a);

/// True if the local part can be written after `prefix:` unescaped.
bool is_valid_local_name(std::string_view local);

}  // namespace argus::store::syntax
