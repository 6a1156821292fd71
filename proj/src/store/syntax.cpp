#include "argus/store/syntax.hpp"

namespace argus::store::syntax {

char Cursor::advance() {
    if (at_end()) {
        return '\0';
    }
    char c = text_[pos_++];
    if (c == '\n') {
        ++line_;
        column_ = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
        ++column_;
    }
    return c;
}

void Cursor::skip_trivia() {
    while (!at_end()) {
        char c = peek();
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            advance();
        } else if (c == '#') {
            while (!at_end() && peek() != '\n') {
                advance();
            }
        } else {
            break;
        }
    }
}

bool is_name_start(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool is_name_char(char c) {
    return is_name_start(c) || (c >= '0' && c <= '9') || c == '-' || c == '.';
}

bool is_valid_local_name(std::string_view local) {
    if (local.empty()) {
        return true;
    }
    char first = local.front();
    if (!(is_name_start(first) || (first >= '0' && first <= '9'))) {
        return false;
    }
    for (char c : local) {
        if (!is_name_char(c)) {
            return false;
        }
    }
    return local.back() != '.';
}

std::string read_iriref(Cursor& cursor) {
    if (cursor.peek() != '<') {
        cursor.fail("expected '<'");
    }
    cursor.advance();
    std::string value;
    while (true) {
        if (cursor.at_end()) {
            cursor.fail("unterminated IRI");
        }
        char c = cursor.peek();
        if (c == '>') {
            cursor.advance();
            break;
        }
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '<' || c == '"') {
            cursor.fail("illegal character in IRI");
        }
        value.push_back(cursor.advance());
    }
    if (value.empty()) {
        cursor.fail("empty IRI");
    }
    return value;
}

std::string read_word(Cursor& cursor) {
    std::string word;
    while (is_name_start(cursor.peek()) || (cursor.peek() >= '0' && cursor.peek() <= '9')) {
        word.push_back(cursor.advance());
    }
    return word;
}

namespace {

// Reads name characters, leaving any trailing dots unconsumed.
std::string read_name_no_trailing_dot(Cursor& cursor) {
    std::size_t len = 0;
    while (is_name_char(cursor.peek(len))) {
        ++len;
    }
    while (len > 0 && cursor.peek(len - 1) == '.') {
        --len;
    }
    std::string out;
    for (std::size_t i = 0; i < len; ++i) {
        out.push_back(cursor.advance());
    }
    return out;
}

}  // namespace

Iri read_prefixed_name(Cursor& cursor, const PrefixTable& prefixes) {
    auto line = cursor.line();
    auto column = cursor.column();
    std::string prefix = read_name_no_trailing_dot(cursor);
    if (cursor.peek() != ':') {
        cursor.fail("expected ':' in prefixed name");
    }
    cursor.advance();
    std::string local = read_name_no_trailing_dot(cursor);
    auto it = prefixes.find(prefix);
    if (it == prefixes.end()) {
        throw ParseError("undeclared prefix '" + prefix + ":'", line, column);
    }
    try {
        return Iri(it->second + local);
    } catch (const Error& e) {
        throw ParseError(e.what(), line, column);
    }
}

Literal read_string_literal(Cursor& cursor, const PrefixTable& prefixes) {
    if (cursor.starts_with("\"\"\"") || cursor.starts_with("'''")) {
        cursor.fail("unsupported construct: multiline string");
    }
    if (cursor.peek() == '\'') {
        cursor.fail("unsupported construct: single-quoted string");
    }
    cursor.advance();
    std::string value;
    while (true) {
        if (cursor.at_end() || cursor.peek() == '\n') {
            cursor.fail("unterminated string literal");
        }
        char c = cursor.advance();
        if (c == '"') {
            break;
        }
        if (c == '\\') {
            char e = cursor.advance();
            switch (e) {
                case '"': value.push_back('"'); break;
                case '\\': value.push_back('\\'); break;
                case 'n': value.push_back('\n'); break;
                case 'r': value.push_back('\r'); break;
                case 't': value.push_back('\t'); break;
                default: cursor.fail(std::string("unknown escape sequence \\") + e);
            }
            continue;
        }
        value.push_back(c);
    }
    if (cursor.peek() == '@') {
        cursor.fail("unsupported construct: language tag");
    }
    if (cursor.starts_with("^^")) {
        cursor.advance(2);
        auto line = cursor.line();
        auto column = cursor.column();
        std::string datatype;
        if (cursor.peek() == '<') {
            datatype = read_iriref(cursor);
        } else {
            datatype = read_prefixed_name(cursor, prefixes).str();
        }
        auto dt = datatype_from_iri(datatype);
        if (!dt) {
            throw ParseError("unknown datatype <" + datatype + ">", line, column);
        }
        try {
            return Literal::parse(value, *dt);
        } catch (const Error& e) {
            throw ParseError(e.what(), line, column);
        }
    }
    return Literal::string(std::move(value));
}

Literal read_number(Cursor& cursor) {
    std::string text;
    if (cursor.peek() == '+' || cursor.peek() == '-') {
        text.push_back(cursor.advance());
    }
    while (cursor.peek() >= '0' && cursor.peek() <= '9') {
        text.push_back(cursor.advance());
    }
    bool is_decimal = false;
    if (cursor.peek() == '.' && cursor.peek(1) >= '0' && cursor.peek(1) <= '9') {
        is_decimal = true;
        text.push_back(cursor.advance());
        while (cursor.peek() >= '0' && cursor.peek() <= '9') {
            text.push_back(cursor.advance());
        }
    }
    if (cursor.peek() == 'e' || cursor.peek() == 'E') {
        cursor.fail("unsupported construct: exponent notation");
    }
    if (text.empty() || text == "+" || text == "-" ||
        (text.back() < '0' || text.back() > '9')) {
        cursor.fail("malformed number");
    }
    return Literal::parse(text, is_decimal ? Datatype::Decimal : Datatype::Integer);
}

Term read_term(Cursor& cursor, const PrefixTable& prefixes, bool allow_a) {
    char c = cursor.peek();
    if (c == '<') {
        auto line = cursor.line();
        auto column = cursor.column();
        std::string value = read_iriref(cursor);
        try {
            return Iri(value);
        } catch (const Error& e) {
            throw ParseError(e.what(), line, column);
        }
    }
    if (c == '"' || c == '\'') {
        return read_string_literal(cursor, prefixes);
    }
    if ((c >= '0' && c <= '9') || c == '+' || c == '-' || (c == '.' && cursor.peek(1) >= '0' && cursor.peek(1) <= '9')) {
        return read_number(cursor);
    }
    if (c == '_' && cursor.peek(1) == ':') {
        cursor.fail("unsupported construct: blank node");
    }
    if (c == '[') {
        cursor.fail("unsupported construct: blank node");
    }
    if (c == '(') {
        cursor.fail("unsupported construct: collection");
    }
    if (c == ':' || is_name_start(c)) {
        // Lookahead: prefixed name if a ':' follows the name characters.
        std::size_t len = 0;
        while (is_name_char(cursor.peek(len))) {
            ++len;
        }
        if (cursor.peek(len) == ':') {
            return read_prefixed_name(cursor, prefixes);
        }
        auto line = cursor.line();
        auto column = cursor.column();
        std::string word = read_name_no_trailing_dot(cursor);
        if (word == "a" && allow_a) {
            return rdf_type();
        }
        if (word == "true") {
            return Literal::boolean(true);
        }
        if (word == "false") {
            return Literal::boolean(false);
        }
        throw ParseError("unexpected word '" + word + "'", line, column);
    }
    if (cursor.at_end()) {
        cursor.fail("unexpected end of input");
    }
    cursor.fail(std::string("unexpected character '") + c + "'");
}

}  // namespace argus::store::syntax
