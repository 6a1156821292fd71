#include "argus/store/turtle.hpp"

#include "argus/store/syntax.hpp"

namespace argus::store {

namespace {

using syntax::Cursor;
using syntax::PrefixTable;

class TurtleReader {
public:
    explicit TurtleReader(std::string_view text) : cursor_(text) {}

    Graph read() {
        while (true) {
            cursor_.skip_trivia();
            if (cursor_.at_end()) {
                break;
            }
            if (cursor_.peek() == '@') {
                directive();
            } else {
                statement();
            }
        }
        return std::move(graph_);
    }

private:
    void directive() {
        cursor_.advance();
        std::string keyword = syntax::read_word(cursor_);
        if (keyword == "base") {
            cursor_.fail("unsupported construct: @base");
        }
        if (keyword != "prefix") {
            cursor_.fail("unknown directive @" + keyword);
        }
        cursor_.skip_trivia();
        std::string name;
        while (syntax::is_name_char(cursor_.peek())) {
            name.push_back(cursor_.advance());
        }
        if (cursor_.peek() != ':') {
            cursor_.fail("expected ':' after prefix name");
        }
        if (!name.empty() && (!syntax::is_name_start(name.front()) || name.back() == '.')) {
            cursor_.fail("invalid prefix name '" + name + "'");
        }
        cursor_.advance();
        cursor_.skip_trivia();
        std::string base = syntax::read_iriref(cursor_);
        expect('.', "expected '.' after @prefix declaration");
        prefixes_[name] = base;
        graph_.set_prefix(name, base);
    }

    void statement() {
        if (cursor_.peek() == '"' || cursor_.peek() == '\'' || (cursor_.peek() >= '0' && cursor_.peek() <= '9')) {
            cursor_.fail("literal subject is not allowed");
        }
        std::size_t line = cursor_.line();
        std::size_t column = cursor_.column();
        Term subject = syntax::read_term(cursor_, prefixes_, false);
        if (std::holds_alternative<Literal>(subject)) {
            throw ParseError("literal subject is not allowed", line, column);
        }
        while (true) {
            cursor_.skip_trivia();
            line = cursor_.line();
            column = cursor_.column();
            Term predicate = syntax::read_term(cursor_, prefixes_, true);
            if (std::holds_alternative<Literal>(predicate)) {
                throw ParseError("literal predicate is not allowed", line, column);
            }
            while (true) {
                cursor_.skip_trivia();
                Term object = syntax::read_term(cursor_, prefixes_, false);
                graph_.insert(make_triple(subject, predicate, std::move(object)));
                cursor_.skip_trivia();
                if (cursor_.peek() == ',') {
                    cursor_.advance();
                    continue;
                }
                break;
            }
            if (cursor_.peek() == ';') {
                cursor_.advance();
                cursor_.skip_trivia();
                // A trailing ';' before '.' is allowed.
                if (cursor_.peek() == ';') {
                    continue;
                }
                if (cursor_.peek() == '.') {
                    break;
                }
                continue;
            }
            break;
        }
        expect('.', "expected '.' at end of statement");
    }

    void expect(char c, const char* message) {
        cursor_.skip_trivia();
        if (cursor_.peek() != c) {
            cursor_.fail(message);
        }
        cursor_.advance();
    }

    Cursor cursor_;
    PrefixTable prefixes_;
    Graph graph_;
};

}  // namespace

Graph parse_turtle(std::string_view text) { return TurtleReader(text).read(); }

std::string compact_iri(const Graph::PrefixMap& prefixes, const Iri& iri) {
    const std::string& value = iri.str();
    const std::string* best_name = nullptr;
    std::size_t best_len = 0;
    for (const auto& [name, base] : prefixes) {
        if (base.size() < best_len || !value.starts_with(base)) {
            continue;
        }
        if (!syntax::is_valid_local_name(std::string_view(value).substr(base.size()))) {
            continue;
        }
        if (best_name == nullptr || base.size() > best_len) {
            best_name = &name;
            best_len = base.size();
        }
    }
    if (best_name == nullptr) {
        return "<" + value + ">";
    }
    return *best_name + ":" + value.substr(best_len);
}

std::string term_to_turtle(const Graph::PrefixMap& prefixes, const Term& term) {
    if (const auto* iri = std::get_if<Iri>(&term)) {
        return compact_iri(prefixes, *iri);
    }
    const auto& lit = std::get<Literal>(term);
    if (lit.datatype() == Datatype::String) {
        return "\"" + escape_string(lit.lexical()) + "\"";
    }
    return lit.lexical();
}

std::string serialize_turtle(const Graph& graph) {
    std::string out;
    for (const auto& [name, base] : graph.prefixes()) {
        out += "@prefix " + name + ": <" + base + "> .\n";
    }
    if (!graph.prefixes().empty() && !graph.empty()) {
        out += '\n';
    }
    const Iri type = rdf_type();
    for (const auto& t : graph) {
        out += compact_iri(graph.prefixes(), t.subject);
        out += ' ';
        out += t.predicate == type ? std::string("a") : compact_iri(graph.prefixes(), t.predicate);
        out += ' ';
        out += term_to_turtle(graph.prefixes(), t.object);
        out += " .\n";
    }
    return out;
}

}  // namespace argus::store
