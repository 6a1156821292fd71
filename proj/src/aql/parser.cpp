#include "argus/aql/query.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace argus::aql {

namespace {

using store::syntax::Cursor;
using store::syntax::PrefixTable;

std::string upper(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return s;
}

std::string collapse_whitespace(std::string_view text) {
    std::string out;
    bool pending_space = false;
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        out.push_back(c);
    }
    return out;
}

struct Located {
    Variable variable;
    std::size_t line;
    std::size_t column;
};

class QueryReader {
public:
    QueryReader(std::string_view text, const PrefixTable& defaults) : cursor_(text), prefixes_(defaults) {}

    Query read() {
        Query q;
        cursor_.skip_trivia();
        while (peek_keyword() == "PREFIX") {
            prefix_decl();
        }
        expect_keyword("SELECT");
        select_clause(q);
        expect_keyword("WHERE");
        expect('{');
        where_clause(q);
        cursor_.skip_trivia();
        while (peek_keyword() == "FILTER") {
            filter_clause(q);
            cursor_.skip_trivia();
        }
        if (!cursor_.at_end()) {
            cursor_.fail("unexpected trailing input");
        }
        check_bound(q);
        return q;
    }

private:
    std::string peek_keyword() {
        std::size_t len = 0;
        std::string word;
        while (std::isalpha(static_cast<unsigned char>(cursor_.peek(len)))) {
            word.push_back(cursor_.peek(len));
            ++len;
        }
        return upper(word);
    }

    void expect_keyword(const std::string& keyword) {
        cursor_.skip_trivia();
        if (peek_keyword() != keyword) {
            cursor_.fail("expected " + keyword);
        }
        cursor_.advance(keyword.size());
    }

    void expect(char c) {
        cursor_.skip_trivia();
        if (cursor_.peek() != c) {
            cursor_.fail(std::string("expected '") + c + "'");
        }
        cursor_.advance();
    }

    void prefix_decl() {
        cursor_.advance(6);
        cursor_.skip_trivia();
        std::string name;
        while (store::syntax::is_name_char(cursor_.peek())) {
            name.push_back(cursor_.advance());
        }
        if (cursor_.peek() != ':') {
            cursor_.fail("expected ':' after prefix name");
        }
        cursor_.advance();
        cursor_.skip_trivia();
        prefixes_[name] = store::syntax::read_iriref(cursor_);
        cursor_.skip_trivia();
    }

    Located variable() {
        cursor_.skip_trivia();
        if (cursor_.peek() != '?') {
            cursor_.fail("expected a variable");
        }
        Located v{Variable{}, cursor_.line(), cursor_.column()};
        cursor_.advance();
        while (std::isalnum(static_cast<unsigned char>(cursor_.peek())) || cursor_.peek() == '_') {
            v.variable.name.push_back(cursor_.advance());
        }
        if (v.variable.name.empty()) {
            cursor_.fail("empty variable name");
        }
        return v;
    }

    void select_clause(Query& q) {
        cursor_.skip_trivia();
        std::string word = peek_keyword();
        for (auto kind : {AggregateKind::Count, AggregateKind::Min, AggregateKind::Max, AggregateKind::Avg}) {
            if (word == aggregate_name(kind)) {
                cursor_.advance(word.size());
                expect('(');
                Located v = variable();
                expect(')');
                q.aggregate = Aggregate{kind, v.variable};
                used_.push_back(v);
                return;
            }
        }
        while (true) {
            cursor_.skip_trivia();
            if (cursor_.peek() != '?') {
                break;
            }
            Located v = variable();
            q.projection.push_back(v.variable);
            used_.push_back(v);
        }
        if (q.projection.empty()) {
            cursor_.fail("expected projection variables or an aggregate");
        }
    }

    store::PatternTerm pattern_term(bool predicate_position) {
        cursor_.skip_trivia();
        if (cursor_.peek() == '?') {
            return variable().variable;
        }
        return store::syntax::read_term(cursor_, prefixes_, predicate_position);
    }

    void where_clause(Query& q) {
        while (true) {
            cursor_.skip_trivia();
            if (cursor_.peek() == '}') {
                cursor_.advance();
                break;
            }
            auto line = cursor_.line();
            auto column = cursor_.column();
            TriplePattern p{pattern_term(false), pattern_term(true), pattern_term(false)};
            for (const auto* slot : {&p.subject, &p.predicate}) {
                if (const auto* term = std::get_if<Term>(slot); term && std::holds_alternative<Literal>(*term)) {
                    throw ParseError("literal in subject or predicate position", line, column);
                }
            }
            q.patterns.push_back(std::move(p));
            cursor_.skip_trivia();
            if (cursor_.peek() == '.') {
                cursor_.advance();
            } else if (cursor_.peek() != '}') {
                cursor_.fail("expected '.' or '}' after triple pattern");
            }
        }
        if (q.patterns.empty()) {
            cursor_.fail("WHERE needs at least one triple pattern");
        }
    }

    void filter_clause(Query& q) {
        cursor_.advance(6);
        expect('(');
        Located v = variable();
        cursor_.skip_trivia();
        std::string symbol;
        while (cursor_.peek() == '<' || cursor_.peek() == '>' || cursor_.peek() == '=' || cursor_.peek() == '!') {
            symbol.push_back(cursor_.advance());
        }
        auto cmp = store::comparator_from_symbol(symbol);
        if (!cmp) {
            cursor_.fail("expected a comparator");
        }
        cursor_.skip_trivia();
        Term constant = store::syntax::read_term(cursor_, prefixes_, false);
        const auto* literal = std::get_if<Literal>(&constant);
        if (literal == nullptr) {
            cursor_.fail("FILTER constant must be a literal");
        }
        expect(')');
        q.filters.push_back(Filter{v.variable, *cmp, *literal});
        used_.push_back(v);
    }

    void check_bound(const Query& q) {
        std::set<std::string> bound;
        for (const auto& p : q.patterns) {
            for (const auto* slot : {&p.subject, &p.predicate, &p.object}) {
                if (const auto* var = std::get_if<Variable>(slot)) {
                    bound.insert(var->name);
                }
            }
        }
        for (const auto& v : used_) {
            if (bound.count(v.variable.name) == 0) {
                throw ParseError("variable ?" + v.variable.name + " is not bound by any pattern", v.line, v.column);
            }
        }
    }

    Cursor cursor_;
    PrefixTable prefixes_;
    std::vector<Located> used_;
};

}  // namespace

std::string_view aggregate_name(AggregateKind kind) {
    switch (kind) {
        case AggregateKind::Count: return "COUNT";
        case AggregateKind::Min: return "MIN";
        case AggregateKind::Max: return "MAX";
        case AggregateKind::Avg: return "AVG";
    }
    return "COUNT";
}

PrefixTable default_prefixes(std::string base_namespace) {
    return PrefixTable{{"", std::move(base_namespace)},
                       {"rdf", std::string(store::vocab::kRdf)},
                       {"rdfs", std::string(store::vocab::kRdfs)},
                       {"xsd", std::string(store::vocab::kXsd)},
                       {"owl", std::string(store::vocab::kOwl)}};
}

Query parse_query(std::string_view text, const PrefixTable& defaults) {
    Query q = QueryReader(text, defaults).read();
    q.text = collapse_whitespace(text);
    return q;
}

}  // namespace argus::aql
