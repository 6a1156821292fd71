#include "argus/gsn/case.hpp"

#include <algorithm>

namespace argus::gsn {

namespace {

constexpr std::string_view kIndent = "  ";

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

std::string quote(std::string_view raw) {
    std::string out = "\"";
    for (char c : raw) {
        if (c == '"' || c == '\\') {
            out.push_back('\\');
        }
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

class CaseReader {
public:
    CaseReader(std::string_view text, const store::syntax::PrefixTable& prefixes)
        : text_(text), prefixes_(prefixes) {}

    AssuranceCase read() {
        bool have_header = false;
        std::size_t start = 0;
        while (start <= text_.size()) {
            std::size_t end = text_.find('\n', start);
            if (end == std::string_view::npos) {
                end = text_.size();
            }
            ++line_;
            std::string_view raw = text_.substr(start, end - start);
            if (!raw.empty() && raw.back() == '\r') {
                raw.remove_suffix(1);
            }
            start = end + 1;
            std::string_view content = trim(raw);
            if (content.empty() || content.front() == '#') {
                continue;
            }
            if (!have_header) {
                header(content);
                have_header = true;
            } else if (raw.starts_with(kIndent)) {
                if (raw.size() > kIndent.size() && (raw[kIndent.size()] == ' ' || raw[kIndent.size()] == '\t')) {
                    fail("property lines are indented by exactly two spaces", 1);
                }
                property(content);
            } else if (raw.front() == ' ' || raw.front() == '\t') {
                fail("property lines are indented by exactly two spaces", 1);
            } else {
                node(content);
            }
        }
        if (!have_header) {
            throw ParseError("missing case header", 1, 1);
        }
        return std::move(case_);
    }

private:
    [[noreturn]] void fail(const std::string& message, std::size_t column) const {
        throw ParseError(message, line_, column);
    }

    // Reads a quoted string at the start of `s`; returns the rest after it.
    std::string_view quoted(std::string_view s, std::string& out, std::size_t column) const {
        if (s.empty() || s.front() != '"') {
            fail("expected a quoted string", column);
        }
        std::size_t i = 1;
        while (true) {
            if (i >= s.size()) {
                fail("unterminated string", column);
            }
            char c = s[i++];
            if (c == '"') {
                break;
            }
            if (c == '\\') {
                if (i >= s.size() || (s[i] != '"' && s[i] != '\\')) {
                    fail("unknown escape in string", column + i);
                }
                c = s[i++];
            }
            out.push_back(c);
        }
        return trim(s.substr(i));
    }

    void header(std::string_view content) {
        if (!content.starts_with("case ") && !content.starts_with("case\t")) {
            fail("expected 'case \"title\"' header", 1);
        }
        auto rest = quoted(trim(content.substr(4)), case_.title, 6);
        if (!rest.empty()) {
            fail("unexpected text after case title", 1);
        }
    }

    void node(std::string_view content) {
        std::size_t space = content.find(' ');
        std::string_view keyword = content.substr(0, space);
        auto kind = kind_from_keyword(keyword);
        if (!kind) {
            fail("unknown node kind '" + std::string(keyword) + "'", 1);
        }
        if (space == std::string_view::npos) {
            fail("expected node id", keyword.size() + 1);
        }
        std::string_view rest = trim(content.substr(space));
        std::size_t id_end = rest.find_first_of(" \t");
        std::string id(rest.substr(0, id_end));
        if (!is_valid_node_id(id)) {
            fail("invalid node id '" + id + "'", space + 2);
        }
        if (case_.nodes.count(id) != 0) {
            fail("duplicate node id '" + id + "'", space + 2);
        }
        if (id_end == std::string_view::npos) {
            fail("expected node statement", content.size() + 1);
        }
        CaseNode n{id, *kind, {}, std::nullopt};
        auto tail = quoted(trim(rest.substr(id_end)), n.statement, space + id.size() + 3);
        if (!tail.empty()) {
            fail("unexpected text after node statement", 1);
        }
        current_ = id;
        case_.nodes.emplace(id, std::move(n));
    }

    void property(std::string_view content) {
        if (current_.empty()) {
            fail("property line before any node", 3);
        }
        std::size_t space = content.find(' ');
        std::string_view name = content.substr(0, space);
        std::string_view arg = space == std::string_view::npos ? std::string_view{} : trim(content.substr(space));
        CaseNode& self = case_.nodes.at(current_);
        if (name == "evidence") {
            evidence(self, arg, 3 + space + 1);
            return;
        }
        std::string target(arg);
        if (!is_valid_node_id(target)) {
            fail("expected a node id after '" + std::string(name) + "'", 3 + name.size() + 1);
        }
        if (name == "supports") {
            case_.edges.push_back({EdgeKind::SupportedBy, target, current_});
        } else if (name == "context-of") {
            case_.edges.push_back({EdgeKind::InContextOf, target, current_});
        } else if (name == "challenges") {
            case_.edges.push_back({EdgeKind::Challenges, current_, target});
        } else if (name == "mitigated-by") {
            case_.edges.push_back({EdgeKind::MitigatedBy, current_, target});
        } else {
            fail("unknown property '" + std::string(name) + "'", 3);
        }
    }

    void evidence(CaseNode& self, std::string_view arg, std::size_t column) {
        if (self.kind != NodeKind::Solution) {
            fail("evidence is only allowed on solutions, not on " + std::string(kind_keyword(self.kind)) + " " +
                     self.id,
                 3);
        }
        if (self.binding) {
            fail("solution " + self.id + " already has evidence", 3);
        }
        std::size_t at = arg.rfind(" expect ");
        if (at == std::string_view::npos) {
            fail("evidence needs 'expect <cmp> <number>'", column);
        }
        std::string_view query_text = trim(arg.substr(0, at));
        std::string_view predicate = trim(arg.substr(at + 8));
        aql::Query query;
        try {
            query = aql::parse_query(query_text, prefixes_);
        } catch (const ParseError& e) {
            fail("evidence query: " + e.reason(), column + e.column() - 1);
        }
        if (!query.is_aggregate()) {
            fail("evidence query must be an aggregate (COUNT, MIN, MAX or AVG)", column);
        }
        std::size_t split = predicate.find(' ');
        if (split == std::string_view::npos) {
            fail("expected '<cmp> <number>' after expect", column + at + 8);
        }
        auto cmp = store::comparator_from_symbol(predicate.substr(0, split));
        if (!cmp) {
            fail("unknown comparator '" + std::string(predicate.substr(0, split)) + "'", column + at + 8);
        }
        std::string_view number = trim(predicate.substr(split));
        auto value = store::Decimal::parse(number);
        if (!value) {
            fail("threshold must be a number", column + at + 8 + split + 1);
        }
        store::Literal threshold = number.find('.') == std::string_view::npos
                                       ? store::Literal::parse(number, store::Datatype::Integer)
                                       : store::Literal::decimal(*value);
        self.binding = EvidenceBinding{std::move(query), *cmp, std::move(threshold)};
    }

    std::string_view text_;
    const store::syntax::PrefixTable& prefixes_;
    std::size_t line_ = 0;
    AssuranceCase case_;
    std::string current_;
};

}  // namespace

AssuranceCase parse_case(std::string_view text, const store::syntax::PrefixTable& query_prefixes) {
    return CaseReader(text, query_prefixes).read();
}

std::string serialize_case(const AssuranceCase& gsn_case) {
    std::string out = "case " + quote(gsn_case.title) + "\n";
    auto edges = gsn_case.edges;
    std::sort(edges.begin(), edges.end());
    for (const auto& [id, n] : gsn_case.nodes) {
        out += "\n";
        out += std::string(kind_keyword(n.kind)) + " " + id + " " + quote(n.statement) + "\n";
        for (const auto& e : edges) {
            if (e.kind == EdgeKind::SupportedBy && e.to == id) {
                out += "  supports " + e.from + "\n";
            }
        }
        for (const auto& e : edges) {
            if (e.kind == EdgeKind::InContextOf && e.to == id) {
                out += "  context-of " + e.from + "\n";
            }
        }
        for (const auto& e : edges) {
            if (e.kind == EdgeKind::Challenges && e.from == id) {
                out += "  challenges " + e.to + "\n";
            }
        }
        for (const auto& e : edges) {
            if (e.kind == EdgeKind::MitigatedBy && e.from == id) {
                out += "  mitigated-by " + e.to + "\n";
            }
        }
        if (n.binding) {
            out += "  evidence " + n.binding->query.text + " expect " +
                   std::string(store::comparator_symbol(n.binding->comparator)) + " " +
                   n.binding->threshold.lexical() + "\n";
        }
    }
    return out;
}

}  // namespace argus::gsn
