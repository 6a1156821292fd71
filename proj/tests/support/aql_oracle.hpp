#pragma once

// Brute-force reference for AQL: enumerate every assignment of the query's
// variables over the terms occurring in the graph and keep those for which
// every instantiated pattern is a triple of the graph.

#include "argus/aql/query.hpp"
#include "support/helpers.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

namespace argus::testing {

inline std::vector<std::string> query_variables(const aql::Query& q) {
    std::set<std::string> names;
    for (const auto& p : q.patterns) {
        for (const auto* slot : {&p.subject, &p.predicate, &p.object}) {
            if (const auto* v = std::get_if<store::Variable>(slot)) {
                names.insert(v->name);
            }
        }
    }
    return {names.begin(), names.end()};
}

inline std::vector<store::Term> graph_terms(const store::Graph& g) {
    std::vector<store::Term> terms;
    auto add = [&](const store::Term& t) {
        if (std::find(terms.begin(), terms.end(), t) == terms.end()) {
            terms.push_back(t);
        }
    };
    for (const auto& t : g) {
        add(t.subject);
        add(t.predicate);
        add(t.object);
    }
    return terms;
}

inline bool oracle_filter(const store::Term& value, const aql::Filter& f) {
    const auto* lit = std::get_if<store::Literal>(&value);
    if (lit == nullptr) {
        return f.comparator == store::Comparator::Ne;
    }
    // Numbers compared as doubles here; all generated values are exact in binary
    // to well past the comparison resolution.
    std::optional<int> order;
    if (lit->is_numeric() && f.constant.is_numeric()) {
        double a = std::stod(lit->lexical());
        double b = std::stod(f.constant.lexical());
        order = a < b ? -1 : (a > b ? 1 : 0);
    } else if (lit->datatype() == f.constant.datatype()) {
        order = lit->lexical() < f.constant.lexical() ? -1 : (lit->lexical() > f.constant.lexical() ? 1 : 0);
        if (lit->datatype() == store::Datatype::Boolean) {
            int a = lit->lexical() == "true";
            int b = f.constant.lexical() == "true";
            order = a - b;
        }
    }
    if (!order) {
        return f.comparator == store::Comparator::Ne;
    }
    switch (f.comparator) {
        case store::Comparator::Eq: return *order == 0;
        case store::Comparator::Ne: return *order != 0;
        case store::Comparator::Lt: return *order < 0;
        case store::Comparator::Le: return *order <= 0;
        case store::Comparator::Gt: return *order > 0;
        case store::Comparator::Ge: return *order >= 0;
    }
    return false;
}

/// All satisfying assignments (each binds every query variable).
inline std::vector<store::Bindings> oracle_solutions(const store::Graph& g, const aql::Query& q) {
    auto vars = query_variables(q);
    auto terms = graph_terms(g);
    std::vector<store::Bindings> out;
    if (terms.empty()) {
        return out;
    }
    std::vector<std::size_t> index(vars.size(), 0);
    auto resolve = [&](const store::PatternTerm& slot, const std::vector<std::size_t>& idx) -> store::Term {
        if (const auto* v = std::get_if<store::Variable>(&slot)) {
            auto pos = std::find(vars.begin(), vars.end(), v->name) - vars.begin();
            return terms[idx[pos]];
        }
        return std::get<store::Term>(slot);
    };
    while (true) {
        bool all = true;
        for (const auto& p : q.patterns) {
            store::Term s = resolve(p.subject, index);
            store::Term pr = resolve(p.predicate, index);
            store::Term o = resolve(p.object, index);
            const auto* si = std::get_if<store::Iri>(&s);
            const auto* pi = std::get_if<store::Iri>(&pr);
            if (si == nullptr || pi == nullptr || !g.contains(store::Triple{*si, *pi, o})) {
                all = false;
                break;
            }
        }
        if (all) {
            store::Bindings b;
            for (std::size_t i = 0; i < vars.size(); ++i) {
                b.emplace(vars[i], terms[index[i]]);
            }
            bool keep = true;
            for (const auto& f : q.filters) {
                keep = keep && oracle_filter(b.at(f.variable.name), f);
            }
            if (keep) {
                out.push_back(std::move(b));
            }
        }
        std::size_t k = 0;
        while (k < index.size() && ++index[k] == terms.size()) {
            index[k] = 0;
            ++k;
        }
        if (k == index.size()) {
            break;
        }
    }
    return out;
}

/// Projection rows as sorted canonical strings.
inline std::vector<std::vector<std::string>> oracle_projection(const store::Graph& g, const aql::Query& q) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& b : oracle_solutions(g, q)) {
        std::vector<std::string> row;
        for (const auto& v : q.projection) {
            row.push_back(store::canonical_form(b.at(v.name)));
        }
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end());
    return rows;
}

inline std::vector<std::vector<std::string>> table_strings(const aql::ResultTable& t) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : t.rows) {
        std::vector<std::string> row;
        for (const auto& cell : r) {
            row.push_back(cell ? store::canonical_form(*cell) : "<none>");
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Random conjunctive query text over GraphGenerator's vocabulary.
class QueryGenerator {
public:
    explicit QueryGenerator(GraphGenerator& gen) : gen_(gen) {}

    std::string slot(int position) {
        static const char* vars[] = {"?x", "?y", "?z"};
        if (gen_.pick(5) < 3) {
            return vars[gen_.pick(3)];
        }
        if (position == 1) {
            return gen_.pick(4) == 0 ? "a" : ":p" + std::to_string(gen_.pick(3));
        }
        if (position == 2 && gen_.pick(2) == 0) {
            return literal_text();
        }
        return ":r" + std::to_string(gen_.pick(6));
    }

    std::string literal_text() {
        switch (gen_.pick(4)) {
            case 0: return std::to_string(gen_.pick(5));
            case 1: return "0." + std::to_string(gen_.pick(10));
            case 2: return "\"s" + std::to_string(gen_.pick(3)) + "\"";
            default: return gen_.pick(2) ? "true" : "false";
        }
    }

    /// Returns query text; variables in the head and filters are drawn from
    /// those used in the body.
    std::string next() {
        std::size_t n = 1 + gen_.pick(3);
        std::vector<std::string> patterns;
        std::set<std::string> used;
        for (std::size_t i = 0; i < n; ++i) {
            std::string s = slot(0), p = slot(1), o = slot(2);
            for (const auto& t : {s, p, o}) {
                if (t[0] == '?') {
                    used.insert(t);
                }
            }
            patterns.push_back(s + " " + p + " " + o);
        }
        if (used.empty()) {
            patterns.push_back("?x :p0 ?y");
            used = {"?x", "?y"};
        }
        std::vector<std::string> vars(used.begin(), used.end());
        std::string head;
        switch (gen_.pick(6)) {
            case 0: head = "COUNT(" + vars[gen_.pick(vars.size())] + ")"; break;
            case 1: head = "MIN(" + vars[gen_.pick(vars.size())] + ")"; break;
            case 2: head = "MAX(" + vars[gen_.pick(vars.size())] + ")"; break;
            case 3: head = "AVG(" + vars[gen_.pick(vars.size())] + ")"; break;
            default:
                for (const auto& v : vars) {
                    if (gen_.pick(2) == 0 || head.empty()) {
                        head += (head.empty() ? "" : " ") + v;
                    }
                }
        }
        std::string text = "SELECT " + head + " WHERE { ";
        for (std::size_t i = 0; i < patterns.size(); ++i) {
            text += patterns[i] + (i + 1 < patterns.size() || gen_.pick(2) ? " . " : " ");
        }
        text += "}";
        static const char* cmps[] = {"=", "!=", "<", "<=", ">", ">="};
        for (std::size_t f = gen_.pick(3); f > 0; --f) {
            text += " FILTER(" + vars[gen_.pick(vars.size())] + " " + cmps[gen_.pick(6)] + " " + literal_text() + ")";
        }
        return text;
    }

private:
    GraphGenerator& gen_;
};

struct OracleOutcome {
    bool agrees = true;
    std::string detail;
};

/// Compares evaluate_query with the brute-force reference on one instance.
inline OracleOutcome check_against_oracle(const store::Graph& g, const aql::Query& q) {
    auto solutions = oracle_solutions(g, q);
    if (!q.aggregate) {
        auto expected = oracle_projection(g, q);
        auto actual = table_strings(aql::evaluate_query(g, q));
        if (expected != actual) {
            return {false, "projection mismatch for " + q.text};
        }
        return {};
    }
    const auto& agg = *q.aggregate;
    std::vector<store::Term> values;
    for (const auto& b : solutions) {
        values.push_back(b.at(agg.variable.name));
    }
    bool numeric = std::all_of(values.begin(), values.end(), [](const store::Term& t) {
        const auto* l = std::get_if<store::Literal>(&t);
        return l != nullptr && l->is_numeric();
    });
    if (agg.kind != aql::AggregateKind::Count && !numeric) {
        try {
            aql::evaluate_query(g, q);
            return {false, "expected type error for " + q.text};
        } catch (const EvaluationError&) {
            return {};
        }
    }
    auto table = aql::evaluate_query(g, q);
    if (table.rows.size() != 1 || table.rows[0].size() != 1) {
        return {false, "aggregate shape for " + q.text};
    }
    const auto& cell = table.rows[0][0];
    if (agg.kind == aql::AggregateKind::Count) {
        bool ok = cell && std::get<store::Literal>(*cell).lexical() == std::to_string(values.size());
        return ok ? OracleOutcome{} : OracleOutcome{false, "count mismatch for " + q.text};
    }
    if (values.empty()) {
        return cell ? OracleOutcome{false, "expected no evidence for " + q.text} : OracleOutcome{};
    }
    std::vector<double> nums;
    for (const auto& v : values) {
        nums.push_back(std::stod(std::get<store::Literal>(v).lexical()));
    }
    double expected = 0;
    if (agg.kind == aql::AggregateKind::Min) {
        expected = *std::min_element(nums.begin(), nums.end());
    } else if (agg.kind == aql::AggregateKind::Max) {
        expected = *std::max_element(nums.begin(), nums.end());
    } else {
        for (double d : nums) {
            expected += d;
        }
        expected /= static_cast<double>(nums.size());
    }
    if (!cell) {
        return {false, "unexpected no evidence for " + q.text};
    }
    double actual = std::stod(std::get<store::Literal>(*cell).lexical());
    if (std::abs(actual - expected) > 1e-6) {
        return {false, "aggregate value mismatch for " + q.text};
    }
    return {};
}

}  // namespace argus::testing
