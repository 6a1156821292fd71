#include "argus/aql/query.hpp"

#include <algorithm>

namespace argus::aql {

namespace {

bool passes(const store::Bindings& row, const Filter& f) {
    const Term& value = row.at(f.variable.name);
    const auto* literal = std::get_if<Literal>(&value);
    if (literal == nullptr) {
        return store::holds(f.comparator, std::nullopt);
    }
    return store::holds(f.comparator, store::compare_values(*literal, f.constant));
}

const Literal& numeric_literal(const Term& value, AggregateKind kind) {
    const auto* literal = std::get_if<Literal>(&value);
    if (literal == nullptr || !literal->is_numeric()) {
        throw EvaluationError(std::string(aggregate_name(kind)) + " over non-numeric value " +
                              store::canonical_form(value));
    }
    return *literal;
}

}  // namespace

std::optional<Literal> apply_aggregate(const std::vector<Term>& values, AggregateKind kind) {
    if (kind == AggregateKind::Count) {
        return Literal::integer(static_cast<long long>(values.size()));
    }
    // Type-check everything first so an error is never masked by emptiness order.
    for (const auto& v : values) {
        numeric_literal(v, kind);
    }
    if (values.empty()) {
        return kNoEvidence;
    }
    if (kind == AggregateKind::Avg) {
        store::Decimal sum;
        for (const auto& v : values) {
            sum = sum + numeric_literal(v, kind).numeric();
        }
        return Literal::decimal(store::Decimal::divide(sum, static_cast<long long>(values.size()), 6));
    }
    const Literal* best = &numeric_literal(values.front(), kind);
    for (const auto& v : values) {
        const Literal& candidate = numeric_literal(v, kind);
        auto order = candidate.numeric() <=> best->numeric();
        if ((kind == AggregateKind::Min && order < 0) || (kind == AggregateKind::Max && order > 0)) {
            best = &candidate;
        }
    }
    return *best;
}

std::vector<store::Bindings> solve(const store::Graph& graph, const Query& query) {
    std::vector<store::Bindings> partial{store::Bindings{}};
    for (const auto& pattern : query.patterns) {
        std::vector<store::Bindings> next;
        for (const auto& seed : partial) {
            for (const auto& triple : graph) {
                store::Bindings extended = seed;
                if (store::unify(pattern, triple, extended)) {
                    next.push_back(std::move(extended));
                }
            }
        }
        partial = std::move(next);
        if (partial.empty()) {
            break;
        }
    }
    std::vector<store::Bindings> out;
    for (auto& row : partial) {
        bool keep = std::all_of(query.filters.begin(), query.filters.end(),
                                [&](const Filter& f) { return passes(row, f); });
        if (keep) {
            out.push_back(std::move(row));
        }
    }
    return out;
}

ResultTable evaluate_query(const store::Graph& graph, const Query& query) {
    auto solutions = solve(graph, query);
    ResultTable table;
    if (query.aggregate) {
        const auto& agg = *query.aggregate;
        table.columns.push_back(std::string(aggregate_name(agg.kind)) + "(?" + agg.variable.name + ")");
        std::vector<Term> values;
        values.reserve(solutions.size());
        for (const auto& row : solutions) {
            values.push_back(row.at(agg.variable.name));
        }
        auto result = apply_aggregate(values, agg.kind);
        table.rows.push_back({result ? std::optional<Term>(*result) : std::nullopt});
        return table;
    }
    for (const auto& v : query.projection) {
        table.columns.push_back("?" + v.name);
    }
    std::vector<std::pair<std::vector<std::string>, std::vector<std::optional<Term>>>> keyed;
    keyed.reserve(solutions.size());
    for (const auto& row : solutions) {
        std::vector<std::string> key;
        std::vector<std::optional<Term>> cells;
        for (const auto& v : query.projection) {
            const Term& value = row.at(v.name);
            key.push_back(store::canonical_form(value));
            cells.emplace_back(value);
        }
        keyed.emplace_back(std::move(key), std::move(cells));
    }
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [key, cells] : keyed) {
        table.rows.push_back(std::move(cells));
    }
    return table;
}

}  // namespace argus::aql
