#pragma once

#include "argus/store/graph.hpp"
#include "argus/store/syntax.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace argus::aql {

using store::Comparator;
using store::Literal;
using store::Term;
using store::TriplePattern;
using store::Variable;

enum class AggregateKind { Count, Min, Max, Avg };

std::string_view aggregate_name(AggregateKind kind);

struct Aggregate {
    AggregateKind kind;
    Variable variable;
};

struct Filter {
    Variable variable;
    Comparator comparator;
    Literal constant;
};

struct Query {
    std::vector<Variable> projection;  // empty for aggregate queries
    std::optional<Aggregate> aggregate;
    std::vector<TriplePattern> patterns;
    std::vector<Filter> filters;
    std::string text;  // source with whitespace runs collapsed

    bool is_aggregate() const noexcept { return aggregate.has_value(); }
};

/// `:` bound to `base_namespace` plus rdf, rdfs, xsd and owl.
store::syntax::PrefixTable default_prefixes(std::string base_namespace = "urn:argus:");

/// Parses `PREFIX* SELECT (vars | AGG(?v)) WHERE { patterns } FILTER(...)*`.
/// Throws ParseError for syntax errors and for variables used in the
/// projection, aggregate or filters that no pattern binds.
Query parse_query(std::string_view text, const store::syntax::PrefixTable& defaults = default_prefixes());

struct ResultTable {
    std::vector<std::string> columns;
    /// An empty cell is the "no evidence" outcome of MIN/MAX/AVG.
    std::vector<std::vector<std::optional<Term>>> rows;

    bool operator==(const ResultTable&) const = default;
};

/// MIN/MAX/AVG over no values; distinct from zero.
inline constexpr std::nullopt_t kNoEvidence = std::nullopt;

/// COUNT -> integer; MIN/MAX -> the extreme literal; AVG -> exact mean as a
/// canonical decimal, half-even rounded to 6 fractional digits when it does
/// not terminate. nullopt for MIN/MAX/AVG of an empty list. Throws
/// EvaluationError when MIN/MAX/AVG meet a non-numeric value.
std::optional<Literal> apply_aggregate(const std::vector<Term>& values, AggregateKind kind);

/// Solution mappings of the pattern conjunction, joined left to right, after
/// filters. Each mapping binds every pattern variable.
std::vector<store::Bindings> solve(const store::Graph& graph, const Query& query);

/// Projection rows are sorted by the canonical form of their cells; aggregate
/// queries produce exactly one row with one cell.
ResultTable evaluate_query(const store::Graph& graph, const Query& query);

}  // namespace argus::aql
