#pragma once

#include "argus/aql/query.hpp"
#include "argus/common.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace argus::gsn {

enum class NodeKind { Goal, Strategy, Solution, Context, Justification, Counterclaim };

std::string_view kind_keyword(NodeKind kind);  // "goal", "strategy", ...
std::optional<NodeKind> kind_from_keyword(std::string_view keyword);

/// Aggregate query plus the predicate its single value must satisfy.
struct EvidenceBinding {
    aql::Query query;
    store::Comparator comparator;
    store::Literal threshold;

    bool operator==(const EvidenceBinding& other) const {
        return query.text == other.query.text && comparator == other.comparator && threshold == other.threshold;
    }
};

struct CaseNode {
    std::string id;
    NodeKind kind;
    std::string statement;
    std::optional<EvidenceBinding> binding;  // solutions only

    bool operator==(const CaseNode&) const = default;
};

enum class EdgeKind { SupportedBy, InContextOf, Challenges, MitigatedBy };

std::string_view edge_name(EdgeKind kind);

struct Edge {
    EdgeKind kind;
    std::string from;
    std::string to;

    auto operator<=>(const Edge&) const = default;
};

struct AssuranceCase {
    std::string title;
    std::map<std::string, CaseNode> nodes;
    std::vector<Edge> edges;

    const CaseNode* find(std::string_view id) const;
    /// Equal titles, nodes, and edge multisets.
    bool operator==(const AssuranceCase& other) const;
};

bool is_valid_node_id(std::string_view id);

/// Reads the line-oriented case DSL. Well-formedness is not checked here;
/// see validate_case. Throws ParseError on syntax errors, duplicate ids,
/// evidence on a non-solution, or a non-aggregate evidence query.
AssuranceCase parse_case(std::string_view text,
                         const store::syntax::PrefixTable& query_prefixes = aql::default_prefixes());

/// Canonical DSL: nodes in id order, each edge written on the node that owns
/// it (supports/context-of on the child, challenges/mitigated-by on the
/// counterclaim).
std::string serialize_case(const AssuranceCase& gsn_case);

/// One diagnostic per violated rule instance; empty iff well-formed.
std::vector<Diagnostic> validate_case(const AssuranceCase& gsn_case);

/// Node id -> status name ("Supported", "Satisfied", "Active", ...).
using StatusMap = std::map<std::string, std::string>;

std::string render_dot(const AssuranceCase& gsn_case, const std::optional<StatusMap>& statuses = std::nullopt);

}  // namespace argus::gsn
