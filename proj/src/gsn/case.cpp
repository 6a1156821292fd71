#include "argus/gsn/case.hpp"

#include <algorithm>

namespace argus::gsn {

std::string_view kind_keyword(NodeKind kind) {
    switch (kind) {
        case NodeKind::Goal: return "goal";
        case NodeKind::Strategy: return "strategy";
        case NodeKind::Solution: return "solution";
        case NodeKind::Context: return "context";
        case NodeKind::Justification: return "justification";
        case NodeKind::Counterclaim: return "counterclaim";
    }
    return "goal";
}

std::optional<NodeKind> kind_from_keyword(std::string_view keyword) {
    for (auto kind : {NodeKind::Goal, NodeKind::Strategy, NodeKind::Solution, NodeKind::Context,
                      NodeKind::Justification, NodeKind::Counterclaim}) {
        if (kind_keyword(kind) == keyword) {
            return kind;
        }
    }
    return std::nullopt;
}

std::string_view edge_name(EdgeKind kind) {
    switch (kind) {
        case EdgeKind::SupportedBy: return "SupportedBy";
        case EdgeKind::InContextOf: return "InContextOf";
        case EdgeKind::Challenges: return "Challenges";
        case EdgeKind::MitigatedBy: return "MitigatedBy";
    }
    return "SupportedBy";
}

const CaseNode* AssuranceCase::find(std::string_view id) const {
    auto it = nodes.find(std::string(id));
    return it == nodes.end() ? nullptr : &it->second;
}

bool AssuranceCase::operator==(const AssuranceCase& other) const {
    if (title != other.title || nodes != other.nodes) {
        return false;
    }
    auto a = edges;
    auto b = other.edges;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

bool is_valid_node_id(std::string_view id) {
    if (id.empty()) {
        return false;
    }
    auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); };
    if (!alpha(id.front())) {
        return false;
    }
    return std::all_of(id.begin(), id.end(), [&](char c) {
        return alpha(c) || (c >= '0' && c <= '9') || c == '_' || c == '.';
    });
}

}  // namespace argus::gsn
