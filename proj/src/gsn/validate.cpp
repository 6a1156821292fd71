#include "argus/gsn/case.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace argus::gsn {

namespace {

bool in(NodeKind kind, std::initializer_list<NodeKind> allowed) {
    return std::find(allowed.begin(), allowed.end(), kind) != allowed.end();
}

std::string describe(const Edge& e) {
    return std::string(edge_name(e.kind)) + " " + e.from + " -> " + e.to;
}

// SupportedBy endpoint kinds. Sink sources get their own rule.
void check_supported_by(const Edge& e, NodeKind from, NodeKind to, std::vector<Diagnostic>& out) {
    using K = NodeKind;
    if (in(from, {K::Solution, K::Context, K::Justification})) {
        out.push_back({"gsn.sink", std::string(kind_keyword(from)) + " " + e.from +
                                       " is a sink and cannot be supported: " + describe(e)});
        return;
    }
    if (from == K::Goal && !in(to, {K::Goal, K::Strategy, K::Solution})) {
        out.push_back({"gsn.edge-kind", "a goal can be supported only by goals, strategies or solutions: " + describe(e)});
    } else if (from == K::Strategy && !in(to, {K::Goal, K::Solution})) {
        out.push_back({"gsn.edge-kind", "a strategy can be supported only by goals or solutions: " + describe(e)});
    } else if (from == K::Counterclaim) {
        out.push_back({"gsn.edge-kind", "a counterclaim cannot be supported: " + describe(e)});
    }
}

void check_edge_kinds(const Edge& e, NodeKind from, NodeKind to, std::vector<Diagnostic>& out) {
    using K = NodeKind;
    switch (e.kind) {
        case EdgeKind::SupportedBy:
            check_supported_by(e, from, to, out);
            break;
        case EdgeKind::InContextOf:
            if (!in(from, {K::Goal, K::Strategy}) || !in(to, {K::Context, K::Justification})) {
                out.push_back({"gsn.edge-kind",
                               "context links a goal or strategy to a context or justification: " + describe(e)});
            }
            break;
        case EdgeKind::Challenges:
            if (from != K::Counterclaim || !in(to, {K::Goal, K::Solution})) {
                out.push_back({"gsn.edge-kind", "a counterclaim challenges a goal or solution: " + describe(e)});
            }
            break;
        case EdgeKind::MitigatedBy:
            if (from != K::Counterclaim || to != K::Solution) {
                out.push_back({"gsn.edge-kind", "a counterclaim is mitigated by a solution: " + describe(e)});
            }
            break;
    }
}

}  // namespace

std::vector<Diagnostic> validate_case(const AssuranceCase& gsn_case) {
    std::vector<Diagnostic> out;
    std::map<std::string, std::vector<std::string>> children;  // SupportedBy, existing endpoints only
    std::set<std::string> supported_targets;

    for (const auto& [id, n] : gsn_case.nodes) {
        if (n.binding && n.kind != NodeKind::Solution) {
            out.push_back({"gsn.binding", "only solutions carry evidence: " + id});
        }
        if (n.binding && !n.binding->query.is_aggregate()) {
            out.push_back({"gsn.binding", "evidence query of " + id + " is not an aggregate"});
        }
    }

    auto edges = gsn_case.edges;
    std::sort(edges.begin(), edges.end());
    for (const auto& e : edges) {
        const CaseNode* from = gsn_case.find(e.from);
        const CaseNode* to = gsn_case.find(e.to);
        if (from == nullptr || to == nullptr) {
            out.push_back({"gsn.dangling-edge",
                           "unknown node " + (from == nullptr ? e.from : e.to) + " in " + describe(e)});
            continue;
        }
        check_edge_kinds(e, from->kind, to->kind, out);
        if (e.kind == EdgeKind::SupportedBy) {
            children[e.from].push_back(e.to);
            supported_targets.insert(e.to);
        }
    }

    // One cycle is reported, found by DFS in id order.
    std::map<std::string, int> state;  // 0 unvisited, 1 on stack, 2 done
    std::vector<std::string> stack;
    std::vector<std::string> cycle;
    std::function<bool(const std::string&)> dfs = [&](const std::string& id) {
        state[id] = 1;
        stack.push_back(id);
        for (const auto& child : children[id]) {
            if (state[child] == 1) {
                auto start = std::find(stack.begin(), stack.end(), child);
                cycle.assign(start, stack.end());
                cycle.push_back(child);
                return true;
            }
            if (state[child] == 0 && dfs(child)) {
                return true;
            }
        }
        stack.pop_back();
        state[id] = 2;
        return false;
    };
    for (const auto& [id, n] : gsn_case.nodes) {
        if (state[id] == 0 && dfs(id)) {
            break;
        }
    }
    if (!cycle.empty()) {
        std::string path;
        for (const auto& id : cycle) {
            path += (path.empty() ? "" : " -> ") + id;
        }
        out.push_back({"gsn.cycle", "SupportedBy cycle: " + path});
    }

    std::vector<std::string> roots;
    for (const auto& [id, n] : gsn_case.nodes) {
        if (n.kind == NodeKind::Goal && supported_targets.count(id) == 0) {
            roots.push_back(id);
        }
    }
    if (roots.size() != 1) {
        std::string list;
        for (const auto& r : roots) {
            list += (list.empty() ? "" : ", ") + r;
        }
        out.push_back({"gsn.root", "expected exactly one root goal, found " + std::to_string(roots.size()) +
                                       (list.empty() ? "" : " (" + list + ")")});
    } else {
        std::set<std::string> reached{roots.front()};
        std::vector<std::string> frontier{roots.front()};
        while (!frontier.empty()) {
            std::string id = frontier.back();
            frontier.pop_back();
            for (const auto& child : children[id]) {
                if (reached.insert(child).second) {
                    frontier.push_back(child);
                }
            }
        }
        for (const auto& [id, n] : gsn_case.nodes) {
            if (in(n.kind, {NodeKind::Goal, NodeKind::Strategy, NodeKind::Solution}) && reached.count(id) == 0) {
                out.push_back({"gsn.unreachable", std::string(kind_keyword(n.kind)) + " " + id +
                                                      " is not reachable from root " + roots.front()});
            }
        }
    }
    return out;
}

}  // namespace argus::gsn
