#include "argus/verdict/verdict.hpp"

#include <functional>
#include <set>

namespace argus::verdict {

std::string_view to_string(SolutionState state) {
    switch (state) {
        case SolutionState::Satisfied: return "Satisfied";
        case SolutionState::Violated: return "Violated";
        case SolutionState::Unknown: return "Unknown";
    }
    return "Unknown";
}

std::string_view to_string(ClaimStatus status) {
    switch (status) {
        case ClaimStatus::Supported: return "Supported";
        case ClaimStatus::Defeated: return "Defeated";
        case ClaimStatus::Inconclusive: return "Inconclusive";
        case ClaimStatus::Undeveloped: return "Undeveloped";
    }
    return "Undeveloped";
}

std::string_view to_string(CounterclaimState state) {
    return state == CounterclaimState::Active ? "Active" : "Mitigated";
}

SolutionStatus evaluate_solution(const gsn::EvidenceBinding& binding, const store::Graph& graph) {
    SolutionStatus status;
    status.query = binding.query.text;
    status.comparator = binding.comparator;
    status.threshold = binding.threshold;
    auto table = aql::evaluate_query(graph, binding.query);
    const auto& cell = table.rows.at(0).at(0);
    if (!cell) {
        status.state = SolutionState::Unknown;
        return status;
    }
    const auto& observed = std::get<store::Literal>(*cell);
    status.observed = observed;
    bool ok = store::holds(binding.comparator, store::compare_values(observed, binding.threshold));
    status.state = ok ? SolutionState::Satisfied : SolutionState::Violated;
    return status;
}

StatusReport propagate(const gsn::AssuranceCase& gsn_case, const std::map<std::string, SolutionStatus>& solutions,
                       std::string evaluated_at) {
    using gsn::EdgeKind;
    using gsn::NodeKind;

    StatusReport report;
    report.case_title = gsn_case.title;
    report.evaluated_at = std::move(evaluated_at);

    std::map<std::string, std::vector<std::string>> children;
    std::map<std::string, std::vector<std::string>> challengers;
    std::map<std::string, std::vector<std::string>> mitigators;
    std::set<std::string> supported;
    for (const auto& e : gsn_case.edges) {
        switch (e.kind) {
            case EdgeKind::SupportedBy:
                children[e.from].push_back(e.to);
                supported.insert(e.to);
                break;
            case EdgeKind::Challenges: challengers[e.to].push_back(e.from); break;
            case EdgeKind::MitigatedBy: mitigators[e.from].push_back(e.to); break;
            case EdgeKind::InContextOf: break;
        }
    }

    for (const auto& [id, node] : gsn_case.nodes) {
        if (node.kind == NodeKind::Solution) {
            auto it = solutions.find(id);
            report.solutions[id] = it == solutions.end() ? SolutionStatus::unbound() : it->second;
        }
    }
    for (const auto& [id, node] : gsn_case.nodes) {
        if (node.kind != NodeKind::Counterclaim) {
            continue;
        }
        const auto& mits = mitigators[id];
        bool mitigated = !mits.empty();
        for (const auto& m : mits) {
            auto it = report.solutions.find(m);
            mitigated = mitigated && it != report.solutions.end() && it->second.state == SolutionState::Satisfied;
        }
        report.counterclaims[id] = mitigated ? CounterclaimState::Mitigated : CounterclaimState::Active;
    }

    auto actively_challenged = [&](const std::string& id) {
        for (const auto& cc : challengers[id]) {
            auto it = report.counterclaims.find(cc);
            if (it != report.counterclaims.end() && it->second == CounterclaimState::Active) {
                return true;
            }
        }
        return false;
    };

    // Recursion over SupportedBy; the case is acyclic once validated.
    std::function<ClaimStatus(const std::string&)> claim = [&](const std::string& id) -> ClaimStatus {
        if (auto it = report.claims.find(id); it != report.claims.end()) {
            return it->second;
        }
        ClaimStatus status;
        const auto& kids = children[id];
        if (actively_challenged(id)) {
            status = ClaimStatus::Defeated;
        } else if (kids.empty()) {
            status = ClaimStatus::Undeveloped;
        } else {
            bool defeated = false;
            bool inconclusive = false;
            for (const auto& child : kids) {
                const gsn::CaseNode* node = gsn_case.find(child);
                if (node == nullptr) {
                    inconclusive = true;
                    continue;
                }
                if (node->kind == NodeKind::Solution) {
                    SolutionState s = report.solutions.at(child).state;
                    if (actively_challenged(child)) {
                        s = SolutionState::Violated;
                    }
                    defeated = defeated || s == SolutionState::Violated;
                    inconclusive = inconclusive || s == SolutionState::Unknown;
                } else if (node->kind == NodeKind::Goal || node->kind == NodeKind::Strategy) {
                    ClaimStatus c = claim(child);
                    defeated = defeated || c == ClaimStatus::Defeated;
                    inconclusive = inconclusive || c == ClaimStatus::Inconclusive || c == ClaimStatus::Undeveloped;
                }
            }
            status = defeated ? ClaimStatus::Defeated
                              : (inconclusive ? ClaimStatus::Inconclusive : ClaimStatus::Supported);
        }
        report.claims[id] = status;
        return status;
    };

    for (const auto& [id, node] : gsn_case.nodes) {
        if (node.kind == NodeKind::Goal || node.kind == NodeKind::Strategy) {
            claim(id);
        }
    }
    for (const auto& [id, node] : gsn_case.nodes) {
        if (node.kind == NodeKind::Goal && supported.count(id) == 0) {
            report.root = report.claims.at(id);
            break;
        }
    }
    return report;
}

StatusReport evaluate_case(const gsn::AssuranceCase& gsn_case, const store::Graph& graph, std::string evaluated_at) {
    auto diagnostics = gsn::validate_case(gsn_case);
    if (!diagnostics.empty()) {
        throw InvalidCaseError(std::move(diagnostics));
    }
    std::map<std::string, SolutionStatus> solutions;
    for (const auto& [id, node] : gsn_case.nodes) {
        if (node.kind != gsn::NodeKind::Solution) {
            continue;
        }
        solutions[id] = node.binding ? evaluate_solution(*node.binding, graph) : SolutionStatus::unbound();
    }
    return propagate(gsn_case, solutions, std::move(evaluated_at));
}

gsn::StatusMap status_map(const StatusReport& report) {
    gsn::StatusMap out;
    for (const auto& [id, s] : report.solutions) {
        out[id] = std::string(to_string(s.state));
    }
    for (const auto& [id, c] : report.claims) {
        out[id] = std::string(to_string(c));
    }
    for (const auto& [id, c] : report.counterclaims) {
        out[id] = std::string(to_string(c));
    }
    return out;
}

ChangeSet diff_reports(const StatusReport& old_report, const StatusReport& new_report) {
    auto before = status_map(old_report);
    auto after = status_map(new_report);
    std::set<std::string> old_ids;
    std::set<std::string> new_ids;
    for (const auto& [id, s] : before) {
        old_ids.insert(id);
    }
    for (const auto& [id, s] : after) {
        new_ids.insert(id);
    }
    if (old_ids != new_ids) {
        throw EvaluationError("reports cover different node sets; they are not from the same case");
    }
    ChangeSet changes;
    for (const auto& [id, s] : before) {
        const auto& t = after.at(id);
        if (s != t) {
            changes.push_back({id, s, t});
        }
    }
    return changes;
}

}  // namespace argus::verdict
