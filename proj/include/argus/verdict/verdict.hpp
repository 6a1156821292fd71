#pragma once

#include "argus/gsn/case.hpp"
#include "argus/store/graph.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace argus::verdict {

enum class SolutionState { Satisfied, Violated, Unknown };
enum class ClaimStatus { Supported, Defeated, Inconclusive, Undeveloped };
enum class CounterclaimState { Active, Mitigated };

std::string_view to_string(SolutionState state);
std::string_view to_string(ClaimStatus status);
std::string_view to_string(CounterclaimState state);

/// Outcome of one evidence binding. `observed` is empty for Unknown; the
/// query/comparator/threshold fields are empty for unbound solutions.
struct SolutionStatus {
    SolutionState state = SolutionState::Unknown;
    std::string query;
    std::optional<store::Literal> observed;
    std::optional<store::Comparator> comparator;
    std::optional<store::Literal> threshold;

    static SolutionStatus unbound() { return {}; }
    bool operator==(const SolutionStatus&) const = default;
};

struct StatusReport {
    std::string case_title;
    std::string evaluated_at;
    ClaimStatus root = ClaimStatus::Undeveloped;
    std::map<std::string, SolutionStatus> solutions;
    std::map<std::string, ClaimStatus> claims;  // goals and strategies
    std::map<std::string, CounterclaimState> counterclaims;

    bool operator==(const StatusReport&) const = default;
};

class InvalidCaseError : public Error {
public:
    explicit InvalidCaseError(std::vector<Diagnostic> diagnostics)
        : Error("assurance case is not well-formed:\n" + format_diagnostics(diagnostics)),
          diagnostics_(std::move(diagnostics)) {}

    const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

private:
    std::vector<Diagnostic> diagnostics_;
};

/// Runs the binding's aggregate query; no evidence gives Unknown, otherwise
/// the comparison decides Satisfied or Violated. Query type errors propagate
/// as EvaluationError.
SolutionStatus evaluate_solution(const gsn::EvidenceBinding& binding, const store::Graph& graph);

/// Claim statuses from solution statuses. Solutions missing from the map
/// count as Unknown. Expects a well-formed case.
///
/// Counterclaim: Mitigated iff it has at least one MitigatedBy solution and
/// all of them are Satisfied.
/// Goal/Strategy, first matching rule wins:
///   1. an Active counterclaim challenges it          -> Defeated
///   2. it has no SupportedBy children                -> Undeveloped
///   3. a child is Defeated or Violated               -> Defeated
///   4. a child is Inconclusive, Undeveloped, Unknown -> Inconclusive
///   5. otherwise                                     -> Supported
/// A solution challenged by an Active counterclaim contributes Violated.
StatusReport propagate(const gsn::AssuranceCase& gsn_case, const std::map<std::string, SolutionStatus>& solutions,
                       std::string evaluated_at = {});

/// validate_case, then evaluate_solution for every solution (unbound ->
/// Unknown), then propagate. Throws InvalidCaseError for a malformed case.
StatusReport evaluate_case(const gsn::AssuranceCase& gsn_case, const store::Graph& graph, std::string evaluated_at);

struct StatusChange {
    std::string id;
    std::string old_status;
    std::string new_status;

    bool operator==(const StatusChange&) const = default;
};

using ChangeSet = std::vector<StatusChange>;

/// Every node whose status differs, id-sorted. Throws EvaluationError when
/// the reports cover different node ids.
ChangeSet diff_reports(const StatusReport& old_report, const StatusReport& new_report);

/// Node id -> status name over solutions, claims and counterclaims.
gsn::StatusMap status_map(const StatusReport& report);

nlohmann::json report_to_json(const StatusReport& report);
/// Inverse of report_to_json; throws argus::Error on schema violations.
StatusReport report_from_json(const nlohmann::json& json);
std::string dump_report(const StatusReport& report);

nlohmann::json changes_to_json(const ChangeSet& changes);

}  // namespace argus::verdict
