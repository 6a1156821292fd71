#include "argus/verdict/verdict.hpp"

#include <charconv>
#include <limits>

namespace argus::verdict {

using nlohmann::json;

namespace {

json literal_number(const std::optional<store::Literal>& value) {
    if (!value) {
        return nullptr;
    }
    if (value->datatype() == store::Datatype::Integer) {
        long long n = 0;
        const auto& lex = value->lexical();
        auto [ptr, ec] = std::from_chars(lex.data(), lex.data() + lex.size(), n);
        if (ec == std::errc() && ptr == lex.data() + lex.size()) {
            return n;
        }
        return value->numeric().to_double();
    }
    if (value->is_numeric()) {
        return value->numeric().to_double();
    }
    throw EvaluationError("non-numeric value cannot appear in a status report: " + value->lexical());
}

std::optional<store::Literal> number_literal(const json& value, const char* field) {
    if (value.is_null()) {
        return std::nullopt;
    }
    if (value.is_number_integer()) {
        return store::Literal::integer(value.get<long long>());
    }
    if (!value.is_number()) {
        throw Error(std::string("report field '") + field + "' must be a number or null");
    }
    double d = value.get<double>();
    char buf[512];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, d, std::chars_format::fixed);
    if (ec != std::errc()) {
        throw Error(std::string("report field '") + field + "' is out of range");
    }
    auto dec = store::Decimal::parse(std::string_view(buf, static_cast<std::size_t>(ptr - buf)));
    if (!dec) {
        throw Error(std::string("report field '") + field + "' is not a finite number");
    }
    return store::Literal::decimal(*dec);
}

const json& require(const json& object, const char* key) {
    if (!object.is_object() || !object.contains(key)) {
        throw Error(std::string("status report is missing '") + key + "'");
    }
    return object.at(key);
}

std::string require_string(const json& object, const char* key) {
    const auto& v = require(object, key);
    if (!v.is_string()) {
        throw Error(std::string("status report field '") + key + "' must be a string");
    }
    return v.get<std::string>();
}

ClaimStatus claim_from(const std::string& name) {
    for (auto s : {ClaimStatus::Supported, ClaimStatus::Defeated, ClaimStatus::Inconclusive,
                   ClaimStatus::Undeveloped}) {
        if (to_string(s) == name) {
            return s;
        }
    }
    throw Error("unknown claim status: " + name);
}

SolutionState solution_from(const std::string& name) {
    for (auto s : {SolutionState::Satisfied, SolutionState::Violated, SolutionState::Unknown}) {
        if (to_string(s) == name) {
            return s;
        }
    }
    throw Error("unknown solution status: " + name);
}

CounterclaimState counterclaim_from(const std::string& name) {
    if (name == "Active") {
        return CounterclaimState::Active;
    }
    if (name == "Mitigated") {
        return CounterclaimState::Mitigated;
    }
    throw Error("unknown counterclaim state: " + name);
}

}  // namespace

json report_to_json(const StatusReport& report) {
    json claims = json::object();
    for (const auto& [id, c] : report.claims) {
        claims[id] = to_string(c);
    }
    json solutions = json::object();
    for (const auto& [id, s] : report.solutions) {
        solutions[id] = {
            {"status", to_string(s.state)},
            {"query", s.query},
            {"observed", literal_number(s.observed)},
            {"cmp", s.comparator ? json(store::comparator_symbol(*s.comparator)) : json(nullptr)},
            {"threshold", literal_number(s.threshold)},
        };
    }
    json counterclaims = json::object();
    for (const auto& [id, c] : report.counterclaims) {
        counterclaims[id] = to_string(c);
    }
    return {
        {"case", report.case_title},
        {"evaluated_at", report.evaluated_at},
        {"root", to_string(report.root)},
        {"claims", claims},
        {"solutions", solutions},
        {"counterclaims", counterclaims},
    };
}

StatusReport report_from_json(const json& j) {
    if (!j.is_object()) {
        throw Error("status report must be a JSON object");
    }
    StatusReport report;
    report.case_title = require_string(j, "case");
    report.evaluated_at = require_string(j, "evaluated_at");
    report.root = claim_from(require_string(j, "root"));
    for (const auto& [id, v] : require(j, "claims").items()) {
        if (!v.is_string()) {
            throw Error("claim status for '" + id + "' must be a string");
        }
        report.claims[id] = claim_from(v.get<std::string>());
    }
    for (const auto& [id, v] : require(j, "solutions").items()) {
        SolutionStatus s;
        s.state = solution_from(require_string(v, "status"));
        s.query = require_string(v, "query");
        s.observed = number_literal(require(v, "observed"), "observed");
        const auto& cmp = require(v, "cmp");
        if (!cmp.is_null()) {
            if (!cmp.is_string()) {
                throw Error("solution '" + id + "': 'cmp' must be a string");
            }
            s.comparator = store::comparator_from_symbol(cmp.get<std::string>());
            if (!s.comparator) {
                throw Error("solution '" + id + "': unknown comparator " + cmp.get<std::string>());
            }
        }
        s.threshold = number_literal(require(v, "threshold"), "threshold");
        report.solutions[id] = std::move(s);
    }
    for (const auto& [id, v] : require(j, "counterclaims").items()) {
        if (!v.is_string()) {
            throw Error("counterclaim state for '" + id + "' must be a string");
        }
        report.counterclaims[id] = counterclaim_from(v.get<std::string>());
    }
    return report;
}

std::string dump_report(const StatusReport& report) {
    return report_to_json(report).dump(2) + "\n";
}

json changes_to_json(const ChangeSet& changes) {
    json out = json::array();
    for (const auto& c : changes) {
        out.push_back({{"id", c.id}, {"old", c.old_status}, {"new", c.new_status}});
    }
    return out;
}

}  // namespace argus::verdict
