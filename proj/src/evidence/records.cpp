#include "argus/evidence/evidence.hpp"

#include "argus/store/syntax.hpp"

#include <set>

namespace argus::evidence {

using nlohmann::json;

store::Decimal AttackEvidenceRecord::asr() const {
    return store::Decimal::divide(store::Decimal::from_integer(successes), store::Decimal::BigInt(trials), 6);
}

namespace {

const std::set<std::string, std::less<>> kKeys{"attack_id", "attack_type", "model_id", "constraint_id",
                                               "successes", "trials",      "observed_at", "source"};

std::string string_field(const json& obj, const char* key) {
    if (!obj.contains(key)) {
        throw Error(std::string("missing key '") + key + "'");
    }
    const auto& v = obj.at(key);
    if (!v.is_string()) {
        throw Error(std::string("'") + key + "' must be a string");
    }
    return v.get<std::string>();
}

long long count_field(const json& obj, const char* key) {
    if (!obj.contains(key)) {
        throw Error(std::string("missing key '") + key + "'");
    }
    const auto& v = obj.at(key);
    if (!v.is_number_integer() || (v.is_number_unsigned() && v.get<unsigned long long>() > 1ULL << 62)) {
        throw Error(std::string("'") + key + "' must be an integer");
    }
    long long n = v.get<long long>();
    if (n < 0) {
        throw Error(std::string("'") + key + "' must not be negative");
    }
    return n;
}

AttackEvidenceRecord record_from_json(const json& obj) {
    if (!obj.is_object()) {
        throw Error("record must be a JSON object");
    }
    for (const auto& [key, value] : obj.items()) {
        if (kKeys.count(key) == 0 && key != "applied") {
            throw Error("unknown key '" + key + "'");
        }
    }
    AttackEvidenceRecord r;
    r.attack_id = string_field(obj, "attack_id");
    r.attack_type = string_field(obj, "attack_type");
    r.model_id = string_field(obj, "model_id");
    r.constraint_id = string_field(obj, "constraint_id");
    r.successes = count_field(obj, "successes");
    r.trials = count_field(obj, "trials");
    r.observed_at = string_field(obj, "observed_at");
    r.source = string_field(obj, "source");
    if (r.trials == 0) {
        throw Error("trials must be at least 1");
    }
    if (r.successes > r.trials) {
        throw Error("successes (" + std::to_string(r.successes) + ") exceed trials (" + std::to_string(r.trials) +
                    ")");
    }
    Timestamp::parse(r.observed_at);
    return r;
}

}  // namespace

ParsedRecords parse_records(std::string_view text) {
    ParsedRecords out;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        start = end + 1;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (line.find_first_not_of(" \t") == std::string_view::npos) {
            if (end == text.size()) {
                break;
            }
            continue;
        }
        try {
            out.records.push_back(record_from_json(json::parse(line)));
        } catch (const json::exception& e) {
            out.diagnostics.push_back({"evidence.record", "line " + std::to_string(line_no) + ": malformed JSON"});
        } catch (const Error& e) {
            out.diagnostics.push_back({"evidence.record", "line " + std::to_string(line_no) + ": " + e.what()});
        }
        if (end == text.size()) {
            break;
        }
    }
    return out;
}

json record_to_json(const AttackEvidenceRecord& r) {
    return {
        {"attack_id", r.attack_id},     {"attack_type", r.attack_type}, {"model_id", r.model_id},
        {"constraint_id", r.constraint_id}, {"successes", r.successes}, {"trials", r.trials},
        {"observed_at", r.observed_at}, {"source", r.source},
    };
}

std::string attack_class_name(std::string_view attack_type) {
    std::string out;
    bool upper = true;
    for (char c : attack_type) {
        if (c == '-' || c == '_') {
            upper = true;
            continue;
        }
        if (upper && c >= 'a' && c <= 'z') {
            c = static_cast<char>(c - 'a' + 'A');
        }
        out.push_back(c);
        upper = false;
    }
    return out + "Attack";
}

namespace {

store::Iri mint(std::string_view ns, std::string_view id, const char* what) {
    if (id.empty() || !store::syntax::is_valid_local_name(id)) {
        throw Error(std::string("invalid ") + what + " '" + std::string(id) + "': not usable as an IRI segment");
    }
    return store::Iri(std::string(ns) + std::string(id));
}

}  // namespace

std::vector<store::Triple> to_triples(const AttackEvidenceRecord& r, std::string_view ns) {
    using store::Literal;
    store::Iri attack = mint(ns, r.attack_id, "attack_id");
    mint(ns, r.attack_type, "attack_type");
    auto p = [&](const char* local) { return store::Iri(std::string(ns) + local); };
    return {
        {attack, store::rdf_type(), p("Attack")},
        {attack, store::rdf_type(), mint(ns, attack_class_name(r.attack_type), "attack_type")},
        {attack, p("attackType"), mint(ns, r.attack_type, "attack_type")},
        {attack, p("targetsModel"), mint(ns, r.model_id, "model_id")},
        {attack, p("underConstraint"), mint(ns, r.constraint_id, "constraint_id")},
        {attack, p("attackSuccessRate"), Literal::decimal(r.asr())},
        {attack, p("successes"), Literal::integer(r.successes)},
        {attack, p("trials"), Literal::integer(r.trials)},
        {attack, p("observedAt"), Literal::string(r.observed_at)},
    };
}

}  // namespace argus::evidence
