#include "argus/evidence/evidence.hpp"

#include <fstream>
#include <optional>
#include <set>

namespace argus::evidence {

void FileJournal::append(const std::vector<std::string>& lines) {
    std::string block;
    for (const auto& line : lines) {
        block += line;
        block += '\n';
    }
    std::ofstream out(path_, std::ios::binary | std::ios::app);
    if (!out) {
        throw Error("cannot open journal: " + path_);
    }
    out.write(block.data(), static_cast<std::streamsize>(block.size()));
    out.flush();
    if (!out) {
        throw Error("journal write failed: " + path_);
    }
}

std::string MemoryJournal::text() const {
    std::string out;
    for (const auto& line : lines_) {
        out += line;
        out += '\n';
    }
    return out;
}

namespace {

// Predicates owned by ingest; a newer record replaces all of them.
std::set<std::string> managed_predicates(std::string_view ns) {
    std::set<std::string> out{std::string(store::vocab::kRdfType)};
    for (const char* local : {"attackType", "targetsModel", "underConstraint", "attackSuccessRate", "successes",
                              "trials", "observedAt"}) {
        out.insert(std::string(ns) + local);
    }
    return out;
}

std::optional<Timestamp> stored_time(const store::Graph& graph, const store::Iri& attack, std::string_view ns) {
    std::string observed = std::string(ns) + "observedAt";
    for (const auto& t : graph.about(attack)) {
        if (t.predicate.str() != observed) {
            continue;
        }
        const auto* lit = std::get_if<store::Literal>(&t.object);
        if (lit == nullptr) {
            throw Error("stored observedAt of " + attack.str() + " is not a literal");
        }
        return Timestamp::parse(lit->lexical());
    }
    return std::nullopt;
}

}  // namespace

IngestResult ingest(const store::Graph& graph, const std::vector<AttackEvidenceRecord>& records, Journal& journal,
                    std::string_view ns) {
    IngestResult result{graph, {}};
    if (result.graph.prefixes().empty()) {
        result.graph.set_prefix("", std::string(ns));
    }
    auto managed = managed_predicates(ns);
    std::vector<std::string> lines;
    for (const auto& record : records) {
        auto triples = to_triples(record, ns);
        const store::Iri& attack = triples.front().subject;
        Timestamp incoming = Timestamp::parse(record.observed_at);
        auto previous = stored_time(result.graph, attack, ns);
        bool apply = !previous || incoming > *previous;
        if (apply) {
            for (const auto& t : result.graph.about(attack)) {
                if (managed.count(t.predicate.str()) != 0) {
                    result.graph.erase(t);
                }
            }
            for (auto& t : triples) {
                result.graph.insert(std::move(t));
            }
        }
        result.applied.push_back(apply);
        auto line = record_to_json(record);
        line["applied"] = apply;
        lines.push_back(line.dump());
    }
    journal.append(lines);
    return result;
}

}  // namespace argus::evidence
