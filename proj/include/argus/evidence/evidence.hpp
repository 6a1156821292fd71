#pragma once

#include "argus/common.hpp"
#include "argus/store/graph.hpp"

#include <json.hpp>

#include <chrono>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace argus::evidence {

/// ISO-8601 date-time with a mandatory offset (`Z` or `+hh:mm`), e.g.
/// `2024-01-01T00:00:00Z` or `2024-01-01T08:30:00.250+08:00`.
class Timestamp {
public:
    /// Throws argus::Error for anything else.
    static Timestamp parse(std::string_view text);
    static Timestamp now();

    std::chrono::sys_seconds seconds() const noexcept { return seconds_; }
    /// UTC, `YYYY-MM-DDTHH:MM:SS[.fff]Z`.
    std::string to_string() const;

    auto operator<=>(const Timestamp&) const = default;

private:
    std::chrono::sys_seconds seconds_{};
    long nanos_ = 0;
};

struct AttackEvidenceRecord {
    std::string attack_id;
    std::string attack_type;
    std::string model_id;
    std::string constraint_id;
    long long successes = 0;
    long long trials = 1;
    std::string observed_at;
    std::string source;

    /// successes / trials as a canonical decimal, half-even to 6 digits when
    /// the quotient does not terminate.
    store::Decimal asr() const;

    bool operator==(const AttackEvidenceRecord&) const = default;
};

struct ParsedRecords {
    std::vector<AttackEvidenceRecord> records;
    std::vector<Diagnostic> diagnostics;  // one per rejected line, code "evidence.record"
};

/// JSON-lines; blank lines are skipped. A journal's `applied` key is ignored
/// so journals can be read back as record files.
ParsedRecords parse_records(std::string_view text);

nlohmann::json record_to_json(const AttackEvidenceRecord& record);

/// `extraction` -> `ExtractionAttack`, `unsanitized-input` -> `UnsanitizedInputAttack`.
std::string attack_class_name(std::string_view attack_type);

/// Triples describing the attack, all with subject `<ns><attack_id>`. Throws
/// argus::Error when an identifier cannot be used as an IRI segment.
std::vector<store::Triple> to_triples(const AttackEvidenceRecord& record, std::string_view ns = "urn:argus:");

/// Destination for journal lines. append() either stores every line or throws.
class Journal {
public:
    virtual ~Journal() = default;
    virtual void append(const std::vector<std::string>& lines) = 0;
};

class FileJournal : public Journal {
public:
    explicit FileJournal(std::string path) : path_(std::move(path)) {}
    void append(const std::vector<std::string>& lines) override;

private:
    std::string path_;
};

class MemoryJournal : public Journal {
public:
    void append(const std::vector<std::string>& lines) override {
        lines_.insert(lines_.end(), lines.begin(), lines.end());
    }
    const std::vector<std::string>& lines() const noexcept { return lines_; }
    std::string text() const;

private:
    std::vector<std::string> lines_;
};

struct IngestResult {
    store::Graph graph;
    std::vector<bool> applied;  // parallel to the input records
};

/// Latest-wins update: a record replaces its attack's triples only when its
/// observedAt is strictly newer than the stored one (or none is stored).
/// Every record is journaled, in input order, with `"applied"`. The graph is
/// built completely before the journal is written; if the journal throws,
/// nothing is returned and `graph` is untouched.
IngestResult ingest(const store::Graph& graph, const std::vector<AttackEvidenceRecord>& records, Journal& journal,
                    std::string_view ns = "urn:argus:");

}  // namespace argus::evidence
