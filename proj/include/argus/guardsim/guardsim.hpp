#pragma once

#include "argus/common.hpp"
#include "argus/evidence/evidence.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace argus::guardsim {

/// Character-level n-gram counts over Unicode code points.
class NgramModel {
public:
    /// Pads contexts at the start of text; never part of the vocabulary.
    static constexpr char32_t kBoundary = 0x110000;
    /// Stands in for every character not seen in training.
    static constexpr char32_t kOov = 0x110001;

    explicit NgramModel(std::size_t n = 1);

    std::size_t order() const noexcept { return n_; }
    const std::set<char32_t>& vocabulary() const noexcept { return vocabulary_; }

    std::size_t count(const std::u32string& context, char32_t c) const;
    std::size_t context_total(const std::u32string& context) const;

    /// Maps out-of-vocabulary characters to kOov.
    char32_t symbol(char32_t c) const;

private:
    friend NgramModel train_ngram(std::string_view corpus, std::size_t n);

    std::size_t n_;
    std::map<std::pair<std::u32string, char32_t>, std::size_t> counts_;
    std::map<std::u32string, std::size_t> context_totals_;
    std::set<char32_t> vocabulary_;
};

/// The corpus is one sequence, padded with n-1 boundary symbols at its start.
/// Throws argus::Error for n == 0.
NgramModel train_ngram(std::string_view corpus, std::size_t n);

/// Add-1 smoothed perplexity of `text` (UTF-8). Throws argus::Error on empty text.
double perplexity(const NgramModel& model, std::string_view text);

using CodeRange = std::pair<char32_t, char32_t>;  // inclusive
using ScriptTable = std::map<std::string, std::vector<CodeRange>>;

/// Han, Hiragana, Katakana, Hangul, Cyrillic, Greek, Arabic, Hebrew, Thai, Latin.
const ScriptTable& builtin_scripts();

struct PerplexityConfig {
    bool enabled = false;
    std::size_t n = 3;
    double threshold = 100.0;
    std::string training_corpus;  // path, resolved against the config file's directory
};

struct ScriptConfig {
    bool enabled = false;
    std::vector<std::string> blocked_scripts;
    std::size_t max_blocked_chars = 0;
    ScriptTable table = builtin_scripts();
};

enum class Category { Injection, UnsanitizedInput };

std::string_view category_name(Category category);

struct OutputRule {
    std::string rule_id;
    Category category;
    std::string pattern;
    std::string unless;  // empty: no exception
    std::string message;
};

struct FilterConfig {
    PerplexityConfig perplexity;
    ScriptConfig script;
    std::vector<OutputRule> output_rules;
};

/// Validates names, thresholds and regexes. Throws argus::Error.
FilterConfig config_from_json(const nlohmann::json& json, const std::string& base_dir = ".");
FilterConfig load_config(const std::string& path);

struct ScriptDecision {
    bool blocked = false;
    std::size_t count = 0;
    std::string script;  // first blocked script (config order) that matched, if any
};

/// Throws argus::Error for a script name missing from the table.
ScriptDecision script_filter(std::string_view text, const ScriptConfig& config);

struct Finding {
    std::string rule_id;
    Category category;
    std::string message;
    std::size_t offset = 0;  // byte offset of the first match

    bool operator==(const Finding&) const = default;
};

/// Compiled rule set; findings follow rule order.
class OutputFilter {
public:
    explicit OutputFilter(std::vector<OutputRule> rules);
    std::vector<Finding> scan(std::string_view code) const;

private:
    struct Compiled {
        OutputRule rule;
        std::regex pattern;
        std::optional<std::regex> unless;
    };
    std::vector<Compiled> rules_;
};

std::vector<Finding> output_code_filter(std::string_view code, const std::vector<OutputRule>& rules);

struct CorpusRecord {
    std::string record_id;
    std::string prompt;
    bool is_adversarial = false;
    std::string attack_type;
    std::string model_id;
    std::string constraint_id;
    bool baseline_success = false;
    std::optional<std::string> generated_output;
};

/// JSON-lines; throws argus::Error naming the line on any bad record or a
/// repeated record_id.
std::vector<CorpusRecord> parse_corpus(std::string_view text);

enum class InputStage { Perplexity, Script };

std::string_view stage_name(InputStage stage);

struct PipelineOutcome {
    std::string record_id;
    std::optional<InputStage> input_blocked_by;
    std::optional<double> perplexity;
    std::vector<std::string> output_findings;  // rule ids
    bool delivered = false;
    bool attack_succeeded = false;
    std::vector<std::string> warnings;
};

/// Stages: perplexity, script, mock model, output rules. Empty prompts skip
/// the perplexity stage.
PipelineOutcome run_pipeline(const CorpusRecord& record, const FilterConfig& config, const NgramModel& model,
                             const OutputFilter& output_filter);
PipelineOutcome run_pipeline(const CorpusRecord& record, const FilterConfig& config, const NgramModel& model);

/// Adversarial records grouped by (attack_type, model_id, constraint_id),
/// sorted by key; attack ids are `type__model__constraint`.
std::vector<evidence::AttackEvidenceRecord> summarize(const std::vector<CorpusRecord>& records,
                                                      const std::vector<PipelineOutcome>& outcomes,
                                                      const std::string& observed_at,
                                                      const std::string& source = "guardsim");

}  // namespace argus::guardsim
