#include "argus/guardsim/guardsim.hpp"

#include <filesystem>

namespace argus::guardsim {

using nlohmann::json;

const ScriptTable& builtin_scripts() {
    static const ScriptTable table{
        {"Arabic", {{0x0600, 0x06FF}, {0x0750, 0x077F}}},
        {"Cyrillic", {{0x0400, 0x04FF}, {0x0500, 0x052F}}},
        {"Greek", {{0x0370, 0x03FF}}},
        {"Han", {{0x4E00, 0x9FFF}}},
        {"Hangul", {{0xAC00, 0xD7AF}, {0x1100, 0x11FF}}},
        {"Hebrew", {{0x0590, 0x05FF}}},
        {"Hiragana", {{0x3040, 0x309F}}},
        {"Katakana", {{0x30A0, 0x30FF}}},
        {"Latin", {{0x0041, 0x005A}, {0x0061, 0x007A}, {0x00C0, 0x024F}}},
        {"Thai", {{0x0E00, 0x0E7F}}},
    };
    return table;
}

std::string_view category_name(Category category) {
    return category == Category::Injection ? "injection" : "unsanitized-input";
}

ScriptDecision script_filter(std::string_view text, const ScriptConfig& config) {
    std::vector<std::pair<std::string, const std::vector<CodeRange>*>> blocked;
    for (const auto& name : config.blocked_scripts) {
        auto it = config.table.find(name);
        if (it == config.table.end()) {
            throw Error("unknown script: " + name);
        }
        blocked.emplace_back(name, &it->second);
    }
    ScriptDecision decision;
    std::size_t first = blocked.size();
    for (char32_t c : decode_utf8(text)) {
        for (std::size_t i = 0; i < blocked.size(); ++i) {
            bool hit = false;
            for (const auto& [lo, hi] : *blocked[i].second) {
                hit = hit || (c >= lo && c <= hi);
            }
            if (hit) {
                ++decision.count;
                first = std::min(first, i);
                break;
            }
        }
    }
    if (first < blocked.size()) {
        decision.script = blocked[first].first;
    }
    decision.blocked = decision.count > config.max_blocked_chars;
    return decision;
}

OutputFilter::OutputFilter(std::vector<OutputRule> rules) {
    for (auto& rule : rules) {
        try {
            Compiled c{rule, std::regex(rule.pattern), std::nullopt};
            if (!rule.unless.empty()) {
                c.unless = std::regex(rule.unless);
            }
            rules_.push_back(std::move(c));
        } catch (const std::regex_error& e) {
            throw Error("output rule '" + rule.rule_id + "': invalid regular expression: " + e.what());
        }
    }
}

std::vector<Finding> OutputFilter::scan(std::string_view code) const {
    std::vector<Finding> out;
    std::string text(code);
    for (const auto& c : rules_) {
        std::smatch m;
        if (!std::regex_search(text, m, c.pattern)) {
            continue;
        }
        if (c.unless && std::regex_search(text, *c.unless)) {
            continue;
        }
        out.push_back({c.rule.rule_id, c.rule.category, c.rule.message, static_cast<std::size_t>(m.position(0))});
    }
    return out;
}

std::vector<Finding> output_code_filter(std::string_view code, const std::vector<OutputRule>& rules) {
    return OutputFilter(rules).scan(code);
}

namespace {

const json& member(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw Error(where + ": missing '" + key + "'");
    }
    return obj.at(key);
}

template <typename T>
T typed(const json& obj, const char* key, const std::string& where) {
    const auto& v = member(obj, key, where);
    try {
        return v.get<T>();
    } catch (const json::exception&) {
        throw Error(where + ": '" + key + "' has the wrong type");
    }
}

char32_t code_point(const json& v, const std::string& where) {
    if (!v.is_string()) {
        throw Error(where + ": code points are hex strings");
    }
    auto s = v.get<std::string>();
    std::size_t used = 0;
    unsigned long cp = 0;
    try {
        cp = std::stoul(s, &used, 16);
    } catch (const std::exception&) {
        used = 0;
    }
    if (s.empty() || used != s.size() || cp > 0x10FFFF) {
        throw Error(where + ": invalid code point '" + s + "'");
    }
    return static_cast<char32_t>(cp);
}

}  // namespace

FilterConfig config_from_json(const json& j, const std::string& base_dir) {
    if (!j.is_object()) {
        throw Error("filter config must be a JSON object");
    }
    FilterConfig config;
    if (j.contains("perplexity")) {
        const auto& p = j.at("perplexity");
        const std::string where = "perplexity";
        config.perplexity.enabled = typed<bool>(p, "enabled", where);
        config.perplexity.n = typed<std::size_t>(p, "n", where);
        config.perplexity.threshold = typed<double>(p, "threshold", where);
        if (config.perplexity.n == 0) {
            throw Error("perplexity: n must be at least 1");
        }
        if (!(config.perplexity.threshold > 0)) {
            throw Error("perplexity: threshold must be positive");
        }
        if (p.contains("training_corpus")) {
            std::filesystem::path path = typed<std::string>(p, "training_corpus", where);
            if (path.is_relative()) {
                path = std::filesystem::path(base_dir) / path;
            }
            config.perplexity.training_corpus = path.lexically_normal().string();
        }
    }
    if (j.contains("script")) {
        const auto& s = j.at("script");
        const std::string where = "script";
        config.script.enabled = typed<bool>(s, "enabled", where);
        config.script.blocked_scripts = typed<std::vector<std::string>>(s, "blocked_scripts", where);
        config.script.max_blocked_chars = typed<std::size_t>(s, "max_blocked_chars", where);
        if (s.contains("ranges")) {
            for (const auto& entry : member(s, "ranges", where)) {
                auto name = typed<std::string>(entry, "name", "script range");
                std::vector<CodeRange> ranges;
                for (const auto& r : member(entry, "ranges", "script range " + name)) {
                    if (!r.is_array() || r.size() != 2) {
                        throw Error("script range " + name + ": each range is [lo, hi]");
                    }
                    char32_t lo = code_point(r[0], "script range " + name);
                    char32_t hi = code_point(r[1], "script range " + name);
                    if (lo > hi) {
                        throw Error("script range " + name + ": empty range");
                    }
                    ranges.emplace_back(lo, hi);
                }
                config.script.table[name] = std::move(ranges);
            }
        }
        for (const auto& name : config.script.blocked_scripts) {
            if (config.script.table.count(name) == 0) {
                throw Error("script: unknown script '" + name + "'");
            }
        }
    }
    if (j.contains("output_rules")) {
        for (const auto& r : j.at("output_rules")) {
            OutputRule rule;
            rule.rule_id = typed<std::string>(r, "rule_id", "output rule");
            const std::string where = "output rule '" + rule.rule_id + "'";
            auto category = typed<std::string>(r, "category", where);
            if (category == "injection") {
                rule.category = Category::Injection;
            } else if (category == "unsanitized-input") {
                rule.category = Category::UnsanitizedInput;
            } else {
                throw Error(where + ": unknown category '" + category + "'");
            }
            rule.pattern = typed<std::string>(r, "pattern", where);
            if (r.contains("unless")) {
                rule.unless = typed<std::string>(r, "unless", where);
            }
            rule.message = typed<std::string>(r, "message", where);
            config.output_rules.push_back(std::move(rule));
        }
        OutputFilter check(config.output_rules);
    }
    return config;
}

FilterConfig load_config(const std::string& path) {
    json j;
    try {
        j = json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw Error(path + ": malformed JSON: " + e.what());
    }
    auto dir = std::filesystem::path(path).parent_path();
    return config_from_json(j, dir.empty() ? "." : dir.string());
}

}  // namespace argus::guardsim
