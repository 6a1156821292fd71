#include "argus/guardsim/guardsim.hpp"

#include <cmath>

namespace argus::guardsim {

NgramModel::NgramModel(std::size_t n) : n_(n) {
    if (n == 0) {
        throw Error("n-gram order must be at least 1");
    }
    vocabulary_.insert(kOov);
}

std::size_t NgramModel::count(const std::u32string& context, char32_t c) const {
    auto it = counts_.find({context, c});
    return it == counts_.end() ? 0 : it->second;
}

std::size_t NgramModel::context_total(const std::u32string& context) const {
    auto it = context_totals_.find(context);
    return it == context_totals_.end() ? 0 : it->second;
}

char32_t NgramModel::symbol(char32_t c) const { return vocabulary_.count(c) != 0 ? c : kOov; }

NgramModel train_ngram(std::string_view corpus, std::size_t n) {
    NgramModel model(n);
    std::u32string text = decode_utf8(corpus);
    for (char32_t c : text) {
        model.vocabulary_.insert(c);
    }
    std::u32string padded(n - 1, NgramModel::kBoundary);
    padded += text;
    for (std::size_t i = n - 1; i < padded.size(); ++i) {
        std::u32string context = padded.substr(i - (n - 1), n - 1);
        ++model.counts_[{context, padded[i]}];
        ++model.context_totals_[context];
    }
    return model;
}

double perplexity(const NgramModel& model, std::string_view text) {
    std::u32string decoded = decode_utf8(text);
    if (decoded.empty()) {
        throw Error("perplexity of empty text is undefined");
    }
    std::size_t n = model.order();
    std::u32string padded(n - 1, NgramModel::kBoundary);
    for (char32_t c : decoded) {
        padded.push_back(model.symbol(c));
    }
    double vocab = static_cast<double>(model.vocabulary().size());
    double log_sum = 0.0;
    for (std::size_t i = n - 1; i < padded.size(); ++i) {
        std::u32string context = padded.substr(i - (n - 1), n - 1);
        double p = (static_cast<double>(model.count(context, padded[i])) + 1.0) /
                   (static_cast<double>(model.context_total(context)) + vocab);
        log_sum += std::log(p);
    }
    return std::exp(-log_sum / static_cast<double>(decoded.size()));
}

}  // namespace argus::guardsim
