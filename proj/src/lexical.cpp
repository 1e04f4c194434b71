#include <georag/eval/lexical.hpp>

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include <georag/corpus/tokenizer.hpp>
#include <georag/eval/normalize.hpp>

namespace georag::eval {

double exact_match(std::string_view pred, std::string_view ref) {
    return normalize_text(pred) == normalize_text(ref) ? 1.0 : 0.0;
}

double token_f1(std::string_view pred, std::string_view ref) {
    const auto p = squad_tokens(pred);
    const auto r = squad_tokens(ref);
    if (p.empty() && r.empty()) return 1.0;
    if (p.empty() || r.empty()) return 0.0;

    std::map<std::string, size_t> ref_counts;
    for (const auto& t : r) ++ref_counts[t];
    size_t overlap = 0;
    for (const auto& t : p) {
        auto it = ref_counts.find(t);
        if (it != ref_counts.end() && it->second > 0) {
            --it->second;
            ++overlap;
        }
    }
    if (overlap == 0) return 0.0;
    const double precision = static_cast<double>(overlap) / p.size();
    const double recall = static_cast<double>(overlap) / r.size();
    return 2.0 * precision * recall / (precision + recall);
}

namespace {

using NgramCounts = std::map<std::vector<std::string>, size_t>;

NgramCounts ngrams(const std::vector<std::string>& toks, size_t n) {
    NgramCounts counts;
    if (toks.size() < n) return counts;
    for (size_t i = 0; i + n <= toks.size(); ++i) {
        ++counts[std::vector<std::string>(toks.begin() + i, toks.begin() + i + n)];
    }
    return counts;
}

} // namespace

double bleu4(std::string_view pred, std::string_view ref) {
    const auto c_toks = corpus::tokenize(pred);
    const auto r_toks = corpus::tokenize(ref);
    if (c_toks.empty() && r_toks.empty()) return 1.0;
    if (c_toks.empty() || r_toks.empty()) return 0.0;

    constexpr double eps = 1e-9;
    double log_sum = 0.0;
    for (size_t n = 1; n <= 4; ++n) {
        const size_t count_n = c_toks.size() >= n ? c_toks.size() - n + 1 : 0;
        double p_n;
        if (count_n == 0) {
            p_n = eps;
        } else {
            const auto cand = ngrams(c_toks, n);
            const auto refs = ngrams(r_toks, n);
            size_t clipped = 0;
            for (const auto& [gram, count] : cand) {
                auto it = refs.find(gram);
                if (it != refs.end()) clipped += std::min(count, it->second);
            }
            p_n = (static_cast<double>(clipped) + eps) / (static_cast<double>(count_n) + eps);
        }
        log_sum += std::log(p_n);
    }
    const double geo_mean = std::exp(log_sum / 4.0);

    const double c = static_cast<double>(c_toks.size());
    const double r = static_cast<double>(r_toks.size());
    const double bp = c >= r ? 1.0 : std::exp(1.0 - r / c);
    return bp * geo_mean;
}

double rouge_l(std::string_view pred, std::string_view ref) {
    const auto p = corpus::tokenize(pred);
    const auto r = corpus::tokenize(ref);
    if (p.empty() && r.empty()) return 1.0;
    if (p.empty() || r.empty()) return 0.0;

    // LCS over two token sequences, rolling rows
    std::vector<size_t> prev(r.size() + 1, 0), cur(r.size() + 1, 0);
    for (size_t i = 1; i <= p.size(); ++i) {
        for (size_t j = 1; j <= r.size(); ++j) {
            cur[j] = p[i - 1] == r[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
        }
        std::swap(prev, cur);
    }
    const size_t lcs = prev[r.size()];
    if (lcs == 0) return 0.0;
    const double precision = static_cast<double>(lcs) / p.size();
    const double recall = static_cast<double>(lcs) / r.size();
    return 2.0 * precision * recall / (precision + recall);
}

} // namespace georag::eval
