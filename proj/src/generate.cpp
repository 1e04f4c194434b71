#include <georag/answer/generate.hpp>

#include <algorithm>
#include <set>

#include <json.hpp>

#include <georag/errors.hpp>
#include <georag/text.hpp>

#include "http_util.hpp"

namespace georag::answer {

std::set<int> parse_citations(const std::string& answer_text) {
    std::set<int> labels;
    for (size_t i = 0; i < answer_text.size(); ++i) {
        if (answer_text[i] != '[') continue;
        size_t j = i + 1;
        while (j < answer_text.size() && std::isdigit(static_cast<unsigned char>(answer_text[j]))) {
            ++j;
        }
        if (j > i + 1 && j < answer_text.size() && answer_text[j] == ']') {
            labels.insert(std::stoi(answer_text.substr(i + 1, j - i - 1)));
            i = j;
        }
    }
    return labels;
}

AnswerRecord OfflineStubClient::generate(const PromptBundle& bundle, const GenerationConfig&) {
    AnswerRecord record;
    record.prompt_chars = bundle.rendered.size();

    if (bundle.passages.empty()) {
        record.text = kNoEvidenceAnswer;
        record.completion_chars = record.text.size();
        return record;
    }

    const auto q_tokens_vec = text::simple_tokens(bundle.question);
    const std::set<std::string> question_tokens(q_tokens_vec.begin(), q_tokens_vec.end());

    std::string best_sentence;
    int best_label = 0;
    size_t best_overlap = 0;
    bool have_any = false;

    for (const auto& passage : bundle.passages) {
        for (const auto& sentence : text::sentence_split(passage.text)) {
            const auto s_tokens_vec = text::simple_tokens(sentence);
            const std::set<std::string> s_tokens(s_tokens_vec.begin(), s_tokens_vec.end());
            size_t overlap = 0;
            for (const auto& t : question_tokens) overlap += s_tokens.count(t);
            // strict > keeps the earliest passage/sentence on ties
            if (!have_any || overlap > best_overlap) {
                have_any = true;
                best_overlap = overlap;
                best_sentence = sentence;
                best_label = passage.label;
            }
        }
    }

    if (!have_any) {
        record.text = kNoEvidenceAnswer;
    } else {
        record.text = best_sentence;
        record.citations.insert(best_label);
    }
    record.completion_chars = record.text.size();
    return record;
}

RemoteChatClient::RemoteChatClient(RemoteChatConfig cfg) : cfg_(std::move(cfg)) {
    if (cfg_.base_url.empty()) throw Error("remote chat client requires base_url");
}

AnswerRecord RemoteChatClient::generate(const PromptBundle& bundle, const GenerationConfig& cfg) {
    nlohmann::json body;
    body["model"] = cfg.model;
    body["temperature"] = cfg.temperature;
    body["max_tokens"] = cfg.max_output_tokens;
    body["messages"] = nlohmann::json::array({
        {{"role", "system"}, {"content", bundle.system_instruction}},
        {{"role", "user"}, {"content", bundle.user_message}},
    });

    auto res = http::post_with_retry(http::split_url(cfg_.base_url), "/chat/completions",
                                     http::auth_headers(cfg_.auth_env), body.dump(),
                                     cfg_.max_retries, cfg_.timeout_sec);
    if (!res) {
        throw TransportError("chat request failed: " + httplib::to_string(res.error()), 0, true);
    }
    if (res->status != 200) {
        throw TransportError("chat request returned HTTP " + std::to_string(res->status),
                             res->status, http::retryable_status(res->status));
    }

    nlohmann::json parsed;
    try {
        parsed = nlohmann::json::parse(res->body);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(std::string("chat response is not valid JSON: ") + e.what());
    }

    std::string content;
    try {
        content = parsed.at("choices").at(0).at("message").at("content").get<std::string>();
    } catch (const nlohmann::json::exception&) {
        throw Error("chat response missing choices[0].message.content");
    }
    if (content.empty()) {
        throw Error("chat endpoint returned an empty completion");
    }

    AnswerRecord record;
    record.text = content;
    record.citations = parse_citations(content);
    record.prompt_chars = bundle.rendered.size();
    record.completion_chars = content.size();
    return record;
}

} // namespace georag::answer
