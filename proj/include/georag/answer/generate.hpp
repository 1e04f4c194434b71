#pragma once

#include <set>
#include <string>

#include <georag/answer/prompt.hpp>

namespace georag::answer {

struct AnswerRecord {
    std::string text;
    std::set<int> citations;  // [n] labels grounding the answer
    size_t prompt_chars = 0;
    size_t completion_chars = 0;
};

/// Extracts [n] citation labels from model output.
std::set<int> parse_citations(const std::string& answer_text);

class ChatClient {
public:
    virtual ~ChatClient() = default;
    virtual AnswerRecord generate(const PromptBundle& bundle, const GenerationConfig& cfg) = 0;
};

/// Network-free generator used by tests and --offline runs. Deterministic
/// pure function of (question, passages): answers with the passage sentence
/// containing the most distinct question tokens, preferring higher-ranked
/// passages on ties, and cites the passage it came from. With no passages it
/// answers a fixed fallback line so ablation variants still produce text.
class OfflineStubClient final : public ChatClient {
public:
    AnswerRecord generate(const PromptBundle& bundle, const GenerationConfig& cfg) override;

    static constexpr const char* kNoEvidenceAnswer = "No supporting passages were retrieved.";
};

/// OpenAI-compatible chat client: POST <base_url>/chat/completions with the
/// system/user messages and the configured temperature. Bearer auth comes
/// from the environment variable named in auth_env. Citations are parsed from
/// the returned text; an empty completion is an explicit error.
struct RemoteChatConfig {
    std::string base_url;
    std::string auth_env;
    size_t max_retries = 2;
    int timeout_sec = 60;
};

class RemoteChatClient final : public ChatClient {
public:
    explicit RemoteChatClient(RemoteChatConfig cfg);
    AnswerRecord generate(const PromptBundle& bundle, const GenerationConfig& cfg) override;

private:
    RemoteChatConfig cfg_;
};

} // namespace georag::answer
