#include <georag/eval/ragas.hpp>

#include <algorithm>
#include <set>

#include <georag/text.hpp>

namespace georag::eval {

namespace {

size_t intersection_size(std::span<const std::string> a, std::span<const std::string> b) {
    const std::set<std::string> sa(a.begin(), a.end());
    const std::set<std::string> sb(b.begin(), b.end());
    size_t n = 0;
    for (const auto& x : sa) n += sb.count(x);
    return n;
}

} // namespace

std::optional<double> context_precision(std::span<const std::string> retrieved_ids,
                                        std::span<const std::string> relevant_ids) {
    if (retrieved_ids.empty()) return std::nullopt;
    const std::set<std::string> retrieved(retrieved_ids.begin(), retrieved_ids.end());
    return static_cast<double>(intersection_size(retrieved_ids, relevant_ids)) /
           static_cast<double>(retrieved.size());
}

std::optional<double> context_recall(std::span<const std::string> retrieved_ids,
                                     std::span<const std::string> relevant_ids) {
    if (relevant_ids.empty()) return std::nullopt;
    const std::set<std::string> relevant(relevant_ids.begin(), relevant_ids.end());
    return static_cast<double>(intersection_size(retrieved_ids, relevant_ids)) /
           static_cast<double>(relevant.size());
}

EmbeddingJudge::EmbeddingJudge(embed::EmbeddingProvider& provider, double tau)
    : provider_(provider), tau_(tau) {}

bool EmbeddingJudge::supported(const std::string& claim,
                               std::span<const std::string> retrieved_texts) {
    if (claim.empty()) return false;
    const std::string claim_input[] = {claim};
    const auto claim_vec = provider_.embed_batch(claim_input)[0];
    for (const auto& passage : retrieved_texts) {
        for (const auto& sentence : text::sentence_split(passage)) {
            const std::string sentence_input[] = {sentence};
            const auto sentence_vec = provider_.embed_batch(sentence_input)[0];
            if (embed::cosine(claim_vec, sentence_vec) >= tau_) return true;
        }
    }
    return false;
}

LlmJudge::LlmJudge(answer::ChatClient& client, answer::GenerationConfig cfg)
    : client_(client), cfg_(std::move(cfg)) {}

bool LlmJudge::supported(const std::string& claim,
                         std::span<const std::string> retrieved_texts) {
    std::string evidence;
    for (const auto& t : retrieved_texts) {
        evidence += t;
        evidence += "\n";
    }
    answer::PromptBundle bundle;
    bundle.system_instruction =
        "You verify factual support. Answer with exactly one word: yes or no.";
    bundle.question = claim;
    bundle.user_message = "Evidence:\n" + evidence + "\nClaim: " + claim +
                          "\nIs the claim directly supported by the evidence? Answer yes or no.";
    bundle.rendered = bundle.system_instruction + "\n\n" + bundle.user_message;
    const auto reply = client_.generate(bundle, cfg_);
    const auto lower = text::to_lower(reply.text);
    return lower.find("yes") != std::string::npos && lower.find("no") != 0;
}

std::optional<double> faithfulness(const std::string& answer_text,
                                   std::span<const std::string> retrieved_texts,
                                   FaithfulnessJudge& judge) {
    const auto claims = text::sentence_split(answer_text);
    if (claims.empty()) return std::nullopt;
    size_t supported = 0;
    for (const auto& claim : claims) {
        if (judge.supported(claim, retrieved_texts)) ++supported;
    }
    return static_cast<double>(supported) / static_cast<double>(claims.size());
}

std::optional<double> ragas_score(std::optional<double> p_c, std::optional<double> r_c,
                                  std::optional<double> f, std::optional<double> r_a) {
    if (!p_c || !r_c || !f || !r_a) return std::nullopt;
    return (*p_c + *r_c + *f + *r_a) / 4.0;
}

} // namespace georag::eval
