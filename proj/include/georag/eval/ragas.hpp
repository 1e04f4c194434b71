#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <georag/answer/generate.hpp>
#include <georag/embed/provider.hpp>

namespace georag::eval {

/// |relevant ∩ retrieved| / |retrieved|. Undefined (nullopt) when nothing was
/// retrieved; undefined values are excluded from aggregate means.
std::optional<double> context_precision(std::span<const std::string> retrieved_ids,
                                        std::span<const std::string> relevant_ids);

/// |relevant ∩ retrieved| / |relevant|. Undefined when there is no gold set.
std::optional<double> context_recall(std::span<const std::string> retrieved_ids,
                                     std::span<const std::string> relevant_ids);

/// Decides whether one answer claim is supported by the retrieved evidence.
class FaithfulnessJudge {
public:
    virtual ~FaithfulnessJudge() = default;
    virtual bool supported(const std::string& claim,
                           std::span<const std::string> retrieved_texts) = 0;
};

/// Default judge: a claim is supported when its embedding reaches cosine
/// >= tau against the best sentence of any retrieved passage.
class EmbeddingJudge final : public FaithfulnessJudge {
public:
    explicit EmbeddingJudge(embed::EmbeddingProvider& provider, double tau = 0.7);
    bool supported(const std::string& claim,
                   std::span<const std::string> retrieved_texts) override;

private:
    embed::EmbeddingProvider& provider_;
    double tau_;
};

/// Optional judge that asks a chat endpoint for a yes/no support verdict.
class LlmJudge final : public FaithfulnessJudge {
public:
    LlmJudge(answer::ChatClient& client, answer::GenerationConfig cfg);
    bool supported(const std::string& claim,
                   std::span<const std::string> retrieved_texts) override;

private:
    answer::ChatClient& client_;
    answer::GenerationConfig cfg_;
};

/// Fraction of answer sentences the judge accepts as supported. Undefined
/// when the answer segments into zero claims.
std::optional<double> faithfulness(const std::string& answer_text,
                                   std::span<const std::string> retrieved_texts,
                                   FaithfulnessJudge& judge);

/// Unweighted mean of the four sub-scores; undefined when any input is.
std::optional<double> ragas_score(std::optional<double> p_c, std::optional<double> r_c,
                                  std::optional<double> f, std::optional<double> r_a);

} // namespace georag::eval
