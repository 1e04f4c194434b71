#pragma once

#include <string>
#include <vector>

#include <georag/index/vector_store.hpp>

namespace georag::answer {

struct GenerationConfig {
    double temperature = 0.2;
    size_t max_output_tokens = 512;
    std::string model;
    std::string region_name = "North Carolina";
};

/// One evidence block of the prompt.
struct PromptPassage {
    int label = 0;       // 1-based citation label
    std::string heading;
    std::string source;  // "Source: extension | Year: 2021 | Regions: US-NC"
    std::string text;    // chunk text (includes its own heading line)
};

/// The assembled prompt: a system instruction specialized to the configured
/// region, the user question, and the evidence blocks in rank order.
struct PromptBundle {
    std::string system_instruction;
    std::string question;
    std::vector<PromptPassage> passages;
    std::string user_message; // request + passages (the wire "user" role)
    std::string rendered;     // full prompt text, byte-stable
};

/// Builds the prompt from ranked hits. Passages keep the order given and get
/// labels [1..k]; with no hits the passage section reads
/// "(no passages retrieved)".
PromptBundle assemble_prompt(const std::string& question,
                             const std::vector<index::ScoredHit>& hits,
                             const GenerationConfig& cfg);

} // namespace georag::answer
