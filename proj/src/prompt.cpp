#include <georag/answer/prompt.hpp>

namespace georag::answer {

namespace {

std::string system_instruction_for(const std::string& region) {
    return "You are an agricultural expert specializing in " + region +
           " production systems. Base your answer strictly on the retrieved passages and "
           "assume the user is farming in " +
           region + ". Adjust any ranges, timings, or recommendations to " + region +
           " conditions if the evidence supports it.";
}

std::string source_line(const corpus::ChunkMetadata& meta) {
    std::string out = "Source: " + corpus::to_string(meta.source_type);
    out += " | Year: " + (meta.year ? std::to_string(*meta.year) : std::string("n.d."));
    out += " | Regions: ";
    if (meta.region_tags.empty()) {
        out += "none";
    } else {
        for (size_t i = 0; i < meta.region_tags.size(); ++i) {
            if (i) out += ", ";
            out += meta.region_tags[i].code;
        }
    }
    return out;
}

} // namespace

PromptBundle assemble_prompt(const std::string& question,
                             const std::vector<index::ScoredHit>& hits,
                             const GenerationConfig& cfg) {
    PromptBundle bundle;
    bundle.question = question;
    bundle.system_instruction = system_instruction_for(cfg.region_name);

    std::string passage_blocks;
    if (hits.empty()) {
        passage_blocks = "(no passages retrieved)";
    } else {
        for (size_t i = 0; i < hits.size(); ++i) {
            PromptPassage passage;
            passage.label = static_cast<int>(i + 1);
            passage.heading = hits[i].chunk->metadata.heading;
            passage.source = source_line(hits[i].chunk->metadata);
            passage.text = hits[i].chunk->text;
            if (i) passage_blocks += "\n\n";
            passage_blocks += "[" + std::to_string(passage.label) + "] " + passage.source +
                              "\n" + passage.text;
            bundle.passages.push_back(std::move(passage));
        }
    }

    bundle.user_message =
        "Request: " + question + "\n\nRetrieved Passages:\n" + passage_blocks + "\n";
    bundle.rendered =
        "System Instruction:\n" + bundle.system_instruction + "\n\n" + bundle.user_message;
    return bundle;
}

} // namespace georag::answer
