// Shared synthetic fixtures for the unit and acceptance suites.
#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include <georag/corpus/chunker.hpp>
#include <georag/corpus/document.hpp>
#include <georag/embed/provider.hpp>
#include <georag/eval/benchmark.hpp>
#include <georag/index/vector_store.hpp>

namespace georag::testsupport {

inline std::string two_digits(size_t i) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "%02zu", i);
    return buf;
}

inline std::string three_digits(size_t i) {
    char buf[8];
    std::snprintf(buf, sizeof buf, "%03zu", i);
    return buf;
}

/// Dual-region planted-answer benchmark. Every question has exactly one gold
/// chunk in the user's region (US-NC). Even-numbered questions are "hard":
/// six far-region decoys restate the question almost verbatim and outrank the
/// gold chunk on pure cosine, so only locality-aware fusion recovers it.
/// Odd-numbered questions are "easy": the gold chunk wins on cosine alone.
struct DualRegionFixture {
    std::vector<corpus::Document> documents;
    std::vector<eval::EvalQuestion> questions;
};

inline DualRegionFixture make_dual_region_fixture(size_t n_questions = 40) {
    static const std::vector<std::string> fillers = {
        "this season", "most years", "in spring", "after rain", "every cycle", "right now",
    };
    static const corpus::SourceType source_cycle[] = {
        corpus::SourceType::extension,
        corpus::SourceType::journal,
        corpus::SourceType::textbook,
        corpus::SourceType::report,
    };

    DualRegionFixture fixture;
    const auto subdomains = eval::canonical_subdomains();

    for (size_t i = 1; i <= n_questions; ++i) {
        const std::string crop = "crop" + two_digits(i);
        const std::string pest = "pest" + two_digits(i);
        const std::string value = std::to_string(2 + i % 7);
        const bool hard = i % 2 == 0;

        const std::string question = "How should " + crop + " growers manage " + pest +
                                     " pressure in " + crop + " fields?";
        const std::string gold_sentence =
            "Here is how " + crop + " growers should manage " + pest + " pressure in " + crop +
            " fields: apply treatment at " + value + " liters per hectare on " + crop + " rows.";
        const std::string gold_text =
            gold_sentence + " Log " + pest + " counts for " + crop + " after each scouting pass.";

        corpus::Document gold;
        gold.id = "nc-" + three_digits(i);
        gold.title = crop + " advisory";
        gold.text = gold_text;
        gold.source_type = source_cycle[i % 4];
        gold.year = static_cast<int>(2010 + i % 15);
        gold.region_tags.emplace_back("US-NC");
        gold.centroid = geo::GeoPoint(35.9, -79.0);
        gold.tags = {"treatment"};
        fixture.documents.push_back(std::move(gold));

        const size_t n_decoys = hard ? fillers.size() : 1;
        for (size_t j = 0; j < n_decoys; ++j) {
            corpus::Document decoy;
            decoy.id = "ca-" + three_digits(i) + "-" + std::to_string(j);
            decoy.title = crop + " notes";
            decoy.text = hard ? crop + " growers ask how " + crop + " growers should manage " +
                                    pest + " pressure in " + crop + " fields " + fillers[j] + "."
                              : "General " + crop +
                                    " production notes: rotate fields and keep scouting records.";
            decoy.source_type = source_cycle[(i + j + 1) % 4];
            decoy.year = static_cast<int>(2012 + (i + j) % 12);
            decoy.region_tags.emplace_back("US-CA");
            decoy.centroid = geo::GeoPoint(36.7378, -119.7871);
            fixture.documents.push_back(std::move(decoy));
        }

        eval::EvalQuestion q;
        q.qid = "q" + three_digits(i);
        q.question = question;
        q.reference_answer = gold_sentence;
        q.subdomain = std::string(subdomains[i % subdomains.size()]);
        q.region_tags = {"US-NC"};
        q.relevant_chunk_ids = {"nc-" + three_digits(i) + "#0"};
        q.reference_facts = {gold_sentence};
        fixture.questions.push_back(std::move(q));
    }
    return fixture;
}

/// Chunks, embeds, and upserts documents into a fresh store.
inline index::VectorStore build_store(const std::vector<corpus::Document>& docs,
                                      embed::EmbeddingProvider& provider,
                                      const corpus::ChunkingConfig& chunking = {}) {
    std::vector<corpus::Chunk> chunks;
    std::vector<std::string> texts;
    for (const auto& doc : docs) {
        for (auto& chunk : corpus::chunk_document(doc, chunking)) {
            texts.push_back(chunk.text);
            chunks.push_back(std::move(chunk));
        }
    }
    auto vectors = embed::embed_texts(provider, texts);

    index::VectorStore store(provider.dim(), provider.provider_id());
    std::vector<std::pair<corpus::Chunk, embed::EmbeddingVector>> items;
    items.reserve(chunks.size());
    for (size_t i = 0; i < chunks.size(); ++i) {
        items.emplace_back(std::move(chunks[i]), std::move(vectors[i]));
    }
    store.upsert_chunks(items);
    return store;
}

} // namespace georag::testsupport
