#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <georag/answer/generate.hpp>
#include <georag/embed/provider.hpp>
#include <georag/eval/ragas.hpp>
#include <georag/geo/point.hpp>
#include <georag/index/vector_store.hpp>
#include <georag/rank/fusion.hpp>

namespace georag::eval {

/// The twelve benchmark subfields.
std::span<const std::string_view> canonical_subdomains();

struct EvalQuestion {
    std::string qid;
    std::string question;
    std::string reference_answer;
    std::string subdomain;
    std::vector<std::string> region_tags;
    std::vector<std::string> relevant_chunk_ids; // gold evidence
    std::vector<std::string> reference_facts;
};

/// JSONL loader; enforces unique qids and non-empty question/reference
/// answer. Per-line diagnostics carry line numbers.
std::vector<EvalQuestion> load_benchmark(const std::filesystem::path& path);

struct QuestionMetrics {
    double em = 0.0;
    double f1 = 0.0;
    double bleu4 = 0.0;
    double rouge_l = 0.0;
    double bertscore = 0.0;
    std::optional<double> context_precision;
    std::optional<double> context_recall;
    std::optional<double> faithfulness;
    std::optional<double> answer_relevance;
    std::optional<double> ragas;
};

struct EvalRecord {
    std::string qid;
    std::string subdomain;
    std::vector<std::string> retrieved_ids;
    std::vector<std::string> retrieved_texts;
    std::string answer;
    QuestionMetrics metrics;
};

enum class VariantMode { retrieval, norag, random_docs };

struct VariantSpec {
    std::string id;
    VariantMode mode = VariantMode::retrieval;
    rank::FusionConfig fusion;
};

/// Named ablation presets over a base fusion config:
///   full     - base config as-is
///   semantic - alpha = 0 (pure cosine ranking)
///   norag    - no retrieval at all
///   topk2 / topk8 - base config at k = 2 / 8
///   random   - k chunks sampled uniformly with the run seed
/// Unknown names throw std::invalid_argument.
VariantSpec make_variant(const std::string& name, const rank::FusionConfig& base);
std::vector<VariantSpec> parse_variants(const std::string& csv, const rank::FusionConfig& base);

struct BenchmarkOptions {
    std::vector<uint64_t> seeds{1, 2, 3};
    size_t bootstrap_resamples = 10000;
    double faithfulness_tau = 0.7;
    geo::GeoPoint user_point{36.0726, -79.7920}; // region membership comes from tags
    std::string baseline_variant;                // empty = first variant
    answer::GenerationConfig generation;
};

struct MetricAggregate {
    double mean = 0.0;                 // mean of per-seed means
    std::vector<double> per_seed;      // one mean per seed
    size_t n_defined = 0;              // questions contributing (first seed)
};

struct Significance {
    double p_value = 1.0;
    double cliffs_delta = 0.0;
    size_t n = 0; // paired questions
};

struct VariantResult {
    VariantSpec spec;
    std::map<std::string, MetricAggregate> metrics;
    std::vector<std::vector<EvalRecord>> records_per_seed;

    const MetricAggregate* metric(const std::string& name) const;
};

struct MetricReport {
    std::vector<uint64_t> seeds;
    std::string baseline;
    std::vector<VariantResult> variants;
    // subdomain -> variant -> metric -> mean
    std::map<std::string, std::map<std::string, std::map<std::string, double>>> per_subdomain;
    // variant -> metric -> baseline-vs-variant statistics
    std::map<std::string, std::map<std::string, Significance>> significance;
    std::vector<std::string> warnings; // per-question issues; the run continues

    const VariantResult* variant(const std::string& id) const;
};

/// Runs every variant over all questions once per seed and aggregates.
/// Questions are evaluated and aggregated in qid order; with a deterministic
/// provider and client the report is bit-identical for identical seeds.
/// Per-question user location = options.user_point + the question's region
/// tags. Questions missing gold data simply contribute no value to the
/// affected metrics.
MetricReport run_benchmark(const std::vector<EvalQuestion>& questions,
                           const index::VectorStore& store, embed::EmbeddingProvider& provider,
                           answer::ChatClient& client, const std::vector<VariantSpec>& variants,
                           const BenchmarkOptions& options);

/// Square matrix of mean cosine between subdomain i's answers and the
/// centroid of subdomain j's retrieved passages. Row/column order follows the
/// sorted distinct subdomains present; entries for empty groups are absent.
struct DomainMatrix {
    std::vector<std::string> labels;
    std::vector<std::vector<std::optional<double>>> values;
};

DomainMatrix domain_similarity_matrix(std::span<const EvalRecord> records,
                                      embed::EmbeddingProvider& provider);

// Report serialization (one row per variant/metric in the CSV).
void write_report_json(const MetricReport& report, const std::filesystem::path& path);
void write_report_csv(const MetricReport& report, const std::filesystem::path& path);
void write_subdomain_csv(const MetricReport& report, const std::filesystem::path& path);
void write_matrix_csv(const DomainMatrix& matrix, const std::filesystem::path& path);

} // namespace georag::eval
