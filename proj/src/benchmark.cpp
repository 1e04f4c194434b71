#include <georag/eval/benchmark.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <random>
#include <set>

#include <json.hpp>

#include <georag/errors.hpp>
#include <georag/eval/lexical.hpp>
#include <georag/eval/normalize.hpp>
#include <georag/eval/semantic.hpp>
#include <georag/eval/stats.hpp>
#include <georag/hashing.hpp>

namespace georag::eval {

namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 12> kSubdomains = {
    "Agronomy",    "Soil",        "Pathology", "Weeds",       "Irrigation",  "Horticulture",
    "Postharvest", "Animal",      "Aquaculture", "Food Safety", "Economics",  "Extension",
};

const std::vector<std::string> kMetricNames = {
    "em",        "f1",           "bleu4",          "rouge_l",      "bertscore",
    "context_precision", "context_recall", "faithfulness", "answer_relevance", "ragas",
};

std::optional<double> metric_value(const QuestionMetrics& m, const std::string& name) {
    if (name == "em") return m.em;
    if (name == "f1") return m.f1;
    if (name == "bleu4") return m.bleu4;
    if (name == "rouge_l") return m.rouge_l;
    if (name == "bertscore") return m.bertscore;
    if (name == "context_precision") return m.context_precision;
    if (name == "context_recall") return m.context_recall;
    if (name == "faithfulness") return m.faithfulness;
    if (name == "answer_relevance") return m.answer_relevance;
    if (name == "ragas") return m.ragas;
    return std::nullopt;
}

} // namespace

std::span<const std::string_view> canonical_subdomains() {
    return {kSubdomains.data(), kSubdomains.size()};
}

std::vector<EvalQuestion> load_benchmark(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open benchmark file: " + path.string());

    std::vector<EvalQuestion> questions;
    std::map<std::string, size_t> seen;
    std::string line_text;
    size_t line_no = 0;
    while (std::getline(in, line_text)) {
        ++line_no;
        if (line_text.find_first_not_of(" \t\r") == std::string::npos) continue;

        json obj;
        try {
            obj = json::parse(line_text);
        } catch (const json::parse_error& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), line_no);
        }
        EvalQuestion q;
        q.qid = obj.value("qid", std::string{});
        q.question = obj.value("question", std::string{});
        q.reference_answer = obj.value("reference_answer", std::string{});
        q.subdomain = obj.value("subdomain", std::string{});
        if (q.qid.empty() || q.question.empty() || q.reference_answer.empty()) {
            throw ParseError("line " + std::to_string(line_no) +
                                 ": qid, question, and reference_answer are required",
                             line_no);
        }
        for (const char* key : {"region_tags", "relevant_chunk_ids", "reference_facts"}) {
            if (!obj.contains(key)) continue;
            for (const auto& v : obj.at(key)) {
                if (!v.is_string()) {
                    throw ParseError("line " + std::to_string(line_no) + ": " + key +
                                         " entries must be strings",
                                     line_no);
                }
                const auto s = v.get<std::string>();
                if (key == std::string("region_tags")) q.region_tags.push_back(s);
                else if (key == std::string("relevant_chunk_ids")) q.relevant_chunk_ids.push_back(s);
                else q.reference_facts.push_back(s);
            }
        }
        auto [it, inserted] = seen.emplace(q.qid, line_no);
        if (!inserted) {
            throw ParseError("duplicate qid \"" + q.qid + "\" on lines " +
                                 std::to_string(it->second) + " and " + std::to_string(line_no),
                             line_no);
        }
        questions.push_back(std::move(q));
    }
    return questions;
}

VariantSpec make_variant(const std::string& name, const rank::FusionConfig& base) {
    VariantSpec spec;
    spec.id = name;
    spec.fusion = base;
    if (name == "full" || name == "region") {
        spec.mode = VariantMode::retrieval;
    } else if (name == "semantic") {
        spec.mode = VariantMode::retrieval;
        spec.fusion.alpha = 0.0;
    } else if (name == "norag") {
        spec.mode = VariantMode::norag;
    } else if (name == "topk2") {
        spec.mode = VariantMode::retrieval;
        spec.fusion.top_k = 2;
    } else if (name == "topk8") {
        spec.mode = VariantMode::retrieval;
        spec.fusion.top_k = 8;
    } else if (name == "random") {
        spec.mode = VariantMode::random_docs;
    } else {
        throw std::invalid_argument(
            "unknown variant \"" + name +
            "\" (expected full|region|semantic|norag|topk2|topk8|random)");
    }
    return spec;
}

std::vector<VariantSpec> parse_variants(const std::string& csv, const rank::FusionConfig& base) {
    std::vector<VariantSpec> out;
    size_t start = 0;
    while (start <= csv.size()) {
        size_t comma = csv.find(',', start);
        if (comma == std::string::npos) comma = csv.size();
        const auto name = csv.substr(start, comma - start);
        if (!name.empty()) out.push_back(make_variant(name, base));
        start = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("no variants specified");
    return out;
}

const MetricAggregate* VariantResult::metric(const std::string& name) const {
    auto it = metrics.find(name);
    return it == metrics.end() ? nullptr : &it->second;
}

const VariantResult* MetricReport::variant(const std::string& id) const {
    for (const auto& v : variants) {
        if (v.spec.id == id) return &v;
    }
    return nullptr;
}

namespace {

/// Pinned partial Fisher-Yates over the sorted chunk ids; per-question engine
/// so results do not depend on evaluation order.
std::vector<std::string> sample_chunk_ids(const std::vector<std::string>& sorted_ids, size_t k,
                                          uint64_t seed, const std::string& qid) {
    std::vector<std::string> ids = sorted_ids;
    std::mt19937_64 rng(seed ^ fnv1a64(qid));
    const size_t take = std::min(k, ids.size());
    for (size_t i = 0; i < take; ++i) {
        const size_t j = i + static_cast<size_t>(rng() % (ids.size() - i));
        std::swap(ids[i], ids[j]);
    }
    ids.resize(take);
    return ids;
}

std::vector<index::ScoredHit> random_hits(const index::VectorStore& store,
                                          const EvalQuestion& q,
                                          embed::EmbeddingProvider& provider, size_t k,
                                          uint64_t seed) {
    const auto picked = sample_chunk_ids(store.chunk_ids_sorted(), k, seed, q.qid);
    const auto query_vec = embed::embed_text(provider, q.question);

    std::vector<index::ScoredHit> hits;
    for (const auto& id : picked) {
        auto chunk = store.find_chunk(id);
        if (!chunk) continue;
        index::ScoredHit hit;
        hit.chunk_id = id;
        hit.chunk = chunk;
        const auto chunk_vec = embed::embed_text(provider, chunk->text);
        hit.s_semantic = embed::cosine(query_vec, chunk_vec);
        hits.push_back(std::move(hit));
    }
    std::sort(hits.begin(), hits.end(), [](const index::ScoredHit& a, const index::ScoredHit& b) {
        if (a.s_semantic != b.s_semantic) return a.s_semantic > b.s_semantic;
        return a.chunk_id < b.chunk_id;
    });
    for (size_t i = 0; i < hits.size(); ++i) hits[i].rank = i + 1;
    return hits;
}

geo::UserLocation question_user(const EvalQuestion& q, const geo::GeoPoint& point) {
    geo::UserLocation user{point, {}};
    for (const auto& code : q.region_tags) user.region_tags.emplace_back(code);
    return user;
}

} // namespace

MetricReport run_benchmark(const std::vector<EvalQuestion>& questions,
                           const index::VectorStore& store, embed::EmbeddingProvider& provider,
                           answer::ChatClient& client, const std::vector<VariantSpec>& variants,
                           const BenchmarkOptions& options) {
    if (variants.empty()) throw std::invalid_argument("run_benchmark: no variants");
    if (options.seeds.empty()) throw std::invalid_argument("run_benchmark: no seeds");

    std::vector<EvalQuestion> ordered = questions;
    std::sort(ordered.begin(), ordered.end(),
              [](const EvalQuestion& a, const EvalQuestion& b) { return a.qid < b.qid; });

    MetricReport report;
    report.seeds = options.seeds;
    report.baseline = options.baseline_variant.empty() ? variants.front().id
                                                       : options.baseline_variant;

    EmbeddingJudge judge(provider, options.faithfulness_tau);
    std::set<std::string> warned_missing_gold;

    for (const auto& spec : variants) {
        VariantResult result;
        result.spec = spec;

        for (const uint64_t seed : options.seeds) {
            std::vector<EvalRecord> records;
            records.reserve(ordered.size());

            for (const auto& q : ordered) {
                EvalRecord record;
                record.qid = q.qid;
                record.subdomain = q.subdomain;

                std::vector<index::ScoredHit> hits;
                try {
                    switch (spec.mode) {
                    case VariantMode::retrieval:
                        hits = rank::retrieve(store, q.question,
                                              question_user(q, options.user_point), provider,
                                              spec.fusion);
                        break;
                    case VariantMode::random_docs:
                        hits = random_hits(store, q, provider, spec.fusion.top_k, seed);
                        break;
                    case VariantMode::norag:
                        break;
                    }

                    const auto bundle = answer::assemble_prompt(q.question, hits,
                                                                options.generation);
                    const auto answer = client.generate(bundle, options.generation);
                    record.answer = answer.text;
                } catch (const std::exception& e) {
                    report.warnings.push_back("question " + q.qid + " (variant " + spec.id +
                                              ", seed " + std::to_string(seed) +
                                              "): " + e.what());
                    record.answer.clear();
                }

                for (const auto& hit : hits) {
                    record.retrieved_ids.push_back(hit.chunk_id);
                    record.retrieved_texts.push_back(hit.chunk->text);
                }

                auto& m = record.metrics;
                m.em = exact_match(record.answer, q.reference_answer);
                m.f1 = token_f1(record.answer, q.reference_answer);
                m.bleu4 = bleu4(normalize_text(record.answer),
                                normalize_text(q.reference_answer));
                m.rouge_l = rouge_l(normalize_text(record.answer),
                                    normalize_text(q.reference_answer));
                m.bertscore = bertscore_f1(record.answer, q.reference_answer, provider);

                if (spec.mode != VariantMode::norag) {
                    m.context_precision =
                        context_precision(record.retrieved_ids, q.relevant_chunk_ids);
                    m.context_recall =
                        context_recall(record.retrieved_ids, q.relevant_chunk_ids);
                    if (q.relevant_chunk_ids.empty() &&
                        warned_missing_gold.insert(q.qid).second) {
                        report.warnings.push_back("question " + q.qid +
                                                  ": no relevant_chunk_ids; context recall "
                                                  "excluded");
                    }
                    m.faithfulness =
                        faithfulness(record.answer, record.retrieved_texts, judge);
                    m.answer_relevance =
                        record.answer.empty()
                            ? std::optional<double>{}
                            : answer_relevance(q.question, record.answer, provider);
                    m.ragas = ragas_score(m.context_precision, m.context_recall,
                                          m.faithfulness, m.answer_relevance);
                }
                records.push_back(std::move(record));
            }
            result.records_per_seed.push_back(std::move(records));
        }

        // aggregate: a metric is reported when every seed produced a value
        for (const auto& name : kMetricNames) {
            MetricAggregate agg;
            bool all_seeds_defined = true;
            for (const auto& records : result.records_per_seed) {
                double sum = 0.0;
                size_t defined = 0;
                for (const auto& rec : records) {
                    if (auto v = metric_value(rec.metrics, name)) {
                        sum += *v;
                        ++defined;
                    }
                }
                if (defined == 0) {
                    all_seeds_defined = false;
                    break;
                }
                agg.per_seed.push_back(sum / static_cast<double>(defined));
            }
            if (!all_seeds_defined) continue;
            double total = 0.0;
            for (double v : agg.per_seed) total += v;
            agg.mean = total / static_cast<double>(agg.per_seed.size());
            size_t defined_first = 0;
            for (const auto& rec : result.records_per_seed.front()) {
                if (metric_value(rec.metrics, name)) ++defined_first;
            }
            agg.n_defined = defined_first;
            result.metrics.emplace(name, std::move(agg));
        }
        report.variants.push_back(std::move(result));
    }

    // per-question seed-mean for subdomain breakdown and significance
    auto seed_mean = [&](const VariantResult& vr, size_t question_index,
                         const std::string& metric) -> std::optional<double> {
        double sum = 0.0;
        size_t n = 0;
        for (const auto& records : vr.records_per_seed) {
            if (auto v = metric_value(records[question_index].metrics, metric)) {
                sum += *v;
                ++n;
            }
        }
        if (n == 0) return std::nullopt;
        return sum / static_cast<double>(n);
    };

    for (const auto& vr : report.variants) {
        std::map<std::string, std::map<std::string, std::pair<double, size_t>>> sums;
        for (size_t qi = 0; qi < ordered.size(); ++qi) {
            const auto& sub = ordered[qi].subdomain;
            if (sub.empty()) continue;
            for (const auto& name : kMetricNames) {
                if (auto v = seed_mean(vr, qi, name)) {
                    auto& cell = sums[sub][name];
                    cell.first += *v;
                    cell.second += 1;
                }
            }
        }
        for (const auto& [sub, metrics] : sums) {
            for (const auto& [name, cell] : metrics) {
                report.per_subdomain[sub][vr.spec.id][name] =
                    cell.first / static_cast<double>(cell.second);
            }
        }
    }

    const auto* baseline = report.variant(report.baseline);
    if (baseline) {
        for (const auto& vr : report.variants) {
            if (vr.spec.id == baseline->spec.id) continue;
            for (const auto& name : kMetricNames) {
                std::vector<double> base_scores, var_scores;
                for (size_t qi = 0; qi < ordered.size(); ++qi) {
                    const auto b = seed_mean(*baseline, qi, name);
                    const auto v = seed_mean(vr, qi, name);
                    if (b && v) {
                        base_scores.push_back(*b);
                        var_scores.push_back(*v);
                    }
                }
                if (base_scores.size() < 2) continue;
                Significance sig;
                sig.n = base_scores.size();
                sig.p_value = paired_bootstrap(base_scores, var_scores,
                                               options.bootstrap_resamples,
                                               options.seeds.front());
                sig.cliffs_delta = cliffs_delta(base_scores, var_scores);
                report.significance[vr.spec.id][name] = sig;
            }
        }
    }
    return report;
}

DomainMatrix domain_similarity_matrix(std::span<const EvalRecord> records,
                                      embed::EmbeddingProvider& provider) {
    std::map<std::string, std::vector<std::string>> answers_by_sub;
    std::map<std::string, std::vector<std::string>> passages_by_sub;
    for (const auto& rec : records) {
        if (rec.subdomain.empty()) continue;
        answers_by_sub[rec.subdomain].push_back(rec.answer);
        for (const auto& t : rec.retrieved_texts) passages_by_sub[rec.subdomain].push_back(t);
    }

    DomainMatrix matrix;
    std::set<std::string> label_set;
    for (const auto& [sub, v] : answers_by_sub) label_set.insert(sub);
    for (const auto& [sub, v] : passages_by_sub) label_set.insert(sub);
    matrix.labels.assign(label_set.begin(), label_set.end());

    // passage centroid per subdomain
    std::map<std::string, std::optional<embed::EmbeddingVector>> centroids;
    for (const auto& label : matrix.labels) {
        auto it = passages_by_sub.find(label);
        if (it == passages_by_sub.end() || it->second.empty()) {
            centroids[label] = std::nullopt;
            continue;
        }
        const auto vecs = provider.embed_batch(it->second);
        embed::EmbeddingVector centroid;
        centroid.provider_id = provider.provider_id();
        centroid.values.assign(provider.dim(), 0.0);
        for (const auto& v : vecs) {
            for (size_t d = 0; d < v.values.size(); ++d) centroid.values[d] += v.values[d];
        }
        for (double& x : centroid.values) x /= static_cast<double>(vecs.size());
        centroids[label] = std::move(centroid);
    }

    matrix.values.assign(matrix.labels.size(),
                         std::vector<std::optional<double>>(matrix.labels.size()));
    for (size_t i = 0; i < matrix.labels.size(); ++i) {
        const auto ans_it = answers_by_sub.find(matrix.labels[i]);
        if (ans_it == answers_by_sub.end() || ans_it->second.empty()) continue;
        const auto answer_vecs = provider.embed_batch(ans_it->second);
        for (size_t j = 0; j < matrix.labels.size(); ++j) {
            const auto& centroid = centroids[matrix.labels[j]];
            if (!centroid) continue;
            double sum = 0.0;
            for (const auto& av : answer_vecs) sum += embed::cosine(av, *centroid);
            matrix.values[i][j] = sum / static_cast<double>(answer_vecs.size());
        }
    }
    return matrix;
}

} // namespace georag::eval
