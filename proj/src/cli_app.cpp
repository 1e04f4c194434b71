#include <georag/cli/app.hpp>

#include <chrono>
#include <cstdio>
#include <future>
#include <memory>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include <georag/answer/generate.hpp>
#include <georag/corpus/loader.hpp>
#include <georag/embed/hash_embedder.hpp>
#include <georag/embed/remote_embedder.hpp>
#include <georag/errors.hpp>
#include <georag/eval/benchmark.hpp>
#include <georag/index/vector_store.hpp>
#include <georag/rank/fusion.hpp>

namespace georag::cli {

namespace {

std::string fmt_score(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

/// Splits embed_batch work across a bounded number of threads. Only used for
/// providers whose embedding function is pure (the deterministic embedder).
class ParallelProvider final : public embed::EmbeddingProvider {
public:
    ParallelProvider(embed::EmbeddingProvider& inner, size_t jobs)
        : inner_(inner), jobs_(std::max<size_t>(1, jobs)) {}

    const std::string& provider_id() const override { return inner_.provider_id(); }
    size_t dim() const override { return inner_.dim(); }

    std::vector<embed::EmbeddingVector> embed_batch(std::span<const std::string> inputs) override {
        if (jobs_ == 1 || inputs.size() < 2 * jobs_) return inner_.embed_batch(inputs);
        const size_t per = (inputs.size() + jobs_ - 1) / jobs_;
        std::vector<std::future<std::vector<embed::EmbeddingVector>>> parts;
        for (size_t start = 0; start < inputs.size(); start += per) {
            const size_t count = std::min(per, inputs.size() - start);
            auto slice = inputs.subspan(start, count);
            parts.push_back(std::async(std::launch::async,
                                       [this, slice] { return inner_.embed_batch(slice); }));
        }
        std::vector<embed::EmbeddingVector> out;
        out.reserve(inputs.size());
        for (auto& part : parts) {
            for (auto& vec : part.get()) out.push_back(std::move(vec));
        }
        return out;
    }

private:
    embed::EmbeddingProvider& inner_;
    size_t jobs_;
};

std::unique_ptr<embed::EmbeddingProvider> make_provider(const AppConfig& cfg) {
    if (cfg.provider.kind == "remote") {
        embed::RemoteProviderConfig rc;
        rc.base_url = cfg.provider.base_url;
        rc.model = cfg.provider.model;
        rc.dim = cfg.provider.dim;
        rc.auth_env = cfg.provider.auth_env;
        rc.batch_size = cfg.provider.batch_size;
        rc.parallelism = cfg.provider.parallelism;
        return std::make_unique<embed::RemoteEmbedder>(rc);
    }
    return std::make_unique<embed::HashEmbedder>(cfg.provider.dim);
}

std::unique_ptr<answer::ChatClient> make_chat(const AppConfig& cfg, bool offline) {
    if (offline || cfg.generation.base_url.empty()) {
        return std::make_unique<answer::OfflineStubClient>();
    }
    answer::RemoteChatConfig rc;
    rc.base_url = cfg.generation.base_url;
    rc.auth_env = cfg.generation.auth_env;
    return std::make_unique<answer::RemoteChatClient>(rc);
}

index::VectorStore load_index_or_fail(const AppConfig& cfg) {
    if (!std::filesystem::exists(cfg.index_path)) {
        throw Error("index not found at \"" + cfg.index_path +
                    "\"; run `georag ingest` to build it first");
    }
    return index::VectorStore::load(cfg.index_path);
}

std::vector<uint64_t> parse_seed_list(const std::string& csv) {
    std::vector<uint64_t> seeds;
    size_t start = 0;
    while (start <= csv.size()) {
        size_t comma = csv.find(',', start);
        if (comma == std::string::npos) comma = csv.size();
        const auto part = csv.substr(start, comma - start);
        if (!part.empty()) seeds.push_back(std::stoull(part));
        start = comma + 1;
    }
    if (seeds.empty()) throw std::invalid_argument("--seeds requires at least one seed");
    return seeds;
}

std::string join_seeds(const std::vector<uint64_t>& seeds) {
    std::string out;
    for (size_t i = 0; i < seeds.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(seeds[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Commands
// ---------------------------------------------------------------------------

struct IngestArgs {
    size_t jobs = 1;
};

int cmd_ingest(const AppConfig& cfg, const IngestArgs& args, std::ostream& out) {
    const auto docs = corpus::load_corpus(cfg.corpus_path);
    if (docs.empty()) throw Error("empty corpus: " + cfg.corpus_path);

    auto provider = make_provider(cfg);
    ParallelProvider parallel(*provider, cfg.provider.kind == "remote" ? 1 : args.jobs);

    index::VectorStore store =
        std::filesystem::exists(cfg.index_path)
            ? index::VectorStore::load(cfg.index_path)
            : index::VectorStore(provider->dim(), provider->provider_id());

    const auto counts = store.sync_corpus(docs, parallel, cfg.chunking);
    out << "Ingested " << docs.size() << " documents: " << counts.added << " chunks added, "
        << counts.updated << " updated, " << counts.removed << " removed.\n";

    if (counts.any_change() || !store.ann_ready()) {
        const auto stats = store.build_hnsw(cfg.hnsw);
        out << "HNSW built: " << stats.nodes << " nodes, " << stats.layers << " layers.\n";
    }
    store.persist(cfg.index_path);
    out << "Index written to " << cfg.index_path << " (" << store.size() << " vectors, dim "
        << store.dim() << ").\n";
    return kOk;
}

struct AskArgs {
    std::string question;
    double lat = 36.0726;
    double lon = -79.7920;
    std::vector<std::string> regions;
    bool offline = false;
};

int cmd_ask(const AppConfig& cfg, const AskArgs& args, std::ostream& out) {
    const auto store = load_index_or_fail(cfg);
    auto provider = make_provider(cfg);

    geo::UserLocation user{geo::GeoPoint(args.lat, args.lon), {}};
    for (const auto& code : args.regions) user.region_tags.emplace_back(code);

    const auto hits = rank::retrieve(store, args.question, user, *provider, cfg.fusion);
    out << "Retrieved passages:\n";
    if (hits.empty()) {
        out << "(none)\n";
    } else {
        for (const auto& hit : hits) {
            out << "[" << hit.rank << "] " << hit.chunk_id
                << "  s_semantic=" << fmt_score(hit.s_semantic)
                << "  s_distance=" << fmt_score(hit.s_distance.value_or(0.0))
                << "  s_final=" << fmt_score(hit.s_final.value_or(0.0)) << "\n";
        }
    }

    const auto bundle = answer::assemble_prompt(args.question, hits, cfg.generation.params);
    auto client = make_chat(cfg, args.offline);
    const auto record = client->generate(bundle, cfg.generation.params);

    out << "\nAnswer:\n" << record.text << "\n\nCitations: ";
    if (record.citations.empty()) {
        out << "none";
    } else {
        for (int label : record.citations) out << "[" << label << "]";
    }
    out << "\n";
    return kOk;
}

struct EvalArgs {
    std::string benchmark_path;
    std::string variants = "full";
    std::string seeds;
    std::string out_dir = "reports";
    bool offline = false;
    size_t jobs = 1;
};

int cmd_eval(const AppConfig& cfg, const EvalArgs& args, std::ostream& out, std::ostream& err) {
    const auto questions = eval::load_benchmark(args.benchmark_path);
    if (questions.empty()) throw Error("empty benchmark: " + args.benchmark_path);
    const auto store = load_index_or_fail(cfg);

    auto provider = make_provider(cfg);
    ParallelProvider parallel(*provider, cfg.provider.kind == "remote" ? 1 : args.jobs);
    auto client = make_chat(cfg, args.offline);

    const auto variants = eval::parse_variants(args.variants, cfg.fusion);

    eval::BenchmarkOptions options;
    options.seeds = args.seeds.empty() ? cfg.eval.seeds : parse_seed_list(args.seeds);
    options.bootstrap_resamples = cfg.eval.bootstrap_resamples;
    options.faithfulness_tau = cfg.eval.faithfulness_tau;
    options.user_point = geo::GeoPoint(cfg.eval.user_lat, cfg.eval.user_lon);
    options.generation = cfg.generation.params;

    const auto report =
        eval::run_benchmark(questions, store, parallel, *client, variants, options);

    std::filesystem::create_directories(args.out_dir);
    const std::filesystem::path dir(args.out_dir);
    eval::write_report_json(report, dir / "report.json");
    eval::write_report_csv(report, dir / "report.csv");
    eval::write_subdomain_csv(report, dir / "subdomains.csv");

    if (const auto* baseline = report.variant(report.baseline)) {
        const auto matrix = eval::domain_similarity_matrix(
            baseline->records_per_seed.front(), parallel);
        eval::write_matrix_csv(matrix, dir / "domain_similarity.csv");
    }

    for (const auto& warning : report.warnings) err << "warning: " << warning << "\n";

    out << "Benchmark: " << questions.size() << " questions, seeds " << join_seeds(options.seeds)
        << "\n";
    for (const auto& vr : report.variants) {
        out << "  " << vr.spec.id << ":";
        for (const char* name : {"em", "f1", "bertscore", "context_recall", "ragas"}) {
            if (const auto* agg = vr.metric(name)) {
                out << " " << name << "=" << fmt_score(agg->mean);
            }
        }
        out << "\n";
    }
    out << "Reports written to " << args.out_dir << "\n";
    return kOk;
}

struct ReindexArgs {
    bool watch = false;
    size_t interval_sec = 30;
};

int cmd_reindex(const AppConfig& cfg, const ReindexArgs& args, std::ostream& out) {
    auto provider = make_provider(cfg);
    auto store = load_index_or_fail(cfg);
    do {
        const auto counts = index::reindex_changed(store, cfg.corpus_path, *provider,
                                                   cfg.chunking);
        out << "Reindex: " << counts.added << " added, " << counts.updated << " updated, "
            << counts.removed << " removed.\n";
        if (counts.any_change()) {
            store.build_hnsw(cfg.hnsw);
            store.persist(cfg.index_path);
            out << "Index rewritten to " << cfg.index_path << ".\n";
        }
        if (args.watch) std::this_thread::sleep_for(std::chrono::seconds(args.interval_sec));
    } while (args.watch);
    return kOk;
}

int cmd_config(const AppConfig& cfg, std::ostream& out) {
    nlohmann::json root;
    root["corpus_path"] = cfg.corpus_path;
    root["index_path"] = cfg.index_path;
    root["provider"] = {{"kind", cfg.provider.kind},       {"base_url", cfg.provider.base_url},
                        {"model", cfg.provider.model},     {"dim", cfg.provider.dim},
                        {"auth_env", cfg.provider.auth_env},
                        {"batch_size", cfg.provider.batch_size},
                        {"parallelism", cfg.provider.parallelism}};
    root["chunking"] = {{"chunk_size", cfg.chunking.chunk_size},
                        {"overlap", cfg.chunking.overlap}};
    root["fusion"] = {{"alpha", cfg.fusion.alpha},
                      {"top_k", cfg.fusion.top_k},
                      {"expansion_factor", cfg.fusion.expansion_factor}};
    root["distance"] = {{"distance_scale_km", cfg.fusion.distance_scale_km},
                        {"max_distance_km", cfg.fusion.max_distance_km}};
    root["hnsw"] = {{"M", cfg.hnsw.M},
                    {"ef_construction", cfg.hnsw.ef_construction},
                    {"ef_search", cfg.hnsw.ef_search},
                    {"seed", cfg.hnsw.seed}};
    root["generation"] = {{"temperature", cfg.generation.params.temperature},
                          {"max_output_tokens", cfg.generation.params.max_output_tokens},
                          {"model", cfg.generation.params.model},
                          {"region_name", cfg.generation.params.region_name},
                          {"base_url", cfg.generation.base_url},
                          {"auth_env", cfg.generation.auth_env}};
    root["eval"] = {{"seeds", cfg.eval.seeds},
                    {"bootstrap_resamples", cfg.eval.bootstrap_resamples},
                    {"faithfulness_tau", cfg.eval.faithfulness_tau},
                    {"user_lat", cfg.eval.user_lat},
                    {"user_lon", cfg.eval.user_lon}};
    out << root.dump(2) << "\n";
    return kOk;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    // resolve --config before building the app so file values become the
    // defaults that flags then override
    AppConfig cfg;
    try {
        for (int i = 1; i + 1 < argc; ++i) {
            if (std::string_view(argv[i]) == "--config") {
                cfg = AppConfig::load(argv[i + 1]);
                break;
            }
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kDataError;
    }

    CLI::App app{"georag - region-aware retrieval-augmented answering engine"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file");

    IngestArgs ingest_args;
    auto* ingest = app.add_subcommand("ingest", "Chunk, embed, index, and persist a corpus");
    ingest->add_option("--corpus", cfg.corpus_path, "Corpus JSONL path")
        ->default_val(cfg.corpus_path);
    ingest->add_option("--index", cfg.index_path, "Index output path")
        ->default_val(cfg.index_path);
    ingest->add_option("--chunk-size", cfg.chunking.chunk_size, "Tokens per chunk")
        ->default_val(cfg.chunking.chunk_size);
    ingest->add_option("--overlap", cfg.chunking.overlap, "Token overlap between chunks")
        ->default_val(cfg.chunking.overlap);
    ingest->add_option("--jobs", ingest_args.jobs, "Embedding worker threads")
        ->default_val(ingest_args.jobs);

    AskArgs ask_args;
    auto* ask = app.add_subcommand("ask", "Retrieve evidence and answer a question");
    ask->add_option("question", ask_args.question, "The question to answer")->required();
    ask->add_option("--index", cfg.index_path, "Index path")->default_val(cfg.index_path);
    ask->add_option("--lat", ask_args.lat, "User latitude")->default_val(ask_args.lat);
    ask->add_option("--lon", ask_args.lon, "User longitude")->default_val(ask_args.lon);
    ask->add_option("--region", ask_args.regions, "User region code (repeatable)");
    ask->add_option("--alpha", cfg.fusion.alpha, "Locality weight in [0,1]")
        ->default_val(cfg.fusion.alpha);
    ask->add_option("--k", cfg.fusion.top_k, "Passages to retrieve")
        ->default_val(cfg.fusion.top_k);
    ask->add_option("--expansion", cfg.fusion.expansion_factor, "Semantic pool factor")
        ->default_val(cfg.fusion.expansion_factor);
    ask->add_flag("--offline", ask_args.offline, "Use the deterministic offline generator");

    EvalArgs eval_args;
    auto* eval_cmd = app.add_subcommand("eval", "Run the benchmark and write metric reports");
    eval_cmd->add_option("--benchmark", eval_args.benchmark_path, "Benchmark JSONL path")
        ->required();
    eval_cmd->add_option("--index", cfg.index_path, "Index path")->default_val(cfg.index_path);
    eval_cmd->add_option("--variants", eval_args.variants,
                         "Comma list: full,region,semantic,norag,topk2,topk8,random")
        ->default_val(eval_args.variants);
    eval_cmd->add_option("--seeds", eval_args.seeds, "Comma list of run seeds")
        ->default_val(join_seeds(cfg.eval.seeds));
    eval_cmd->add_option("--out-dir", eval_args.out_dir, "Report output directory")
        ->default_val(eval_args.out_dir);
    eval_cmd->add_option("--alpha", cfg.fusion.alpha, "Locality weight in [0,1]")
        ->default_val(cfg.fusion.alpha);
    eval_cmd->add_option("--k", cfg.fusion.top_k, "Passages to retrieve")
        ->default_val(cfg.fusion.top_k);
    eval_cmd->add_option("--jobs", eval_args.jobs, "Embedding worker threads")
        ->default_val(eval_args.jobs);
    eval_cmd->add_flag("--offline", eval_args.offline,
                       "Use the deterministic offline generator");

    EvalArgs ablate_args;
    ablate_args.variants = "full,norag,topk2,topk8,random";
    auto* ablate = app.add_subcommand("ablate", "Run the standard ablation grid");
    ablate->add_option("--benchmark", ablate_args.benchmark_path, "Benchmark JSONL path")
        ->required();
    ablate->add_option("--index", cfg.index_path, "Index path")->default_val(cfg.index_path);
    ablate->add_option("--seeds", ablate_args.seeds, "Comma list of run seeds")
        ->default_val(join_seeds(cfg.eval.seeds));
    ablate->add_option("--out-dir", ablate_args.out_dir, "Report output directory")
        ->default_val(ablate_args.out_dir);
    ablate->add_option("--jobs", ablate_args.jobs, "Embedding worker threads")
        ->default_val(ablate_args.jobs);
    ablate->add_flag("--offline", ablate_args.offline,
                     "Use the deterministic offline generator");

    ReindexArgs reindex_args;
    auto* reindex = app.add_subcommand("reindex", "Re-embed documents whose content changed");
    reindex->add_option("--corpus", cfg.corpus_path, "Corpus JSONL path")
        ->default_val(cfg.corpus_path);
    reindex->add_option("--index", cfg.index_path, "Index path")->default_val(cfg.index_path);
    reindex->add_flag("--watch", reindex_args.watch, "Poll the corpus for changes");
    reindex->add_option("--interval-sec", reindex_args.interval_sec, "Polling interval")
        ->default_val(reindex_args.interval_sec);

    auto* config_cmd = app.add_subcommand("config", "Print the effective configuration");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (ingest->parsed()) return cmd_ingest(cfg, ingest_args, out);
        if (ask->parsed()) return cmd_ask(cfg, ask_args, out);
        if (eval_cmd->parsed()) return cmd_eval(cfg, eval_args, out, err);
        if (ablate->parsed()) return cmd_eval(cfg, ablate_args, out, err);
        if (reindex->parsed()) return cmd_reindex(cfg, reindex_args, out);
        if (config_cmd->parsed()) return cmd_config(cfg, out);
    } catch (const TransportError& e) {
        err << "transport error: " << e.what() << "\n";
        return kTransportError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kDataError;
    }
    return kUsageError;
}

} // namespace georag::cli
