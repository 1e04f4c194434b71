#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include <georag/corpus/chunker.hpp>
#include <georag/embed/hash_embedder.hpp>
#include <georag/errors.hpp>
#include <georag/index/vector_store.hpp>

#include "support/fixtures.hpp"

using namespace georag;
using namespace georag::index;

namespace {

constexpr size_t kDim = 16;
const std::string kProvider = "test-prov";

corpus::Chunk make_chunk(const std::string& chunk_id, corpus::SourceType type,
                         std::optional<int> year = std::nullopt,
                         std::vector<std::string> tags = {},
                         std::vector<std::string> regions = {}) {
    corpus::Chunk chunk;
    chunk.chunk_id = chunk_id;
    chunk.document_id = chunk_id.substr(0, chunk_id.find('#'));
    chunk.text = "text of " + chunk_id;
    chunk.token_span = {0, 3};
    chunk.metadata.source_type = type;
    chunk.metadata.year = year;
    chunk.metadata.tags = std::move(tags);
    for (auto& r : regions) chunk.metadata.region_tags.emplace_back(std::move(r));
    return chunk;
}

embed::EmbeddingVector vec_of(std::vector<double> values) {
    values.resize(kDim, 0.0);
    return embed::EmbeddingVector{std::move(values), kProvider};
}

embed::EmbeddingVector random_vec(std::mt19937_64& rng) {
    std::vector<double> v(kDim);
    for (auto& x : v) x = (static_cast<double>(rng() % 2001) - 1000.0) / 1000.0;
    return embed::EmbeddingVector{std::move(v), kProvider};
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

} // namespace

TEST_CASE("upsert is idempotent by chunk_id") {
    VectorStore store(kDim, kProvider);
    std::vector<std::pair<corpus::Chunk, embed::EmbeddingVector>> items = {
        {make_chunk("a#0", corpus::SourceType::journal), vec_of({1, 0})},
        {make_chunk("b#0", corpus::SourceType::textbook), vec_of({0, 1})},
        {make_chunk("c#0", corpus::SourceType::journal), vec_of({1, 1})},
    };
    auto stats = store.upsert_chunks(items);
    CHECK(stats.inserted == 3);
    CHECK(stats.updated == 0);
    CHECK(store.size() == 3);

    stats = store.upsert_chunks(items);
    CHECK(stats.inserted == 0);
    CHECK(stats.updated == 0); // identical content changes nothing
    CHECK(store.size() == 3);

    // changed vector counts as an update
    items[0].second = vec_of({0.5, 0.5});
    stats = store.upsert_chunks({items[0]});
    CHECK(stats.updated == 1);
    CHECK(store.size() == 3);
}

TEST_CASE("upsert rejects dimension and provider mismatches") {
    VectorStore store(kDim, kProvider);
    embed::EmbeddingVector wrong_dim{{1.0, 2.0}, kProvider};
    CHECK_THROWS_AS(store.upsert_chunks({{make_chunk("a#0", corpus::SourceType::journal),
                                          wrong_dim}}),
                    Error);

    auto wrong_provider = vec_of({1, 0});
    wrong_provider.provider_id = "other";
    CHECK_THROWS_AS(store.upsert_chunks({{make_chunk("a#0", corpus::SourceType::journal),
                                          wrong_provider}}),
                    Error);
}

TEST_CASE("exact_search basics") {
    VectorStore store(kDim, kProvider);
    CHECK(store.exact_search(vec_of({1, 0}), {}, 5).empty()); // empty store, not an error

    store.upsert_chunks({{make_chunk("solo#0", corpus::SourceType::journal), vec_of({1, 0})}});
    auto hits = store.exact_search(vec_of({0.7, 0.1}), {}, 5);
    REQUIRE(hits.size() == 1); // k capped by population
    CHECK(hits[0].rank == 1);

    store.upsert_chunks({
        {make_chunk("other#0", corpus::SourceType::journal), vec_of({0, 1})},
        {make_chunk("third#0", corpus::SourceType::report), vec_of({0.3, 0.8})},
    });
    hits = store.exact_search(vec_of({1, 0}), {}, 3);
    REQUIRE(hits.size() == 3);
    CHECK(hits[0].chunk_id == "solo#0"); // self-retrieval first
    CHECK(hits[0].s_semantic == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("exact_search breaks score ties by ascending chunk_id") {
    VectorStore store(kDim, kProvider);
    store.upsert_chunks({
        {make_chunk("zz#0", corpus::SourceType::journal), vec_of({1, 0})},
        {make_chunk("aa#0", corpus::SourceType::report), vec_of({1, 0})},
        {make_chunk("mm#0", corpus::SourceType::textbook), vec_of({1, 0})},
    });
    const auto hits = store.exact_search(vec_of({1, 0}), {}, 3);
    REQUIRE(hits.size() == 3);
    CHECK(hits[0].chunk_id == "aa#0");
    CHECK(hits[1].chunk_id == "mm#0");
    CHECK(hits[2].chunk_id == "zz#0");
}

TEST_CASE("metadata filters constrain results") {
    VectorStore store(kDim, kProvider);
    store.upsert_chunks({
        {make_chunk("old#0", corpus::SourceType::journal, 2010), vec_of({1, 0})},
        {make_chunk("new#0", corpus::SourceType::journal, 2018), vec_of({1, 0.01})},
        {make_chunk("tag#0", corpus::SourceType::textbook, 2020, {"nitrogen"}), vec_of({1, 0.02})},
        {make_chunk("reg#0", corpus::SourceType::report, std::nullopt, {}, {"US-NC"}),
         vec_of({1, 0.03})},
    });

    MetadataFilter min_year;
    min_year.min_year = 2015;
    auto hits = store.exact_search(vec_of({1, 0}), min_year, 10);
    REQUIRE(hits.size() == 2); // year-less chunks are excluded by a year bound
    for (const auto& h : hits) CHECK(*h.chunk->metadata.year >= 2015);

    MetadataFilter by_type;
    by_type.source_types = {{corpus::SourceType::textbook}};
    hits = store.exact_search(vec_of({1, 0}), by_type, 10);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].chunk_id == "tag#0");

    MetadataFilter by_tag;
    by_tag.required_tags = {"nitrogen"};
    hits = store.exact_search(vec_of({1, 0}), by_tag, 10);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].chunk_id == "tag#0");

    MetadataFilter by_region;
    by_region.region_tags = {"US-NC"};
    hits = store.exact_search(vec_of({1, 0}), by_region, 10);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].chunk_id == "reg#0");
}

TEST_CASE("exact_search equals a brute-force oracle on random filters") {
    std::mt19937_64 rng(101);
    const corpus::SourceType types[] = {corpus::SourceType::journal, corpus::SourceType::textbook,
                                        corpus::SourceType::extension, corpus::SourceType::report};
    const std::vector<std::string> tag_pool = {"soil", "pests", "water", "lawn"};
    const std::vector<std::string> region_pool = {"US-NC", "US-VA", "US-CA"};

    VectorStore store(kDim, kProvider);
    struct Plain {
        std::string id;
        corpus::SourceType type;
        std::optional<int> year;
        std::vector<std::string> tags;
        std::vector<std::string> regions;
        embed::EmbeddingVector vec;
    };
    std::vector<Plain> rows;
    std::vector<std::pair<corpus::Chunk, embed::EmbeddingVector>> items;
    for (size_t i = 0; i < 400; ++i) {
        Plain row;
        row.id = "doc" + std::to_string(i) + "#0";
        row.type = types[rng() % 4];
        if (rng() % 3) row.year = 2000 + static_cast<int>(rng() % 25);
        if (rng() % 2) row.tags.push_back(tag_pool[rng() % tag_pool.size()]);
        if (rng() % 2) row.regions.push_back(region_pool[rng() % region_pool.size()]);
        row.vec = random_vec(rng);
        items.emplace_back(make_chunk(row.id, row.type, row.year, row.tags, row.regions),
                           row.vec);
        rows.push_back(std::move(row));
    }
    store.upsert_chunks(items);

    for (int trial = 0; trial < 40; ++trial) {
        MetadataFilter filter;
        if (rng() % 3 == 0) filter.source_types = {{types[rng() % 4]}};
        if (rng() % 3 == 0) filter.min_year = 2005 + static_cast<int>(rng() % 15);
        if (rng() % 4 == 0) filter.max_year = 2015 + static_cast<int>(rng() % 10);
        if (rng() % 4 == 0) filter.required_tags = {tag_pool[rng() % tag_pool.size()]};
        if (rng() % 4 == 0) filter.region_tags = {region_pool[rng() % region_pool.size()]};

        const auto query = random_vec(rng);
        const size_t k = 1 + rng() % 20;
        const auto hits = store.exact_search(query, filter, k);

        // independent oracle: re-apply the filter rules and sort by cosine
        std::vector<std::pair<double, std::string>> expected;
        for (const auto& row : rows) {
            if (filter.source_types && !filter.source_types->count(row.type)) continue;
            if (filter.min_year || filter.max_year) {
                if (!row.year) continue;
                if (filter.min_year && *row.year < *filter.min_year) continue;
                if (filter.max_year && *row.year > *filter.max_year) continue;
            }
            bool tags_ok = true;
            for (const auto& t : filter.required_tags) {
                if (std::find(row.tags.begin(), row.tags.end(), t) == row.tags.end()) {
                    tags_ok = false;
                }
            }
            if (!tags_ok) continue;
            if (!filter.region_tags.empty()) {
                bool any = false;
                for (const auto& r : filter.region_tags) {
                    if (std::find(row.regions.begin(), row.regions.end(), r) !=
                        row.regions.end()) {
                        any = true;
                    }
                }
                if (!any) continue;
            }
            expected.emplace_back(embed::cosine(query, row.vec), row.id);
        }
        std::sort(expected.begin(), expected.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first > b.first;
            return a.second < b.second;
        });
        if (expected.size() > k) expected.resize(k);

        REQUIRE(hits.size() == expected.size());
        for (size_t i = 0; i < hits.size(); ++i) {
            CHECK(hits[i].chunk_id == expected[i].second);
            CHECK(hits[i].s_semantic == doctest::Approx(expected[i].first).epsilon(1e-9));
        }
    }
}

TEST_CASE("ann_search requires a built graph and then matches its contract") {
    std::mt19937_64 rng(7);
    VectorStore store(kDim, kProvider);
    std::vector<std::pair<corpus::Chunk, embed::EmbeddingVector>> items;
    for (size_t i = 0; i < 50; ++i) {
        items.emplace_back(make_chunk("d" + std::to_string(i) + "#0",
                                      corpus::SourceType::journal),
                           random_vec(rng));
    }
    store.upsert_chunks(items);

    CHECK_THROWS_WITH_AS(store.ann_search(random_vec(rng), {}, 5),
                         doctest::Contains("build"), Error);
    CHECK(store.kind() == IndexKind::exact);

    const auto stats = store.build_hnsw();
    CHECK(stats.nodes == 50);
    CHECK(stats.layers >= 1);
    CHECK(store.kind() == IndexKind::hnsw);
    CHECK(store.ann_ready());

    const auto query = random_vec(rng);
    const auto first = store.ann_search(query, {}, 10);
    const auto second = store.ann_search(query, {}, 10);
    REQUIRE(first.size() == second.size()); // frozen index is deterministic
    for (size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].chunk_id == second[i].chunk_id);
        CHECK(first[i].s_semantic == second[i].s_semantic);
    }

    // k beyond population returns everything
    CHECK(store.ann_search(query, {}, 500).size() == 50);

    // mutation invalidates the graph until rebuilt
    store.upsert_chunks({{make_chunk("zz#0", corpus::SourceType::journal), random_vec(rng)}});
    CHECK_THROWS_AS(store.ann_search(query, {}, 5), Error);
}

TEST_CASE("single-vector graph is one node on one layer") {
    VectorStore store(kDim, kProvider);
    store.upsert_chunks({{make_chunk("a#0", corpus::SourceType::journal), vec_of({1, 0})}});
    const auto stats = store.build_hnsw();
    CHECK(stats.nodes == 1);
    CHECK(stats.layers == 1);
    CHECK(stats.level_counts == std::vector<size_t>{1});

    CHECK_THROWS_AS(VectorStore(kDim, kProvider).build_hnsw(), Error);
}

TEST_CASE("HNSW rebuild with the same seed reproduces the layer assignment") {
    std::mt19937_64 rng(99);
    std::vector<std::vector<double>> vectors;
    for (size_t i = 0; i < 300; ++i) {
        auto v = random_vec(rng).normalized();
        vectors.push_back(v.values);
    }
    HnswParams params;
    params.seed = 4242;

    HnswGraph g1, g2;
    g1.build(vectors, params);
    g2.build(vectors, params);
    CHECK(g1.levels() == g2.levels());

    HnswParams other = params;
    other.seed = 4243;
    HnswGraph g3;
    g3.build(vectors, other);
    CHECK(g1.levels() != g3.levels()); // different seed, different layers
}

TEST_CASE("ann recall against exact scan on a small workload") {
    std::mt19937_64 rng(1234);
    VectorStore store(kDim, kProvider);
    std::vector<std::pair<corpus::Chunk, embed::EmbeddingVector>> items;
    for (size_t i = 0; i < 1000; ++i) {
        items.emplace_back(make_chunk("v" + std::to_string(i) + "#0",
                                      corpus::SourceType::journal),
                           random_vec(rng));
    }
    store.upsert_chunks(items);
    store.build_hnsw();

    double recall_sum = 0.0;
    const int n_queries = 30;
    for (int q = 0; q < n_queries; ++q) {
        const auto query = random_vec(rng);
        const auto exact = store.exact_search(query, {}, 10);
        const auto approx = store.ann_search(query, {}, 10);
        size_t found = 0;
        for (const auto& e : exact) {
            for (const auto& a : approx) {
                if (a.chunk_id == e.chunk_id) {
                    ++found;
                    break;
                }
            }
        }
        recall_sum += static_cast<double>(found) / exact.size();
    }
    CHECK(recall_sum / n_queries >= 0.9);
}

TEST_CASE("ann_search honors metadata filters") {
    std::mt19937_64 rng(55);
    VectorStore store(kDim, kProvider);
    std::vector<std::pair<corpus::Chunk, embed::EmbeddingVector>> items;
    for (size_t i = 0; i < 200; ++i) {
        items.emplace_back(make_chunk("f" + std::to_string(i) + "#0",
                                      corpus::SourceType::journal,
                                      2000 + static_cast<int>(i % 30)),
                           random_vec(rng));
    }
    store.upsert_chunks(items);
    store.build_hnsw();

    MetadataFilter filter;
    filter.min_year = 2015;
    const auto hits = store.ann_search(random_vec(rng), filter, 20);
    CHECK(!hits.empty());
    for (const auto& h : hits) CHECK(*h.chunk->metadata.year >= 2015); // filter soundness
}

TEST_CASE("persistence round-trip preserves search behavior") {
    std::mt19937_64 rng(2024);
    VectorStore store(kDim, kProvider);
    std::vector<std::pair<corpus::Chunk, embed::EmbeddingVector>> items;
    for (size_t i = 0; i < 120; ++i) {
        items.emplace_back(make_chunk("p" + std::to_string(i) + "#0",
                                      corpus::SourceType::extension,
                                      2010 + static_cast<int>(i % 10), {"soil"}, {"US-NC"}),
                           random_vec(rng));
    }
    store.upsert_chunks(items);
    store.build_hnsw();

    const auto path = temp_file("georag_store_test.grv");
    store.persist(path);
    const auto loaded = VectorStore::load(path);

    CHECK(loaded.size() == store.size());
    CHECK(loaded.dim() == store.dim());
    CHECK(loaded.provider_id() == store.provider_id());
    CHECK(loaded.ann_ready());

    for (int q = 0; q < 10; ++q) {
        const auto query = random_vec(rng);
        const auto a = store.exact_search(query, {}, 7);
        const auto b = loaded.exact_search(query, {}, 7);
        REQUIRE(a.size() == b.size());
        for (size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].chunk_id == b[i].chunk_id);
            CHECK(a[i].s_semantic == doctest::Approx(b[i].s_semantic).epsilon(1e-12));
        }
        const auto c = store.ann_search(query, {}, 7);
        const auto d = loaded.ann_search(query, {}, 7);
        REQUIRE(c.size() == d.size());
        for (size_t i = 0; i < c.size(); ++i) CHECK(c[i].chunk_id == d[i].chunk_id);
    }
    std::filesystem::remove(path);
}

TEST_CASE("persistence detects truncation and newer versions") {
    VectorStore store(kDim, kProvider);
    store.upsert_chunks({{make_chunk("a#0", corpus::SourceType::journal), vec_of({1, 0})}});
    const auto path = temp_file("georag_store_corrupt.grv");
    store.persist(path);

    // truncate the payload
    const auto size = std::filesystem::file_size(path);
    std::filesystem::resize_file(path, size - 8);
    CHECK_THROWS_AS(VectorStore::load(path), ChecksumError);

    // rewrite with a bumped version byte (offset 8 = first byte of the u32)
    store.persist(path);
    {
        std::fstream f(path, std::ios::in | std::ios::out | std::ios::binary);
        f.seekp(8);
        const char v = 99;
        f.write(&v, 1);
    }
    CHECK_THROWS_AS(VectorStore::load(path), VersionError);
    std::filesystem::remove(path);
}

TEST_CASE("sync_corpus re-embeds only changed documents") {
    embed::HashEmbedder provider(64);
    VectorStore store(provider.dim(), provider.provider_id());

    auto make_doc = [](const std::string& id, const std::string& text) {
        corpus::Document doc;
        doc.id = id;
        doc.title = "t";
        doc.text = text;
        doc.source_type = corpus::SourceType::report;
        return doc;
    };
    std::vector<corpus::Document> docs = {
        make_doc("a", "alpha beta gamma"),
        make_doc("b", "delta epsilon zeta"),
    };

    auto counts = store.sync_corpus(docs, provider, {});
    CHECK(counts.added == 2);
    CHECK(counts.updated == 0);
    CHECK(counts.removed == 0);

    // unchanged corpus is a no-op
    counts = store.sync_corpus(docs, provider, {});
    CHECK(!counts.any_change());

    // edit one document: its chunks are re-embedded, none are stale
    docs[0].text = "alpha beta gamma revised";
    counts = store.sync_corpus(docs, provider, {});
    CHECK(counts.added == 0);
    CHECK(counts.updated == 1);
    CHECK(counts.removed == 0);
    CHECK(store.find_chunk("a#0")->text == "alpha beta gamma revised");

    // shrinking a document drops stale ordinals
    corpus::ChunkingConfig tiny{4, 1};
    VectorStore small(provider.dim(), provider.provider_id());
    std::vector<corpus::Document> long_doc = {make_doc("long", "t1 t2 t3 t4 t5 t6 t7 t8 t9")};
    counts = small.sync_corpus(long_doc, provider, tiny);
    CHECK(counts.added == 3); // spans [0,4) [3,7) [6,9)
    long_doc[0].text = "t1 t2";
    counts = small.sync_corpus(long_doc, provider, tiny);
    CHECK(counts.updated == 1);
    CHECK(counts.removed == 2);
    CHECK(small.size() == 1);

    // deleting a document removes its chunks
    docs.erase(docs.begin());
    counts = store.sync_corpus(docs, provider, {});
    CHECK(counts.removed == 1);
    CHECK(store.find_chunk("a#0") == nullptr);
    CHECK(store.size() == 1);
}
