#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <georag/embed/hash_embedder.hpp>
#include <georag/embed/provider.hpp>

using namespace georag;
using namespace georag::embed;

namespace {

/// Records the raw strings a provider is asked to embed.
class RecordingProvider final : public EmbeddingProvider {
public:
    explicit RecordingProvider(size_t dim) : inner_(dim) {}
    const std::string& provider_id() const override { return inner_.provider_id(); }
    size_t dim() const override { return inner_.dim(); }
    std::vector<EmbeddingVector> embed_batch(std::span<const std::string> inputs) override {
        for (const auto& s : inputs) seen.push_back(s);
        return inner_.embed_batch(inputs);
    }
    std::vector<std::string> seen;

private:
    HashEmbedder inner_;
};

} // namespace

TEST_CASE("hash_embed matches the independent FNV oracle") {
    // frozen from tests/oracles/hash_embed_oracle.py
    const auto vec = HashEmbedder::hash_embed("soil nitrogen dynamics", 16);
    const double expected[16] = {0, 0, 0,  0, 0.755928946018454, 0, 0, 0,
                                 -0.377964473009227, 0, 0, 0.377964473009227,
                                 0, 0.377964473009227, 0, 0};
    REQUIRE(vec.dim() == 16);
    for (size_t i = 0; i < 16; ++i) {
        CHECK(vec.values[i] == doctest::Approx(expected[i]).epsilon(1e-12));
    }
}

TEST_CASE("hash_embed determinism and whitespace/case normalization") {
    const auto a = HashEmbedder::hash_embed("soil nitrogen", 512);
    const auto b = HashEmbedder::hash_embed("soil nitrogen", 512);
    CHECK(a.values == b.values); // bit-identical

    const auto ws = HashEmbedder::hash_embed("  soil \t nitrogen \n", 512);
    CHECK(ws.values == a.values);

    const auto upper = HashEmbedder::hash_embed("Soil NITROGEN", 512);
    CHECK(upper.values == a.values);
}

TEST_CASE("hash_embed of empty text is a degenerate zero vector") {
    const auto zero = HashEmbedder::hash_embed("", 64);
    CHECK(zero.is_zero());
    CHECK(zero.l2_norm() == 0.0);
    const auto other = HashEmbedder::hash_embed("lime", 64);
    CHECK(cosine(zero, other) == 0.0);
    CHECK(cosine(zero, zero) == 0.0);
}

TEST_CASE("hash_embed self-similarity and oracle cosines") {
    const auto a = HashEmbedder::hash_embed("apply lime to raise soil ph before planting corn", 512);
    CHECK(cosine(a, a) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(a.l2_norm() == doctest::Approx(1.0).epsilon(1e-9));

    // frozen oracle values
    const auto b1 = HashEmbedder::hash_embed("irrigate peanuts weekly during pod fill", 512);
    const auto b2 = HashEmbedder::hash_embed("harvest blueberries when fully blue", 512);
    CHECK(cosine(b1, b2) == doctest::Approx(0.0).epsilon(1e-12));

    const auto c1 = HashEmbedder::hash_embed("reduce irrigation before peanut harvest", 512);
    const auto c2 =
        HashEmbedder::hash_embed("irrigation should be reduced before harvesting peanuts", 512);
    CHECK(cosine(c1, c2) == doctest::Approx(0.250872603002127).epsilon(1e-12));
}

TEST_CASE("disjoint sentences stay nearly orthogonal at dim 512") {
    const char* pairs[][2] = {
        {"centipede lawns need little fertilizer", "store cucumbers above fifty degrees"},
        {"rotate tomato beds each spring", "broiler litter supplies phosphorus"},
        {"scout cotton weekly for bollworm", "prune muscadine vines in winter"},
    };
    for (const auto& p : pairs) {
        const auto a = HashEmbedder::hash_embed(p[0], 512);
        const auto b = HashEmbedder::hash_embed(p[1], 512);
        CHECK(std::abs(cosine(a, b)) < 0.2);
    }
}

TEST_CASE("cosine identities and errors") {
    EmbeddingVector v{{1.0, 0.0}, "t"};
    EmbeddingVector neg{{-1.0, 0.0}, "t"};
    EmbeddingVector orth{{0.0, 1.0}, "t"};
    CHECK(cosine(v, v) == doctest::Approx(1.0));
    CHECK(cosine(v, neg) == doctest::Approx(-1.0));
    CHECK(cosine(v, orth) == doctest::Approx(0.0));

    EmbeddingVector wrong{{1.0, 2.0, 3.0}, "t"};
    CHECK_THROWS_AS(cosine(v, wrong), std::invalid_argument);
}

TEST_CASE("cosine symmetry and scale invariance") {
    const auto a = HashEmbedder::hash_embed("nitrogen split applications", 128);
    const auto b = HashEmbedder::hash_embed("nitrogen rates for corn", 128);
    EmbeddingVector doubled = a;
    for (double& x : doubled.values) x *= 2.0;
    CHECK(cosine(a, b) == doctest::Approx(cosine(b, a)).epsilon(1e-12));
    CHECK(cosine(doubled, b) == doctest::Approx(cosine(a, b)).epsilon(1e-9));
}

TEST_CASE("HashEmbedder enforces the minimum dimension") {
    CHECK_THROWS_AS(HashEmbedder(7), std::invalid_argument);
    CHECK_NOTHROW(HashEmbedder(8));
    CHECK(HashEmbedder(512).provider_id() == "hash-v1-512");
}

TEST_CASE("embed_text applies the prefix convention") {
    RecordingProvider provider(64);
    const auto vec = embed_text(provider, "soil nitrogen");
    REQUIRE(provider.seen.size() == 1);
    CHECK(provider.seen[0] == "text: soil nitrogen");
    CHECK(vec.dim() == 64);

    const std::vector<std::string> texts = {"alpha", "beta"};
    embed_texts(provider, texts);
    REQUIRE(provider.seen.size() == 3);
    for (const auto& s : provider.seen) {
        CHECK(s.rfind("text: ", 0) == 0); // every embedded string is prefixed
    }

    CHECK_THROWS_AS(embed_text(provider, ""), std::invalid_argument);
}

TEST_CASE("embed_text output equals hashing the prefixed string") {
    HashEmbedder provider(256);
    const auto via_api = embed_text(provider, "soil nitrogen");
    const auto direct = HashEmbedder::hash_embed("text: soil nitrogen", 256);
    CHECK(via_api.values == direct.values);
}
