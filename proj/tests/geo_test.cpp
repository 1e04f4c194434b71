#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <georag/geo/distance.hpp>

using namespace georag;
using namespace georag::geo;

namespace {

corpus::ChunkMetadata meta_with(std::vector<std::string> codes,
                                std::optional<GeoPoint> centroid) {
    corpus::ChunkMetadata meta;
    for (auto& c : codes) meta.region_tags.emplace_back(std::move(c));
    meta.centroid = centroid;
    return meta;
}

} // namespace

TEST_CASE("GeoPoint enforces coordinate ranges") {
    CHECK_NOTHROW(GeoPoint(90.0, 180.0));
    CHECK_NOTHROW(GeoPoint(-90.0, -180.0));
    CHECK_THROWS_AS(GeoPoint(90.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(GeoPoint(0.0, -180.5), std::invalid_argument);
}

TEST_CASE("RegionTag normalizes case and rejects empty codes") {
    CHECK(RegionTag("us-nc").code == "US-NC");
    CHECK_THROWS_AS(RegionTag(""), std::invalid_argument);
}

TEST_CASE("haversine_km identity and antipodal half-circumference") {
    const GeoPoint a(36.0726, -79.7920);
    CHECK(haversine_km(a, a) == 0.0);

    // analytic: pi * R
    CHECK(haversine_km(GeoPoint(0, 0), GeoPoint(0, 180)) ==
          doctest::Approx(20015.086796021).epsilon(1e-9));
    CHECK(haversine_km(GeoPoint(90, 0), GeoPoint(-90, 0)) ==
          doctest::Approx(20015.086796021).epsilon(1e-9));
}

TEST_CASE("haversine_km matches the independent oracle") {
    // frozen from tests/oracles/haversine_oracle.py
    const GeoPoint greensboro(36.0726, -79.7920);
    const GeoPoint raleigh(35.7796, -78.6382);
    const GeoPoint fresno(36.7378, -119.7871);
    CHECK(haversine_km(greensboro, raleigh) == doctest::Approx(108.879288473).epsilon(1e-9));
    CHECK(haversine_km(greensboro, fresno) == doctest::Approx(3553.675673519).epsilon(1e-9));
}

TEST_CASE("haversine_km symmetry and triangle inequality on random points") {
    std::mt19937_64 rng(11);
    auto random_point = [&rng] {
        const double lat = -90.0 + 180.0 * (rng() % 10000) / 10000.0;
        const double lon = -180.0 + 360.0 * (rng() % 10000) / 10000.0;
        return GeoPoint(lat, lon);
    };
    for (int i = 0; i < 200; ++i) {
        const auto a = random_point(), b = random_point(), c = random_point();
        CHECK(haversine_km(a, b) == doctest::Approx(haversine_km(b, a)).epsilon(1e-12));
        CHECK(haversine_km(a, c) <= haversine_km(a, b) + haversine_km(b, c) + 1e-6);
        CHECK(haversine_km(a, b) >= 0.0);
    }
}

TEST_CASE("user_doc_distance short-circuits on region tag match") {
    const UserLocation user{GeoPoint(36.0726, -79.7920), {RegionTag("US-NC")}};
    const auto meta = meta_with({"US-NC"}, GeoPoint(36.7378, -119.7871));
    CHECK(user_doc_distance(user, meta) == 0.0);
    // tag matching is case-insensitive through normalization
    const UserLocation lower{GeoPoint(36.0726, -79.7920), {RegionTag("us-nc")}};
    CHECK(user_doc_distance(lower, meta) == 0.0);
}

TEST_CASE("user_doc_distance falls back to centroid then max distance") {
    const UserLocation user{GeoPoint(36.0726, -79.7920), {}};
    const auto at_centroid = meta_with({}, GeoPoint(36.0726, -79.7920));
    CHECK(user_doc_distance(user, at_centroid) == 0.0);

    const auto far = meta_with({"US-CA"}, GeoPoint(36.7378, -119.7871));
    CHECK(user_doc_distance(user, far) == doctest::Approx(3553.675673519).epsilon(1e-9));

    const auto no_geo = meta_with({}, std::nullopt);
    CHECK(user_doc_distance(user, no_geo) == kDefaultMaxDistanceKm);
    CHECK(user_doc_distance(user, no_geo, 123.0) == 123.0);
}

TEST_CASE("normalize_distance is a plain ratio with a positive scale") {
    CHECK(normalize_distance(0.0, 1000.0) == 0.0);
    CHECK(normalize_distance(1000.0, 1000.0) == 1.0);
    CHECK(normalize_distance(500.0, 1000.0) == 0.5);
    CHECK_THROWS_AS(normalize_distance(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(normalize_distance(1.0, -5.0), std::invalid_argument);
}

TEST_CASE("s_distance decay identities") {
    CHECK(s_distance(0.0) == 1.0);
    CHECK(s_distance(1.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(s_distance(3.0) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK_THROWS_AS(s_distance(-0.1), std::invalid_argument);
}

TEST_CASE("s_distance is strictly decreasing and bounded in (0, 1]") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 500; ++i) {
        const double d1 = (rng() % 1000000) / 997.0;
        const double d2 = d1 + 1e-6 + (rng() % 1000) / 7.0;
        CHECK(s_distance(d1) > s_distance(d2)); // monotone decay
        CHECK(s_distance(d2) > 0.0);            // never eliminated
        CHECK(s_distance(d1) <= 1.0);
    }
}
