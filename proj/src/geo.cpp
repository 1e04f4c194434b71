#include <georag/geo/distance.hpp>
#include <georag/geo/point.hpp>

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace georag::geo {

GeoPoint::GeoPoint(double lat_deg, double lon_deg) : lat_(lat_deg), lon_(lon_deg) {
    if (!(lat_deg >= -90.0 && lat_deg <= 90.0)) {
        throw std::invalid_argument("latitude out of range [-90, 90]: " +
                                    std::to_string(lat_deg));
    }
    if (!(lon_deg >= -180.0 && lon_deg <= 180.0)) {
        throw std::invalid_argument("longitude out of range [-180, 180]: " +
                                    std::to_string(lon_deg));
    }
}

RegionTag::RegionTag(std::string code_in, std::string name_in)
    : code(std::move(code_in)), name(std::move(name_in)) {
    if (code.empty()) {
        throw std::invalid_argument("region tag code must be non-empty");
    }
    for (char& c : code) {
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
}

namespace {

constexpr double kDegToRad = 3.14159265358979323846 / 180.0;

} // namespace

double haversine_km(const GeoPoint& a, const GeoPoint& b) {
    const double phi1 = a.lat() * kDegToRad;
    const double phi2 = b.lat() * kDegToRad;
    const double dphi = (b.lat() - a.lat()) * kDegToRad;
    const double dlambda = (b.lon() - a.lon()) * kDegToRad;

    const double s1 = std::sin(dphi / 2.0);
    const double s2 = std::sin(dlambda / 2.0);
    const double h = s1 * s1 + std::cos(phi1) * std::cos(phi2) * s2 * s2;
    return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(h)));
}

double user_doc_distance(const UserLocation& user, const corpus::ChunkMetadata& doc_meta,
                         double max_distance_km) {
    for (const auto& user_tag : user.region_tags) {
        for (const auto& doc_tag : doc_meta.region_tags) {
            if (user_tag.code == doc_tag.code) return 0.0;
        }
    }
    if (doc_meta.centroid) {
        return haversine_km(user.point, *doc_meta.centroid);
    }
    return max_distance_km;
}

double normalize_distance(double km, double scale_km) {
    if (!(scale_km > 0.0)) {
        throw std::invalid_argument("distance scale must be positive");
    }
    return km / scale_km;
}

double s_distance(double d) {
    if (d < 0.0) {
        throw std::invalid_argument("normalized distance must be non-negative");
    }
    return 1.0 / (1.0 + d);
}

} // namespace georag::geo
