#pragma once

#include <georag/corpus/document.hpp>
#include <georag/geo/point.hpp>

namespace georag::geo {

/// Mean Earth radius, km.
constexpr double kEarthRadiusKm = 6371.0;

/// Half Earth circumference: the distance assigned to documents with no geo
/// metadata at all, so they are penalized but still retrievable.
constexpr double kDefaultMaxDistanceKm = 20015.0;
constexpr double kDefaultDistanceScaleKm = 1000.0;

struct GeoConfig {
    double distance_scale_km = kDefaultDistanceScaleKm;
    double max_distance_km = kDefaultMaxDistanceKm;
};

/// Great-circle distance on a sphere of radius kEarthRadiusKm.
double haversine_km(const GeoPoint& a, const GeoPoint& b);

/// Kilometres between a user and a document:
///   0                         when any user region tag matches the document,
///   haversine to the centroid otherwise,
///   max_distance_km           when there is no centroid to measure against.
double user_doc_distance(const UserLocation& user, const corpus::ChunkMetadata& doc_meta,
                         double max_distance_km = kDefaultMaxDistanceKm);

/// d = km / scale_km. Rejects non-positive scales.
double normalize_distance(double km, double scale_km);

/// Distance-decay score 1 / (1 + d): 1 at d = 0, strictly decreasing, never
/// reaching 0. Rejects negative d.
double s_distance(double d);

} // namespace georag::geo
