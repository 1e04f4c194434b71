#pragma once

#include <string>
#include <vector>

namespace georag::geo {

/// A latitude/longitude pair in degrees. Ranges are enforced on construction.
class GeoPoint {
public:
    GeoPoint(double lat_deg, double lon_deg);

    double lat() const { return lat_; }
    double lon() const { return lon_; }

    bool operator==(const GeoPoint& other) const {
        return lat_ == other.lat_ && lon_ == other.lon_;
    }

private:
    double lat_;
    double lon_;
};

/// An administrative region code such as "US-NC". Codes are uppercased on
/// construction so tag matching is case-insensitive.
struct RegionTag {
    explicit RegionTag(std::string code_in, std::string name_in = "");

    std::string code;
    std::string name;

    bool operator==(const RegionTag& other) const { return code == other.code; }
};

/// Where the querying user is: a point plus any region tags they belong to.
struct UserLocation {
    GeoPoint point;
    std::vector<RegionTag> region_tags;
};

} // namespace georag::geo
