#pragma once

// Planar primitives: points, point sets, and the half-open cone partition
// used by cone-based spanner constructions.

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace conespan {

inline constexpr double pi = std::numbers::pi_v<double>;
inline constexpr double two_pi = 2.0 * pi;

struct Point {
    int id = 0;
    double x = 0.0;
    double y = 0.0;
};

inline double euclidean_distance(const Point& p, const Point& q) {
    return std::hypot(q.x - p.x, q.y - p.y);
}

// Ordered, validated point set. Ids are contiguous from 0 and follow input
// order; coordinates must be finite and pairwise distinct.
class PointSet {
public:
    PointSet() = default;

    explicit PointSet(std::vector<Point> points) : points_(std::move(points)) {
        for (std::size_t i = 0; i < points_.size(); ++i) {
            Point& p = points_[i];
            p.id = static_cast<int>(i);
            if (!std::isfinite(p.x) || !std::isfinite(p.y))
                throw std::invalid_argument("non-finite coordinate at index " + std::to_string(i));
        }
        for (std::size_t i = 0; i < points_.size(); ++i)
            for (std::size_t j = i + 1; j < points_.size(); ++j)
                if (points_[i].x == points_[j].x && points_[i].y == points_[j].y)
                    throw std::invalid_argument("coincident points (ids " + std::to_string(i) +
                                                ", " + std::to_string(j) + ")");
    }

    static PointSet from_xy(const std::vector<std::pair<double, double>>& xy) {
        std::vector<Point> pts;
        pts.reserve(xy.size());
        for (std::size_t i = 0; i < xy.size(); ++i)
            pts.push_back(Point{static_cast<int>(i), xy[i].first, xy[i].second});
        return PointSet(std::move(pts));
    }

    int size() const { return static_cast<int>(points_.size()); }
    const Point& operator[](int id) const { return points_[static_cast<std::size_t>(id)]; }
    const std::vector<Point>& points() const { return points_; }
    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

private:
    std::vector<Point> points_;
};

// k equiangular half-open cones; cone i covers [i, i+1) * 2*pi/k, measured
// counterclockwise from the positive x-axis.
struct ConeScheme {
    int k;

    explicit ConeScheme(int cone_count) : k(cone_count) {
        if (k < 3) throw std::invalid_argument("cone count must be at least 3");
    }

    double theta() const { return two_pi / k; }
};

// Polar angle of (target - apex), normalized to [0, 2*pi). A target due east
// of the apex gives exactly 0.
inline double angle_ccw(const Point& apex, const Point& target) {
    const double dx = target.x - apex.x;
    const double dy = target.y - apex.y;
    if (dx == 0.0 && dy == 0.0) throw std::invalid_argument("degenerate direction");
    double a = std::atan2(dy, dx);
    if (a < 0.0) a += two_pi;
    if (a >= two_pi) a = 0.0;  // rounding of atan2(-tiny, x) + 2*pi
    return a;
}

// Index of the half-open cone containing the direction apex -> target.
// Boundary angles belong to the higher-indexed cone (lower bound closed);
// the computed angle decides, no snapping.
inline int cone_index(const Point& apex, const Point& target, const ConeScheme& scheme) {
    const double a = angle_ccw(apex, target);
    int idx = static_cast<int>(std::floor(a / scheme.theta()));
    if (idx >= scheme.k) idx = 0;
    if (idx < 0) idx = 0;
    return idx;
}

}  // namespace conespan
