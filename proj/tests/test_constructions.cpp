#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "conespan/construction.hpp"
#include "conespan/constructions.hpp"
#include "conespan/metrics.hpp"
#include "conespan/pointset_io.hpp"

using namespace conespan;

TEST_CASE("appendix point set") {
    const NamedPointSet s = y5_lower_bound_points();
    REQUIRE(s.points.size() == 34);
    CHECK(s.points[0].x == 0.0);
    CHECK(s.points[0].y == 0.0);
    CHECK(s.points[1].x == 252.0);
    CHECK(s.points[1].y == 82.0);
    CHECK(s.name == "y5-appendix");
    CHECK(s.expected_k == 5);
    CHECK(s.labels.at(0) == "u");
    CHECK(s.labels.at(3) == "z");

    // checksum discriminates against edits
    auto tampered = detail::y5_appendix_table();
    tampered[17].second += 1.0;
    CHECK(detail::coordinate_checksum(tampered) != detail::y5_appendix_checksum);
    CHECK(detail::coordinate_checksum(detail::y5_appendix_table()) ==
          detail::y5_appendix_checksum);
}

TEST_CASE("appendix set is byte-exact to the shipped data file") {
    const NamedPointSet s = y5_lower_bound_points();
    std::ifstream in(std::string(CONESPAN_DATA_DIR) + "/y5_appendix.pts", std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == format_point_file(s.points, s.labels));

    const ParsedPointFile pf = parse_point_text(buf.str());
    REQUIRE(pf.points.size() == 34);
    for (int i = 0; i < 34; ++i) {
        CHECK(pf.points[i].x == s.points[i].x);
        CHECK(pf.points[i].y == s.points[i].y);
    }
    CHECK(pf.labels == s.labels);
}

TEST_CASE("appendix regression: connected and ratio above 2.87") {
    const NamedPointSet s = y5_lower_bound_points();
    const GeoGraph g = build_undirected_yao(s.points, ConeScheme(5));
    const StretchReport rep = spanning_ratio(g, s.points);
    CHECK(rep.connected);
    CHECK(rep.ratio > 2.87);
    CHECK(rep.ratio == Catch::Approx(2.8766265012969177).epsilon(1e-12));
    CHECK(rep.witness_source == 0);
    CHECK(rep.witness_target == 1);
}

TEST_CASE("parametric six-cone family") {
    const NamedPointSet s = y6_lower_bound_points(1e-2);
    REQUIRE(s.points.size() == 4);
    const ConeScheme six(6);
    CHECK(cone_index(s.points[0], s.points[1], six) == 1);
    CHECK(cone_index(s.points[1], s.points[3], six) == 4);
    CHECK(s.expected_k == 6);

    const GeoGraph g = build_undirected_yao(s.points, six);
    std::set<std::pair<int, int>> edges;
    for (const GeoEdge& e : g.edges) edges.insert({e.src, e.dst});
    CHECK(edges ==
          std::set<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(!edges.contains({0, 1}));

    const StretchReport rep = spanning_ratio(g, s.points);
    CHECK(rep.witness_source == 0);
    CHECK(rep.witness_target == 1);
    CHECK(rep.ratio >= 1.97);
    CHECK(rep.ratio <= 2.0);

    const double fine = spanning_ratio(build_undirected_yao(y6_lower_bound_points(1e-6).points, six),
                                       y6_lower_bound_points(1e-6).points)
                            .ratio;
    CHECK(std::abs(fine - 2.0) <= 1e-3);

    CHECK_THROWS_AS(y6_lower_bound_points(0.0), std::invalid_argument);
    CHECK_THROWS_AS(y6_lower_bound_points(0.2), std::invalid_argument);
    CHECK_NOTHROW(y6_lower_bound_points(0.099));
}

TEST_CASE("six-cone family ratio approaches 2 monotonically") {
    const ConeScheme six(6);
    double prev = 0.0;
    for (double eps : {1e-2, 1e-3, 1e-4, 1e-5}) {
        const NamedPointSet s = y6_lower_bound_points(eps);
        const double r = spanning_ratio(build_undirected_yao(s.points, six), s.points).ratio;
        REQUIRE(r >= prev - 1e-9);
        prev = r;
    }
    CHECK(prev >= 2.0 - 1e-3);
}

TEST_CASE("random point sets") {
    const NamedPointSet two = random_points(2, 1);
    CHECK(two.points.size() == 2);

    // determinism
    const NamedPointSet a = random_points(100, 9, Distribution::Clustered);
    const NamedPointSet b = random_points(100, 9, Distribution::Clustered);
    REQUIRE(a.points.size() == b.points.size());
    for (int i = 0; i < a.points.size(); ++i) {
        CHECK(a.points[i].x == b.points[i].x);
        CHECK(a.points[i].y == b.points[i].y);
    }

    const NamedPointSet sq = random_points(500, 7, Distribution::UnitSquare);
    for (const Point& p : sq.points) {
        REQUIRE(p.x >= 0.0);
        REQUIRE(p.x <= 1.0);
        REQUIRE(p.y >= 0.0);
        REQUIRE(p.y <= 1.0);
    }

    const NamedPointSet disk = random_points(200, 3, Distribution::UnitDisk);
    for (const Point& p : disk.points) REQUIRE(p.x * p.x + p.y * p.y <= 1.0);

    CHECK_THROWS_AS(random_points(1, 0), std::invalid_argument);
}

TEST_CASE("perturbation search never loses ground") {
    const NamedPointSet base = y5_lower_bound_points();
    const GeoGraph g = build_undirected_yao(base.points, ConeScheme(5));
    const double base_ratio = spanning_ratio(g, base.points).ratio;

    const SearchResult zero = perturbation_search(base, 5, 0, StepSchedule{}, 3);
    CHECK(zero.ratio == base_ratio);
    for (int i = 0; i < base.points.size(); ++i) {
        CHECK(zero.points.points[i].x == base.points[i].x);
        CHECK(zero.points.points[i].y == base.points[i].y);
    }

    const SearchResult improved = perturbation_search(base, 5, 10000, StepSchedule{}, 3);
    CHECK(improved.ratio >= base_ratio);

    const NamedPointSet y6 = y6_lower_bound_points(1e-3);
    const double y6_base =
        spanning_ratio(build_undirected_yao(y6.points, ConeScheme(6)), y6.points).ratio;
    const SearchResult s6 = perturbation_search(y6, 6, 500, StepSchedule{}, 11);
    CHECK(s6.ratio >= y6_base);
}
