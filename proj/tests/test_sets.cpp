#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <limits>
#include <random>
#include <vector>

#include "pmfp/errors.hpp"
#include "pmfp/set_descriptor.hpp"
#include "pmfp/text_specs.hpp"

using namespace pmfp;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool sorted_unique(const std::vector<double>& v, double tol) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] - v[i - 1] <= tol) return false;
    }
    return true;
}

// Random union of 1..3 intervals and 0..2 isolated points in [-5, 5].
SetDescriptor random_set(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coord(-5.0, 5.0);
    std::uniform_int_distribution<int> count(1, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    SetDescriptor s;
    const int n_iv = count(rng);
    for (int i = 0; i < n_iv; ++i) {
        double lo = coord(rng), hi = coord(rng);
        if (lo > hi) std::swap(lo, hi);
        s.add_interval(lo, hi, coin(rng) == 1, coin(rng) == 1);
    }
    const int n_pt = count(rng) - 1;
    for (int i = 0; i < n_pt; ++i) s.add_point(coord(rng));
    return s;
}

}  // namespace

TEST_CASE("membership gives closed endpoints slack and open endpoints none") {
    const auto half = SetDescriptor::interval(0.0, 1.0, true, false);
    CHECK(half.contains(0.0));
    CHECK(half.contains(-1e-10));     // closed end, within tol
    CHECK_FALSE(half.contains(-1e-8));
    CHECK(half.contains(1.0 - 1e-12));
    CHECK_FALSE(half.contains(1.0));  // open end is exact
    CHECK_FALSE(half.contains(1.0 + 1e-12));

    const auto pts = SetDescriptor::point_set({1.5, 3.0});
    CHECK(pts.contains(1.5));
    CHECK(pts.contains(1.5 + 1e-10));
    CHECK_FALSE(pts.contains(1.6));
    CHECK_FALSE(SetDescriptor{}.contains(0.0));
    CHECK(SetDescriptor{}.is_empty());
}

TEST_CASE("interval builders reject reversed endpoints") {
    CHECK_THROWS_AS(SetDescriptor::closed(1.0, 0.0), ArgumentError);
    CHECK_THROWS_AS(SetDescriptor{}.add_interval(2.0, 1.0), ArgumentError);
}

TEST_CASE("sample lays an even grid with exact closed endpoints") {
    const auto grid = sample(SetDescriptor::closed(0.0, 1.0), 5);
    REQUIRE(grid.size() == 5);
    CHECK(grid.front() == 0.0);
    CHECK(grid[2] == 0.5);
    CHECK(grid.back() == 1.0);

    CHECK(sample(SetDescriptor::closed(2.0, 2.0), 7) == std::vector<double>{2.0});
    CHECK(sample(SetDescriptor::closed(0.0, 1.0), 1) == std::vector<double>{0.0});
    CHECK(sample(SetDescriptor{}, 10).empty());
    CHECK_THROWS_AS(sample(SetDescriptor::closed(0.0, 1.0), 0), ArgumentError);
}

TEST_CASE("sample pulls open endpoints inward and keeps them out") {
    const auto s = SetDescriptor::interval(0.0, 1.0, false, false);
    const auto grid = sample(s, 9);
    REQUIRE(!grid.empty());
    CHECK(grid.front() > 0.0);
    CHECK(grid.back() < 1.0);
    for (double x : grid) CHECK(s.contains(x));
}

TEST_CASE("sample truncates an unbounded interval to a finite window") {
    SetDescriptor ray;
    ray.add_interval(0.0, kInf);
    const auto grid = sample(ray, 50);
    REQUIRE(grid.size() == 50);
    CHECK(grid.front() == 0.0);
    CHECK(grid.back() == kUnboundedSpan);
}

TEST_CASE("sample merges touching intervals and appends isolated points") {
    SetDescriptor s;
    s.add_interval(0.0, 1.0).add_interval(1.0, 2.0).add_point(5.0).add_point(0.5);
    const auto grid = sample(s, 3);
    // 0, 0.5, 1 from the first interval; 1 deduped, 1.5, 2 from the second;
    // 0.5 deduped, 5 appended.
    CHECK(grid == std::vector<double>{0.0, 0.5, 1.0, 1.5, 2.0, 5.0});
}

TEST_CASE("sampled points are members, sorted, separated") {
    std::mt19937_64 rng(8675309);
    for (int trial = 0; trial < 200; ++trial) {
        const auto s = random_set(rng);
        const std::size_t density = 1 + static_cast<std::size_t>(trial % 40);
        const auto grid = sample(s, density);
        CHECK(sorted_unique(grid, kEqTol));
        for (double x : grid) {
            CAPTURE(trial);
            CAPTURE(x);
            CHECK(s.contains(x));
        }
    }
}

TEST_CASE("set_union contains both operands") {
    const auto a = SetDescriptor::closed(0.0, 1.0).flag_closed();
    const auto b = SetDescriptor::point_set({3.0}).flag_closed();
    const auto u = set_union(a, b);
    CHECK(u.contains(0.5));
    CHECK(u.contains(3.0));
    CHECK_FALSE(u.contains(2.0));
    CHECK(u.declared_closed);
    CHECK_FALSE(set_union(a, SetDescriptor::interval(2.0, 3.0, true, false))
                    .declared_closed);
}

TEST_CASE("set_intersect clips intervals and keeps closedness at shared ends") {
    const auto a = SetDescriptor::closed(0.0, 1.0);
    const auto r = set_intersect(a, SetDescriptor::closed(0.5, 2.0));
    REQUIRE(r.intervals.size() == 1);
    CHECK(r.intervals[0].lo == 0.5);
    CHECK(r.intervals[0].hi == 1.0);

    // Touching closed endpoints leave a single point.
    const auto touch = set_intersect(a, SetDescriptor::closed(1.0, 2.0));
    CHECK(touch.intervals.empty());
    CHECK(touch.points == std::vector<double>{1.0});

    // An open end at the touch point leaves nothing.
    const auto open_touch =
        set_intersect(SetDescriptor::interval(0.0, 1.0, true, false),
                      SetDescriptor::closed(1.0, 2.0));
    CHECK(open_touch.is_empty());

    CHECK(set_intersect(a, SetDescriptor::closed(3.0, 4.0)).is_empty());

    // Isolated points survive only inside the other operand.
    const auto with_pts =
        set_intersect(a, SetDescriptor::point_set({0.25, 7.0}));
    CHECK(with_pts.points == std::vector<double>{0.25});
}

TEST_CASE("set_subtract flips closedness at the cut") {
    const auto diff =
        set_subtract(SetDescriptor::closed(0.0, 2.0), SetDescriptor::closed(1.0, 3.0));
    REQUIRE(diff.intervals.size() == 1);
    CHECK(diff.intervals[0].lo == 0.0);
    CHECK(diff.intervals[0].hi == 1.0);
    CHECK(diff.intervals[0].lo_closed);
    CHECK_FALSE(diff.intervals[0].hi_closed);

    const auto hole = set_subtract(SetDescriptor::closed(0.0, 3.0),
                                   SetDescriptor::interval(1.0, 2.0, false, false));
    REQUIRE(hole.intervals.size() == 2);
    CHECK(hole.intervals[0].hi == 1.0);
    CHECK(hole.intervals[0].hi_closed);
    CHECK(hole.intervals[1].lo == 2.0);
    CHECK(hole.intervals[1].lo_closed);

    // Removing one point splits the interval into two half-open pieces.
    const auto split = set_subtract(SetDescriptor::closed(0.0, 2.0),
                                    SetDescriptor::point_set({1.0}));
    REQUIRE(split.intervals.size() == 2);
    CHECK_FALSE(split.contains(1.0, 0.0));
    CHECK(split.contains(0.999999));
    CHECK(split.contains(1.000001));

    // Operand points vanish only when the subtrahend covers them.
    const auto pts = set_subtract(SetDescriptor::point_set({0.5, 5.0}),
                                  SetDescriptor::closed(0.0, 1.0));
    CHECK(pts.points == std::vector<double>{5.0});
}

TEST_CASE("set algebra properties hold on sampled points") {
    std::mt19937_64 rng(1318);
    for (int trial = 0; trial < 150; ++trial) {
        const auto a = random_set(rng);
        const auto b = random_set(rng);
        const auto inter = set_intersect(a, b);
        for (double x : sample(inter, 7)) {
            CAPTURE(trial);
            CHECK(a.contains(x));
            CHECK(b.contains(x));
        }
        const auto diff = set_subtract(a, b);
        for (double x : sample(diff, 7)) {
            CAPTURE(trial);
            CHECK(a.contains(x));
            // Exact membership: sampling pulls open cut points in by tol,
            // which closed-end slack in b would otherwise reabsorb.
            CHECK_FALSE(b.contains(x, 0.0));
        }
    }
}

TEST_CASE("to_string round trips through the set parser") {
    SetDescriptor s;
    s.add_interval(0.0, 1.0).add_point(1.5);
    CHECK(to_string(s) == "[0,1] u {1.5}");
    CHECK(to_string(SetDescriptor{}) == "{}");
    CHECK(to_string(SetDescriptor::interval(0.5, 2.0, false, true)) == "(0.5,2]");

    const auto parsed = parse_set_spec(to_string(s));
    CHECK(parsed.contains(0.5));
    CHECK(parsed.contains(1.5));
    CHECK_FALSE(parsed.contains(1.2));
}

TEST_CASE("set specs accept interval unions and point lists") {
    const auto s = parse_set_spec("[0,1) u {1.5, 2.5}");
    REQUIRE(s.intervals.size() == 1);
    CHECK_FALSE(s.intervals[0].hi_closed);
    CHECK(s.points == std::vector<double>{1.5, 2.5});

    const auto commas = parse_set_spec("[3,4],{1.5}");
    CHECK(commas.contains(3.5));
    CHECK(commas.contains(1.5));

    const auto open = parse_set_spec("(0, 1)");
    CHECK_FALSE(open.contains(0.0));
    CHECK_FALSE(open.contains(1.0));
    CHECK(open.contains(0.5));

    CHECK_THROWS_AS(parse_set_spec(""), ArgumentError);
    CHECK_THROWS_AS(parse_set_spec("[1"), ArgumentError);
    CHECK_THROWS_AS(parse_set_spec("[2,1]"), ArgumentError);
    CHECK_THROWS_AS(parse_set_spec("{a}"), ArgumentError);
    CHECK_THROWS_AS(parse_set_spec("0,1"), ArgumentError);
}

TEST_CASE("decomposition specs split on semicolons and wrap") {
    const auto d = parse_decomp_spec("[0,0.5];[0.5,1]");
    REQUIRE(d.size() == 2);
    CHECK(d.sets[0].contains(0.25));
    CHECK(d.sets[1].contains(0.75));
    CHECK(&d.at_wrapped(2) == &d.sets[0]);

    CHECK(parse_decomp_spec("[0,1]").size() == 1);
    CHECK_THROWS_AS(parse_decomp_spec(""), ArgumentError);
    CHECK_THROWS_AS(parse_decomp_spec("[0,1];;[2,3]"), ArgumentError);
}
