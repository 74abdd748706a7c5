#include <doctest.h>

#include <algorithm>

#include "unimodal/geometry.hpp"

using namespace unimodal;

namespace {

bool contains(const std::vector<GridPoint>& pts, long long x, long long y) {
    return std::find(pts.begin(), pts.end(), GridPoint{x, y}) != pts.end();
}

} // namespace

TEST_CASE("renormalized vertices of the size-20 example") {
    auto vs = renormalized_vertices(UnimodalSequence::from_parts({1, 2, 4, 5, 5, 2, 1}));
    CHECK(vs.n == 20);
    REQUIRE(vs.peak.size() == 2);
    CHECK(vs.peak[0] == GridPoint{0, 5});
    CHECK(vs.peak[1] == GridPoint{2, 5});

    auto all = vs.all();
    auto min_x = std::min_element(all.begin(), all.end(), [](auto a, auto b) {
                     return a.x < b.x;
                 })->x;
    auto max_x = std::max_element(all.begin(), all.end(), [](auto a, auto b) {
                     return a.x < b.x;
                 })->x;
    CHECK(min_x == -3);
    CHECK(max_x == 4);
    for (const auto& p : all) {
        CHECK(p.y >= 1);
        CHECK(p.y <= 5);
    }
}

TEST_CASE("unit square") {
    auto vs = renormalized_vertices(UnimodalSequence::from_parts({1}));
    CHECK(vs.n == 1);
    CHECK(vs.left.empty());
    CHECK(vs.right.empty());
    REQUIRE(vs.peak.size() == 2);
    CHECK(vs.peak[0] == GridPoint{0, 1});
    CHECK(vs.peak[1] == GridPoint{1, 1});
}

TEST_CASE("(1,2,1) vertices") {
    auto vs = renormalized_vertices(UnimodalSequence::from_parts({1, 2, 1}));
    CHECK(vs.n == 4); // scale 1/2
    REQUIRE(vs.peak.size() == 2);
    CHECK(vs.peak[0] == GridPoint{0, 2});
    CHECK(vs.peak[1] == GridPoint{1, 2});
    CHECK(contains(vs.left, -1, 1));
    CHECK(contains(vs.right, 1, 1));
    for (const auto& p : vs.all()) CHECK(p.y > 0);
}

TEST_CASE("overpartition profile") {
    auto op = Overpartition::from_parts({2, 1}, {true, false});
    auto vs = overpartition_profile(op);
    CHECK(vs.n == 3);
    CHECK(vs.left.empty());
    auto all = vs.all();
    CHECK(contains(all, 0, 2));
    CHECK(contains(all, 1, 2));
    CHECK(contains(all, 1, 1));
    CHECK(contains(all, 2, 1));
    CHECK(contains(all, 2, 0));

    auto single = overpartition_profile(Overpartition::from_parts({3}, {false}));
    CHECK(single.n == 3);
    REQUIRE(single.peak.size() == 2);
    CHECK(single.peak[0] == GridPoint{0, 3});
    CHECK(single.peak[1] == GridPoint{1, 3});

    auto vs5 = overpartition_profile(
        Overpartition::from_parts({2, 2, 1}, {false, false, false}));
    CHECK(vs5.n == 5);
    CHECK(contains(vs5.all(), 2, 2)); // column profile (2,2,1)
    CHECK(contains(vs5.all(), 3, 1));
}

TEST_CASE("vertex round trip") {
    for (long n = 1; n <= 12; ++n) {
        for (const auto& seq : enumerate_family(Family::Unrestricted, n)) {
            auto vs = renormalized_vertices(seq);
            CHECK(reconstruct_parts(vs) == seq.parts());
        }
    }
}

TEST_CASE("scale") {
    VertexSet vs;
    vs.n = 4;
    CHECK(vs.scale() == doctest::Approx(0.5));
}
