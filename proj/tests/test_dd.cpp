#include "pcone/dd.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace pcone;
using detail::IntVec;

namespace {

std::vector<IntVec> sorted(std::vector<IntVec> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("primitive scaling") {
    CHECK(detail::primitive({6, -4, 2}) == IntVec{3, -2, 1});
    CHECK(detail::primitive({0, 0}) == IntVec{0, 0});
    CHECK(detail::integerize({Rational(1, 2), Rational(1, 3)}) == IntVec{3, 2});
    CHECK(detail::integerize({Rational(-2), Rational(4)}) == IntVec{-1, 2});
}

TEST_CASE("no constraints means the whole space") {
    const auto cone = detail::polar_generators({}, 3);
    CHECK(cone.rays.empty());
    CHECK(cone.lines.size() == 3);
}

TEST_CASE("half space splits into a ray and a lineality plane") {
    // {x : x_0 <= 0} in R^3
    const auto cone = detail::polar_generators({{1, 0, 0}}, 3);
    REQUIRE(cone.rays.size() == 1);
    CHECK(cone.rays[0] == IntVec{-1, 0, 0});
    CHECK(cone.lines.size() == 2);
}

TEST_CASE("simplicial cone") {
    // {x <= 0, y <= 0} in R^2: the third quadrant
    const auto cone = detail::polar_generators({{1, 0}, {0, 1}}, 2);
    CHECK(cone.lines.empty());
    CHECK(sorted(cone.rays) == sorted({{-1, 0}, {0, -1}}));
}

TEST_CASE("infeasible strict side collapses to the origin") {
    // x <= 0, -x <= 0, and x + y <= 0 with -y <= 0 leaves only {0} in x,
    // a single ray in y... make a genuinely trivial cone: x<=0, -x<=0, y<=0, -y<=0
    const auto cone = detail::polar_generators({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, 2);
    CHECK(cone.rays.empty());
    CHECK(cone.lines.empty());
}

TEST_CASE("adjacency tests agree") {
    std::mt19937_64 eng(13);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int dim = 2; dim <= 5; ++dim) {
        for (int iter = 0; iter < 60; ++iter) {
            std::uniform_int_distribution<int> nrows(1, 2 * dim);
            std::vector<IntVec> rows(static_cast<std::size_t>(nrows(eng)));
            for (auto& r : rows) {
                r.resize(static_cast<std::size_t>(dim));
                for (auto& c : r) c = entry(eng);
            }
            const auto fast = detail::polar_generators(rows, dim,
                                                       detail::AdjacencyTest::Combinatorial);
            const auto slow = detail::polar_generators(rows, dim, detail::AdjacencyTest::Rank);
            CHECK(sorted(fast.rays) == sorted(slow.rays));
            CHECK(sorted(fast.lines) == sorted(slow.lines));
        }
    }
}

TEST_CASE("generators satisfy their constraints") {
    std::mt19937_64 eng(29);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int iter = 0; iter < 100; ++iter) {
        const int dim = 2 + static_cast<int>(eng() % 4);
        std::vector<IntVec> rows(1 + eng() % 7);
        for (auto& r : rows) {
            r.resize(static_cast<std::size_t>(dim));
            for (auto& c : r) c = entry(eng);
        }
        const auto cone = detail::polar_generators(rows, dim);
        for (const auto& ray : cone.rays) {
            CHECK(!detail::is_zero(ray));
            for (const auto& row : rows) CHECK(detail::idot(row, ray) <= 0);
        }
        for (const auto& line : cone.lines) {
            for (const auto& row : rows) CHECK(detail::idot(row, line) == 0);
        }
    }
}
