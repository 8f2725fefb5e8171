#include <doctest.h>

#include <cmath>
#include <random>

#include "hd/geometry.hpp"

using namespace hd;
using namespace hd::geometry;

TEST_CASE("membership at the named points") {
    Membership focal = membership(make_rational(-1, 2), Rational(3));
    CHECK(focal.in_d);
    CHECK(disc_locus(make_rational(-1, 2), Rational(3)) == -1);

    Rational vx = make_rational(-3, 4);
    Rational vy = make_rational(13, 4);
    Membership vertex = membership(vx, vy);
    CHECK(disc_locus(vx, vy) == 0);
    CHECK_FALSE(vertex.in_d);
    CHECK(vertex.in_d1);
    CHECK(vertex.in_k);
    CHECK(root_locus(vx, vy) == make_rational(217, 16));

    Membership origin = membership(Rational(0), Rational(0));
    CHECK(origin.in_d);
    CHECK_FALSE(origin.in_d1);
    CHECK(origin.in_k);
    CHECK(disc_locus(Rational(0), Rational(0)) == make_rational(-7, 4));
}

TEST_CASE("elimination identity reproduces the quartic") {
    RatPoly y{Rational(0), Rational(1)};
    RatPoly x{Rational(0), Rational(0), make_rational(1, 4)};
    RatPoly s = x + y;
    RatPoly f_sub = s * s - x * Rational(7) - y * Rational(3) - RatPoly{make_rational(7, 4)};
    CHECK(f_sub * Rational(16) == intersection_quartic());
}

TEST_CASE("the four boundary intersections") {
    KDomain k = k_intersections(make_rational(1, 100));
    REQUIRE(k.points.size() == 4);
    const std::pair<double, double> expected[4] = {
        {0.19, -0.87}, {0.39, -1.26}, {2.12, 2.91}, {19.29, -8.78}};
    for (int i = 0; i < 4; ++i) {
        const KPoint& pt = k.points[static_cast<size_t>(i)];
        CHECK(std::abs(Rational(pt.x).get_d() - expected[i].first) <= 0.0101);
        CHECK(std::abs(Rational(pt.y).get_d() - expected[i].second) <= 0.0101);
        CHECK(abs(disc_locus(pt.x, pt.y)) < make_rational(1, 100));
        CHECK(root_locus(pt.x, pt.y) == 0);
    }
}

TEST_CASE("ordinates obey Vieta") {
    KDomain k = k_intersections(make_rational(1, 10000));
    Rational sum(0);
    Rational prod(1);
    for (const KPoint& pt : k.points) {
        sum += pt.y;
        prod *= pt.y;
    }
    CHECK(abs(sum + 8) < make_rational(1, 100));
    CHECK(abs(prod + 28) < make_rational(1, 100));
}

TEST_CASE("max of x + y on K") {
    Rational ms = max_sum_on_k(make_rational(1, 100));
    CHECK(abs(ms - make_rational(1051, 100)) <= make_rational(1, 100));
    CHECK(ms > make_rational(503, 100));

    KDomain k = k_intersections(make_rational(1, 100));
    Rational best = k.points[0].x + k.points[0].y;
    for (const KPoint& pt : k.points) {
        if (pt.x + pt.y > best) {
            best = pt.x + pt.y;
        }
    }
    CHECK(ms == best);
}

TEST_CASE("intersections stay inside the compact window, far points never do") {
    KDomain k = k_intersections(make_rational(1, 100));
    for (const KPoint& pt : k.points) {
        CHECK(pt.x >= 0);
        CHECK(pt.x <= 20);
        CHECK(pt.y >= -9);
        CHECK(pt.y <= 3);
    }
    // The bounded region cornered by the four intersection points is
    // cl{F<0} /\ {G<=0} (the two parabola interiors open along different
    // rays, so their intersection has trivial recession cone). Note that
    // {F<=0} /\ {G>=0} is NOT bounded: (10^5, -10^5) lies in both open
    // sets, so membership().in_k alone is no boundedness certificate.
    {
        Membership far = membership(Rational(100000), Rational(-100000));
        CHECK(far.in_d);
        CHECK(far.in_d1);
        CHECK(far.in_k);
    }
    std::mt19937_64 rng(71);
    std::uniform_int_distribution<long> mag(100, 100000);
    std::uniform_int_distribution<int> signs(0, 1);
    for (int i = 0; i < 2000; ++i) {
        Rational x(mag(rng) * (signs(rng) ? 1 : -1));
        Rational y(mag(rng) * (signs(rng) ? 1 : -1));
        bool in_bounded = sgn(disc_locus(x, y)) <= 0 && sgn(root_locus(x, y)) <= 0;
        CHECK_FALSE(in_bounded);
    }
}

TEST_CASE("bad tolerance rejected") {
    CHECK_THROWS_AS(k_intersections(Rational(0)), DomainError);
}

TEST_CASE("domain JSON shape") {
    nlohmann::json j = to_json(k_intersections(make_rational(1, 100)));
    CHECK(j["points"].size() == 4);
    CHECK(j["tol"] == "0.010000");
    CHECK(j["max_sum"].get<std::string>().substr(0, 5) == "10.51");
}
