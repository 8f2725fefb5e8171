#include "hd/geometry.hpp"

#include <algorithm>

namespace hd {
namespace geometry {

Rational disc_locus(const Rational& x, const Rational& y) {
    Rational s = x + y;
    return s * s - 7 * x - 3 * y - Rational(7, 4);
}

Rational root_locus(const Rational& x, const Rational& y) {
    return y * y - 4 * x;
}

Membership membership(const Rational& x, const Rational& y) {
    Rational f = disc_locus(x, y);
    Rational g = root_locus(x, y);
    return Membership{sgn(f) < 0, sgn(g) > 0, sgn(f) <= 0 && sgn(g) >= 0};
}

RatPoly intersection_quartic() {
    return RatPoly{Rational(-28), Rational(-48), Rational(-12), Rational(8),
                   Rational(1)};
}

KDomain k_intersections(const Rational& tol) {
    if (sgn(tol) <= 0) {
        throw DomainError("k_intersections: tolerance must be positive");
    }
    RatPoly quartic = intersection_quartic();
    std::vector<RootInterval> roots = sturm_isolate(quartic, tol / 64);
    if (roots.size() != 4) {
        throw Error("k_intersections: expected 4 intersection ordinates, got " +
                    std::to_string(roots.size()));
    }
    const Rational margin = tol / 2;
    KDomain out;
    out.tol = tol;
    for (RootInterval& iv : roots) {
        Rational y = iv.midpoint();
        // |F(y^2/4, y)| = |quartic(y)| / 16; tighten until under margin.
        while (abs(quartic.eval(y)) >= 16 * margin) {
            iv = refine_interval(quartic, iv, iv.width() / 4);
            y = iv.midpoint();
        }
        out.points.push_back(KPoint{y * y / 4, y});
    }
    std::sort(out.points.begin(), out.points.end(),
              [](const KPoint& a, const KPoint& b) { return a.x < b.x; });
    out.max_sum = out.points[0].x + out.points[0].y;
    for (const KPoint& pt : out.points) {
        Rational s = pt.x + pt.y;
        if (s > out.max_sum) {
            out.max_sum = s;
        }
    }
    return out;
}

Rational max_sum_on_k(const Rational& tol) {
    return k_intersections(tol).max_sum;
}

nlohmann::json to_json(const KDomain& k) {
    nlohmann::json points = nlohmann::json::array();
    for (const KPoint& pt : k.points) {
        points.push_back({{"x", decimal_string(pt.x, 6)},
                          {"y", decimal_string(pt.y, 6)}});
    }
    return nlohmann::json{{"points", points},
                          {"max_sum", decimal_string(k.max_sum, 6)},
                          {"tol", decimal_string(k.tol, 6)}};
}

}  // namespace geometry
}  // namespace hd
