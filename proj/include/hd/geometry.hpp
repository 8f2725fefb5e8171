#ifndef HD_GEOMETRY_HPP
#define HD_GEOMETRY_HPP

#include <vector>

#include <json.hpp>

#include "hd/ratpoly.hpp"

namespace hd {
namespace geometry {

// Plane geometry of the compact region K in the (alpha, beta) parameter
// plane: K = cl{F < 0} /\ cl{G > 0}, bounded by the parabola
// F(x,y) = (x+y)^2 - 7x - 3y - 7/4 (the discriminant locus of the
// beta2 closed form) and G(x,y) = y^2 - 4x (the locus where the
// quadratic function itself acquires real roots).

Rational disc_locus(const Rational& x, const Rational& y);
Rational root_locus(const Rational& x, const Rational& y);

struct Membership {
    bool in_d;   // F(x,y) < 0
    bool in_d1;  // G(x,y) > 0
    bool in_k;   // F(x,y) <= 0 and G(x,y) >= 0
};

Membership membership(const Rational& x, const Rational& y);

/// Eliminating x via x = y^2/4 (the G = 0 branch) from F = 0 and
/// clearing denominators: 16 * F(y^2/4, y) = y^4 + 8y^3 - 12y^2 - 48y - 28.
RatPoly intersection_quartic();

struct KPoint {
    Rational x;
    Rational y;
};

struct KDomain {
    std::vector<KPoint> points;  // the 4 boundary intersections, x ascending
    Rational max_sum;            // max of x + y over the points
    Rational tol;
};

/// Isolates the quartic's four real roots, lifts each ordinate y to the
/// point (y^2/4, y), and refines until |F| at each point is below
/// tol/2 (|G| is identically zero there). Fails loudly if the root
/// count differs from four.
KDomain k_intersections(const Rational& tol);

/// Max of x + y over K, attained at a boundary intersection point
/// (the level lines x + y = const are parallel to the symmetry axis of
/// the F-parabola, so the maximum sits on the G-boundary corners).
Rational max_sum_on_k(const Rational& tol);

nlohmann::json to_json(const KDomain& k);

}  // namespace geometry
}  // namespace hd

#endif
