#ifndef HD_QUADRATIC_HPP
#define HD_QUADRATIC_HPP

#include <optional>
#include <utility>

#include <json.hpp>

#include "hd/numfn.hpp"
#include "hd/ratpoly.hpp"

namespace hd {
namespace quad {

/// Parameters of h(j) = a j^2 + b j + e with a, e > 0, together with
/// the normalized ratios alpha = a/e, beta = b/e and the discriminant
/// delta = b^2 - 4ae of h itself.
struct QuadParams {
    Integer a;
    Integer b;
    Integer e;
    Rational alpha;
    Rational beta;
    Integer delta;

    QuadParams(Integer a_, Integer b_, Integer e_);

    Rational sum() const { return alpha + beta; }
};

/// Five-way nonnegativity case split on (sign of b, sign of a+b, sign
/// of delta).
enum class QuadCase {
    BNonneg,          // b >= 0: h strictly positive
    ANonnegBNeg,      // b < 0 <= a+b: roots squeezed into (0,1), h positive
    SumNegDeltaNeg,   // a+b < 0, delta < 0: no real roots, h positive
    SumNegDeltaZero,  // a+b < 0, delta = 0: h >= 0, zero only at -b/2a if integral
    SumNegDeltaPos,   // a+b < 0, delta > 0: valid iff the root interval
                      // avoids the integers (delta <= a^2 and within one gap)
};

struct QuadClassification {
    QuadParams params;
    QuadCase kase;
    bool valid;
    /// floor of the smaller root, for SumNegDeltaPos.
    std::optional<Integer> ell;
    /// the integer zero of h, for SumNegDeltaZero with 2a | -b.
    std::optional<Integer> zero_at;

    /// Exact root interval [(-b - sqrt(delta))/2a, (-b + sqrt(delta))/2a]
    /// rendered at the given decimal precision; present when delta > 0.
    std::optional<std::pair<std::string, std::string>> root_interval_decimal(
        int places) const;
};

/// Decides h(j) >= 0 for all j >= 0 exactly, reporting which case applied.
QuadClassification classify(const QuadParams& p);

/// (1/e) beta(x, 2) extended to a real quadratic:
///   x^2/2 - (alpha + beta + 3/2) x + (5 alpha + 3 beta + 2).
/// The (alpha, beta) overloads accept arbitrary rational parameters,
/// not just ratios of integer triples.
Rational beta2_scaled(const Rational& alpha, const Rational& beta, const Rational& x);
Rational beta2_scaled(const QuadParams& p, const Rational& x);

/// Discriminant (alpha+beta)^2 - 7 alpha - 3 beta - 7/4 of beta2_scaled.
Rational beta2_disc(const Rational& alpha, const Rational& beta);
Rational beta2_disc(const QuadParams& p);

/// Real roots x1 <= x2 of beta2_scaled: nullopt when the discriminant is
/// negative, a coincident exact pair when it vanishes, rational roots as
/// exact degenerate intervals, and isolated intervals of width <= tol
/// otherwise. beta2_scaled(d) < 0 iff d lies strictly between the roots.
std::optional<std::pair<RootInterval, RootInterval>> beta2_roots(
    const Rational& alpha, const Rational& beta, const Rational& tol);
std::optional<std::pair<RootInterval, RootInterval>> beta2_roots(
    const QuadParams& p, const Rational& tol);

/// Smallest integer d in [3, c(h)+1] with beta2_scaled(d) < 0, whence
/// hdepth(h) < d. Requires a quadratic h with alpha + beta >= 2.
std::optional<Integer> upper_from_beta2(const NumFn& h);

/// (1/e) beta(x, 3) extended to a real cubic:
///   alpha (x^2/2 - 11x/2 + 18) + beta (x^2/2 - 7x/2 + 8)
///   + (-x^3/6 + x^2 - 17x/6 + 4).
Rational beta3_scaled(const Rational& alpha, const Rational& beta, const Rational& x);
Rational beta3_scaled(const QuadParams& p, const Rational& x);

/// Proven hdepth bound by coefficient case: 8 when b >= 0, 11 when
/// b < 0 and b^2 <= 4ae, 13 otherwise.
int bound_for(const QuadParams& p);

/// The family h_k(j) = k^2 j^2 + (k - k^2) j + 1 for k >= 4: alpha+beta
/// grows without bound yet hdepth stays 5, because beta(6, 3) evaluates
/// to -2k^2 + 5k - 13 < 0 while row 5 stays nonnegative. The discriminant
/// of h_k itself is k^4 - 2k^3 - 3k^2 > 0.
std::pair<NumFn, HdepthReport> large_sum_family(const Integer& k);

/// QuadParams from a validated quadratic NumFn.
QuadParams params_from(const NumFn& h);

nlohmann::json to_json(const QuadClassification& c);

}  // namespace quad
}  // namespace hd

#endif
