#ifndef HD_CUBIC_HPP
#define HD_CUBIC_HPP

#include <optional>
#include <utility>

#include <json.hpp>

#include "hd/numfn.hpp"
#include "hd/ratpoly.hpp"

namespace hd {
namespace cubic {

/// Parameters of h(j) = a j^3 + b j^2 + c j + e with a, e > 0, the
/// ratios alpha = a/e, beta = b/e, gamma = c/e, and the discriminant
/// delta_prime = 4b^2 - 12ac of h'.
struct CubicParams {
    Integer a;
    Integer b;
    Integer c;
    Integer e;
    Rational alpha;
    Rational beta;
    Rational gamma;
    Integer delta_prime;

    CubicParams(Integer a_, Integer b_, Integer c_, Integer e_);

    Rational sum() const { return alpha + beta + gamma; }
};

/// True iff b^2 <= 3ac, i.e. delta_prime <= 0, which makes h
/// nondecreasing on all of R.
bool is_nondecreasing(const CubicParams& p);

/// (1/e) beta(x, 2) extended to a real quadratic:
///   x^2/2 - (alpha+beta+gamma+3/2) x + (9 alpha + 5 beta + 3 gamma + 2).
/// The rational-parameter overloads accept arbitrary ratios.
Rational beta2_scaled(const Rational& alpha, const Rational& beta,
                      const Rational& gamma, const Rational& x);
Rational beta2_scaled(const CubicParams& p, const Rational& x);

/// Discriminant (alpha+beta+gamma)^2 - 15 alpha - 7 beta - 3 gamma - 7/4.
Rational beta2_disc(const Rational& alpha, const Rational& beta,
                    const Rational& gamma);
Rational beta2_disc(const CubicParams& p);

/// Smallest integer d in [3, c(h)+1] with beta2_scaled(d) < 0, whence
/// hdepth(h) < d. Requires a cubic h with alpha + beta + gamma >= 2.
std::optional<Integer> upper_from_beta2(const NumFn& h);

/// Decides 15 alpha + 7 beta + 3 gamma <= (39 + 16 sqrt(3)) * sum
/// exactly. Requires b < 0 and b^2 <= 3ac (where it always holds).
bool slope_inequality_holds(const CubicParams& p);

/// Checks the implication (sum >= 67) => (beta2_disc > 1/4) for
/// parameters with b < 0 and b^2 <= 3ac.
bool disc_quarter_implication_holds(const CubicParams& p);

/// Compares q against 39 + 16 sqrt(3) (~66.7128).
Ord cmp_with_s0(const Rational& q);

/// Compares q against the sum threshold t0 = (s0 + sqrt(s0^2 + 8))/2
/// (~66.7428), the largest root of t^4 - 78 t^3 + 749 t^2 + 156 t + 4.
/// Decided by exact bisection of that polynomial on [66, 67].
Ord cmp_with_t0(const Rational& q);

/// Rational enclosure of t0 with width <= tol.
std::pair<Rational, Rational> t0_bracket(const Rational& tol);

/// (1/e) beta(x, 3) extended to a real cubic:
///   alpha (x^2/2 - 19x/2 + 44) + beta (x^2/2 - 11x/2 + 18)
///   + gamma (x^2/2 - 7x/2 + 8) + (-x^3/6 + x^2 - 17x/6 + 4).
/// At x = 11 the alpha term vanishes: 18 beta + 30 gamma - 128.
Rational beta3_scaled(const Rational& alpha, const Rational& beta,
                      const Rational& gamma, const Rational& x);
Rational beta3_scaled(const CubicParams& p, const Rational& x);

enum class CubicCase {
    BCNonneg,             // b, c >= 0: bound 16
    BNegDeltaPrimeNonpos, // b < 0, b^2 <= 3ac: bound 67
    Uncovered,            // no proven bound; a beta3 scan may still cap it
};

struct CubicBoundVerdict {
    CubicCase kase;
    std::optional<int> bound;
    /// Smallest d in [3, min(c(h)+1, 67)] with beta3_scaled(d) < 0, when
    /// the case is Uncovered and such d exists; then hdepth < d.
    std::optional<Integer> g_scan_bound;
};

CubicBoundVerdict bound_for(const CubicParams& p);

/// CubicParams from a validated cubic NumFn.
CubicParams params_from(const NumFn& h);

nlohmann::json to_json(const CubicBoundVerdict& v);

}  // namespace cubic
}  // namespace hd

#endif
