#include "hd/cubic.hpp"

namespace hd {
namespace cubic {

CubicParams::CubicParams(Integer a_, Integer b_, Integer c_, Integer e_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), e(std::move(e_)) {
    if (sgn(a) <= 0 || sgn(e) <= 0) {
        throw DomainError("CubicParams: requires a > 0 and e > 0");
    }
    alpha = make_rational(a, e);
    beta = make_rational(b, e);
    gamma = make_rational(c, e);
    delta_prime = 4 * b * b - 12 * a * c;
}

bool is_nondecreasing(const CubicParams& p) {
    return sgn(p.delta_prime) <= 0;
}

Rational beta2_scaled(const Rational& alpha, const Rational& beta,
                      const Rational& gamma, const Rational& x) {
    Rational axis = alpha + beta + gamma + Rational(3, 2);
    Rational k = 9 * alpha + 5 * beta + 3 * gamma + 2;
    return x * x / 2 - axis * x + k;
}

Rational beta2_scaled(const CubicParams& p, const Rational& x) {
    return beta2_scaled(p.alpha, p.beta, p.gamma, x);
}

Rational beta2_disc(const Rational& alpha, const Rational& beta,
                    const Rational& gamma) {
    Rational t = alpha + beta + gamma;
    return t * t - 15 * alpha - 7 * beta - 3 * gamma - Rational(7, 4);
}

Rational beta2_disc(const CubicParams& p) {
    return beta2_disc(p.alpha, p.beta, p.gamma);
}

std::optional<Integer> upper_from_beta2(const NumFn& h) {
    CubicParams p = params_from(h);
    Rational t = p.sum();
    if (t < 2) {
        throw PreconditionError("upper_from_beta2: requires alpha + beta + gamma >= 2");
    }
    Rational k = 9 * p.alpha + 5 * p.beta + 3 * p.gamma + 2;
    return first_integer_below_parabola(t + Rational(3, 2), k, 3, c_bound(h) + 1);
}

namespace {

void require_neg_b_small_disc(const CubicParams& p, const char* who) {
    if (sgn(p.b) >= 0 || sgn(p.delta_prime) > 0) {
        throw PreconditionError(std::string(who) +
                                ": requires b < 0 and b^2 <= 3ac");
    }
}

}  // namespace

bool slope_inequality_holds(const CubicParams& p) {
    require_neg_b_small_disc(p, "slope_inequality_holds");
    // 15a + 7b + 3g <= (39 + 16 sqrt(3)) t  <=>  L - 39 t <= 16 t sqrt(3)
    Rational t = p.sum();
    Rational lhs = 15 * p.alpha + 7 * p.beta + 3 * p.gamma - 39 * t;
    return cmp_rational_vs_surd(lhs, 16 * t, Integer(3)) != Ord::GT;
}

bool disc_quarter_implication_holds(const CubicParams& p) {
    require_neg_b_small_disc(p, "disc_quarter_implication_holds");
    if (p.sum() < 67) {
        return true;
    }
    return beta2_disc(p) > Rational(1, 4);
}

Ord cmp_with_s0(const Rational& q) {
    return cmp_rational_vs_surd(q - 39, Rational(16), Integer(3));
}

namespace {

// Minimal polynomial of t0 over Z; its unique root in (66, 67) is t0.
const RatPoly& t0_min_poly() {
    static const RatPoly poly{Rational(4), Rational(156), Rational(749),
                              Rational(-78), Rational(1)};
    return poly;
}

}  // namespace

std::pair<Rational, Rational> t0_bracket(const Rational& tol) {
    if (sgn(tol) <= 0) {
        throw DomainError("t0_bracket: tolerance must be positive");
    }
    RootInterval iv{Rational(66), Rational(67), SignChange::UpDown};
    iv = refine_interval(t0_min_poly(), iv, tol);
    return {iv.lo, iv.hi};
}

Ord cmp_with_t0(const Rational& q) {
    if (q <= 66) {
        return Ord::LT;
    }
    if (q >= 67) {
        return Ord::GT;
    }
    // The minimal polynomial is negative at 66, positive at 67, and has
    // exactly one (simple, irrational) root there, so its sign at q
    // settles the comparison.
    const int s = t0_min_poly().sign_at(q);
    if (s == 0) {
        throw Error("cmp_with_t0: unexpected rational root");
    }
    return s < 0 ? Ord::LT : Ord::GT;
}

Rational beta3_scaled(const Rational& alpha, const Rational& beta,
                      const Rational& gamma, const Rational& x) {
    Rational x2 = x * x;
    Rational ca = x2 / 2 - Rational(19, 2) * x + 44;
    Rational cb = x2 / 2 - Rational(11, 2) * x + 18;
    Rational cc = x2 / 2 - Rational(7, 2) * x + 8;
    Rational c1 = -x2 * x / 6 + x2 - Rational(17, 6) * x + 4;
    return alpha * ca + beta * cb + gamma * cc + c1;
}

Rational beta3_scaled(const CubicParams& p, const Rational& x) {
    return beta3_scaled(p.alpha, p.beta, p.gamma, x);
}

CubicBoundVerdict bound_for(const CubicParams& p) {
    if (sgn(p.b) >= 0 && sgn(p.c) >= 0) {
        return {CubicCase::BCNonneg, 16, std::nullopt};
    }
    if (sgn(p.b) < 0 && sgn(p.delta_prime) <= 0) {
        return {CubicCase::BNegDeltaPrimeNonpos, 67, std::nullopt};
    }
    CubicBoundVerdict verdict{CubicCase::Uncovered, std::nullopt, std::nullopt};
    // beta3 scan: the first d in [3, min(c(h)+1, 67)] with a negative
    // value caps hdepth below d. Beyond 67 no scan is informative.
    Integer c_h = floor_rat(p.sum()) + 1;
    Integer hi = c_h + 1;
    if (cmp(hi, 67) > 0) {
        hi = 67;
    }
    for (Integer d = 3; cmp(d, hi) <= 0; ++d) {
        if (sgn(beta3_scaled(p, Rational(d))) < 0) {
            verdict.g_scan_bound = d;
            break;
        }
    }
    return verdict;
}

CubicParams params_from(const NumFn& h) {
    if (h.degree() != 3) {
        throw DomainError("expected a cubic numerical function");
    }
    return CubicParams(h.coeffs()[3], h.coeffs()[2], h.coeffs()[1], h.coeffs()[0]);
}

nlohmann::json to_json(const CubicBoundVerdict& v) {
    static const char* names[] = {"bc_nonneg", "bneg_dprime_nonpos", "uncovered"};
    nlohmann::json j;
    j["case"] = names[static_cast<int>(v.kase)];
    j["bound"] = v.bound ? nlohmann::json(std::to_string(*v.bound))
                         : nlohmann::json(nullptr);
    j["g_scan_bound"] = v.g_scan_bound ? nlohmann::json(v.g_scan_bound->get_str())
                                       : nlohmann::json(nullptr);
    return j;
}

}  // namespace cubic
}  // namespace hd
