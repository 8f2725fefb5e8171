#include "hd/quadratic.hpp"

namespace hd {
namespace quad {

namespace {

// Exact decimal rendering of (-b + sign*sqrt(delta)) / (2a) truncated
// toward -infinity at `places` digits (or toward +infinity when ceil).
std::string surd_decimal(const Integer& b, const Integer& delta, const Integer& a,
                         bool plus, int places, bool round_up) {
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
    Integer num = -b * scale;
    Integer rad = delta * scale * scale;
    Integer den = 2 * a;
    Integer v;
    if (!round_up) {
        v = floor_shifted_sqrt(num, rad, den, plus);
    } else {
        v = -floor_shifted_sqrt(-num, rad, den, !plus);
    }
    const bool neg = sgn(v) < 0;
    Integer mag = abs(v);
    Integer ip = mag / scale;
    Integer fp = mag % scale;
    std::string frac = fp.get_str();
    std::string out = neg ? "-" : "";
    out += ip.get_str();
    if (places > 0) {
        out += "." + std::string(static_cast<size_t>(places) - frac.size(), '0') + frac;
    }
    return out;
}

}  // namespace

QuadParams::QuadParams(Integer a_, Integer b_, Integer e_)
    : a(std::move(a_)), b(std::move(b_)), e(std::move(e_)) {
    if (sgn(a) <= 0 || sgn(e) <= 0) {
        throw DomainError("QuadParams: requires a > 0 and e > 0");
    }
    alpha = make_rational(a, e);
    beta = make_rational(b, e);
    delta = b * b - 4 * a * e;
}

std::optional<std::pair<std::string, std::string>>
QuadClassification::root_interval_decimal(int places) const {
    if (sgn(params.delta) <= 0) {
        return std::nullopt;
    }
    return std::make_pair(
        surd_decimal(params.b, params.delta, params.a, false, places, false),
        surd_decimal(params.b, params.delta, params.a, true, places, true));
}

QuadClassification classify(const QuadParams& p) {
    QuadClassification out{p, QuadCase::BNonneg, true, std::nullopt, std::nullopt};
    if (sgn(p.b) >= 0) {
        return out;
    }
    if (sgn(p.a + p.b) >= 0) {
        out.kase = QuadCase::ANonnegBNeg;
        return out;
    }
    const int ds = sgn(p.delta);
    if (ds < 0) {
        out.kase = QuadCase::SumNegDeltaNeg;
        return out;
    }
    if (ds == 0) {
        out.kase = QuadCase::SumNegDeltaZero;
        Integer num = -p.b;
        Integer den = 2 * p.a;
        if (num % den == 0) {
            out.zero_at = num / den;
        }
        return out;
    }
    out.kase = QuadCase::SumNegDeltaPos;
    // Valid iff delta <= a^2 and the closed root interval fits inside
    // [ell, ell+1]: sqrt(delta) <= 2a(ell+1) + b.
    Integer ell = floor_shifted_sqrt(-p.b, p.delta, 2 * p.a, false);
    out.ell = ell;
    const bool narrow = cmp(p.delta, p.a * p.a) <= 0;
    const bool fits =
        cmp_rational_vs_surd(Rational(2 * p.a * (ell + 1) + p.b), Rational(1),
                             p.delta) != Ord::LT;
    out.valid = narrow && fits;
    return out;
}

Rational beta2_scaled(const Rational& alpha, const Rational& beta, const Rational& x) {
    Rational axis = alpha + beta + Rational(3, 2);
    Rational k = 5 * alpha + 3 * beta + 2;
    return x * x / 2 - axis * x + k;
}

Rational beta2_scaled(const QuadParams& p, const Rational& x) {
    return beta2_scaled(p.alpha, p.beta, x);
}

Rational beta2_disc(const Rational& alpha, const Rational& beta) {
    Rational t = alpha + beta;
    return t * t - 7 * alpha - 3 * beta - Rational(7, 4);
}

Rational beta2_disc(const QuadParams& p) {
    return beta2_disc(p.alpha, p.beta);
}

std::optional<std::pair<RootInterval, RootInterval>> beta2_roots(
    const Rational& alpha, const Rational& beta, const Rational& tol) {
    if (sgn(tol) <= 0) {
        throw DomainError("beta2_roots: tolerance must be positive");
    }
    Rational disc = beta2_disc(alpha, beta);
    const int ds = sgn(disc);
    if (ds < 0) {
        return std::nullopt;
    }
    Rational axis = alpha + beta + Rational(3, 2);
    if (ds == 0) {
        RootInterval r{axis, axis, SignChange::UpDown};
        return std::make_pair(r, RootInterval{axis, axis, SignChange::DownUp});
    }
    const Integer& u = disc.get_num();
    const Integer& v = disc.get_den();
    if (mpz_perfect_square_p(u.get_mpz_t()) && mpz_perfect_square_p(v.get_mpz_t())) {
        Rational root = make_rational(isqrt(u), isqrt(v));
        return std::make_pair(
            RootInterval{axis - root, axis - root, SignChange::UpDown},
            RootInterval{axis + root, axis + root, SignChange::DownUp});
    }
    RatPoly f{5 * alpha + 3 * beta + 2, -axis, Rational(1, 2)};
    std::vector<RootInterval> roots = sturm_isolate(f, tol);
    if (roots.size() != 2) {
        throw Error("beta2_roots: expected two isolated roots");
    }
    return std::make_pair(roots[0], roots[1]);
}

std::optional<std::pair<RootInterval, RootInterval>> beta2_roots(
    const QuadParams& p, const Rational& tol) {
    return beta2_roots(p.alpha, p.beta, tol);
}

std::optional<Integer> upper_from_beta2(const NumFn& h) {
    QuadParams p = params_from(h);
    Rational t = p.sum();
    if (t < 2) {
        throw PreconditionError("upper_from_beta2: requires alpha + beta >= 2");
    }
    Rational k = 5 * p.alpha + 3 * p.beta + 2;
    return first_integer_below_parabola(t + Rational(3, 2), k, 3, c_bound(h) + 1);
}

Rational beta3_scaled(const Rational& alpha, const Rational& beta, const Rational& x) {
    Rational x2 = x * x;
    Rational ca = x2 / 2 - Rational(11, 2) * x + 18;
    Rational cb = x2 / 2 - Rational(7, 2) * x + 8;
    Rational c1 = -x2 * x / 6 + x2 - Rational(17, 6) * x + 4;
    return alpha * ca + beta * cb + c1;
}

Rational beta3_scaled(const QuadParams& p, const Rational& x) {
    return beta3_scaled(p.alpha, p.beta, x);
}

int bound_for(const QuadParams& p) {
    if (sgn(p.b) >= 0) {
        return 8;
    }
    return sgn(p.delta) <= 0 ? 11 : 13;
}

std::pair<NumFn, HdepthReport> large_sum_family(const Integer& k) {
    if (cmp(k, 4) < 0) {
        throw PreconditionError("large_sum_family: requires k >= 4");
    }
    NumFn h = NumFn::validate({Integer(1), k - k * k, k * k});
    HdepthReport report = hdepth(h);
    return {std::move(h), std::move(report)};
}

QuadParams params_from(const NumFn& h) {
    if (h.degree() != 2) {
        throw DomainError("expected a quadratic numerical function");
    }
    return QuadParams(h.coeffs()[2], h.coeffs()[1], h.coeffs()[0]);
}

nlohmann::json to_json(const QuadClassification& c) {
    static const char* names[] = {"b_nonneg", "a_plus_b_nonneg_b_neg",
                                  "sum_neg_delta_neg", "sum_neg_delta_zero",
                                  "sum_neg_delta_pos"};
    nlohmann::json j;
    j["a"] = c.params.a.get_str();
    j["b"] = c.params.b.get_str();
    j["e"] = c.params.e.get_str();
    j["delta"] = c.params.delta.get_str();
    j["case"] = names[static_cast<int>(c.kase)];
    j["valid"] = c.valid;
    if (auto iv = c.root_interval_decimal(6)) {
        j["root_interval"] = {{"lo", iv->first}, {"hi", iv->second}};
    } else {
        j["root_interval"] = nullptr;
    }
    j["ell"] = c.ell ? nlohmann::json(c.ell->get_str()) : nlohmann::json(nullptr);
    j["zero_at"] =
        c.zero_at ? nlohmann::json(c.zero_at->get_str()) : nlohmann::json(nullptr);
    return j;
}

}  // namespace quad
}  // namespace hd
