#include "hd/verify.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "hd/cubic.hpp"
#include "hd/geometry.hpp"
#include "hd/numfn.hpp"
#include "hd/quadratic.hpp"
#include "hd/sweep.hpp"

namespace hd {
namespace verify {

namespace {

constexpr std::size_t kExemplarCap = 20;

std::string coeffs_str(const std::vector<Integer>& c) {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < c.size(); ++i) {
        out << (i ? "," : "") << c[i].get_str();
    }
    out << "]";
    return out.str();
}

}  // namespace

void CheckResult::violation(const std::string& msg) {
    ++violations_total;
    if (violations.size() < kExemplarCap) {
        violations.push_back(msg);
    }
}

void CheckResult::finding(const std::string& msg) {
    ++findings_total;
    if (findings.size() < kExemplarCap) {
        findings.push_back(msg);
    }
}

std::uint64_t SuiteReport::violation_count() const {
    std::uint64_t n = 0;
    for (const CheckResult& c : checks) {
        n += c.violations_total;
    }
    return n;
}

std::uint64_t SuiteReport::finding_count() const {
    std::uint64_t n = 0;
    for (const CheckResult& c : checks) {
        n += c.findings_total;
    }
    return n;
}

const CheckResult& SuiteReport::check(const std::string& name) const {
    for (const CheckResult& c : checks) {
        if (c.name == name) {
            return c;
        }
    }
    throw DomainError("SuiteReport: no check named " + name);
}

namespace {

// Rejection-sampled valid numerical function of degree <= max_degree
// with coefficients in [lo, hi] (constant and leading terms positive).
NumFn random_valid(std::mt19937_64& rng, int max_degree, long lo, long hi) {
    std::uniform_int_distribution<int> deg_dist(0, max_degree);
    std::uniform_int_distribution<long> mid_dist(lo, hi);
    std::uniform_int_distribution<long> pos_dist(1, hi);
    for (;;) {
        const int n = deg_dist(rng);
        std::vector<Integer> c;
        c.reserve(static_cast<size_t>(n) + 1);
        c.emplace_back(pos_dist(rng));
        for (int i = 1; i < n; ++i) {
            c.emplace_back(mid_dist(rng));
        }
        if (n >= 1) {
            c.emplace_back(pos_dist(rng));
        }
        if (auto h = NumFn::try_validate(std::move(c))) {
            return *h;
        }
    }
}

}  // namespace

SuiteReport verify_quadratic(const QuadBox& box, long k_lo, long k_hi,
                             std::uint64_t seed) {
    SuiteReport rep{"quadratic", {}};

    CheckResult family{"family_hdepth5"};
    for (long kv = k_lo; kv <= k_hi; ++kv) {
        Integer k(kv);
        auto [h, report] = quad::large_sum_family(k);
        ++family.checked;
        if (report.hdepth != 5) {
            family.violation("k=" + k.get_str() + ": hdepth " +
                             report.hdepth.get_str() + " != 5");
        }
        Integer row6 = beta_direct(h, 6, 3);
        Integer expected = -2 * k * k + 5 * k - 13;
        if (row6 != expected || sgn(row6) >= 0) {
            family.violation("k=" + k.get_str() + ": beta(6,3) = " + row6.get_str());
        }
        quad::QuadParams p = quad::params_from(h);
        Integer delta_expected = k * k * k * k - 2 * k * k * k - 3 * k * k;
        if (p.delta != delta_expected || sgn(p.delta) <= 0) {
            family.violation("k=" + k.get_str() + ": delta = " + p.delta.get_str());
        }
        Integer disc_lin = -3 * k * k - 3 * k;
        Rational disc_expected = Rational(disc_lin) - Rational(7, 4);
        if (quad::beta2_disc(p) != disc_expected || sgn(disc_expected) >= 0) {
            family.violation("k=" + k.get_str() + ": closed-form disc mismatch");
        }
    }
    rep.checks.push_back(std::move(family));

    CheckResult classifier{"classifier_vs_brute"};
    CheckResult zero{"depth_zero_when_sum_negative"};
    CheckResult eq_below{"equality_below_two"};
    CheckResult low_above{"lower_bound_from_two"};
    CheckResult gap{"beta2_gap_soundness"};
    CheckResult disc_quarter{"disc_above_quarter"};
    CheckResult quarter_caps{"quarter_disc_caps_depth"};
    CheckResult row3_at14{"row3_at_14_negative"};
    CheckResult bounds{"case_bounds"};
    std::map<std::string, Integer> case_max;

    for (long a = box.a_lo; a <= box.a_hi; ++a) {
        for (long e = box.e_lo; e <= box.e_hi; ++e) {
            for (long b = box.b_lo; b <= box.b_hi; ++b) {
                quad::QuadParams p{Integer(a), Integer(b), Integer(e)};
                quad::QuadClassification cls = quad::classify(p);
                std::vector<Integer> coeffs{Integer(e), Integer(b), Integer(a)};
                std::optional<NumFn> h = NumFn::try_validate(coeffs);
                ++classifier.checked;
                if (cls.valid != h.has_value()) {
                    classifier.violation(coeffs_str(coeffs) + ": classifier says " +
                                         (cls.valid ? "valid" : "invalid") +
                                         ", brute force disagrees");
                }
                if (!h) {
                    continue;
                }
                HdepthReport r = hdepth(*h);
                const Integer& depth = r.hdepth;
                Rational t = p.sum();

                if (a + b < 0) {
                    ++zero.checked;
                    if (sgn(depth) != 0) {
                        zero.violation(coeffs_str(coeffs) + ": hdepth " +
                                       depth.get_str() + " != 0");
                    }
                }
                if (t < 2) {
                    ++eq_below.checked;
                    if (depth != r.c_bound) {
                        eq_below.finding(coeffs_str(coeffs) + ": hdepth " +
                                         depth.get_str() + " != c " +
                                         r.c_bound.get_str());
                    }
                } else {
                    ++low_above.checked;
                    if (cmp(depth, 2) < 0) {
                        low_above.finding(coeffs_str(coeffs) + ": hdepth " +
                                          depth.get_str() + " < 2");
                    }
                    ++gap.checked;
                    if (auto d = quad::upper_from_beta2(*h)) {
                        if (cmp(depth, *d) >= 0) {
                            gap.violation(coeffs_str(coeffs) + ": scan gave d=" +
                                          d->get_str() + " but hdepth " +
                                          depth.get_str());
                        }
                    }
                }
                Rational disc = quad::beta2_disc(p);
                if (sgn(p.delta) <= 0 && t >= 11) {
                    ++disc_quarter.checked;
                    if (!(disc > Rational(1, 4))) {
                        disc_quarter.violation(coeffs_str(coeffs) +
                                               ": disc <= 1/4 with sum >= 11");
                    }
                }
                if (disc > Rational(1, 4)) {
                    ++quarter_caps.checked;
                    if (cmp(depth, 11) > 0) {
                        quarter_caps.violation(coeffs_str(coeffs) + ": hdepth " +
                                               depth.get_str() + " > 11");
                    }
                }
                if (b < 0 && sgn(p.delta) > 0 && disc <= Rational(1, 4)) {
                    ++row3_at14.checked;
                    if (sgn(quad::beta3_scaled(p, Rational(14))) >= 0) {
                        row3_at14.violation(coeffs_str(coeffs) +
                                            ": row-3 value at 14 not negative");
                    }
                }
                ++bounds.checked;
                const int bound = quad::bound_for(p);
                if (cmp(depth, bound) > 0) {
                    bounds.violation(coeffs_str(coeffs) + ": hdepth " +
                                     depth.get_str() + " > " +
                                     std::to_string(bound));
                }
                std::string kase = sweep::case_label(2, coeffs);
                auto [it, inserted] = case_max.try_emplace(kase, depth);
                if (!inserted && cmp(depth, it->second) > 0) {
                    it->second = depth;
                }
            }
        }
    }
    for (const auto& [kase, value] : case_max) {
        bounds.stats["max_" + kase] = value.get_str();
    }
    rep.checks.push_back(std::move(classifier));
    rep.checks.push_back(std::move(zero));
    rep.checks.push_back(std::move(eq_below));
    rep.checks.push_back(std::move(low_above));
    rep.checks.push_back(std::move(gap));
    rep.checks.push_back(std::move(disc_quarter));
    rep.checks.push_back(std::move(quarter_caps));
    rep.checks.push_back(std::move(row3_at14));
    rep.checks.push_back(std::move(bounds));

    CheckResult ident{"closed_form_identities"};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> pos(1, 40);
    std::uniform_int_distribution<long> mid(-150, 150);
    for (int trial = 0; trial < 100; ++trial) {
        std::optional<NumFn> h;
        Integer a, b, e;
        while (!h) {
            a = pos(rng);
            b = mid(rng);
            e = pos(rng);
            h = NumFn::try_validate({e, b, a});
        }
        quad::QuadParams p{a, b, e};
        ++ident.checked;
        for (long d = 2; d <= 40; ++d) {
            Rational lhs = Rational(e) * quad::beta2_scaled(p, Rational(d));
            if (lhs != Rational(beta_direct(*h, d, 2))) {
                ident.violation(coeffs_str(h->coeffs()) + ": e*beta2(" +
                                std::to_string(d) + ") mismatch");
            }
            if (d >= 3) {
                Rational lhs3 = Rational(e) * quad::beta3_scaled(p, Rational(d));
                if (lhs3 != Rational(beta_direct(*h, d, 3))) {
                    ident.violation(coeffs_str(h->coeffs()) + ": e*beta3(" +
                                    std::to_string(d) + ") mismatch");
                }
            }
        }
        Rational g14 = quad::beta3_scaled(p, Rational(14));
        Rational expect = 3 * (19 * p.sum() - 6 * p.alpha - 99);
        if (g14 != expect) {
            ident.violation(coeffs_str(h->coeffs()) + ": value at 14 identity");
        }
    }
    rep.checks.push_back(std::move(ident));
    return rep;
}

SuiteReport verify_cubic(const CubicBox& box, std::uint64_t seed) {
    SuiteReport rep{"cubic", {}};

    CheckResult eq_below{"equality_below_two"};
    CheckResult low_above{"lower_bound_from_two"};
    CheckResult mono{"nondecreasing_when_dprime_nonpos"};
    CheckResult gap{"beta2_gap_soundness"};
    CheckResult slope{"slope_inequality"};
    CheckResult quarter{"quarter_disc_implication"};
    CheckResult amgm{"am_gm_step"};
    CheckResult bounds{"case_bounds"};
    CheckResult gscan{"beta3_scan_soundness"};
    std::map<std::string, Integer> case_max;
    std::uint64_t mono_tick = 0;

    for (long a = box.a_lo; a <= box.a_hi; ++a) {
        for (long e = box.e_lo; e <= box.e_hi; ++e) {
            for (long b = box.b_lo; b <= box.b_hi; ++b) {
                for (long c = box.c_lo; c <= box.c_hi; ++c) {
                    std::vector<Integer> coeffs{Integer(e), Integer(c), Integer(b),
                                                Integer(a)};
                    std::optional<NumFn> h = NumFn::try_validate(coeffs);
                    if (!h) {
                        continue;
                    }
                    cubic::CubicParams p{Integer(a), Integer(b), Integer(c),
                                         Integer(e)};
                    HdepthReport r = hdepth(*h);
                    const Integer& depth = r.hdepth;
                    Rational t = p.sum();

                    if (t < 2) {
                        ++eq_below.checked;
                        if (depth != r.c_bound) {
                            eq_below.finding(coeffs_str(coeffs) + ": hdepth " +
                                             depth.get_str() + " != c " +
                                             r.c_bound.get_str());
                        }
                    } else {
                        ++low_above.checked;
                        if (cmp(depth, 3) < 0) {
                            low_above.finding(coeffs_str(coeffs) + ": hdepth " +
                                              depth.get_str() + " < 3");
                        }
                        ++gap.checked;
                        if (auto d = cubic::upper_from_beta2(*h)) {
                            if (cmp(depth, *d) >= 0) {
                                gap.violation(coeffs_str(coeffs) +
                                              ": scan gave d=" + d->get_str() +
                                              " but hdepth " + depth.get_str());
                            }
                        }
                    }
                    if (cubic::is_nondecreasing(p) && (mono_tick++ % 101 == 0)) {
                        ++mono.checked;
                        Integer prev = h->eval(0);
                        for (long j = 1; j <= 100; ++j) {
                            Integer cur = h->eval(Integer(j));
                            if (cmp(cur, prev) < 0) {
                                mono.violation(coeffs_str(coeffs) +
                                               ": decreases at j=" +
                                               std::to_string(j));
                                break;
                            }
                            prev = cur;
                        }
                    }
                    if (b < 0 && sgn(p.delta_prime) <= 0) {
                        ++slope.checked;
                        if (!cubic::slope_inequality_holds(p)) {
                            slope.violation(coeffs_str(coeffs) +
                                            ": slope inequality failed");
                        }
                        ++quarter.checked;
                        if (!cubic::disc_quarter_implication_holds(p)) {
                            quarter.violation(coeffs_str(coeffs) +
                                              ": disc <= 1/4 with sum >= 67");
                        }
                        ++amgm.checked;
                        if (!(p.beta * p.beta <= 3 * p.alpha * p.gamma)) {
                            amgm.violation(coeffs_str(coeffs) +
                                           ": beta^2 > 3*alpha*gamma");
                        }
                    }
                    cubic::CubicBoundVerdict verdict = cubic::bound_for(p);
                    if (verdict.bound) {
                        ++bounds.checked;
                        if (cmp(depth, *verdict.bound) > 0) {
                            bounds.violation(coeffs_str(coeffs) + ": hdepth " +
                                             depth.get_str() + " > " +
                                             std::to_string(*verdict.bound));
                        }
                    }
                    if (verdict.g_scan_bound) {
                        ++gscan.checked;
                        if (cmp(depth, *verdict.g_scan_bound) >= 0) {
                            gscan.violation(coeffs_str(coeffs) +
                                            ": beta3 scan gave d=" +
                                            verdict.g_scan_bound->get_str() +
                                            " but hdepth " + depth.get_str());
                        }
                    }
                    std::string kase = sweep::case_label(3, coeffs);
                    auto [it, inserted] = case_max.try_emplace(kase, depth);
                    if (!inserted && cmp(depth, it->second) > 0) {
                        it->second = depth;
                    }
                }
            }
        }
    }
    for (const auto& [kase, value] : case_max) {
        bounds.stats["max_" + kase] = value.get_str();
    }
    rep.checks.push_back(std::move(eq_below));
    rep.checks.push_back(std::move(low_above));
    rep.checks.push_back(std::move(mono));
    rep.checks.push_back(std::move(gap));
    rep.checks.push_back(std::move(slope));
    rep.checks.push_back(std::move(quarter));
    rep.checks.push_back(std::move(amgm));
    rep.checks.push_back(std::move(bounds));
    rep.checks.push_back(std::move(gscan));

    CheckResult ident{"closed_form_identities"};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> pos(1, 20);
    std::uniform_int_distribution<long> mid(-60, 60);
    for (int trial = 0; trial < 100; ++trial) {
        std::optional<NumFn> h;
        Integer a, b, c, e;
        while (!h) {
            a = pos(rng);
            b = mid(rng);
            c = mid(rng);
            e = pos(rng);
            h = NumFn::try_validate({e, c, b, a});
        }
        cubic::CubicParams p{a, b, c, e};
        ++ident.checked;
        for (long d = 2; d <= 40; ++d) {
            Rational lhs = Rational(e) * cubic::beta2_scaled(p, Rational(d));
            if (lhs != Rational(beta_direct(*h, d, 2))) {
                ident.violation(coeffs_str(h->coeffs()) + ": e*beta2(" +
                                std::to_string(d) + ") mismatch");
            }
            if (d >= 3) {
                Rational lhs3 = Rational(e) * cubic::beta3_scaled(p, Rational(d));
                if (lhs3 != Rational(beta_direct(*h, d, 3))) {
                    ident.violation(coeffs_str(h->coeffs()) + ": e*beta3(" +
                                    std::to_string(d) + ") mismatch");
                }
            }
        }
        Rational g11 = cubic::beta3_scaled(p, Rational(11));
        Rational expect = 18 * p.beta + 30 * p.gamma - 128;
        if (g11 != expect) {
            ident.violation(coeffs_str(h->coeffs()) + ": value at 11 identity");
        }
    }
    rep.checks.push_back(std::move(ident));
    return rep;
}

SuiteReport verify_core(std::uint64_t oracle_trials, std::uint64_t closure_trials,
                        std::uint64_t scaling_trials, std::uint64_t seed) {
    SuiteReport rep{"core", {}};
    std::mt19937_64 rng(seed);

    CheckResult oracle{"recurrence_matches_definition"};
    for (std::uint64_t i = 0; i < oracle_trials; ++i) {
        NumFn h = random_valid(rng, 5, -50, 50);
        ++oracle.checked;
        Integer dmax = c_bound(h);
        if (cmp(dmax, 60) > 0) {
            dmax = 60;
        }
        // Build all rows incrementally and compare each entry with the
        // defining alternating sum.
        std::vector<Integer> prev;
        std::vector<Integer> cur{h.eval(0)};
        bool bad = false;
        for (Integer d = 0; cmp(d, dmax) <= 0 && !bad; ++d) {
            for (size_t k = 0; k < cur.size(); ++k) {
                if (cur[k] != beta_direct(h, d, Integer(static_cast<long>(k)))) {
                    oracle.violation(coeffs_str(h.coeffs()) + ": row " +
                                     d.get_str() + " entry " + std::to_string(k));
                    bad = true;
                    break;
                }
            }
            if (cmp(d, dmax) == 0) {
                break;
            }
            prev.swap(cur);
            const size_t r = prev.size();
            cur.assign(r + 1, Integer(0));
            cur[0] = prev[0];
            for (size_t k = 1; k < r; ++k) {
                cur[k] = prev[k] - prev[k - 1];
            }
            cur[r] = h.eval(Integer(static_cast<long>(r))) - prev[r - 1];
        }
    }
    rep.checks.push_back(std::move(oracle));

    CheckResult closure{"downward_closure"};
    for (std::uint64_t i = 0; i < closure_trials; ++i) {
        NumFn h = random_valid(rng, 5, -50, 50);
        ++closure.checked;
        HdepthReport r = hdepth(h);
        // Independent full scan: validity of every row d <= c.
        std::vector<Integer> cur{h.eval(0)};
        Integer c = r.c_bound;
        bool mismatch = false;
        for (Integer d = 0; cmp(d, c) <= 0; ++d) {
            bool row_ok = true;
            for (const Integer& v : cur) {
                if (sgn(v) < 0) {
                    row_ok = false;
                    break;
                }
            }
            const bool expected = cmp(d, r.hdepth) <= 0;
            if (row_ok != expected) {
                mismatch = true;
                break;
            }
            if (cmp(d, c) == 0) {
                break;
            }
            std::vector<Integer> prev;
            prev.swap(cur);
            const size_t rr = prev.size();
            cur.assign(rr + 1, Integer(0));
            cur[0] = prev[0];
            for (size_t k = 1; k < rr; ++k) {
                cur[k] = prev[k] - prev[k - 1];
            }
            cur[rr] = h.eval(Integer(static_cast<long>(rr))) - prev[rr - 1];
        }
        if (mismatch) {
            closure.violation(coeffs_str(h.coeffs()) +
                              ": valid rows are not {0..hdepth}");
        }
    }
    rep.checks.push_back(std::move(closure));

    CheckResult scaling{"positive_scaling_invariance"};
    const long factors[] = {2, 7, 1000};
    for (std::uint64_t i = 0; i < scaling_trials; ++i) {
        NumFn h = random_valid(rng, 5, -50, 50);
        ++scaling.checked;
        HdepthReport base = hdepth(h);
        for (long m : factors) {
            NumFn hm = h.scaled(Integer(m));
            HdepthReport rm = hdepth(hm);
            if (rm.hdepth != base.hdepth) {
                scaling.violation(coeffs_str(h.coeffs()) + ": hdepth changed by m=" +
                                  std::to_string(m));
            }
        }
        // Linearity spot check of the transform itself.
        Integer dmax = base.c_bound;
        if (cmp(dmax, 30) > 0) {
            dmax = 30;
        }
        if (sgn(dmax) > 0) {
            std::uniform_int_distribution<long> d_dist(0, dmax.get_si());
            Integer d(d_dist(rng));
            std::uniform_int_distribution<long> k_dist(0, d.get_si());
            Integer k(k_dist(rng));
            if (beta_direct(h.scaled(7), d, k) != 7 * beta_direct(h, d, k)) {
                scaling.violation(coeffs_str(h.coeffs()) + ": transform not linear");
            }
        }
    }
    rep.checks.push_back(std::move(scaling));

    CheckResult power{"nonneg_power_bound"};
    auto sweep_nonneg = [&power](int n, long leading_hi, long mid_hi) {
        std::vector<Integer> c(static_cast<size_t>(n) + 1, Integer(0));
        const long bound = 1L << (n + 1);
        std::function<void(int)> walk = [&](int idx) {
            if (idx > n) {
                if (auto h = NumFn::try_validate(c)) {
                    ++power.checked;
                    HdepthReport r = hdepth(*h);
                    if (cmp(r.hdepth, bound) > 0) {
                        power.violation(coeffs_str(c) + ": hdepth " +
                                        r.hdepth.get_str() + " > 2^" +
                                        std::to_string(n + 1));
                    }
                }
                return;
            }
            const bool endpoint = idx == 0 || idx == n;
            const long lo = endpoint ? 1 : 0;
            const long hi = endpoint ? leading_hi : mid_hi;
            for (long v = lo; v <= hi; ++v) {
                c[static_cast<size_t>(idx)] = v;
                walk(idx + 1);
            }
        };
        walk(0);
    };
    sweep_nonneg(1, 50, 50);
    sweep_nonneg(2, 12, 12);
    sweep_nonneg(3, 6, 6);
    sweep_nonneg(4, 4, 4);
    rep.checks.push_back(std::move(power));

    return rep;
}

SuiteReport verify_geometry() {
    SuiteReport rep{"geometry", {}};
    const Rational tol(1, 100);

    CheckResult inter{"boundary_intersections"};
    geometry::KDomain k = geometry::k_intersections(tol);
    ++inter.checked;
    if (k.points.size() != 4) {
        inter.violation("expected 4 intersection points");
    } else {
        const std::pair<Rational, Rational> expected[4] = {
            {Rational(19, 100), Rational(-87, 100)},
            {Rational(39, 100), Rational(-126, 100)},
            {Rational(212, 100), Rational(291, 100)},
            {Rational(1929, 100), Rational(-878, 100)},
        };
        for (int i = 0; i < 4; ++i) {
            const auto& pt = k.points[static_cast<size_t>(i)];
            if (abs(pt.x - expected[i].first) > tol ||
                abs(pt.y - expected[i].second) > tol) {
                inter.violation("point " + std::to_string(i) + " = (" +
                                decimal_string(pt.x, 4) + "," +
                                decimal_string(pt.y, 4) + ") off target");
            }
            Rational f = geometry::disc_locus(pt.x, pt.y);
            Rational g = geometry::root_locus(pt.x, pt.y);
            if (abs(f) >= 10 * tol || abs(g) >= 10 * tol) {
                inter.violation("point " + std::to_string(i) +
                                " residual too large");
            }
        }
    }
    rep.checks.push_back(std::move(inter));

    CheckResult vieta{"vieta_on_quartic"};
    {
        geometry::KDomain fine = geometry::k_intersections(Rational(1, 10000));
        ++vieta.checked;
        Rational sum(0), prod(1);
        for (const auto& pt : fine.points) {
            sum += pt.y;
            prod *= pt.y;
        }
        if (abs(sum + 8) > Rational(1, 100)) {
            vieta.violation("ordinate sum " + decimal_string(sum, 6) + " != -8");
        }
        if (abs(prod + 28) > Rational(1, 100)) {
            vieta.violation("ordinate product " + decimal_string(prod, 6) +
                            " != -28");
        }
    }
    rep.checks.push_back(std::move(vieta));

    CheckResult elim{"elimination_identity"};
    {
        ++elim.checked;
        RatPoly y{Rational(0), Rational(1)};
        RatPoly x{Rational(0), Rational(0), Rational(1, 4)};  // y^2/4
        RatPoly s = x + y;
        RatPoly f_sub = s * s - x * Rational(7) - y * Rational(3) -
                        RatPoly{Rational(7, 4)};
        if (!(f_sub * Rational(16) == geometry::intersection_quartic())) {
            elim.violation("16*F(y^2/4, y) does not reproduce the quartic");
        }
    }
    rep.checks.push_back(std::move(elim));

    CheckResult member{"membership_examples"};
    {
        ++member.checked;
        auto focal = geometry::membership(Rational(-1, 2), Rational(3));
        if (!focal.in_d) {
            member.violation("focal point not inside D");
        }
        auto vertex = geometry::membership(Rational(-3, 4), Rational(13, 4));
        if (vertex.in_d ||
            sgn(geometry::disc_locus(Rational(-3, 4), Rational(13, 4))) != 0 ||
            !vertex.in_d1 || !vertex.in_k) {
            member.violation("vertex membership wrong");
        }
        auto origin = geometry::membership(Rational(0), Rational(0));
        if (!origin.in_d || origin.in_d1 || !origin.in_k) {
            member.violation("origin membership wrong");
        }
    }
    rep.checks.push_back(std::move(member));

    CheckResult msum{"max_sum"};
    {
        ++msum.checked;
        Rational ms = geometry::max_sum_on_k(tol);
        if (abs(ms - Rational(1051, 100)) > tol) {
            msum.violation("max sum " + decimal_string(ms, 4) + " != 10.51");
        }
        if (!(ms > Rational(503, 100))) {
            msum.violation("max sum does not exceed the runner-up 5.03");
        }
    }
    rep.checks.push_back(std::move(msum));

    return rep;
}

std::vector<SuiteReport> verify_all() {
    std::vector<SuiteReport> out;
    out.push_back(verify_core());
    out.push_back(verify_quadratic());
    out.push_back(verify_cubic());
    out.push_back(verify_geometry());
    return out;
}

nlohmann::json to_json(const SuiteReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& c : report.checks) {
        nlohmann::json j;
        j["name"] = c.name;
        j["checked"] = std::to_string(c.checked);
        j["violations_total"] = std::to_string(c.violations_total);
        j["findings_total"] = std::to_string(c.findings_total);
        j["violations"] = c.violations;
        j["findings"] = c.findings;
        if (!c.stats.empty()) {
            j["stats"] = c.stats;
        }
        checks.push_back(std::move(j));
    }
    return nlohmann::json{{"suite", report.suite},
                          {"checks", checks},
                          {"violations", std::to_string(report.violation_count())},
                          {"findings", std::to_string(report.finding_count())}};
}

nlohmann::json to_json(const std::vector<SuiteReport>& reports) {
    nlohmann::json suites = nlohmann::json::array();
    std::uint64_t violations = 0;
    std::uint64_t findings = 0;
    for (const SuiteReport& r : reports) {
        suites.push_back(to_json(r));
        violations += r.violation_count();
        findings += r.finding_count();
    }
    return nlohmann::json{{"suites", suites},
                          {"violations", std::to_string(violations)},
                          {"findings", std::to_string(findings)}};
}

}  // namespace verify
}  // namespace hd
