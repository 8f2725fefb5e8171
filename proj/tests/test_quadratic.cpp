#include <doctest.h>

#include <random>

#include "hd/quadratic.hpp"

using namespace hd;
using namespace hd::quad;

TEST_CASE("classify: the five cases") {
    QuadClassification c1 = classify(QuadParams(25, -20, 1));
    CHECK(c1.kase == QuadCase::ANonnegBNeg);
    CHECK(c1.valid);

    QuadClassification c2 = classify(QuadParams(1, -2, 1));
    CHECK(c2.kase == QuadCase::SumNegDeltaZero);
    CHECK(c2.valid);
    REQUIRE(c2.zero_at.has_value());
    CHECK(*c2.zero_at == 1);

    QuadClassification c3 = classify(QuadParams(4, -6, 2));
    CHECK(c3.kase == QuadCase::SumNegDeltaPos);
    CHECK(c3.valid);
    REQUIRE(c3.ell.has_value());
    CHECK(*c3.ell == 0);
    auto iv = c3.root_interval_decimal(6);
    REQUIRE(iv.has_value());
    CHECK(iv->first == "0.500000");
    CHECK(iv->second == "1.000000");

    QuadClassification c4 = classify(QuadParams(1, -3, 1));
    CHECK(c4.kase == QuadCase::SumNegDeltaPos);
    CHECK_FALSE(c4.valid);

    CHECK(classify(QuadParams(1, 0, 1)).kase == QuadCase::BNonneg);
    CHECK(classify(QuadParams(3, -10, 9)).kase == QuadCase::SumNegDeltaNeg);
    CHECK(classify(QuadParams(3, -10, 9)).valid);

    CHECK_THROWS_AS(QuadParams(0, 1, 1), DomainError);
    CHECK_THROWS_AS(QuadParams(1, 1, 0), DomainError);
}

TEST_CASE("classifier agrees with brute-force validity on a box") {
    for (long a = 1; a <= 12; ++a) {
        for (long e = 1; e <= 8; ++e) {
            for (long b = -45; b <= 45; ++b) {
                QuadParams p{Integer(a), Integer(b), Integer(e)};
                bool brute = NumFn::try_validate({Integer(e), Integer(b), Integer(a)})
                                 .has_value();
                CHECK(classify(p).valid == brute);
            }
        }
    }
}

TEST_CASE("perfect-square touching case when a+b >= 0, b < 0") {
    // b = -2k with ae = k^2 and k >= 2e whenever such valid instances occur
    for (long a = 1; a <= 40; ++a) {
        for (long e = 1; e <= 10; ++e) {
            for (long b = -80; b < 0; ++b) {
                if (a + b < 0 || b * b != 4 * a * e) {
                    continue;
                }
                Integer prod = Integer(a) * e;
                CHECK(mpz_perfect_square_p(prod.get_mpz_t()));
                Integer k = isqrt(prod);
                CHECK(Integer(-b) == 2 * k);
                CHECK(cmp(k, 2 * e) >= 0);
            }
        }
    }
}

TEST_CASE("beta2_scaled (closed form of row 2)") {
    QuadParams p(25, -20, 1);
    CHECK(beta2_scaled(p, Rational(4)) == 49);
    CHECK(beta2_scaled(Rational(0), Rational(0), Rational(1)) == 1);
    QuadParams steep(20, -9, 1);
    CHECK(beta2_scaled(steep, Rational(10)) == 0);
    CHECK(beta2_scaled(steep, Rational(15)) == 0);
}

TEST_CASE("beta2_disc examples") {
    CHECK(beta2_disc(QuadParams(25, -20, 1)) == make_rational(-367, 4));
    CHECK(beta2_disc(Rational(0), Rational(0)) == make_rational(-7, 4));
    CHECK(beta2_disc(make_rational(-3, 4), make_rational(13, 4)) == 0);
}

TEST_CASE("beta2_roots") {
    CHECK_FALSE(beta2_roots(QuadParams(25, -20, 1), make_rational(1, 1000))
                    .has_value());

    auto exact = beta2_roots(QuadParams(20, -9, 1), make_rational(1, 1000));
    REQUIRE(exact.has_value());
    CHECK(exact->first.exact());
    CHECK(exact->first.lo == 10);
    CHECK(exact->second.lo == 15);

    auto dbl = beta2_roots(make_rational(-3, 4), make_rational(13, 4),
                           make_rational(1, 1000));
    REQUIRE(dbl.has_value());
    CHECK(dbl->first.exact());
    CHECK(dbl->first.lo == 4);
    CHECK(dbl->second.lo == 4);
}

TEST_CASE("negativity of the closed form between its roots") {
    std::mt19937_64 rng(51);
    std::uniform_int_distribution<long> av(1, 60);
    std::uniform_int_distribution<long> bv(-200, 200);
    std::uniform_int_distribution<long> ev(1, 10);
    std::uniform_int_distribution<long> dv(-5, 60);
    int with_roots = 0;
    for (int i = 0; i < 500; ++i) {
        QuadParams p{Integer(av(rng)), Integer(bv(rng)), Integer(ev(rng))};
        auto roots = beta2_roots(p, make_rational(1, 1024));
        Rational d(dv(rng));
        Rational value = beta2_scaled(p, d);
        if (!roots) {
            CHECK(sgn(value) >= 0);
            continue;
        }
        ++with_roots;
        const RootInterval& r1 = roots->first;
        const RootInterval& r2 = roots->second;
        if (d <= r1.lo || d >= r2.hi) {
            CHECK(sgn(value) >= 0);
        } else if (d >= r1.hi && d <= r2.lo) {
            CHECK(sgn(value) <= 0);
        }
    }
    CHECK(with_roots > 0);
}

TEST_CASE("upper_from_beta2") {
    auto d = upper_from_beta2(NumFn::validate({1, -9, 20}));
    REQUIRE(d.has_value());
    CHECK(*d == 11);
    CHECK(hdepth(NumFn::validate({1, -9, 20})).hdepth < 11);

    CHECK_FALSE(upper_from_beta2(NumFn::validate({1, -20, 25})).has_value());

    CHECK_THROWS_AS(upper_from_beta2(NumFn::validate({1, 0, 1})),
                    PreconditionError);
    CHECK_THROWS_AS(upper_from_beta2(NumFn::validate({1, 1})), DomainError);
}

TEST_CASE("beta3_scaled (closed form of row 3)") {
    QuadParams p(25, -20, 1);
    CHECK(beta3_scaled(p, Rational(14)) == -462);
    CHECK(beta3_scaled(Rational(0), Rational(0), Rational(2)) == 1);

    std::mt19937_64 rng(52);
    std::uniform_int_distribution<long> av(1, 30);
    std::uniform_int_distribution<long> bv(-90, 90);
    std::uniform_int_distribution<long> ev(1, 9);
    for (int i = 0; i < 200; ++i) {
        QuadParams q{Integer(av(rng)), Integer(bv(rng)), Integer(ev(rng))};
        Rational expect = 3 * (19 * q.sum() - 6 * q.alpha - 99);
        CHECK(beta3_scaled(q, Rational(14)) == expect);
    }
}

TEST_CASE("closed forms match the defining sums") {
    std::mt19937_64 rng(53);
    std::uniform_int_distribution<long> av(1, 25);
    std::uniform_int_distribution<long> bv(-80, 80);
    std::uniform_int_distribution<long> ev(1, 8);
    int checked = 0;
    while (checked < 60) {
        Integer a(av(rng)), b(bv(rng)), e(ev(rng));
        auto h = NumFn::try_validate({e, b, a});
        if (!h) {
            continue;
        }
        ++checked;
        QuadParams p{a, b, e};
        for (long d = 2; d <= 20; ++d) {
            CHECK(Rational(e) * beta2_scaled(p, Rational(d)) ==
                  Rational(beta_direct(*h, d, 2)));
            if (d >= 3) {
                CHECK(Rational(e) * beta3_scaled(p, Rational(d)) ==
                      Rational(beta_direct(*h, d, 3)));
            }
        }
    }
}

TEST_CASE("c_bound equals floor(alpha+beta) + 1 on quadratics") {
    std::mt19937_64 rng(54);
    std::uniform_int_distribution<long> av(1, 40);
    std::uniform_int_distribution<long> bv(-120, 120);
    std::uniform_int_distribution<long> ev(1, 12);
    int checked = 0;
    while (checked < 200) {
        Integer a(av(rng)), b(bv(rng)), e(ev(rng));
        auto h = NumFn::try_validate({e, b, a});
        if (!h) {
            continue;
        }
        ++checked;
        QuadParams p{a, b, e};
        CHECK(c_bound(*h) == floor_rat(p.sum()) + 1);
    }
}

TEST_CASE("the three renderings of the row-3 closed form agree") {
    // binomial form, parameterwise expansion, and the sum/alpha expansion
    auto binomial_form = [](const Rational& al, const Rational& be,
                            const Rational& x) -> Rational {
        Rational c3 = x * (x - 1) * (x - 2) / 6;
        Rational c2 = (x - 1) * (x - 2) / 2;
        return -c3 + c2 * (al + be + 1) - (x - 2) * (4 * al + 2 * be + 1) +
               (9 * al + 3 * be + 1);
    };
    auto sum_alpha_form = [](const Rational& al, const Rational& be,
                             const Rational& x) -> Rational {
        Rational t = al + be;
        return -2 * al * (x - 5) + t * (x * x - 7 * x + 16) / 2 +
               (-x * x * x / 6 + x * x - Rational(17, 6) * x + 4);
    };
    std::mt19937_64 rng(55);
    std::uniform_int_distribution<long> nv(-60, 60);
    std::uniform_int_distribution<long> dv(1, 9);
    for (int i = 0; i < 300; ++i) {
        Rational al = make_rational(nv(rng), dv(rng));
        Rational be = make_rational(nv(rng), dv(rng));
        Rational x = make_rational(nv(rng), dv(rng));
        Rational expanded = beta3_scaled(al, be, x);
        CHECK(expanded == binomial_form(al, be, x));
        CHECK(expanded == sum_alpha_form(al, be, x));
    }
}

TEST_CASE("bound_for cases") {
    CHECK(bound_for(QuadParams(1, 3, 1)) == 8);
    CHECK(bound_for(QuadParams(1, -1, 1)) == 11);
    CHECK(bound_for(QuadParams(25, -20, 1)) == 13);
}

TEST_CASE("the k-family has hdepth 5") {
    auto [h5, r5] = large_sum_family(5);
    CHECK(r5.hdepth == 5);
    CHECK(h5.coeffs()[1] == -20);
    CHECK(h5.coeffs()[2] == 25);

    auto [h4, r4] = large_sum_family(4);
    CHECK(r4.hdepth == 5);
    CHECK(r4.c_bound == 5);
    BetaTable row5 = beta_table(h4, 5);
    const long expect[6] = {1, 0, 31, 6, 99, 204};
    REQUIRE(row5.values.size() == 6);
    for (int i = 0; i < 6; ++i) {
        CHECK(row5.values[static_cast<size_t>(i)] == expect[i]);
    }

    CHECK(large_sum_family(10).second.hdepth == 5);
    CHECK_THROWS_AS(large_sum_family(3), PreconditionError);
}

TEST_CASE("upper_from_beta2 agrees with a naive integer scan") {
    std::mt19937_64 rng(56);
    std::uniform_int_distribution<long> av(1, 80);
    std::uniform_int_distribution<long> bv(-240, 240);
    std::uniform_int_distribution<long> ev(1, 12);
    int eligible = 0;
    while (eligible < 400) {
        Integer a(av(rng)), b(bv(rng)), e(ev(rng));
        auto h = NumFn::try_validate({e, b, a});
        if (!h) {
            continue;
        }
        QuadParams p{a, b, e};
        if (p.sum() < 2) {
            continue;
        }
        ++eligible;
        // oracle: walk every integer in [3, c+1] and take the first with a
        // negative closed-form value
        std::optional<Integer> expect;
        Integer hi = c_bound(*h) + 1;
        for (Integer d = 3; cmp(d, hi) <= 0; ++d) {
            if (sgn(beta2_scaled(p, Rational(d))) < 0) {
                expect = d;
                break;
            }
        }
        auto got = upper_from_beta2(*h);
        CHECK(got == expect);
    }
}

TEST_CASE("the family stays pinned at arbitrary magnitude") {
    Integer k("100000000000000000000");  // 10^20
    auto [h, r] = large_sum_family(k);
    CHECK(r.hdepth == 5);
    CHECK(r.c_bound == k + 1);
    REQUIRE(r.first_failure.has_value());
    CHECK(r.first_failure->beta == -2 * k * k + 5 * k - 13);
}

TEST_CASE("irrational root interval renders as an enclosing decimal pair") {
    // roots (7 +- sqrt(17))/8: approximately 0.3596118 and 1.3903882
    QuadClassification c = classify(QuadParams(4, -7, 2));
    CHECK(c.kase == QuadCase::SumNegDeltaPos);
    CHECK_FALSE(c.valid);  // 1 lies strictly between the roots
    auto iv = c.root_interval_decimal(6);
    REQUIRE(iv.has_value());
    CHECK(iv->first == "0.359611");   // truncated down
    CHECK(iv->second == "1.390389");  // rounded up
}

TEST_CASE("classification JSON shape") {
    nlohmann::json j = to_json(classify(QuadParams(4, -6, 2)));
    CHECK(j["case"] == "sum_neg_delta_pos");
    CHECK(j["valid"] == true);
    CHECK(j["ell"] == "0");
    CHECK(j["root_interval"]["lo"] == "0.500000");
    CHECK(j["root_interval"]["hi"] == "1.000000");
    CHECK(j["zero_at"].is_null());
}
