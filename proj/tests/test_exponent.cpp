#include <doctest.h>

#include <random>

#include "errors.hpp"
#include "oracles.hpp"

using namespace hartogs;

namespace {

Exponent random_exponent(std::mt19937_64& rng, long long max_nd = 6, bool allow_lambda = true) {
    std::uniform_int_distribution<long long> nd(1, max_nd);
    std::uniform_int_distribution<int> pow(0, allow_lambda ? 1 : 0);
    return Exponent(Rational(nd(rng), nd(rng)), pow(rng));
}

} // namespace

TEST_CASE("rational arithmetic stays normalized") {
    Rational a(6, 4);
    CHECK(a.num() == 3);
    CHECK(a.den() == 2);
    CHECK((a * Rational(2, 3)) == Rational(1));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(1, 2) < Rational(2, 3));
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("ext_ratio quotients") {
    CHECK(ext_ratio(Exponent(3), Exponent(2)) == ExtRatio{Rational(3, 2), 0});
    CHECK(ext_ratio(Exponent(3, 1, 1), Exponent(2)) == ExtRatio{Rational(3, 2), 1});
    CHECK(ext_ratio(Exponent(5, 1, 1), Exponent(5, 1, 1)) == ExtRatio{Rational(1), 0});
}

TEST_CASE("ext_ratio reciprocal product is 1") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Exponent a = random_exponent(rng), b = random_exponent(rng);
        ExtRatio ab = ext_ratio(a, b), ba = ext_ratio(b, a);
        CHECK(ab.ratio * ba.ratio == Rational(1));
        CHECK(ab.lambda_deg + ba.lambda_deg == 0);
    }
}

TEST_CASE("is_nat") {
    CHECK(is_nat(ExtRatio{Rational(4), 0}));
    CHECK_FALSE(is_nat(ExtRatio{Rational(3, 2), 0}));
    CHECK_FALSE(is_nat(ExtRatio{Rational(2), 1}));
}

TEST_CASE("is_int_diff on the corrected-example combination") {
    // 3 * 5/2 - 3 * 3/2 = 3
    LinTerm terms[2] = {{3, ExtRatio{Rational(5, 2), 0}}, {-3, ExtRatio{Rational(3, 2), 0}}};
    auto v = int_diff_value(terms);
    REQUIRE(v.has_value());
    CHECK(*v == 3);
}

TEST_CASE("is_int_diff cancels lambda parts exactly") {
    LinTerm terms[2] = {{1, ExtRatio{Rational(3, 2), 1}}, {-1, ExtRatio{Rational(3, 2), 1}}};
    auto v = int_diff_value(terms);
    REQUIRE(v.has_value());
    CHECK(*v == 0);
    LinTerm bad[1] = {{2, ExtRatio{Rational(3, 2), 1}}};
    CHECK_FALSE(is_int_diff(bad));
}

TEST_CASE("is_int_diff invariant under reordering and integer padding") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> coeff(-4, 4);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<LinTerm> terms;
        for (int i = 0; i < 4; ++i) {
            Exponent a = random_exponent(rng), b = random_exponent(rng);
            terms.push_back({coeff(rng), ext_ratio(a, b)});
        }
        bool before = is_int_diff(terms);
        std::shuffle(terms.begin(), terms.end(), rng);
        CHECK(is_int_diff(terms) == before);
        terms.push_back({coeff(rng), ExtRatio{Rational(3), 0}});
        CHECK(is_int_diff(terms) == before);
    }
}

TEST_CASE("solve_kl worked examples") {
    // F_{2,3} -> F_{2,5}: 5/2 - 3/2 = 1.
    auto w = solve_kl(ExtRatio{Rational(3, 2), 0}, ExtRatio{Rational(5, 2), 0});
    REQUIRE(w.has_value());
    CHECK(w->k == 1);
    CHECK(w->l == 1);

    auto id = solve_kl(ExtRatio{Rational(1), 0}, ExtRatio{Rational(1), 0});
    REQUIRE(id.has_value());
    CHECK(id->k == 1);
    CHECK(id->l == 1);

    CHECK_FALSE(solve_kl(ExtRatio{Rational(1), 1}, ExtRatio{Rational(1), 0}).has_value());
}

TEST_CASE("solve_kl matches the exhaustive scan and self-checks") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 500; ++trial) {
        Exponent p = random_exponent(rng), q = random_exponent(rng);
        Exponent pt = random_exponent(rng), qt = random_exponent(rng);
        ExtRatio qp = ext_ratio(q, p), qpt = ext_ratio(qt, pt);
        auto fast = solve_kl(qp, qpt);
        auto slow = oracle::solve_kl(qp, qpt);
        REQUIRE(fast.has_value() == slow.has_value());
        if (fast) {
            CHECK(fast->k == slow->k);
            CHECK(fast->l == slow->l);
            LinTerm terms[2] = {{fast->l, qpt}, {-fast->k, qp}};
            CHECK(is_int_diff(terms));
        }
    }
}

TEST_CASE("solve_r worked examples") {
    // 2r - 3 odd: never divisible by 2.
    CHECK_FALSE(solve_r(Exponent(3), Exponent(2), {Exponent(1), Exponent(2)}).has_value());
    // (2r-1)/(1/2) always integral, (2r-1)/3 integral first at r = 2.
    auto r = solve_r(Exponent(1), Exponent(2), {Exponent(1, 2), Exponent(3)});
    REQUIRE(r.has_value());
    CHECK(*r == 2);
    // q = qt: r = 1 zeroes the numerator.
    auto one = solve_r(Exponent(5, 3), Exponent(5, 3), {Exponent(7, 2), Exponent(1, 4, 1)});
    REQUIRE(one.has_value());
    CHECK(*one == 1);
}

TEST_CASE("solve_r agrees with the exhaustive oracle") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> dim(1, 3);
    for (int trial = 0; trial < 400; ++trial) {
        Exponent q = random_exponent(rng, 4), qt = random_exponent(rng, 4);
        ExponentVec pt;
        for (int j = dim(rng); j > 0; --j) pt.push_back(random_exponent(rng, 4));
        auto fast = solve_r(q, qt, pt);
        auto slow = oracle::solve_r(q, qt, pt);
        REQUIRE(fast.has_value() == slow.has_value());
        if (fast) {
            CHECK(*fast == *slow);
            CHECK(oracle::r_condition(*fast, q, qt, pt));
        }
    }
}

TEST_CASE("solve_r predicate is periodic with the derived period") {
    std::mt19937_64 rng(19);
    std::uniform_int_distribution<long long> rr(1, 40);
    int periodic_cases = 0;
    for (int trial = 0; trial < 200 && periodic_cases < 100; ++trial) {
        Exponent q = random_exponent(rng, 4, false), qt = random_exponent(rng, 4, false);
        ExponentVec pt = {random_exponent(rng, 4, false), random_exponent(rng, 4, false)};
        long long period = solve_r_period(q, qt, pt);
        ++periodic_cases;
        for (int probe = 0; probe < 5; ++probe) {
            long long r = rr(rng);
            CHECK(oracle::r_condition(r, q, qt, pt) ==
                  oracle::r_condition(r + period, q, qt, pt));
        }
    }
    CHECK(periodic_cases >= 100);
}

TEST_CASE("exponent string round trip") {
    for (const char* s : {"2", "3/2", "1/4", "2*L", "3/2*L"}) {
        Exponent e = parse_exponent(s);
        CHECK(format_exponent(e) == s);
    }
    CHECK(parse_exponent("6/4") == Exponent(3, 2));
    CHECK_THROWS_AS(parse_exponent("0"), Error);
    CHECK_THROWS_AS(parse_exponent("-1/2"), Error);
    CHECK_THROWS_AS(parse_exponent("x"), Error);
    CHECK_THROWS_AS(parse_exponent("1/2*L*L"), Error);
}
