#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"

using namespace hartogs;

namespace {

ExponentVec vec(std::initializer_list<Exponent> xs) { return ExponentVec(xs); }

Exponent rnd_exp(std::mt19937_64& rng, long long max_nd) {
    std::uniform_int_distribution<long long> nd(1, max_nd);
    std::uniform_int_distribution<int> pow(0, 1);
    return Exponent(Rational(nd(rng), nd(rng)), pow(rng));
}

} // namespace

TEST_CASE("perm_matchings worked examples") {
    // a = (4,6), b = (2,3): only the identity matches (4/3 is not natural).
    MatchingSet m = perm_matchings(vec({Exponent(4), Exponent(6)}), vec({Exponent(2), Exponent(3)}));
    CHECK(m.total == 1);
    REQUIRE(m.sigmas.size() == 1);
    CHECK(m.sigmas[0] == Perm{0, 1});

    // Fully symmetric case.
    MatchingSet both = perm_matchings(vec({Exponent(2), Exponent(2)}), vec({Exponent(2), Exponent(2)}));
    CHECK(both.total == 2);

    // 2/3 is never natural.
    MatchingSet none = perm_matchings(vec({Exponent(2), Exponent(2)}), vec({Exponent(3), Exponent(3)}));
    CHECK(none.total == 0);
    CHECK(none.sigmas.empty());
}

TEST_CASE("enumeration agrees with the factorial oracle") {
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> len(1, 5);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = len(rng);
        ExponentVec a, b;
        for (int i = 0; i < n; ++i) {
            a.push_back(rnd_exp(rng, 6));
            b.push_back(rnd_exp(rng, 6));
        }
        MatchingSet fast = perm_matchings(a, b);
        std::vector<Perm> slow = oracle::perm_matchings(a, b);
        CHECK(fast.total == slow.size());
        REQUIRE(fast.sigmas.size() == slow.size());
        // Both enumerate lexicographically.
        CHECK(fast.sigmas == slow);

        // Nonempty => every slot has some natural multiple available.
        if (fast.total > 0) {
            for (int j = 0; j < n; ++j) {
                bool some = false;
                for (int i = 0; i < n; ++i) some = some || is_nat(ext_ratio(a[i], b[j]));
                CHECK(some);
            }
        }
    }
}

TEST_CASE("first_matching is the lexicographic minimum") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        ExponentVec a, b;
        for (int i = 0; i < 4; ++i) {
            a.push_back(rnd_exp(rng, 4));
            b.push_back(rnd_exp(rng, 4));
        }
        auto first = first_matching(a, b);
        std::vector<Perm> slow = oracle::perm_matchings(a, b);
        CHECK(first.has_value() == !slow.empty());
        if (first) CHECK(*first == slow.front());
    }
}

TEST_CASE("large symmetric inputs enumerate lazily with an exact count") {
    // 8 equal exponents on both sides: 8! = 40320 matchings, above the cap.
    ExponentVec a(8, Exponent(2)), b(8, Exponent(2));
    MatchingSet m = perm_matchings(a, b, 10000);
    CHECK(m.total == 40320);
    CHECK(m.truncated);
    CHECK(m.sigmas.size() == 10000);

    std::size_t seen = 0;
    for_each_matching(divisibility_matrix(a, b), [&](const Perm&) {
        ++seen;
        return seen < 123; // early stop works
    });
    CHECK(seen == 123);
}

TEST_CASE("matching avoids factorial scans on block-structured inputs") {
    // 12 slots, compatibility only on the diagonal: exactly one matching;
    // a factorial scan would be hopeless at 12! but pruning finds it fast.
    const int n = 12;
    ExponentVec a, b;
    for (int i = 0; i < n; ++i) {
        a.push_back(Exponent(i + 1));
        b.push_back(Exponent(i + 1));
    }
    MatchingSet m = perm_matchings(a, b);
    CHECK(m.total >= 1);
    // identity is always present and first
    CHECK(m.sigmas.front() == identity_perm(n));
}

TEST_CASE("perm helpers") {
    Perm s{2, 0, 1};
    CHECK(compose_perm(inverse_perm(s), s) == identity_perm(3));
    CHECK(perm_fixes(vec({Exponent(2), Exponent(2), Exponent(2)}), s));
    CHECK_FALSE(perm_fixes(vec({Exponent(1), Exponent(2), Exponent(2)}), s));
}
