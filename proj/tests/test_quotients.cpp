#include "singclass/quotients.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace singclass;
using namespace singclass::quotients;

TEST_CASE("Hirzebruch-Jung expansions") {
    CHECK(hj_expansion(CyclicQuotientData(5, 4)) == HJString{2, 2, 2, 2});
    CHECK(hj_expansion(CyclicQuotientData(3, 1)) == HJString{3});
    CHECK(hj_expansion(CyclicQuotientData(7, 3)) == HJString{3, 2, 2});
}

TEST_CASE("continued-fraction reconstruction for all d <= 80") {
    for (long long d = 2; d <= 80; ++d)
        for (long long e = 1; e < d; ++e) {
            if (std::gcd(e, d) != 1) continue;
            CyclicQuotientData q(d, e);
            HJString s = hj_expansion(q);
            for (long long a : s) CHECK(a >= 2);
            CHECK(hj_evaluate(s) == make_rat(d, e));
        }
}

TEST_CASE("the A_{d-1} chain is the all-2 string") {
    for (long long d = 2; d <= 80; ++d) {
        HJString s = hj_expansion(CyclicQuotientData(d, d - 1));
        CHECK(s == HJString(static_cast<std::size_t>(d - 1), 2));
    }
}

TEST_CASE("invariant generators on the showcase cases") {
    using P = std::pair<long long, long long>;
    CHECK(invariant_generators(CyclicQuotientData(3, 2)) ==
          std::vector<P>{{3, 0}, {1, 1}, {0, 3}});
    CHECK(invariant_generators(CyclicQuotientData(3, 1)) ==
          std::vector<P>{{3, 0}, {2, 1}, {1, 2}, {0, 3}});
    CHECK(invariant_generators(CyclicQuotientData(2, 1)) ==
          std::vector<P>{{2, 0}, {1, 1}, {0, 2}});
}

TEST_CASE("generators satisfy the congruence and are irredundant and generating") {
    for (long long d = 2; d <= 12; ++d)
        for (long long e = 1; e < d; ++e) {
            if (std::gcd(e, d) != 1) continue;
            CyclicQuotientData q(d, e);
            auto gens = invariant_generators(q);
            std::set<std::pair<long long, long long>> gen_set(gens.begin(), gens.end());
            for (const auto& [a, b] : gens) CHECK((a + e * b) % d == 0);
            // no generator is a sum of two semigroup elements
            std::set<std::pair<long long, long long>> semi;
            for (long long a = 0; a <= d; ++a)
                for (long long b = 0; b <= d; ++b)
                    if ((a != 0 || b != 0) && (a + e * b) % d == 0) semi.insert({a, b});
            for (const auto& [a, b] : gens)
                for (const auto& [a2, b2] : semi) {
                    if (a2 > a || b2 > b || (a2 == a && b2 == b)) continue;
                    CHECK_FALSE(semi.count({a - a2, b - b2}));
                }
            // every semigroup element in the box is a sum of generators
            std::set<std::pair<long long, long long>> reach{{0, 0}};
            for (bool grew = true; grew;) {
                grew = false;
                for (const auto& r : reach)
                    for (const auto& g : gen_set) {
                        std::pair<long long, long long> s{r.first + g.first,
                                                          r.second + g.second};
                        if (s.first > d || s.second > d) continue;
                        if (reach.insert(s).second) grew = true;
                    }
            }
            for (const auto& el : semi) CHECK(reach.count(el));
        }
}

TEST_CASE("generator count duality against the dual HJ string") {
    for (long long d = 2; d <= 60; ++d)
        for (long long e = 1; e < d; ++e) {
            if (std::gcd(e, d) != 1) continue;
            auto gens = invariant_generators(CyclicQuotientData(d, e));
            auto dual = hj_expansion(CyclicQuotientData(d, d - e));
            CHECK(gens.size() == dual.size() + 2);
        }
}

TEST_CASE("Gorenstein exactly at twist d - 1") {
    CHECK(is_gorenstein(CyclicQuotientData(5, 4)));
    CHECK_FALSE(is_gorenstein(CyclicQuotientData(3, 1)));
    CHECK(is_gorenstein(CyclicQuotientData(2, 1)));
    for (long long d = 2; d <= 30; ++d) {
        CHECK(is_gorenstein(CyclicQuotientData(d, d - 1)));
        auto gens = invariant_generators(CyclicQuotientData(d, d - 1));
        using P = std::pair<long long, long long>;
        CHECK(gens == std::vector<P>{{d, 0}, {1, 1}, {0, d}});
    }
}

TEST_CASE("descended derivation for (3,2)") {
    auto dd = descend_lnd(CyclicQuotientData(3, 2));
    REQUIRE(dd.presentation.has_value());
    const auto& pres = *dd.presentation;
    CHECK(pres.vars() == std::vector<std::string>{"u", "w", "v"});
    CHECK(pres.image("u").is_zero());
    CHECK(pres.image("w") == Poly::var(pres.vars(), "u"));
    CHECK(pres.image("v") ==
          Scalar(3) * Poly::var(pres.vars(), "w").pow(2));
    REQUIRE(dd.presented_relation.has_value());
    CHECK(dd.relation_annihilated.value());
    CHECK(pres.apply(*dd.presented_relation).is_zero());
    CHECK(dd.all_images_invariant);
}

TEST_CASE("descended derivation for (2,1)") {
    auto dd = descend_lnd(CyclicQuotientData(2, 1));
    // d(x^2) = 0, d(xy) = x^2, d(y^2) = 2xy
    using P = std::pair<long long, long long>;
    REQUIRE(dd.images.size() == 3);
    CHECK(dd.images[0].generator == P{2, 0});
    CHECK(dd.images[0].coefficient == 0);
    CHECK(dd.images[1].generator == P{1, 1});
    CHECK(dd.images[1].coefficient == 1);
    CHECK(dd.images[1].image_monomial == P{2, 0});
    CHECK(dd.images[2].generator == P{0, 2});
    CHECK(dd.images[2].coefficient == 2);
    CHECK(dd.images[2].image_monomial == P{1, 1});
    CHECK(dd.relation_annihilated.value());
}

TEST_CASE("descended images are invariant for every (d, e)") {
    for (long long d = 2; d <= 15; ++d)
        for (long long e = 1; e < d; ++e) {
            if (std::gcd(e, d) != 1) continue;
            auto dd = descend_lnd(CyclicQuotientData(d, e));
            CHECK(dd.all_images_invariant);
            for (const auto& im : dd.images) CHECK(im.image_invariant);
        }
}

TEST_CASE("chain presentation for twist 1") {
    auto dd = descend_lnd(CyclicQuotientData(3, 1));
    REQUIRE(dd.presentation.has_value());
    const auto& pres = *dd.presentation;
    CHECK(pres.vars() == std::vector<std::string>{"g0", "g1", "g2", "g3"});
    CHECK(pres.image("g0").is_zero());
    CHECK(pres.image("g1") == Poly::var(pres.vars(), "g0"));
    CHECK(pres.image("g2") == Scalar(2) * Poly::var(pres.vars(), "g1"));
    CHECK(pres.image("g3") == Scalar(3) * Poly::var(pres.vars(), "g2"));
    CHECK_FALSE(dd.presented_relation.has_value());
}

TEST_CASE("cyclic data validation") {
    CHECK_THROWS_AS(CyclicQuotientData(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(CyclicQuotientData(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(CyclicQuotientData(5, 5), std::invalid_argument);
    CHECK_THROWS_AS(CyclicQuotientData(5, 0), std::invalid_argument);
}
