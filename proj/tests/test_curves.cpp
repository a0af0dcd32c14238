#include "singclass/curves.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace singclass;
using namespace singclass::curves;

namespace {
const std::vector<std::string> S{"s"};
Poly sp(long long e, Scalar c = Scalar(1)) { return Poly::monomial(S, {e}, c); }
}  // namespace

TEST_CASE("dihedral components at d = 5 are as expected") {
    auto id = dihedral_identity(5);
    CHECK(id.exponents == std::array<long long, 3>{2, 2, 5});
    CHECK(id.components[0].constant == Scalar(1));
    CHECK(id.components[0].polynomial == sp(5) + Poly::constant(S, Scalar(1)));
    CHECK(id.components[1].constant == Scalar(-1));
    CHECK(id.components[1].polynomial == sp(5) - Poly::constant(S, Scalar(1)));
    CHECK(id.components[2].constant == Scalar(-4));
    CHECK(id.components[2].polynomial == sp(1));
    auto r = verify_identity(id);
    CHECK(r.holds);
    CHECK(r.pairwise_coprime == std::array<bool, 3>{true, true, true});
}

TEST_CASE("dihedral family holds for every 2 <= d <= 50") {
    for (long long d = 2; d <= 50; ++d) {
        auto r = verify_identity(dihedral_identity(d));
        CHECK(r.holds);
        CHECK(r.pairwise_coprime == std::array<bool, 3>{true, true, true});
    }
}

TEST_CASE("tetrahedral identity over Q(sqrt(3))") {
    auto id = tetrahedral_identity();
    Scalar r3 = Scalar::sqrt_of(3);
    CHECK(id.components[0].constant == Scalar(12) * r3);
    auto r = verify_identity(id);
    CHECK(r.holds);
}

TEST_CASE("octahedral literal transcription fails; classical variant holds") {
    auto literal = verify_identity(octahedral_identity());
    CHECK_FALSE(literal.holds);
    REQUIRE(literal.first_mismatch_exponent.has_value());
    CHECK((*literal.first_mismatch_exponent)[0] == 4);
    CHECK(*literal.first_mismatch_coefficient == Scalar(-108));

    auto variant = verify_identity(octahedral_variant_identity());
    CHECK(variant.holds);
    CHECK(octahedral_variant_identity().status == IdentityStatus::documented_variant);
    CHECK(octahedral_identity().status == IdentityStatus::as_printed);
}

TEST_CASE("icosahedral identity holds with constant 1728") {
    auto id = icosahedral_identity();
    CHECK(id.components[0].constant == Scalar(-1));
    CHECK(id.components[1].constant == Scalar(1));
    CHECK(id.components[2].constant == Scalar(-1728));
    auto r = verify_identity(id);
    CHECK(r.holds);
    CHECK(r.component_degrees == std::array<long long, 3>{60, 60, 55});
    CHECK(r.pairwise_coprime == std::array<bool, 3>{true, true, true});
}

TEST_CASE("a corrupted icosahedral constant fails with a concrete mismatch") {
    auto id = icosahedral_identity();
    id.components[2].constant = Scalar(-1729);
    auto r = verify_identity(id);
    CHECK_FALSE(r.holds);
    REQUIRE(r.first_mismatch_exponent.has_value());
    CHECK((*r.first_mismatch_exponent)[0] == 5);      // phi12^5 starts at s^5
    CHECK(*r.first_mismatch_coefficient == Scalar(-1));
}

TEST_CASE("holding identities survive the shift s -> s + 1") {
    Poly shift = sp(1) + Poly::constant(S, Scalar(1));
    for (auto id : schwartz_catalog(7)) {
        auto r = verify_identity(id);
        if (!r.holds) continue;
        for (auto& comp : id.components)
            comp.polynomial = comp.polynomial.compose({shift});
        CHECK(verify_identity(id).holds);
    }
}

TEST_CASE("the maximal expanded degree is shared by at least two components") {
    for (const auto& id : schwartz_catalog(9)) {
        auto r = verify_identity(id);
        if (!r.holds) continue;
        long long top = std::max({r.component_degrees[0], r.component_degrees[1],
                                  r.component_degrees[2]});
        int hits = 0;
        for (long long d : r.component_degrees) hits += d == top;
        CHECK(hits >= 2);
    }
}

TEST_CASE("catalog lookup by name") {
    CHECK(identity_by_name("dihedral:17").has_value());
    CHECK(identity_by_name("dihedral:17")->exponents[2] == 17);
    CHECK(identity_by_name("icosahedral").has_value());
    CHECK(identity_by_name("octahedral-variant").has_value());
    CHECK_FALSE(identity_by_name("dodecahedral").has_value());
    CHECK_FALSE(identity_by_name("dihedral:1").has_value());
    CHECK_FALSE(identity_by_name("dihedral:x").has_value());
    CHECK(schwartz_catalog(3).size() == 5);
}

TEST_CASE("check_solution on ad-hoc input") {
    // (1, s), (1, s), (-2, s) with exponents (1, 1, 1)
    std::vector<IdentityComponent> comps{
        {Scalar(1), sp(1), 1}, {Scalar(1), sp(1), 1}, {Scalar(-2), sp(1), 1}};
    auto r = check_solution(comps);
    CHECK(r.holds);
    CHECK_FALSE(r.any_component_constant);
    CHECK_FALSE(r.pairwise_coprime[0]);  // common factor s

    std::vector<IdentityComponent> zeros{
        {Scalar(1), Poly(S), 1}, {Scalar(1), Poly(S), 1}, {Scalar(1), Poly(S), 1}};
    CHECK_THROWS_AS(check_solution(zeros), std::invalid_argument);
}

TEST_CASE("check_solution flags constant components") {
    std::vector<IdentityComponent> comps{
        {Scalar(1), Poly::constant(S, Scalar(2)), 2},
        {Scalar(-1), Poly::constant(S, Scalar(2)), 2},
        {Scalar(1), Poly(S), 1}};
    auto r = check_solution(comps);
    CHECK(r.holds);
    CHECK(r.any_component_constant);
}

TEST_CASE("build_trivial exponent bookkeeping") {
    Poly f = sp(1);
    auto comps = build_trivial({Scalar(1), Scalar(1), Scalar(-2)}, f, {2, 3, 5});
    // M = 30, powers 15, 10, 6
    CHECK(comps[0].polynomial.degree() == 15);
    CHECK(comps[1].polynomial.degree() == 10);
    CHECK(comps[2].polynomial.degree() == 6);
    CHECK(check_solution(comps).holds);

    auto squares = build_trivial({Scalar(1), Scalar(1), Scalar(-2)}, f, {2, 2, 2});
    for (const auto& c : squares) CHECK(c.polynomial == sp(1));
    CHECK(check_solution(squares).holds);
}

TEST_CASE("build_trivial with f = s^2 + 1 and exponents (2,3,6)") {
    Poly f = sp(2) + Poly::constant(S, Scalar(1));
    auto comps = build_trivial({Scalar(1), Scalar(1), Scalar(-2)}, f, {2, 3, 6});
    CHECK(comps[0].polynomial == f.pow(3));
    CHECK(comps[1].polynomial == f.pow(2));
    CHECK(comps[2].polynomial == f);
    auto r = check_solution(comps);
    CHECK(r.holds);
    // the common factor f defeats coprimality
    CHECK_FALSE(r.pairwise_coprime[0]);
    CHECK_FALSE(r.pairwise_coprime[1]);
    CHECK_FALSE(r.pairwise_coprime[2]);
}

TEST_CASE("trivial solutions always verify and never look coprime") {
    std::mt19937 rng(171717);
    std::uniform_int_distribution<long long> exp_dist(1, 6), c_dist(-5, 5),
        deg_dist(1, 4);
    for (int i = 0; i < 20; ++i) {
        Scalar alpha(c_dist(rng)), beta(c_dist(rng));
        Scalar gamma = -(alpha + beta);
        Poly f = sp(deg_dist(rng)) + Poly::constant(S, Scalar(c_dist(rng)));
        std::array<long long, 3> exps{exp_dist(rng), exp_dist(rng), exp_dist(rng)};
        auto comps = build_trivial({alpha, beta, gamma}, f, exps);
        auto r = check_solution(comps);
        CHECK(r.holds);
        // deg f >= 1, so f is a common factor of every pair
        CHECK_FALSE(r.pairwise_coprime[0]);
        CHECK_FALSE(r.pairwise_coprime[1]);
        CHECK_FALSE(r.pairwise_coprime[2]);
    }
}

TEST_CASE("build_trivial validates its input") {
    Poly f = sp(1);
    CHECK_THROWS_AS(build_trivial({Scalar(1), Scalar(1), Scalar(1)}, f, {2, 3, 5}),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_trivial({Scalar(1), Scalar(-1), Scalar(0)}, Poly(S), {2, 3, 5}),
                    std::invalid_argument);
}
