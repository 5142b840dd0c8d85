#include <catch2/catch_amalgamated.hpp>

#include "kcs/ideal.hpp"

using namespace kcs;

namespace {

Ring qxchi() { return make_ring({{"x", 0}, {"chi1", -2}}); }

Ideal ideal_of(const Ring& R, std::initializer_list<const char*> gens) {
    std::vector<Polynomial> ps;
    for (const char* g : gens) ps.push_back(parse_polynomial(R, g));
    return Ideal(R, ps);
}

// S-polynomial helper used to cross-check the Buchberger property.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    Monomial lcm = mono_lcm(f.leadingMonomial(), g.leadingMonomial());
    Polynomial a = f.timesTerm(mono_div(lcm, f.leadingMonomial()),
                               Rational(1) / f.leadingCoefficient());
    Polynomial b = g.timesTerm(mono_div(lcm, g.leadingMonomial()),
                               Rational(1) / g.leadingCoefficient());
    return a - b;
}

} // namespace

TEST_CASE("reduced groebner basis of desk ideals") {
    Ring R = qxchi();

    SECTION("monomial ideal is its own basis") {
        Ideal I = groebner_basis(ideal_of(R, {"x^2", "x*chi1"}));
        REQUIRE(I.groebner().size() == 2);
        CHECK(I.groebner()[0] == parse_polynomial(R, "x^2"));
        CHECK(I.groebner()[1] == parse_polynomial(R, "x*chi1"));
    }
    SECTION("zero ideal") {
        Ideal I = groebner_basis(Ideal::zero(R));
        CHECK(I.groebner().empty());
    }
    SECTION("unit ideal after reduction") {
        Ideal I = groebner_basis(ideal_of(R, {"x", "x + 1"}));
        REQUIRE(I.groebner().size() == 1);
        CHECK(I.groebner()[0] == Polynomial::one(R));
        CHECK(is_unit_ideal(I));
    }
    SECTION("unknown order name is rejected") {
        CHECK_THROWS_AS(groebner_basis(ideal_of(R, {"x"}), "lex"), UnsupportedError);
    }
}

TEST_CASE("inhomogeneous generators are rejected") {
    Ring R = qxchi();
    CHECK_THROWS_AS(ideal_of(R, {"x + chi1"}), ValidationError);
}

TEST_CASE("buchberger property: generators and s-polynomials reduce to zero") {
    Ring R = qxchi();
    std::vector<Ideal> samples = {
        ideal_of(R, {"x^2", "x*chi1"}),
        ideal_of(R, {"x^2*chi1 + x*chi1", "x^3"}),
        ideal_of(R, {"x^2*chi1 + x^3*chi1", "x^5", "x*chi1^2"}),
    };
    for (const auto& I : samples) {
        Ideal J = groebner_basis(I);
        for (const auto& g : I.generators()) CHECK(normal_form(g, J).isZero());
        const auto& basis = J.groebner();
        Ideal basisIdeal(R, basis);
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i + 1; j < basis.size(); ++j)
                CHECK(normal_form(s_polynomial(basis[i], basis[j]), basisIdeal).isZero());
        CHECK(J.verifyCache());
    }
}

TEST_CASE("normal form examples") {
    Ring R = qxchi();
    SECTION("leading-term cancellation") {
        Ideal I = groebner_basis(ideal_of(R, {"x^2"}));
        CHECK(normal_form(parse_polynomial(R, "x^2 + chi1"), I) == parse_polynomial(R, "chi1"));
    }
    SECTION("zero input") {
        Ideal I = groebner_basis(ideal_of(R, {"x^2"}));
        CHECK(normal_form(Polynomial::zero(R), I).isZero());
    }
    SECTION("generator membership") {
        Ideal I = groebner_basis(ideal_of(R, {"x^2", "x*chi1"}));
        CHECK(normal_form(parse_polynomial(R, "x*chi1"), I).isZero());
    }
    SECTION("ring mismatch") {
        Ring S = make_ring({{"y", 0}});
        Ideal I = ideal_of(R, {"x"});
        CHECK_THROWS_AS(normal_form(parse_polynomial(S, "y"), I), RingMismatchError);
    }
}

TEST_CASE("radical membership via rabinowitsch") {
    Ring R = qxchi();
    Ideal I = ideal_of(R, {"x^2", "x*chi1"});
    CHECK(radical_member(parse_polynomial(R, "x"), I));
    // chi1^k stays outside (x^2, x*chi1) for all k; the hand primary
    // decomposition is (x) ∩ (x, chi1)
    CHECK_FALSE(radical_member(parse_polynomial(R, "chi1"), I));
    CHECK_FALSE(radical_member(Polynomial::one(R), ideal_of(R, {"x"})));
    CHECK(radical_member(Polynomial::zero(R), I));
}

TEST_CASE("radical membership agrees with brute-force powers (one-sided)") {
    Ring R = qxchi();
    std::vector<Ideal> ideals = {
        groebner_basis(ideal_of(R, {"x^2", "x*chi1"})),
        groebner_basis(ideal_of(R, {"x^3"})),
        groebner_basis(ideal_of(R, {"x^2*chi1 - x*chi1", "chi1^2"})),
    };
    std::vector<Polynomial> probes = {
        parse_polynomial(R, "x"), parse_polynomial(R, "chi1"), parse_polynomial(R, "x*chi1"),
        parse_polynomial(R, "x^2*chi1 + chi1"),
    };
    const int K = 6;
    for (const auto& I : ideals)
        for (const auto& p : probes) {
            bool brute = false;
            for (int k = 1; k <= K && !brute; ++k)
                brute = normal_form(p.pow(static_cast<unsigned>(k)), I).isZero();
            if (brute) CHECK(radical_member(p, I));
        }
}

TEST_CASE("saturation") {
    Ring R = qxchi();
    // (x * chi1) : x^inf = (chi1)
    Ideal I = ideal_of(R, {"x*chi1"});
    Ideal S = saturate(I, parse_polynomial(R, "x"));
    CHECK(normal_form(parse_polynomial(R, "chi1"), groebner_basis(S)).isZero());
    CHECK_FALSE(normal_form(parse_polynomial(R, "x"), groebner_basis(S)).isZero());
    // saturating by zero empties the locus
    CHECK(is_unit_ideal(saturate(I, Polynomial::zero(R))));
    // saturating by a unit changes nothing
    CHECK(saturate(I, Polynomial::one(R)) == I);
}

TEST_CASE("groebner step limit guards runaway computations") {
    Ring R = qxchi();
    auto saved = gb_step_limit().load();
    gb_step_limit().store(1);
    Ideal I = ideal_of(R, {"x^2*chi1 + x*chi1", "x^3", "x*chi1^2 + chi1^2"});
    CHECK_THROWS_AS(I.groebner(), ComputationLimitError);
    gb_step_limit().store(saved);
}
