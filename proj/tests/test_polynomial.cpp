#include <catch2/catch_amalgamated.hpp>

#include "kcs/polynomial.hpp"

using namespace kcs;

namespace {

Ring qxchi() { return make_ring({{"x", 0}, {"chi1", -2}}); }

} // namespace

TEST_CASE("ring construction validates degrees and names") {
    CHECK_NOTHROW(make_ring({{"x", 0}, {"chi1", -2}}));
    CHECK_NOTHROW(make_ring({}));
    CHECK_THROWS_AS(make_ring({{"x", 1}}), ValidationError);
    CHECK_THROWS_AS(make_ring({{"x", -1}}), ValidationError);
    CHECK_THROWS_AS(make_ring({{"x", 0}, {"x", -2}}), ValidationError);
}

TEST_CASE("degrevlex order sorts leading terms") {
    Ring R = qxchi();
    // x^2 > x*chi1 > chi1^2 in degrevlex? total degrees 2,2,2; revlex:
    // last differing exponent smaller wins: x^2 has chi-exp 0
    Polynomial p = parse_polynomial(R, "chi1^2 + x*chi1 + x^2");
    auto it = p.terms().begin();
    CHECK(it->first == Monomial{2, 0});
    ++it;
    CHECK(it->first == Monomial{1, 1});
    ++it;
    CHECK(it->first == Monomial{0, 2});
}

TEST_CASE("polynomial arithmetic is exact") {
    Ring R = qxchi();
    Polynomial x = parse_polynomial(R, "x");
    Polynomial chi = parse_polynomial(R, "chi1");
    Polynomial p = (x + chi) * (x - chi);
    CHECK(p == parse_polynomial(R, "x^2 - chi1^2"));
    CHECK((p - p).isZero());
    CHECK((Rational(1, 3) * x).str() == "1/3*x");
    Polynomial q = parse_polynomial(R, "1/2*x + 1/2*x");
    CHECK(q == x);
}

TEST_CASE("homogeneous degree bookkeeping") {
    Ring R = qxchi();
    CHECK(parse_polynomial(R, "x^5").isHomogeneousOfDegree(0));
    CHECK(parse_polynomial(R, "x*chi1").isHomogeneousOfDegree(-2));
    CHECK(parse_polynomial(R, "x^2*chi1 + chi1").isHomogeneousOfDegree(-2));
    CHECK_FALSE(parse_polynomial(R, "x + chi1").isHomogeneous());
    CHECK(Polynomial::zero(R).isHomogeneousOfDegree(-4));
    CHECK(parse_polynomial(R, "x - 1").isHomogeneousOfDegree(0));
}

TEST_CASE("canonical print and parse round trip") {
    Ring R = qxchi();
    for (const char* text : {"0", "1", "-1", "x", "-x", "x + 1", "x - 1", "1/2*x^2*chi1 - x + 3",
                             "x^2 - chi1^2", "2*x*chi1 + 5/7"}) {
        Polynomial p = parse_polynomial(R, text);
        CHECK(parse_polynomial(R, p.str()) == p);
        CHECK(parse_polynomial(R, p.str()).str() == p.str());
    }
    // canonical form of the examples above
    CHECK(parse_polynomial(R, "3 + x*2").str() == "2*x + 3");
    CHECK(parse_polynomial(R, "x*x*x").str() == "x^3");
}

TEST_CASE("parse rejects malformed input") {
    Ring R = qxchi();
    CHECK_THROWS_AS(parse_polynomial(R, "y"), ValidationError);
    CHECK_THROWS_AS(parse_polynomial(R, "x +"), ValidationError);
    CHECK_THROWS_AS(parse_polynomial(R, ""), ValidationError);
    CHECK_THROWS_AS(parse_polynomial(R, "x^"), ValidationError);
}

TEST_CASE("derivative") {
    Ring R = qxchi();
    Polynomial w = parse_polynomial(R, "x^2*chi1");
    CHECK(w.derivative(0) == parse_polynomial(R, "2*x*chi1"));
    CHECK(w.derivative(1) == parse_polynomial(R, "x^2"));
    CHECK(Polynomial::one(R).derivative(0).isZero());
}

TEST_CASE("embedding into a larger ring") {
    Ring R = make_ring({{"x", 0}});
    Ring A = qxchi();
    Polynomial p = parse_polynomial(R, "x^2 - 3");
    Polynomial q = embed(p, A);
    CHECK(q == parse_polynomial(A, "x^2 - 3"));
    CHECK_THROWS_AS(embed(parse_polynomial(A, "chi1"), R), RingMismatchError);
}
