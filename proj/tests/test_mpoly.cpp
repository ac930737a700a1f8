#include <doctest.h>

#include "dirgal/mpoly.hpp"

using namespace dirgal;

namespace {
MPoly P(const std::string& s, FieldPtr k, VarsPtr v) { return MPoly::parse(s, k, v); }
}

TEST_CASE("parse/print round trip") {
    auto Q = Field::rationals();
    auto v = numbered_vars("x", 2);
    auto f = P("x1 - x0^2", Q, v);
    CHECK(f.str() == "-x0^2 + x1");
    CHECK(P(f.str(), Q, v) == f);
    auto g = P("(x0 + x1)*(x0 - x1)", Q, v);
    CHECK(g == P("x0^2 - x1^2", Q, v));
    CHECK(P("0", Q, v).is_zero());
    CHECK(P("x0 - x0", Q, v).is_zero());
}

TEST_CASE("arithmetic and degrees") {
    auto F5 = Field::prime(5);
    auto v = numbered_vars("x", 2);
    auto f = P("x0^2 + 4*x1", F5, v);
    auto g = P("x0^2 - x1", F5, v);   // same poly mod 5
    CHECK(f == g);
    CHECK((f * f).degree_in(0) == 4);
    CHECK(f.total_degree() == 2);
    CHECK(f.derivative(0) == P("2*x0", F5, v));
    CHECK(f.derivative(1) == P("4", F5, v));
}

TEST_CASE("compose and substitute") {
    auto Q = Field::rationals();
    auto v = numbered_vars("x", 2);
    auto f = P("x0^2 + x1", Q, v);
    auto w = numbered_vars("y", 1);
    std::vector<MPoly> args = {P("y0 + 1", Q, w), P("y0", Q, w)};
    CHECK(f.compose(args) == P("y0^2 + 3*y0 + 1", Q, w));
    CHECK(f.substitute(0, Q->from_int(2)) == P("x1 + 4", Q, v));
    CHECK(f.eval({Q->from_int(2), Q->from_int(3)}) == Q->from_int(7));
}

TEST_CASE("exact division and gcd") {
    auto Q = Field::rationals();
    auto v = numbered_vars("x", 2);
    auto f = P("x0^2 - x1^2", Q, v);
    auto g = P("x0 - x1", Q, v);
    auto q = divide_exact(f, g);
    REQUIRE(q.has_value());
    CHECK(*q == P("x0 + x1", Q, v));
    CHECK(!divide_exact(f, P("x0 + 1", Q, v)).has_value());

    auto a = P("(x0 - x1)*(x0 + x1)^2", Q, v);
    auto b = P("(x0 + x1)*(x0^2 + 1)", Q, v);
    CHECK(mpoly_gcd(a, b) == P("x0 + x1", Q, v));

    auto F3 = Field::prime(3);
    auto a3 = P("(x0 + x1)^2 * x0", F3, v);
    auto b3 = P("(x0 + x1) * x1", F3, v);
    CHECK(mpoly_gcd(a3, b3) == P("x0 + x1", F3, v));
}

TEST_CASE("squarefree part") {
    auto Q = Field::rationals();
    auto v = numbered_vars("x", 2);
    auto f = P("(x0 - x1)^3 * (x0 + 1)", Q, v);
    auto sf = squarefree_part(f);
    CHECK(divide_exact(sf, P("x0 - x1", Q, v)).has_value());
    CHECK(divide_exact(sf, P("x0 + 1", Q, v)).has_value());
    CHECK(sf.total_degree() == 2);

    // char p: (x0^5 + x1^5) = (x0+x1)^5 over F_5
    auto F5 = Field::prime(5);
    auto g = P("x0^5 + x1^5", F5, v);
    CHECK(squarefree_part(g) == P("x0 + x1", F5, v));
}

TEST_CASE("polynomial square root") {
    auto Q = Field::rationals();
    auto v = numbered_vars("x", 2);
    auto s = P("3*x0^2 - x1 + 2", Q, v);
    auto r = mpoly_sqrt(s * s);
    REQUIRE(r.has_value());
    CHECK((*r == s || *r == -s));
    CHECK(!mpoly_sqrt(P("x0", Q, v)).has_value());
    CHECK(!mpoly_sqrt(P("x0^2 + 1", Q, v)).has_value());

    auto F9 = Field::parse("F9:t^2+1");
    auto v1 = numbered_vars("x", 1);
    auto u = P("t*x0 + 2", F9, v1);
    auto r2 = mpoly_sqrt(u * u);
    REQUIRE(r2.has_value());
    CHECK((*r2) * (*r2) == u * u);
}

TEST_CASE("remap and coeffs_in") {
    auto Q = Field::rationals();
    auto v = numbered_vars("x", 2);
    auto big = make_vars({"x0", "x1", "y0"});
    auto f = P("x0*x1 + x1^2", Q, v);
    auto g = f.remap(big, {0, 2});     // x1 -> y0
    CHECK(g == P("x0*y0 + y0^2", Q, big));
    auto cs = f.coeffs_in(1);
    REQUIRE(cs.size() == 3);
    CHECK(cs[1] == P("x0", Q, v));
    CHECK(cs[2] == P("1", Q, v));
}
