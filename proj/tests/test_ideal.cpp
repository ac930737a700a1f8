#include <doctest.h>

#include "dirgal/ideal.hpp"

using namespace dirgal;

namespace {
Ideal I(std::vector<std::string> gens, FieldPtr k, VarsPtr v) {
    return Ideal::parse(gens, std::move(k), std::move(v));
}
}

TEST_CASE("groebner basics") {
    auto Q = Field::rationals();
    auto v = numbered_vars("x", 2);

    // (x, y) under lex is already reduced
    auto a = I({"x0", "x1"}, Q, v);
    const auto& gba = a.groebner(MonoOrder::lex());
    CHECK(gba.polys.size() == 2);

    // unit ideal
    auto u = I({"1"}, Q, v);
    CHECK(u.is_unit());
    CHECK(u.groebner().polys.size() == 1);

    // hand Buchberger: (x0^2+x1^2, x0*x1) under lex x0>x1 has x1^3 in the basis
    auto b = I({"x0^2 + x1^2", "x0*x1"}, Q, v);
    const auto& gbb = b.groebner(MonoOrder::lex());
    CHECK(b.contains(MPoly::parse("x1^3", Q, v)));
    bool has_cube = false;
    for (const auto& p : gbb.polys)
        if (p == MPoly::parse("x1^3", Q, v)) has_cube = true;
    CHECK(has_cube);
}

TEST_CASE("groebner mutual membership") {
    auto F5 = Field::prime(5);
    auto v = numbered_vars("x", 3);
    auto id = I({"x0^2*x1 - x2", "x1^2 - x0*x2", "x0^3 - x1*x2"}, F5, v);
    for (auto ord : {MonoOrder::grevlex(), MonoOrder::lex()}) {
        const auto& gb = id.groebner(ord);
        for (const auto& g : id.gens()) CHECK(normal_form(g, gb).is_zero());
        Ideal basis_ideal(F5, v, gb.polys);
        for (const auto& p : gb.polys) CHECK(id.contains(p));
        for (const auto& g : id.gens()) CHECK(basis_ideal.contains(g));
    }
}

TEST_CASE("membership examples") {
    auto Q = Field::rationals();
    auto v = numbered_vars("x", 2);
    auto ix = I({"x0"}, Q, v);
    CHECK(ix.contains(MPoly::parse("x0*x1", Q, v)));
    CHECK(!ix.contains(MPoly::parse("x1", Q, v)));
    // x0^3 = x0*(x0^2+x1^2) - x1*(x0*x1)
    auto b = I({"x0^2 + x1^2", "x0*x1"}, Q, v);
    CHECK(b.contains(MPoly::parse("x0^3", Q, v)));
}

TEST_CASE("elimination") {
    auto Q = Field::rationals();
    auto v = numbered_vars("x", 2);   // x0, x1 with x1 playing "y"
    // (x1 - x0^2), keep x1: projection of the parabola to the y-axis is dense
    auto par = I({"x1 - x0^2"}, Q, v);
    auto e1 = eliminate(par, {1});
    CHECK(e1.gens().empty());
    // (x0 - 1, x1 - x0^2), keep x1 -> (x1 - 1)
    auto pt = I({"x0 - 1", "x1 - x0^2"}, Q, v);
    auto e2 = eliminate(pt, {1});
    REQUIRE(e2.gens().size() == 1);
    CHECK(e2.gens()[0] == MPoly::parse("y - 1", Q, make_vars({"y"})).remap(e2.vars(), {0}));
    // unit ideal stays unit
    auto e3 = eliminate(I({"1"}, Q, v), {1});
    CHECK(e3.is_unit());
}

TEST_CASE("combine: intersect, quotient, saturate") {
    auto Q = Field::rationals();
    auto v = numbered_vars("x", 2);
    auto ix = I({"x0"}, Q, v);
    auto iy = I({"x1"}, Q, v);
    auto isect = intersect(ix, iy);
    CHECK(isect.same_ideal(I({"x0*x1"}, Q, v)));

    auto ixy = I({"x0*x1"}, Q, v);
    auto q = quotient(ixy, MPoly::parse("x0", Q, v));
    CHECK(q.same_ideal(I({"x1"}, Q, v)));

    auto is2 = I({"x0^2*x1"}, Q, v);
    auto sat = saturate(is2, MPoly::parse("x0", Q, v));
    CHECK(sat.same_ideal(I({"x1"}, Q, v)));
}

TEST_CASE("dimension") {
    auto Q = Field::rationals();
    auto v = numbered_vars("x", 2);
    CHECK(dimension(I({}, Q, v)) == 2);
    CHECK(dimension(I({"1"}, Q, v)) == -1);
    CHECK(dimension(I({"x1 - x0^2"}, Q, v)) == 1);
    CHECK(dimension(I({"x0", "x1"}, Q, v)) == 0);
}

TEST_CASE("radical membership") {
    auto Q = Field::rationals();
    auto v = numbered_vars("x", 2);
    auto sq = I({"x0^2"}, Q, v);
    CHECK(radical_contains(sq, MPoly::parse("x0", Q, v)));
    CHECK(!sq.contains(MPoly::parse("x0", Q, v)));
    CHECK(!radical_contains(sq, MPoly::parse("x1", Q, v)));
}

TEST_CASE("elimination over an extension field") {
    auto F9 = Field::parse("F9:t^2+1");
    auto v = numbered_vars("x", 2);
    // x1 = t*x0 line: eliminating x0 leaves nothing
    auto line = I({"x1 - t*x0"}, F9, v);
    CHECK(eliminate(line, {1}).gens().empty());
    auto two = I({"x1 - t*x0", "x0 - t"}, F9, v);
    auto e = eliminate(two, {1});
    REQUIRE(e.gens().size() == 1);
    // x1 = t*t = -1 = 2
    CHECK(e.gens()[0] == MPoly::parse("x1 - 2", F9, e.vars()));
}
