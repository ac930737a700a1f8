#include <doctest.h>

#include "dirgal/decompose.hpp"
#include "dirgal/funcfield.hpp"
#include "dirgal/ufactor.hpp"

using namespace dirgal;

namespace {
Ideal I(std::vector<std::string> gens, FieldPtr k, VarsPtr v) {
    return Ideal::parse(gens, std::move(k), std::move(v));
}
MPoly P(const std::string& s, FieldPtr k, VarsPtr v) { return MPoly::parse(s, k, v); }

// intersection of components equals the radical of the input: double
// membership at desk scale
void check_radical_identity(const Ideal& input, const std::vector<Ideal>& comps) {
    for (const auto& C : comps)
        for (const auto& g : input.gens()) CHECK(radical_contains(C, g));
    if (comps.empty()) return;
    Ideal meet = comps[0];
    for (std::size_t i = 1; i < comps.size(); ++i) meet = intersect(meet, comps[i]);
    for (const auto& g : meet.gens()) CHECK(radical_contains(input, g));
}
}

TEST_CASE("mfactor basics") {
    auto Q = Field::rationals();
    auto v = numbered_vars("x", 2);
    auto r1 = mfactor(P("x0*x1", Q, v));
    CHECK(r1.complete);
    CHECK(r1.factors.size() == 2);

    auto r2 = mfactor(P("x0^2 - x1^2", Q, v));
    CHECK(r2.complete);
    CHECK(r2.factors.size() == 2);

    CHECK(irreducible_cert(P("x1 - x0^2", Q, v)) == Cert::yes);
    CHECK(irreducible_cert(P("x0^2 + x1^2", Q, v)) == Cert::yes);

    auto F5 = Field::prime(5);
    // 2^2 = 4 = -1 mod 5: x^2+y^2 = (x+2y)(x-2y)
    auto r3 = mfactor(P("x0^2 + x1^2", F5, v));
    CHECK(r3.complete);
    CHECK(r3.factors.size() == 2);

    auto F3 = Field::prime(3);
    CHECK(irreducible_cert(P("x0^2 + x1^2", F3, v)) == Cert::yes);

    // multiplicity
    auto r4 = mfactor(P("(x0 + x1)^2 * x0", Q, v));
    CHECK(r4.complete);
    int total = 0;
    for (auto& [h, m] : r4.factors) total += m;
    CHECK(total == 3);
}

TEST_CASE("absolute irreducibility") {
    auto v = numbered_vars("x", 2);
    auto F3 = Field::prime(3);
    auto F5 = Field::prime(5);
    // graph of a map: stays irreducible over the closure
    CHECK(absolutely_irreducible_cert(P("x1 - x0^2", F5, v)) == Cert::yes);
    // x^2+y^2 factors over F_9 (and already over F_5)
    CHECK(absolutely_irreducible_cert(P("x0^2 + x1^2", F3, v)) == Cert::no);
    auto r = mfactor(P("x0^2 + x1^2", F5, v));
    CHECK(r.factors.size() == 2);   // not even irreducible over F5
    // z^2 - x: quadratic with non-square discriminant profile
    CHECK(absolutely_irreducible_cert(P("x1^2 - x0", F5, v)) == Cert::yes);
}

TEST_CASE("decompose examples from the catalog") {
    auto Q = Field::rationals();
    auto v = numbered_vars("x", 2);

    auto d1 = decompose_variety(I({"x0*x1"}, Q, v));
    REQUIRE(d1.size() == 2);
    check_radical_identity(I({"x0*x1"}, Q, v), d1);

    auto d2 = decompose_variety(I({"x0^2 - x1^2"}, Q, v));
    REQUIRE(d2.size() == 2);

    // (y - x^2, y - 1) -> two points
    auto in3 = I({"x1 - x0^2", "x1 - 1"}, Q, v);
    auto d3 = decompose_variety(in3);
    REQUIRE(d3.size() == 2);
    check_radical_identity(in3, d3);
    for (const auto& c : d3) CHECK(dimension(c) == 0);

    // unit ideal -> empty list
    CHECK(decompose_variety(I({"1"}, Q, v)).empty());

    // non-radical input: minimal primes of (x^2)
    auto d4 = decompose_variety(I({"x0^2"}, Q, v));
    REQUIRE(d4.size() == 1);
    CHECK(d4[0].contains(P("x0", Q, v)));
}

TEST_CASE("decompose kummer correspondence components") {
    // (z^2 - x, w^2 - y, y - x): pullback of a double cover to the diagonal
    auto F7 = Field::prime(7);
    auto v = make_vars({"x", "y", "z", "w"});
    auto in = I({"z^2 - x", "w^2 - y", "y - x"}, F7, v);
    auto d = decompose_variety(in);
    REQUIRE(d.size() == 2);
    CHECK(d[0].contains(P("y - x", F7, v)));
    bool wz = false, wmz = false;
    for (const auto& c : d) {
        if (c.contains(P("w - z", F7, v))) wz = true;
        if (c.contains(P("w + z", F7, v))) wmz = true;
    }
    CHECK(wz);
    CHECK(wmz);
    check_radical_identity(in, d);
}

TEST_CASE("decompose splitting algebra of T^3 - x over F5") {
    auto F5 = Field::prime(5);
    auto v = make_vars({"x", "T1", "T2", "T3"});
    // q1 = T1^3 - x; q2 = T2^2 + T1*T2 + T1^2; q3 = T3 + T1 + T2
    auto J = I({"T1^3 - x", "T2^2 + T1*T2 + T1^2", "T3 + T1 + T2"}, F5, v);
    auto d = decompose_variety(J);
    REQUIRE(d.size() == 1);          // S3-situation: the splitting algebra is a domain
    CHECK(d[0].same_ideal(J));
    CHECK(is_prime_certified(J));

    // over F7 (mu_3 in the field) the quadratic splits: disc = -3*T1^2 = 4*T1^2
    auto F7 = Field::prime(7);
    auto J7 = I({"T1^3 - x", "T2^2 + T1*T2 + T1^2", "T3 + T1 + T2"}, F7, v);
    auto d7 = decompose_variety(J7);
    CHECK(d7.size() == 2);
}

TEST_CASE("geometric integrality") {
    auto v = numbered_vars("x", 2);
    auto F5 = Field::prime(5);
    auto F3 = Field::prime(3);
    CHECK(geometrically_integral(I({"x1 - x0^2"}, F5, v)) == Cert::yes);
    CHECK(geometrically_integral(I({"x0^2 + x1^2"}, F3, v)) == Cert::no);
    CHECK(geometrically_integral(I({"x0^2 + x1^2"}, F5, v)) == Cert::no);
    CHECK(geometrically_integral(I({}, F5, v)) == Cert::yes);
    // zero-dimensional non-rational point over Q via x^2-2: irreducible but
    // splits over the closure
    auto Q = Field::rationals();
    CHECK(geometrically_integral(I({"x0^2 - 2", "x1"}, Q, v)) == Cert::no);
}

TEST_CASE("relative algebraic closure towers") {
    auto Q = Field::rationals();
    // k(Y) = Q(t); k(Z) = Q(t)(u), u transcendental -> L trivial
    {
        auto vars = make_vars({"t", "u"});
        TowerPresentation T{Q, vars, 1, {{1, false, MPoly(Q, vars)}}};
        auto L = relative_algebraic_closure(T);
        CHECK(L.trivial());
        CHECK(L.degree == 1);
    }
    // k(Y) = F5(t); k(Z) = F5(s), t = s^2: s algebraic, min poly X^2 - t
    {
        auto F5 = Field::prime(5);
        auto vars = make_vars({"t", "s"});
        TowerPresentation T{F5, vars, 1, {{1, true, P("s^2 - t", F5, vars)}}};
        auto L = relative_algebraic_closure(T);
        CHECK(L.degree == 2);
        REQUIRE(L.gens.size() == 1);
    }
    // k(Y) = Q(t); k(Z) = Q(w, u): w^2 = 2 algebraic, u transcendental -> degree 2
    {
        auto vars = make_vars({"t", "w", "u"});
        TowerPresentation T{Q, vars, 1,
                            {{1, true, P("w^2 - 2", Q, vars)}, {2, false, MPoly(Q, vars)}}};
        auto L = relative_algebraic_closure(T);
        CHECK(L.degree == 2);
    }
    // mixed coefficients with rescale: z^2 = t*u^2 -> z/u algebraic with X^2 - t
    {
        auto F5 = Field::prime(5);
        auto vars = make_vars({"t", "u", "z"});
        TowerPresentation T{F5, vars, 1,
                            {{1, false, MPoly(F5, vars)}, {2, true, P("z^2 - t*u^2", F5, vars)}}};
        auto L = relative_algebraic_closure(T);
        CHECK(L.degree == 2);
        REQUIRE(L.gens.size() == 1);
        CHECK(L.gens[0].rescale == P("u", F5, vars));
    }
    // genuinely mixed: z^2 = t*(u^3 - u) -> closure trivial
    {
        auto F7 = Field::prime(7);
        auto vars = make_vars({"t", "u", "z"});
        TowerPresentation T{F7, vars, 1,
                            {{1, false, MPoly(F7, vars)}, {2, true, P("z^2 - t*u^3 + t*u", F7, vars)}}};
        auto L = relative_algebraic_closure(T);
        CHECK(L.trivial());
    }
}
