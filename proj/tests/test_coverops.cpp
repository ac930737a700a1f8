#include <doctest.h>

#include "dirgal/coverops.hpp"

using namespace dirgal;

namespace {
// difference G_m with identity correspondence
DirectPresentation gm_delta(FieldPtr k) {
    auto X = DirectPresentation::make(k, 1, {}, {"y0 - x0"});
    return X.with_open0(Ideal::parse({"x0"}, k, X.vars0));
}
}

TEST_CASE("galois closure of squaring on G_m is the kummer cover") {
    auto F7 = Field::prime(7);
    auto X = gm_delta(F7);
    auto Y = gm_delta(F7);
    auto f = make_morphism(X, Y, {"x0^2"});
    auto cl = galois_closure(f);
    CHECK(cl.outer.G0.size() == 2);
    CHECK(cl.outer.G1.size() == 2);
    CHECK(cl.sub0.size() == 1);       // Gal(Z~0/X0) trivial: degree-2 already Galois
    auto rep = validate_cover(cl.outer);
    for (auto& v : rep.violations) MESSAGE(v);
    CHECK(rep.ok);
    auto repi = validate_cover(cl.inner);
    for (auto& v : repi.violations) MESSAGE(v);
    CHECK(repi.ok);

    // local frobenius through the closure cover separates residues mod 7
    auto K = make_difffield(7, 1, 1);
    int trivial = 0, nontrivial = 0;
    for (long v = 1; v < 7; ++v) {
        auto cls = local_frobenius(cl.outer, {F7->from_int(v)}, K);
        if (cls.elems.count(cl.outer.G0.id)) ++trivial;
        else ++nontrivial;
    }
    CHECK(trivial == 3);
    CHECK(nontrivial == 3);
}

TEST_CASE("galois closure of the identity is trivial") {
    auto F5 = Field::prime(5);
    auto X = gm_delta(F5);
    auto f = make_morphism(X, X, {"x0"});
    auto cl = galois_closure(f);
    CHECK(cl.outer.trivial);
    CHECK(cl.outer.G0.size() == 1);
}

TEST_CASE("galois closure of cubing over F5 has group S3") {
    auto F5 = Field::prime(5);
    auto X = gm_delta(F5);
    auto Y = gm_delta(F5);
    auto f = make_morphism(X, Y, {"x0^3"});
    auto cl = galois_closure(f);
    CHECK(cl.outer.G0.size() == 6);
    CHECK(cl.sub0.size() == 2);   // stabilizer of one root in S3
    auto rep = validate_cover(cl.outer);
    for (auto& v : rep.violations) MESSAGE(v);
    CHECK(rep.ok);

    // over F7 (mu_3 in the base) the closure group is Z/3
    auto F7 = Field::prime(7);
    auto X7 = gm_delta(F7);
    auto f7 = make_morphism(X7, gm_delta(F7), {"x0^3"});
    auto cl7 = galois_closure(f7);
    CHECK(cl7.outer.G0.size() == 3);
    CHECK(validate_cover(cl7.outer).ok);
}

TEST_CASE("pushforward of a pulled-back kummer cover is the base kummer") {
    auto F7 = Field::prime(7);
    // X = A^1 x G_m-ish: coords (x0 = base, x1 = fibre), both with identity
    // correspondence; base coordinate inverted
    auto X = DirectPresentation::make(F7, 2, {}, {"y0 - x0", "y1 - x1"});
    X = X.with_open0(Ideal::parse({"x0"}, F7, X.vars0));
    auto Y = gm_delta(F7);
    auto f = make_morphism(X, Y, {"x0"});

    // cover: z^2 = x0 pulled back (constant along fibres); the fibre
    // coordinate is carried along as a second cover coordinate
    GaloisCover D;
    D.base = X;
    auto Z2 = DirectPresentation::make(F7, 2, {}, {"w0 - z0", "w1 - z1"}, "z", "w");
    D.cov = Z2;
    D.p0 = {MPoly::parse("z0^2", F7, Z2.vars0), MPoly::parse("z1", F7, Z2.vars0)};
    D.cov.U0 = Ideal::parse({"z0"}, F7, Z2.vars0);
    D.G0 = FiniteGroup::cyclic(2);
    D.G1 = FiniteGroup::cyclic(2);
    D.act0 = {{MPoly::parse("z0", F7, Z2.vars0), MPoly::parse("z1", F7, Z2.vars0)},
              {MPoly::parse("-z0", F7, Z2.vars0), MPoly::parse("z1", F7, Z2.vars0)}};
    D.act1 = {{MPoly::parse("z0", F7, Z2.vars1), MPoly::parse("z1", F7, Z2.vars1),
               MPoly::parse("w0", F7, Z2.vars1), MPoly::parse("w1", F7, Z2.vars1)},
              {MPoly::parse("-z0", F7, Z2.vars1), MPoly::parse("z1", F7, Z2.vars1),
               MPoly::parse("-w0", F7, Z2.vars1), MPoly::parse("w1", F7, Z2.vars1)}};
    D.hom_pi1 = {nullptr, nullptr, {0, 1}};
    D.hom_sigma = {nullptr, nullptr, {0, 1}};
    D.rebind_homs();

    auto res = pushforward_cover(f, D);
    CHECK(res.pushed.G0.size() == 2);
    CHECK(res.kernel0.size() == 1);
    CHECK(res.pushed.G0.size() * res.kernel0.size() == D.G0.size());
    auto rep = validate_cover(res.pushed);
    for (auto& v : rep.violations) MESSAGE(v);
    CHECK(rep.ok);

    // the pushed cover separates residues like the base kummer cover
    auto K = make_difffield(7, 1, 1);
    int trivial = 0;
    for (long v = 1; v < 7; ++v) {
        auto cls = local_frobenius(res.pushed, {F7->from_int(v)}, K);
        if (cls.elems.count(res.pushed.G0.id)) ++trivial;
    }
    CHECK(trivial == 3);
}

TEST_CASE("pushforward with trivial relative closure gives the trivial cover") {
    auto F7 = Field::prime(7);
    auto X = DirectPresentation::make(F7, 2, {}, {"y0 - x0", "y1 - x1"});
    X = X.with_open0(Ideal::parse({"x0", "x1^3 - x1"}, F7, X.vars0));
    auto Y = gm_delta(F7);
    auto f = make_morphism(X, Y, {"x0"});
    // z^2 = x0*(x1^3 - x1): mixes the fibre coordinate in a non-split way
    GaloisCover D;
    D.base = X;
    auto Z3 = DirectPresentation::make(F7, 3, {}, {"w0 - z0", "w1 - z1"}, "z", "w");
    // coords: z0 = base x0, z1 = fibre x1, z2 = root with z2^2 = z0*(z1^3 - z1)
    D.cov = Z3;
    D.cov.I0 = Ideal::parse({"z2^2 - z0*(z1^3 - z1)"}, F7, Z3.vars0);
    D.cov.I1 = Ideal::parse({"w0 - z0", "w1 - z1", "w2^2 - w0*(w1^3 - w1)",
                             "z2^2 - z0*(z1^3 - z1)", "w2*z1*(z1^2 - 1) - z2*w1*(w1^2-1)"},
                            F7, Z3.vars1);
    D.cov.U0 = Ideal::parse({"z0*(z1^3 - z1)"}, F7, Z3.vars0);
    D.p0 = {MPoly::parse("z0", F7, Z3.vars0), MPoly::parse("z1", F7, Z3.vars0)};
    D.G0 = FiniteGroup::cyclic(2);
    D.G1 = FiniteGroup::cyclic(2);
    D.act0 = {{MPoly::parse("z0", F7, Z3.vars0), MPoly::parse("z1", F7, Z3.vars0),
               MPoly::parse("z2", F7, Z3.vars0)},
              {MPoly::parse("z0", F7, Z3.vars0), MPoly::parse("z1", F7, Z3.vars0),
               MPoly::parse("-z2", F7, Z3.vars0)}};
    D.act1 = {{MPoly::parse("z0", F7, Z3.vars1), MPoly::parse("z1", F7, Z3.vars1),
               MPoly::parse("z2", F7, Z3.vars1), MPoly::parse("w0", F7, Z3.vars1),
               MPoly::parse("w1", F7, Z3.vars1), MPoly::parse("w2", F7, Z3.vars1)},
              {MPoly::parse("z0", F7, Z3.vars1), MPoly::parse("z1", F7, Z3.vars1),
               MPoly::parse("-z2", F7, Z3.vars1), MPoly::parse("w0", F7, Z3.vars1),
               MPoly::parse("w1", F7, Z3.vars1), MPoly::parse("-w2", F7, Z3.vars1)}};
    D.hom_pi1 = {nullptr, nullptr, {0, 1}};
    D.hom_sigma = {nullptr, nullptr, {0, 1}};
    D.rebind_homs();

    auto res = pushforward_cover(f, D);
    CHECK(res.pushed.G0.size() == 1);
    CHECK(res.kernel0.size() == 2);
}

TEST_CASE("to_direct_cover picks the graph component") {
    auto F7 = Field::prime(7);
    // kummer in almost form: Z1 = full fibre product (both components)
    GaloisCover D;
    D.base = gm_delta(F7);
    auto Z = DirectPresentation::make(F7, 1, {}, {"w0^2 - z0^2"}, "z", "w");
    Z = Z.with_open0(Ideal::parse({"z0"}, F7, Z.vars0));
    D.cov = Z;
    D.p0 = {MPoly::parse("z0^2", F7, Z.vars0)};
    D.G0 = FiniteGroup::cyclic(2);
    D.G1 = FiniteGroup::cyclic(2);
    D.act0 = {{MPoly::parse("z0", F7, Z.vars0)}, {MPoly::parse("-z0", F7, Z.vars0)}};
    D.act1 = {{MPoly::parse("z0", F7, Z.vars1), MPoly::parse("w0", F7, Z.vars1)},
              {MPoly::parse("-z0", F7, Z.vars1), MPoly::parse("-w0", F7, Z.vars1)}};
    D.hom_pi1 = {nullptr, nullptr, {0, 1}};
    D.hom_sigma = {nullptr, nullptr, {0, 1}};
    D.rebind_homs();

    auto E = to_direct_cover(D);
    // the component w0 = z0 or w0 = -z0 was chosen; either is a graph
    bool graph = E.cov.I1.contains(MPoly::parse("w0 - z0", F7, Z.vars1)) ||
                 E.cov.I1.contains(MPoly::parse("w0 + z0", F7, Z.vars1));
    CHECK(graph);
    CHECK(E.G1.size() == 2);

    // already-direct input comes back unchanged
    auto E2 = to_direct_cover(E);
    CHECK(E2.cov.I1.same_ideal(E.cov.I1));
}
