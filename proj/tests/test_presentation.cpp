#include <doctest.h>

#include "dirgal/points.hpp"
#include "dirgal/presentation.hpp"

using namespace dirgal;

namespace {
DirectPresentation graph_x2(FieldPtr k) {
    return DirectPresentation::make(std::move(k), 1, {}, {"y0 - x0^2"});
}
}

TEST_CASE("validate") {
    auto Q = Field::rationals();
    auto P = graph_x2(Q);
    CHECK(validate(P).ok);

    // I1 missing the I0(y) pullback: containment fails as ideals
    auto bad = DirectPresentation::make(Q, 1, {"x0 - 1"}, {"y0 - x0"});
    auto rep = validate(bad);
    CHECK(!rep.ok);
    REQUIRE(!rep.violations.empty());

    auto empty = DirectPresentation::make(Q, 1, {"1"}, {"1"});
    CHECK(validate(empty).ok);
}

TEST_CASE("enumerate realisations of the squaring graph") {
    // q=2, m=3: x^2 = x^2 always: all 8 points
    auto P = graph_x2(Field::rationals());
    auto K = make_difffield(2, 1, 3);
    CHECK(enumerate_realisations(P, K).size() == 8);

    // q=3, m=1: x^3 = x^2 iff x in {0, 1}
    auto K31 = make_difffield(3, 1, 1);
    auto pts = enumerate_realisations(P, K31);
    REQUIRE(pts.size() == 2);
    CHECK(is_point(P, {K31.Fqm->from_int(1)}, K31));
    CHECK(!is_point(P, {K31.Fqm->from_int(2)}, K31));

    // empty presentation
    auto E = DirectPresentation::make(Field::rationals(), 1, {"1"}, {"1"});
    CHECK(enumerate_realisations(E, K31).empty());
}

TEST_CASE("frobenius-orbit closure of realisation sets") {
    auto P = graph_x2(Field::rationals());
    for (int m : {1, 2}) {
        auto K = make_difffield(3, 1, m);
        auto pts = enumerate_realisations(P, K);
        for (const auto& x : pts) {
            Point fx{K.frob(x[0])};
            CHECK(pts.count(fx) == 1);
        }
    }
}

TEST_CASE("is_h_direct") {
    auto Q = Field::rationals();
    CHECK(is_h_direct(graph_x2(Q)));
    // sigma x = 0: pi_2 image is the point 0
    auto collapse = DirectPresentation::make(Q, 1, {}, {"y0"});
    CHECK(!is_h_direct(collapse));
    // a point with its point-pair
    auto pt = DirectPresentation::make(Q, 1, {"x0"}, {"x0", "y0"});
    CHECK(is_h_direct(pt));
}

TEST_CASE("direct decomposition: collapsing and reducible correspondences") {
    auto Q = Field::rationals();
    // sigma x = 0 decomposes into the fixed point at the origin
    auto collapse = DirectPresentation::make(Q, 1, {}, {"y0"});
    auto comps = direct_decompose(collapse);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].I0.contains(MPoly::parse("x0", Q, comps[0].vars0)));
    CHECK(is_h_direct(comps[0]));

    // y0*(y0-x0): identity branch plus a collapsing branch
    auto red = DirectPresentation::make(Q, 1, {}, {"y0*(y0 - x0)"});
    auto comps2 = direct_decompose(red);
    REQUIRE(comps2.size() == 2);
    for (const auto& c : comps2) CHECK(is_h_direct(c));

    // already H-direct: comes back as itself
    auto g = graph_x2(Q);
    auto comps3 = direct_decompose(g);
    REQUIRE(comps3.size() == 1);
    CHECK(comps3[0].I1.same_ideal(g.I1));
}

TEST_CASE("decomposition preserves realisation sets pointwise") {
    auto Q = Field::rationals();
    std::vector<DirectPresentation> catalog = {
        graph_x2(Q),
        DirectPresentation::make(Q, 1, {}, {"y0"}),
        DirectPresentation::make(Q, 1, {}, {"y0 - x0 - 1"}),
        DirectPresentation::make(Q, 1, {}, {"y0*(y0 - x0)"}),
    };
    for (const auto& P : catalog) {
        auto comps = direct_decompose(P);
        for (std::uint64_t q : {2, 3, 5}) {
            for (int m = 1; m <= 2; ++m) {
                auto K = make_difffield(q, 1, m);
                auto want = enumerate_realisations(P, K);
                PointSet got;
                for (const auto& c : comps)
                    for (const auto& x : enumerate_realisations(c, K)) got.insert(x);
                CHECK(got == want);
            }
        }
    }
}

TEST_CASE("direct localize") {
    auto Q = Field::rationals();
    auto P = graph_x2(Q);
    // structural no-op
    auto same = direct_localize(P, std::nullopt, std::nullopt);
    CHECK(same.I0.same_ideal(P.I0));
    CHECK(same.U0.is_unit());
    // remove the origin
    Ideal x0(Q, P.vars0, {MPoly::parse("x0", Q, P.vars0)});
    auto loc = direct_localize(P, x0, std::nullopt);
    auto K = make_difffield(2, 1, 3);
    auto pts = enumerate_realisations(loc, K);
    CHECK(pts.size() == 7);   // all 8 minus x=0
    for (const auto& x : pts) CHECK(!x[0].is_zero());
    // empty localization
    Ideal zero = Ideal::zero(Q, P.vars0);
    auto none = direct_localize(P, zero, std::nullopt);
    CHECK(enumerate_realisations(none, K).empty());
}

TEST_CASE("nonempty witness") {
    auto Q = Field::rationals();
    CHECK(nonempty_witness(graph_x2(Q), 3, 1, 3).has_value());
    CHECK(nonempty_witness(graph_x2(Q), 3, 1, 3)->m == 1);
    // Artin-Schreier sigma x = x + 1 over q=5: witness in degree 5
    auto as = DirectPresentation::make(Q, 1, {}, {"y0 - x0 - 1"});
    auto w = nonempty_witness(as, 5, 1, 6);
    REQUIRE(w.has_value());
    CHECK(w->m == 5);
    // empty
    auto E = DirectPresentation::make(Q, 1, {"1"}, {"1"});
    CHECK(!nonempty_witness(E, 3, 1, 3).has_value());
}

TEST_CASE("morphism validation and functoriality on points") {
    auto Q = Field::rationals();
    auto A1 = DirectPresentation::affine_space(Q, 1);
    auto f = make_morphism(graph_x2(Q), A1, {"x0"});
    CHECK(validate_morphism(f).ok);
    // realisations map into realisations
    auto K = make_difffield(3, 1, 2);
    auto src = enumerate_realisations(f.src, K);
    auto dst = enumerate_realisations(f.dst, K);
    for (const auto& y : map_points(f.f0, src, K)) CHECK(dst.count(y) == 1);
}

TEST_CASE("stratify by etaleness of squaring") {
    auto F5 = Field::prime(5);
    auto A1 = DirectPresentation::affine_space(F5, 1);
    auto f = make_morphism(A1, A1, {"x0^2"});
    auto strata = stratify_by_property(f, MorphProperty::etale);
    REQUIRE(strata.size() == 2);
    // one stratum excludes the branch point, the other is the origin
    bool open_piece = false, origin_piece = false;
    for (const auto& s : strata) {
        CHECK(s.holds);
        if (!s.src_piece.U0.is_unit()) open_piece = true;
        if (s.src_piece.I0.contains(MPoly::parse("x0", F5, s.src_piece.vars0)))
            origin_piece = true;
    }
    CHECK(open_piece);
    CHECK(origin_piece);

    // identity map: single stratum
    auto idm = make_morphism(A1, A1, {"x0"});
    auto sid = stratify_by_property(idm, MorphProperty::etale);
    CHECK(sid.size() == 1);
    CHECK(sid[0].holds);
}

TEST_CASE("stratify by geometrically integral fibres") {
    auto F5 = Field::prime(5);
    auto A2 = DirectPresentation::affine_space(F5, 2);
    auto A1 = DirectPresentation::affine_space(F5, 1);
    auto proj = make_morphism(A2, A1, {"x0"});
    auto s = stratify_by_property(proj, MorphProperty::geom_integral_fibres);
    REQUIRE(s.size() == 1);
    CHECK(s[0].holds);

    // map to a point with integral source
    auto pt = DirectPresentation::affine_space(F5, 0);
    auto tot = make_morphism(graph_x2(F5), pt, {});
    auto s2 = stratify_by_property(tot, MorphProperty::geom_integral_fibres);
    REQUIRE(s2.size() == 1);
    CHECK(s2[0].holds);
}

TEST_CASE("fibre product") {
    auto Q = Field::rationals();
    auto A1 = DirectPresentation::affine_space(Q, 1);
    auto pt = DirectPresentation::affine_space(Q, 0);
    auto g = graph_x2(Q);
    // product over a point
    auto f1 = make_morphism(g, pt, {});
    auto f2 = make_morphism(g, pt, {});
    auto prod = fibre_product(f1, f2);
    CHECK(prod.n == 2);
    auto K = make_difffield(3, 1, 1);
    CHECK(enumerate_realisations(prod, K).size() == 4);   // {0,1} x {0,1}

    // graph x_{A1} graph along the same map: diagonal
    auto h1 = make_morphism(g, A1, {"x0"});
    auto h2 = make_morphism(g, A1, {"x0"});
    auto diag = fibre_product(h1, h2);
    auto pts = enumerate_realisations(diag, K);
    REQUIRE(pts.size() == 2);
    for (const auto& x : pts) CHECK(x[0] == x[1]);

    // anything x empty = empty
    auto E = DirectPresentation::make(Q, 1, {"1"}, {"1"});
    auto e1 = make_morphism(E, pt, {});
    auto prod2 = fibre_product(f1, e1);
    CHECK(enumerate_realisations(prod2, K).empty());
}
