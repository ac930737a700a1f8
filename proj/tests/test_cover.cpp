#include <doctest.h>

#include "dirgal/cover.hpp"

using namespace dirgal;

namespace {

// Kummer double cover z^2 = x of the difference G_m with identity
// correspondence (sigma x = x), over an integral base field.
GaloisCover kummer_cover(FieldPtr k) {
    GaloisCover D;
    auto X = DirectPresentation::make(k, 1, {}, {"y0 - x0"});
    X = X.with_open0(Ideal::parse({"x0"}, k, X.vars0));
    D.base = X;
    auto Z = DirectPresentation::make(k, 1, {}, {"w0 - z0"}, "z", "w");
    Z = Z.with_open0(Ideal::parse({"z0"}, k, Z.vars0));
    D.cov = Z;
    D.p0 = {MPoly::parse("z0^2", k, Z.vars0)};
    D.G0 = FiniteGroup::cyclic(2);
    D.G1 = FiniteGroup::cyclic(2);
    D.act0 = {{MPoly::parse("z0", k, Z.vars0)}, {MPoly::parse("-z0", k, Z.vars0)}};
    D.act1 = {{MPoly::parse("z0", k, Z.vars1), MPoly::parse("w0", k, Z.vars1)},
              {MPoly::parse("-z0", k, Z.vars1), MPoly::parse("-w0", k, Z.vars1)}};
    D.hom_pi1 = {nullptr, nullptr, {0, 1}};
    D.hom_sigma = {nullptr, nullptr, {0, 1}};
    D.rebind_homs();
    return D;
}

} // namespace

TEST_CASE("finite groups") {
    auto c4 = FiniteGroup::cyclic(4);
    c4.validate();
    CHECK(c4.inverse(1) == 3);
    auto s3 = FiniteGroup::symmetric(3);
    s3.validate();
    CHECK(s3.size() == 6);
    // conjugacy closure with trivial twisting = ordinary conjugacy class
    GroupHom id = identity_hom(s3);
    int transposition = s3.index_of("213");
    auto cls = twisted_closure({transposition}, s3, s3, id, id);
    CHECK(cls.size() == 3);
    int threecycle = s3.index_of("231");
    auto cls3 = twisted_closure({threecycle}, s3, s3, id, id);
    CHECK(cls3.size() == 2);
    CHECK(twisted_closure({}, s3, s3, id, id).empty());
    CHECK(twisted_closure({s3.id}, s3, s3, id, id).size() == 1);
}

TEST_CASE("kummer cover validates") {
    auto D = kummer_cover(Field::prime(5));
    auto rep = validate_cover(D);
    for (const auto& v : rep.violations) MESSAGE(v);
    CHECK(rep.ok);

    // broken action: z0 -> z0 + 1 does not preserve the cover relations
    auto bad = D;
    bad.act0[1] = {MPoly::parse("z0 + 1", bad.base.k, bad.cov.vars0)};
    bad.act1[1] = {MPoly::parse("z0 + 1", bad.base.k, bad.cov.vars1),
                   MPoly::parse("w0 + 1", bad.base.k, bad.cov.vars1)};
    CHECK(!validate_cover(bad).ok);

    // trivial cover always validates
    auto T = GaloisCover::trivial_cover(DirectPresentation::affine_space(Field::prime(5), 1));
    CHECK(validate_cover(T).ok);
}

TEST_CASE("find_group_element on the kummer fibre") {
    auto F7 = Field::prime(7);
    auto D = kummer_cover(F7);
    // base x = 2 = 3^2: fibre points 3 and -3 = 4
    Point w{F7->from_int(3)};
    Point t{F7->from_int(4)};
    CHECK(find_group_element(D, w, t, F7) == 1);
    CHECK(find_group_element(D, w, w, F7) == 0);
}

TEST_CASE("local frobenius distinguishes quadratic residues") {
    auto D = kummer_cover(Field::rationals());
    auto K = make_difffield(7, 1, 1);
    auto D7 = reduce_mod_cover(D, K.Fqm);
    // residues mod 7: {1, 2, 4}; non-residues {3, 5, 6}
    for (long v : {1, 2, 4}) {
        auto cls = local_frobenius(D7, {K.Fqm->from_int(v)}, K);
        CHECK(cls.elems == std::set<int>{0});
    }
    for (long v : {3, 5, 6}) {
        auto cls = local_frobenius(D7, {K.Fqm->from_int(v)}, K);
        CHECK(cls.elems == std::set<int>{1});
    }
}

TEST_CASE("lift independence over the full fibre") {
    auto D = kummer_cover(Field::rationals());
    for (std::uint64_t q : {3, 5, 7, 11, 13}) {
        auto Dq = reduce_mod_cover(D, Field::prime(q));
        for (int m = 1; m <= 2; ++m) {
            auto K = make_difffield(q, 1, m);
            auto base_pts = enumerate_realisations(Dq.base, K);
            for (const auto& x : base_pts) {
                auto subs = local_frobenius_all_lifts(Dq, x, K);
                REQUIRE(subs.size() == 2);
                auto cls = twisted_closure(Dq, {subs[0]});
                for (int g : subs) CHECK(cls.count(g) == 1);
            }
        }
    }
}

TEST_CASE("kummer chebotarev counts (q-1)/2") {
    auto D = kummer_cover(Field::rationals());
    for (auto [p, e] : std::vector<std::pair<std::uint64_t, int>>{
             {3, 1}, {5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}}) {
        auto K = make_difffield(p, e, 1);
        auto Dq = reduce_mod_cover(D, Field::extension(p, e));
        auto base_pts = enumerate_realisations(Dq.base, K);
        std::uint64_t q = K.Fqm->order_u64().value();
        REQUIRE(base_pts.size() == q - 1);
        int trivial_count = 0, nontrivial_count = 0;
        for (const auto& x : base_pts) {
            auto cls = local_frobenius(Dq, x, K);
            if (cls.elems.count(0)) ++trivial_count;
            else ++nontrivial_count;
        }
        CHECK(trivial_count == static_cast<int>((q - 1) / 2));
        CHECK(nontrivial_count == static_cast<int>((q - 1) / 2));
    }
}

TEST_CASE("realisations of the base are F_q-points at every m") {
    auto D = kummer_cover(Field::rationals());
    auto Dq = reduce_mod_cover(D, Field::prime(5));
    for (int m : {1, 2, 3}) {
        auto K = make_difffield(5, 1, m);
        auto pts = enumerate_realisations(Dq.base, K);
        CHECK(pts.size() == 4);   // G_m(F_5) regardless of m
        for (const auto& x : pts) CHECK(K.frob(x[0]) == x[0]);
    }
}
