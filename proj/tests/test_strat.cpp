#include <doctest.h>

#include "dirgal/strat.hpp"

using namespace dirgal;

namespace {

DirectPresentation gm_delta(FieldPtr k) {
    auto X = DirectPresentation::make(k, 1, {}, {"y0 - x0"});
    return X.with_open0(Ideal::parse({"x0"}, k, X.vars0));
}

// Kummer cover z^2 = x - c over G_m-with-x(x-c)-inverted (c = 0 or 1 here)
GaloisCover kummer_shifted(FieldPtr k, long c, const DirectPresentation& base) {
    GaloisCover D;
    D.base = base;
    std::string rel = c == 0 ? "w0 - z0" : "w0 - z0";
    auto Z = DirectPresentation::make(k, 1, {}, {rel}, "z", "w");
    Z.U0 = Ideal::parse({"z0"}, k, Z.vars0);
    Z.U1 = Ideal::parse({"z0*w0"}, k, Z.vars1);
    D.cov = Z;
    std::string p0 = c == 0 ? "z0^2" : "z0^2 + 1";
    D.p0 = {MPoly::parse(p0, k, Z.vars0)};
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

// base G_m minus {1} so both z^2=x and z^2=x-1 are etale on the piece
DirectPresentation gm_minus01(FieldPtr k) {
    auto X = DirectPresentation::make(k, 1, {}, {"y0 - x0"});
    return X.with_open0(Ideal::parse({"x0^2 - x0"}, k, X.vars0));
}

PointSet eval_set(const GaloisStratification& A, std::uint64_t q, int m) {
    auto K = make_difffield(q, 1, m);
    auto Aq = A.ambient.k->is_finite() && A.ambient.k->p() == q
                  ? A
                  : reduce_mod_strat(A, Field::prime(q));
    return evaluate(Aq, K).points;
}

} // namespace

TEST_CASE("top and bottom") {
    auto Q = Field::rationals();
    auto X = gm_delta(Q);
    auto top = strat_top(X);
    auto bot = strat_bottom(X);
    CHECK(validate_strat(top).ok);
    for (std::uint64_t q : {3, 7}) {
        auto t = eval_set(top, q, 1);
        CHECK(t.size() == q - 1);
        CHECK(eval_set(bot, q, 1).empty());
    }
}

TEST_CASE("kummer stratification separates residue classes and counts (q-1)/2") {
    auto Q = Field::rationals();
    auto X = gm_delta(Q);
    auto cover = kummer_shifted(Q, 0, X);
    auto triv = single_stratum(X, cover, {0});
    auto nontriv = single_stratum(X, cover, {1});
    CHECK(validate_strat(reduce_mod_strat(triv, Field::prime(7))).ok);
    for (auto [p, e] : std::vector<std::pair<std::uint64_t, int>>{
             {3, 1}, {5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}}) {
        auto K = make_difffield(p, e, 1);
        auto Fq = Field::extension(p, e);
        auto t = evaluate(reduce_mod_strat(triv, Fq), K).points;
        auto n = evaluate(reduce_mod_strat(nontriv, Fq), K).points;
        std::uint64_t q = K.Fqm->order_u64().value();
        CHECK(t.size() == (q - 1) / 2);
        CHECK(n.size() == (q - 1) / 2);
        for (const auto& x : t) CHECK(!n.count(x));
        // q=7 spot check from the residue tables
        if (p == 7) {
            PointSet expect;
            for (long v : {3, 5, 6}) expect.insert({K.Fqm->from_int(v)});
            CHECK(n == expect);
        }
    }
}

TEST_CASE("boolean laws on a same-cover pair") {
    auto Q = Field::rationals();
    auto X = gm_delta(Q);
    auto cover = kummer_shifted(Q, 0, X);
    auto A = single_stratum(X, cover, {0});
    auto B = single_stratum(X, cover, {1});
    auto A_and_notA = boolean_combine(A, negate(A), BoolOp::conj);
    auto A_or_B = boolean_combine(A, B, BoolOp::disj);
    auto top = strat_top(X);
    auto top_and_A = boolean_combine(top, A, BoolOp::conj);
    for (std::uint64_t q : {3, 5, 7, 9}) {
        auto Fq = q == 9 ? Field::extension(3, 2) : Field::prime(q);
        auto K = q == 9 ? make_difffield(3, 2, 1) : make_difffield(q, 1, 1);
        auto eA = evaluate(reduce_mod_strat(A, Fq), K).points;
        auto eB = evaluate(reduce_mod_strat(B, Fq), K).points;
        CHECK(evaluate(reduce_mod_strat(A_and_notA, Fq), K).points.empty());
        auto eOr = evaluate(reduce_mod_strat(A_or_B, Fq), K).points;
        PointSet expect = eA;
        expect.insert(eB.begin(), eB.end());
        CHECK(eOr == expect);
        CHECK(evaluate(reduce_mod_strat(top_and_A, Fq), K).points == eA);
        // complement law against the stratum realisations
        auto eNot = evaluate(reduce_mod_strat(negate(A), Fq), K).points;
        auto all = evaluate(reduce_mod_strat(strat_top(X), Fq), K).points;
        PointSet comp;
        for (const auto& x : all)
            if (!eA.count(x)) comp.insert(x);
        CHECK(eNot == comp);
    }
}

TEST_CASE("boolean combine across genuinely different covers") {
    auto Q = Field::rationals();
    auto X = gm_minus01(Q);
    auto DA = kummer_shifted(Q, 0, X);    // z^2 = x
    auto DB = kummer_shifted(Q, 1, X);    // z^2 = x - 1 (p0 = z0^2 + 1)
    auto A = single_stratum(X, DA, {0});
    auto B = single_stratum(X, DB, {0});
    auto both = boolean_combine(A, B, BoolOp::conj);
    auto either = boolean_combine(A, B, BoolOp::disj);
    for (std::uint64_t q : {7, 11, 13}) {
        auto Fq = Field::prime(q);
        auto K = make_difffield(q, 1, 1);
        auto eA = evaluate(reduce_mod_strat(A, Fq), K).points;
        auto eB = evaluate(reduce_mod_strat(B, Fq), K).points;
        auto eBoth = evaluate(reduce_mod_strat(both, Fq), K).points;
        auto eEither = evaluate(reduce_mod_strat(either, Fq), K).points;
        PointSet inter, uni;
        for (const auto& x : eA)
            if (eB.count(x)) inter.insert(x);
        uni = eA;
        uni.insert(eB.begin(), eB.end());
        CHECK(eBoth == inter);
        CHECK(eEither == uni);
    }
}

TEST_CASE("inflation along a dominating cover preserves evaluation") {
    // Z/4 kummer tower z^4 = x dominating z^2 = x over G_m, char q = 1 mod 4
    auto F13 = Field::prime(13);
    auto X = gm_delta(F13);
    auto coarse = kummer_shifted(F13, 0, X);
    auto A = single_stratum(X, coarse, {0});

    GaloisCover fine;
    fine.base = X;
    auto Z = DirectPresentation::make(F13, 1, {}, {"w0 - z0"}, "z", "w");
    Z.U0 = Ideal::parse({"z0"}, F13, Z.vars0);
    fine.cov = Z;
    fine.p0 = {MPoly::parse("z0^4", F13, Z.vars0)};
    fine.G0 = FiniteGroup::cyclic(4);
    fine.G1 = FiniteGroup::cyclic(4);
    // i = 5 is a primitive 4th root of unity mod 13
    for (long u : {1, 5, 12, 8}) {
        fine.act0.push_back({MPoly::parse(std::to_string(u) + "*z0", F13, Z.vars0)});
        fine.act1.push_back({MPoly::parse(std::to_string(u) + "*z0", F13, Z.vars1),
                             MPoly::parse(std::to_string(u) + "*w0", F13, Z.vars1)});
    }
    fine.hom_pi1 = {nullptr, nullptr, {0, 1, 2, 3}};
    fine.hom_sigma = {nullptr, nullptr, {0, 1, 2, 3}};
    fine.rebind_homs();
    REQUIRE(validate_cover(fine).ok);

    // surjection Z/4 -> Z/2: generator to generator
    Domination dom{fine, {0, 1, 0, 1}};
    auto B = inflate(A, {dom});
    auto K = make_difffield(13, 1, 1);
    CHECK(evaluate(B, K).points == evaluate(A, K).points);

    // identity inflation
    Domination did{coarse, {0, 1}};
    auto C = inflate(A, {did});
    CHECK(evaluate(C, K).points == evaluate(A, K).points);
}

TEST_CASE("refinement preserves evaluation") {
    auto Q = Field::rationals();
    auto X = gm_delta(Q);
    auto cover = kummer_shifted(Q, 0, X);
    auto A = single_stratum(X, cover, {0});
    // split the piece into {x = 1} and the rest
    Ideal cut = Ideal::parse({"x0 - 1"}, Q, X.vars0);
    DirectPresentation at1 = X;
    at1.I0 = at1.I0.plus(cut);
    at1.I1 = at1.I1.plus(at1.lift0_x(cut)).plus(at1.lift0_y(cut));
    DirectPresentation rest = X.with_open0(cut);
    auto B = refine(A, {{at1, rest}});
    CHECK(B.strata.size() == 2);
    for (std::uint64_t q : {5, 7, 13}) {
        auto Fq = Field::prime(q);
        auto K = make_difffield(q, 1, 1);
        auto eA = evaluate(reduce_mod_strat(A, Fq), K);
        auto eB = evaluate(reduce_mod_strat(B, Fq), K);
        CHECK(eA.points == eB.points);
        // partition integrity
        std::size_t total = 0;
        for (const auto& ps : eB.per_stratum) total += ps.size();
        CHECK(total == eB.points.size());
    }
}

TEST_CASE("partition integrity of a two-piece stratification") {
    auto Q = Field::rationals();
    auto Xall = DirectPresentation::make(Q, 1, {}, {"y0 - x0"});
    // piece 1: G_m with the kummer cover; piece 2: the origin, trivial cover
    auto gm = gm_delta(Q);
    auto cover = kummer_shifted(Q, 0, gm);
    GaloisStratification A;
    A.ambient = Xall;
    Stratum s1;
    s1.piece = gm;
    s1.cover = cover;
    s1.domain = {0, 1};
    DirectPresentation origin = Xall;
    origin.I0 = Ideal::parse({"x0"}, Q, Xall.vars0);
    origin.I1 = Ideal::parse({"x0", "y0"}, Q, Xall.vars1);
    Stratum s2;
    s2.piece = origin;
    s2.cover = GaloisCover::trivial_cover(origin);
    s2.domain = {0};
    A.strata = {s1, s2};
    for (std::uint64_t q : {3, 5, 7}) {
        auto Fq = Field::prime(q);
        auto K = make_difffield(q, 1, 2);
        auto ev = evaluate(reduce_mod_strat(A, Fq), K);
        auto all = enumerate_realisations(reduce_mod(Xall, Fq), K);
        CHECK(ev.points == all);
        std::size_t total = 0;
        for (const auto& ps : ev.per_stratum) total += ps.size();
        CHECK(total == all.size());
    }
}
