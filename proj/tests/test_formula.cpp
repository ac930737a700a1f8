#include <doctest.h>

#include "dirgal/formula.hpp"

using namespace dirgal;

namespace {
DirectPresentation gm_delta(FieldPtr k) {
    auto X = DirectPresentation::make(k, 1, {}, {"y0 - x0"});
    return X.with_open0(Ideal::parse({"x0"}, k, X.vars0));
}
GaloisCover kummer(FieldPtr k, const DirectPresentation& base) {
    GaloisCover D;
    D.base = base;
    auto Z = DirectPresentation::make(k, 1, {}, {"w0 - z0"}, "z", "w");
    Z.U0 = Ideal::parse({"z0"}, k, Z.vars0);
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
}

TEST_CASE("parser round trips through the printer") {
    auto Q = Field::rationals();
    for (const char* txt : {
             "E z. z*z - v1 = 0",
             "s(v1) - v1 = 0",
             "A x. ~(x = 0) -> E y. x*y - 1 = 0",
             "(v1 + 2)*(v1 - 2) = v1*v1 - 4",
             "E z. (z*z - v1 = 0 & s(z) - z = 0)",
         }) {
        auto f = parse_formula(txt, Q);
        auto g = parse_formula(print_formula(f), Q);
        CHECK(print_formula(f) == print_formula(g));
    }
    auto f = parse_formula("E z. z*z - v1 = 0", Q);
    CHECK(free_vars(f) == std::vector<std::string>{"v1"});
    CHECK(max_sigma_depth(parse_formula("s(s(v1)) = 0", Q)) == 2);
}

TEST_CASE("eval: squares and residues") {
    auto F7 = Field::prime(7);
    auto K = make_difffield(7, 1, 1);
    auto sq2 = parse_formula("E z. z*z - 2 = 0", F7);
    auto sq3 = parse_formula("E z. z*z - 3 = 0", F7);
    CHECK(eval_formula(sq2, {}, K, 1));
    CHECK(!eval_formula(sq3, {}, K, 1));
    // with a window, 3 becomes a square in F49
    CHECK(eval_formula(sq3, {}, K, 2));
    // frobenius fixes F_q
    auto fix = parse_formula("s(v1) - v1 = 0", F7);
    CHECK(eval_formula(fix, {{"v1", F7->from_int(4)}}, K, 1));
}

TEST_CASE("field axiom formula with universal quantifier") {
    auto F5 = Field::prime(5);
    auto K = make_difffield(5, 1, 1);
    auto ax = parse_formula("A x. ~(x = 0) -> E y. x*y - 1 = 0", F5);
    CHECK(eval_formula(ax, {}, K, 1));
}

TEST_CASE("presentation_to_fo matches enumerate_realisations") {
    auto Q = Field::rationals();
    std::vector<DirectPresentation> catalog = {
        DirectPresentation::make(Q, 1, {}, {"y0 - x0^2"}),
        DirectPresentation::make(Q, 1, {"1"}, {"1"}),
        DirectPresentation::make(Q, 1, {}, {"y0 - x0^2", "x0^3 - x0"}),
        gm_delta(Q),
    };
    for (const auto& P : catalog) {
        auto f = presentation_to_fo(P);
        for (std::uint64_t q : {2, 3, 5}) {
            for (int m = 1; m <= 2; ++m) {
                auto K = make_difffield(q, 1, m);
                auto Pq = reduce_mod(P, Field::prime(q));
                auto fq = presentation_to_fo(Pq);
                auto want = enumerate_realisations(Pq, K);
                auto got = formula_points(fq, P.n, K, 1);
                CHECK(got == want);
            }
        }
    }
}

TEST_CASE("galois_to_fo matches evaluate on the kummer stratifications") {
    auto Q = Field::rationals();
    auto X = gm_delta(Q);
    auto D = kummer(Q, X);
    for (std::set<int> dom : {std::set<int>{0}, std::set<int>{1}, std::set<int>{0, 1},
                              std::set<int>{}}) {
        auto A = single_stratum(X, D, dom);
        for (std::uint64_t q : {3, 5, 7, 11, 13}) {
            auto Fq = Field::prime(q);
            auto Aq = reduce_mod_strat(A, Fq);
            auto f = galois_to_fo(Aq);
            for (int m = 1; m <= 2; ++m) {
                auto K = make_difffield(q, 1, m);
                auto want = evaluate(Aq, K).points;
                auto got = formula_points(f, 1, K, 2);
                CHECK(got == want);
            }
        }
    }
}

TEST_CASE("galois_to_fo on bottom is false everywhere") {
    auto F5 = Field::prime(5);
    auto X = gm_delta(F5);
    auto f = galois_to_fo(strat_bottom(X));
    auto K = make_difffield(5, 1, 1);
    CHECK(formula_points(f, 1, K, 1).empty());
    auto g = galois_to_fo(strat_top(X));
    CHECK(formula_points(g, 1, K, 1).size() == 4);
}
