#include <doctest.h>

#include "dirgal/ufactor.hpp"

using namespace dirgal;

namespace {
UPoly U(const std::string& s, FieldPtr k) {
    auto v = make_vars({"T"});
    return upoly_from_mpoly(MPoly::parse(s, k, v), 0);
}
UPoly product(const UFactors& f, FieldPtr k) {
    UPoly r(k, {f.unit});
    for (const auto& [g, m] : f.factors)
        for (int i = 0; i < m; ++i) r = up_mul(r, g);
    return r;
}
}

TEST_CASE("factor over F7: T^2-1 and T^2-2") {
    auto F7 = Field::prime(7);
    auto f = U("T^2 - 1", F7);
    auto fac = factor_upoly(f);
    REQUIRE(fac.factors.size() == 2);
    CHECK(product(fac, F7) == f);
    // 3^2 = 2 mod 7: roots 3 and 4
    auto g = U("T^2 - 2", F7);
    auto roots = up_roots(g);
    REQUIRE(roots.size() == 2);
    CHECK(F7->to_string(roots[0]) == "3");
    CHECK(F7->to_string(roots[1]) == "4");
}

TEST_CASE("irreducible detection over F3") {
    auto F3 = Field::prime(3);
    CHECK(up_irreducible(U("T^2 + 1", F3)));
    CHECK(!up_irreducible(U("T^2 - 1", F3)));
    CHECK(!up_irreducible(U("T^2 + 2*T + 1", F3)));
}

TEST_CASE("multiplicities and p-th powers") {
    auto F5 = Field::prime(5);
    auto f = U("(T - 1)^2 * (T + 2)", F5);
    auto fac = factor_upoly(f);
    REQUIRE(fac.factors.size() == 2);
    CHECK(product(fac, F5) == f);
    int total = 0;
    for (const auto& [g, m] : fac.factors) total += m * g.deg();
    CHECK(total == 3);
    // T^5 - T = product of all linear polys over F5
    auto g = U("T^5 - T", F5);
    CHECK(factor_upoly(g).factors.size() == 5);
    // a pure 5th power
    auto h = U("T^5 - 1", F5);   // = (T-1)^5
    auto fh = factor_upoly(h);
    REQUIRE(fh.factors.size() == 1);
    CHECK(fh.factors[0].second == 5);
}

TEST_CASE("factor over extension fields") {
    auto F9 = Field::parse("F9:t^2+1");
    // T^2+1 splits over F9: roots t, -t
    auto f = U("T^2 + 1", F9);
    auto roots = up_roots(f);
    REQUIRE(roots.size() == 2);
    for (const auto& r : roots) CHECK(F9->mul(r, r) == F9->from_int(-1));
    // char 2 extension
    auto F8 = Field::extension(2, 3);
    auto g = U("T^3 + T + 1", F8);   // splits completely over F8
    CHECK(up_roots(g).size() == 3);
}

TEST_CASE("factor over Q") {
    auto Q = Field::rationals();
    auto f = U("T^4 - 1", Q);
    auto fac = factor_upoly(f);
    // (T-1)(T+1)(T^2+1)
    REQUIRE(fac.factors.size() == 3);
    CHECK(product(fac, Q) == f);

    auto g = U("T^2 - 2", Q);
    CHECK(up_irreducible(g));

    auto h = U("6*T^2 + 5*T + 1", Q);   // (2T+1)(3T+1), monic-normalized
    auto fh = factor_upoly(h);
    REQUIRE(fh.factors.size() == 2);
    CHECK(product(fh, Q) == h);

    // multiplicities
    auto m = U("(T - 2)^3 * (T^2 + T + 1)", Q);
    auto fm = factor_upoly(m);
    REQUIRE(fm.factors.size() == 2);
    CHECK(product(fm, Q) == m);

    // degree-6 with nontrivial recombination: (T^3-2)(T^3-3)
    auto big = U("(T^3 - 2) * (T^3 - 3)", Q);
    auto fb = factor_upoly(big);
    REQUIRE(fb.factors.size() == 2);
    CHECK(product(fb, Q) == big);
    CHECK(fb.factors[0].first.deg() == 3);
}

TEST_CASE("splitting fields") {
    auto F3 = Field::prime(3);
    auto f = U("T^2 + 1", F3);   // irreducible, splits over F9
    auto sp = splitting_field(f);
    CHECK(sp.relative_degree == 2);
    CHECK(sp.field->order() == 9);
    REQUIRE(sp.roots.size() == 2);
    for (const auto& r : sp.roots)
        CHECK(sp.field->mul(r, r) == sp.field->from_int(-1));

    // embeddings compose correctly: F9 -> F81
    auto F9 = Field::parse("F9:t^2+1");
    auto F81 = Field::extension(3, 4);
    auto emb = embed_field(F9, F81);
    auto t = F9->generator();
    auto im = emb.map(t);
    CHECK(F81->mul(im, im) == F81->from_int(-1));
    // embedding is a homomorphism on a few samples
    for (std::uint64_t i = 0; i < 9; ++i)
        for (std::uint64_t j = 0; j < 9; ++j) {
            auto a = F9->elem_at(i), b = F9->elem_at(j);
            CHECK(emb.map(F9->mul(a, b)) == F81->mul(emb.map(a), emb.map(b)));
        }
}

TEST_CASE("artin-schreier polynomial splits in degree p") {
    auto F5 = Field::prime(5);
    auto f = U("T^5 - T - 1", F5);
    CHECK(up_irreducible(f));
    auto sp = splitting_field(f);
    CHECK(sp.relative_degree == 5);
    CHECK(sp.roots.size() == 5);
}
