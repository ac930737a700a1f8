#include <doctest.h>

#include "dirgal/field.hpp"

using namespace dirgal;

TEST_CASE("prime field arithmetic") {
    auto F7 = Field::prime(7);
    auto a = F7->from_int(3), b = F7->from_int(5);
    CHECK(F7->to_string(F7->add(a, b)) == "1");
    CHECK(F7->to_string(F7->mul(a, b)) == "1");
    CHECK(F7->to_string(F7->inv(a)) == "5");
    CHECK(F7->mul(a, F7->inv(a)).is_one());
    CHECK(F7->to_string(F7->neg(a)) == "4");
    CHECK(F7->from_int(-2) == F7->from_int(5));
}

TEST_CASE("canonical modulus is irreducible and deterministic") {
    auto m1 = canonical_modulus(3, 2);
    auto m2 = canonical_modulus(3, 2);
    CHECK(m1 == m2);
    CHECK(is_irreducible_mod_p(3, m1));
    // x^2+1 is the least monic irreducible over F_3
    CHECK(m1 == std::vector<std::uint64_t>{1, 0, 1});
}

TEST_CASE("F9 arithmetic with explicit modulus") {
    auto F9 = Field::parse("F9:t^2+1");
    CHECK(F9->degree() == 2);
    CHECK(F9->p() == 3);
    auto t = F9->generator();
    // t^2 = -1 = 2
    CHECK(F9->mul(t, t) == F9->from_int(2));
    auto x = F9->parse_elem("t+1");
    // (t+1)^2 = t^2 + 2t + 1 = 2t
    CHECK(F9->mul(x, x) == F9->parse_elem("2*t"));
    CHECK(F9->mul(x, F9->inv(x)).is_one());
    // Frobenius x -> x^3 fixes F_3 and conjugates t
    CHECK(F9->frobenius(F9->from_int(2)) == F9->from_int(2));
    CHECK(F9->frobenius(t) == F9->neg(t));
    // every element has index round-trip
    for (std::uint64_t i = 0; i < 9; ++i) CHECK(F9->index_of(F9->elem_at(i)) == i);
}

TEST_CASE("square roots") {
    auto F7 = Field::prime(7);
    auto r = F7->sqrt(F7->from_int(2));
    REQUIRE(r.has_value());
    CHECK(F7->mul(*r, *r) == F7->from_int(2));
    CHECK(!F7->sqrt(F7->from_int(3)).has_value());

    auto F13 = Field::prime(13);  // 13 = 1 mod 4, exercises Tonelli-Shanks
    for (long v = 1; v < 13; ++v) {
        auto s = F13->sqrt(F13->from_int(v));
        if (s) CHECK(F13->mul(*s, *s) == F13->from_int(v));
    }
    int count = 0;
    for (long v = 1; v < 13; ++v)
        if (F13->sqrt(F13->from_int(v))) ++count;
    CHECK(count == 6);

    auto F8 = Field::extension(2, 3);
    for (std::uint64_t i = 0; i < 8; ++i) {
        auto a = F8->elem_at(i);
        auto s = F8->sqrt(a);
        REQUIRE(s.has_value());
        CHECK(F8->mul(*s, *s) == a);
    }
}

TEST_CASE("rationals") {
    auto Q = Field::rationals();
    auto a = Q->from_mpq(mpq_class(1, 3));
    auto b = Q->from_mpq(mpq_class(2, 5));
    CHECK(Q->to_string(Q->add(a, b)) == "11/15");
    CHECK(Q->parse_elem("11/15") == Q->add(a, b));
    CHECK(Q->sqrt(Q->from_mpq(mpq_class(4, 9))).has_value());
    CHECK(!Q->sqrt(Q->from_int(2)).has_value());
}

TEST_CASE("descriptor round trips") {
    for (const char* d : {"Q", "F5", "F9:t^2+1", "F7"}) {
        auto k = Field::parse(d);
        auto k2 = Field::parse(k->descriptor());
        CHECK(k->same(*k2));
    }
}
