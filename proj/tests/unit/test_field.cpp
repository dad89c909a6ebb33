#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "omf/field.hpp"

using namespace omf;

// index encoding: GF(4) = {0, 1, w = 2, w^2 = 3} with modulus x^2 + x + 1

TEST_CASE("GF(4) multiplicative structure") {
    const Field& F = Field::get(2, 2);
    CHECK(F.modulus == std::vector<int>{1, 1, 1});
    CHECK(F.mul(2, 3) == 1);       // w * w^2 = 1
    CHECK(F.mul(2, 2) == 3);       // w^2
    CHECK(F.add(2, 3) == 1);       // w + w^2 = 1
    CHECK(F.inv(2) == 3);
    CHECK(F.pow(2, 3) == 1);
}

TEST_CASE("GF(2) characteristic") {
    const Field& F = Field::get(2, 1);
    CHECK(F.add(1, 1) == 0);
    CHECK(F.mul(1, 1) == 1);
}

TEST_CASE("GF(16) generator order and frobenius") {
    const Field& F = Field::get(2, 4);
    Fel x = 2;
    CHECK(F.mul(x, F.pow(x, 14)) == 1);
    // brute-force: the powers of x hit all 15 nonzero elements
    std::map<Fel, int> seen;
    Fel a = 1;
    for (int i = 0; i < 15; ++i) {
        seen[a]++;
        a = F.mul(a, x);
    }
    CHECK(seen.size() == 15);
    CHECK(a == 1);
    for (int v = 0; v < 16; ++v) CHECK(F.frob(Fel(v), 4) == Fel(v));
}

TEST_CASE("frobenius is a field automorphism (exhaustive, e <= 4)") {
    for (auto [p, e] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 2}}) {
        const Field& F = Field::get(p, e);
        for (int a = 0; a < F.size; ++a) {
            CHECK(F.frob(Fel(a), e) == Fel(a));
            for (int b = 0; b < F.size; ++b) {
                CHECK(F.frob(F.add(Fel(a), Fel(b)), 1) ==
                      F.add(F.frob(Fel(a), 1), F.frob(Fel(b), 1)));
                CHECK(F.frob(F.mul(Fel(a), Fel(b)), 1) ==
                      F.mul(F.frob(Fel(a), 1), F.frob(Fel(b), 1)));
            }
        }
    }
}

TEST_CASE("relative trace") {
    const Field& F4 = Field::get(2, 2);
    CHECK(F4.rel_trace(2) == 1);  // w + w^2 = 1
    CHECK(F4.rel_trace(0) == 0);

    const Field& F16 = Field::get(2, 4);
    // GF(16)/GF(4): onto the subfield with all fibers of size 4
    std::map<Fel, int> fibers;
    for (int a = 0; a < 16; ++a) {
        Fel t = F16.rel_trace(Fel(a));
        CHECK(F16.in_subfield(t));
        fibers[t]++;
    }
    CHECK(fibers.size() == 4);
    for (auto& [v, n] : fibers) CHECK(n == 4);
}

TEST_CASE("solve_lambda") {
    const Field& F4 = Field::get(2, 2);
    CHECK(solve_lambda(F4) == 2);  // lambda = w

    const Field& F16 = Field::get(2, 4);
    Fel l = solve_lambda(F16);
    CHECK(F16.rel_trace(l) == 1);

    const Field& F9 = Field::get(3, 2);
    int solutions = 0;
    for (int a = 0; a < 9; ++a)
        if (F9.rel_trace(Fel(a)) == 1) ++solutions;
    CHECK(solutions == 3);
    CHECK(F9.rel_trace(solve_lambda(F9)) == 1);
}

TEST_CASE("find_irreducible_mu") {
    const Field& F4 = Field::get(2, 2);
    Fel mu = find_irreducible_mu(F4);
    CHECK(mu == 2);
    // mu = 1 fails: x^2 + x + 1 has the root w
    CHECK(F4.add(F4.add(F4.mul(2, 2), 2), 1) == 0);
    for (int x = 0; x < 4; ++x)
        CHECK(F4.add(F4.add(F4.mul(Fel(x), Fel(x)), Fel(x)), mu) != 0);

    const Field& F16 = Field::get(2, 4);
    int valid = 0;
    for (int c = 0; c < 16; ++c) {
        bool rootless = true;
        for (int x = 0; x < 16 && rootless; ++x)
            rootless = F16.add(F16.add(F16.mul(Fel(x), Fel(x)), Fel(x)), Fel(c)) != 0;
        if (rootless) ++valid;
    }
    CHECK(valid == 8);  // Artin-Schreier: half the elements
}

TEST_CASE("square classes in GF(9)") {
    const Field& F9 = Field::get(3, 2);
    int squares = 0;
    for (int a = 1; a < 9; ++a)
        if (F9.is_square(Fel(a))) ++squares;
    CHECK(squares == 4);
    for (int a = 1; a < 9; ++a) CHECK(F9.is_square(F9.mul(Fel(a), Fel(a))));
}

TEST_CASE("string round trip") {
    const Field& F = Field::get(3, 2);
    for (int a = 0; a < 9; ++a) CHECK(F.parse(F.str(Fel(a))) == Fel(a));
}
