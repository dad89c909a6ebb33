#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "omf/gens.hpp"
#include "omf/orders.hpp"

using namespace omf;

TEST_CASE("trivial group orbits") {
    const Field& F2 = Field::get(2, 1);
    GroupHandle triv = make_group(F2, 4, {Semilinear::identity(F2, 4)});
    Vec v(F2, 4);
    v.c = {1, 0, 1, 0};
    auto orb = vector_orbit(triv, v);
    CHECK(orb.size() == 1);
    CHECK(orb[0] == encode(v));
    CHECK(group_order(triv) == 1);
}

TEST_CASE("stabilizer chain orders against closed forms") {
    const Field& F2 = Field::get(2, 1);
    QuadraticSpace sp8 = minus_standard_space(4, F2);
    GroupHandle om8 = omega_minus_gens(sp8);  // gate already compares orders
    StabChain ch(om8);
    CHECK(ch.order() == omega_minus_order(4, 2));  // 197406720
    CHECK(ch.order() == cpp_int("197406720"));

    PermModule pm = deleted_perm_module();
    GroupHandle a12 = alternating12_gens(pm);
    CHECK(group_order(a12) == cpp_int("239500800"));
}

TEST_CASE("orbits of the blown-up SU5(2)") {
    const Field& F2 = Field::get(2, 1);
    const Field& F4 = Field::get(2, 2);
    ScalarBridge br = make_bridge(F2, F4, 5);
    HermitianSpace hs = hermitian_standard(5, F4);
    QuadraticSpace sp = unitary_restriction(br, hs);
    GroupHandle Y = su_gens_blownup(br, hs);

    // nonsingular orbit: all 528 vectors with Q = 1
    Vec d = blowup_vector(br, hs.D());
    REQUIRE(sp.Q(d) == 1);
    CHECK(vector_orbit(Y, d).size() == 528);
    // singular orbit: all 495 nonzero singular vectors
    Fel lambda = solve_lambda(F4);
    auto [e1, f1] = transported_pair(br, hs, sp, lambda);
    CHECK(vector_orbit(Y, e1).size() == 495);

    // stabilizer orders: |SU5(2)| / 528 = 25920, / 495 = 27648
    uint64_t orb = 0;
    GroupHandle stab_d = point_stabilizer(Y, d, &orb);
    CHECK(orb == 528);
    CHECK(group_order(stab_d) == 25920);
    GroupHandle stab_e = point_stabilizer(Y, e1, &orb);
    CHECK(orb == 495);
    CHECK(group_order(stab_e) == 27648);
    // orbit-stabilizer invariant
    CHECK(group_order(Y) == cpp_int(528) * 25920);
    CHECK(group_order(Y) == cpp_int(495) * 27648);
}

TEST_CASE("membership tests in Omega10-(2)") {
    const Field& F2 = Field::get(2, 1);
    QuadraticSpace sp = minus_standard_space(5, F2);
    GroupHandle om = omega_minus_gens(sp);
    StabChain ch(om);
    CHECK(ch.order() == omega_minus_order(5, 2));
    CHECK(ch.contains(Semilinear::identity(F2, 10)));
    Vec w = add(sp.labels->e(0), sp.labels->f(0));
    Semilinear r = reflection(sp, w);
    CHECK(!ch.contains(r));  // Dickson invariant 1
    // a product of Eichler maps lies in Omega
    Semilinear g = compose(eichler(sp, sp.labels->e(0), sp.labels->e(1)),
                           eichler(sp, sp.labels->f(0), sp.labels->f(2)));
    CHECK(ch.contains(g));
    CHECK(!ch.contains(compose(g, r)));
}

TEST_CASE("setwise pair stabilizer and swap detection") {
    const Field& F2 = Field::get(2, 1);
    const Field& F4 = Field::get(2, 2);
    ScalarBridge br = make_bridge(F2, F4, 5);
    HermitianSpace hs = hermitian_standard(5, F4);
    QuadraticSpace sp = unitary_restriction(br, hs);
    Fel lambda = solve_lambda(F4);
    auto [e1, f1] = transported_pair(br, hs, sp, lambda);

    // under the blown-up SU5(2) nothing exchanges the transported pair
    GroupHandle Y = su_gens_blownup(br, hs);
    CHECK(unordered_pair_orbit(Y, e1, f1).size() == 63360);
    CHECK(ordered_pair_orbit(Y, e1, f1).size() == 63360);
    uint64_t orb = 0;
    bool swap = true;
    GroupHandle P = setwise_pair_stabilizer(Y, e1, f1, &orb, &swap);
    CHECK(orb == 63360);
    CHECK(!swap);
    CHECK(group_order(P) * orb == group_order(Y));
    CHECK(group_order(P) == 216);  // pointwise = setwise here

    // the full Omega does exchange the pair, doubling the ordered orbit
    BasisLabels lab = complete_standard_basis(sp, {e1, f1});
    QuadraticSpace spl = with_labels(std::move(sp), std::move(lab));
    GroupHandle Z = omega_minus_gens(spl);
    CHECK(unordered_pair_orbit(Z, e1, f1).size() == 63360);
    CHECK(ordered_pair_orbit(Z, e1, f1).size() == 126720);
    swap = false;
    setwise_pair_stabilizer(Z, e1, f1, &orb, &swap);
    CHECK(orb == 63360);
    CHECK(swap);
}

TEST_CASE("parity kernel via the Dickson invariant") {
    const Field& F2 = Field::get(2, 1);
    QuadraticSpace sp = minus_standard_space(4, F2);
    GroupHandle om = omega_minus_gens(sp);
    Vec w = add(sp.labels->e(0), sp.labels->f(0));
    std::vector<Semilinear> gens = om.gens;
    gens.push_back(reflection(sp, w));
    GroupHandle big = make_group(F2, 8, std::move(gens));
    CHECK(group_order(big) == 2 * omega_minus_order(4, 2));
    bool proper = false;
    GroupHandle ker = parity_kernel(
        big, [&](const Semilinear& g) { return dickson_or_spinor(sp, g); }, &proper);
    CHECK(proper);
    CHECK(group_order(ker) == omega_minus_order(4, 2));
}

TEST_CASE("stabilizer chains are deterministic") {
    const Field& F2 = Field::get(2, 1);
    QuadraticSpace sp = minus_standard_space(3, F2);
    GroupHandle om = omega_minus_gens(sp);
    StabChain a(om), b(om);
    CHECK(a.summary() == b.summary());
    CHECK(a.order() == b.order());
    // hints become leading base points
    Point h = encode(sp.labels->e(0));
    StabChain c(om, {h});
    CHECK(c.base_point(0) == h);
    CHECK(c.order() == a.order());
}

TEST_CASE("group enumeration matches the order") {
    const Field& F3 = Field::get(3, 1);
    QuadraticSpace sp = minus_standard_space(2, F3);  // O4-(3), order 1440
    std::vector<Semilinear> gens;
    for (const Vec& v : enumerate_value_set(sp, 1)) gens.push_back(reflection(sp, v));
    for (const Vec& v : enumerate_value_set(sp, 2)) gens.push_back(reflection(sp, v));
    GroupHandle g = make_group(F3, 4, std::move(gens));
    auto all = enumerate_group(g);
    CHECK(cpp_int(all.size()) == group_order(g));
    CHECK(all.size() == 1440);
    // elements are distinct
    std::set<std::string> seen;
    for (const Semilinear& x : all) seen.insert(to_exchange(x));
    CHECK(seen.size() == all.size());
    StabChain ch(g);
    for (size_t i = 0; i < all.size(); i += 97) CHECK(ch.contains(all[i]));
}
